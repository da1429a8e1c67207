#include "gtrig/errors.hpp"
#include "gtrig/linalg.hpp"
#include "gtrig/sampling.hpp"
#include "helpers.hpp"

using namespace gtrig;
using test::gap;

namespace {

Matrix random_matrix(sampling::Rng& rng, std::size_t dim) {
    Matrix m(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = sampling::in_disc(rng);
    return m;
}

}  // namespace

TEST_CASE("determinant examples") {
    CHECK(std::abs(determinant(Matrix::identity(3)) - 1.0) < 1e-15);
    CHECK(std::abs(determinant(Matrix{{3, 2, 0}, {-1, 0, -3}, {0, 3, 2}}) - 31.0) < 1e-12);
    const ComplexVector nodes{1.0, -1.0};
    CHECK(std::abs(determinant(vandermonde(nodes)) + 2.0) < 1e-15);
    CHECK(determinant(Matrix{{1, 2}, {2, 4}}) == Complex{});
}

TEST_CASE("determinant is multiplicative") {
    sampling::Rng rng(3);
    for (std::size_t dim = 1; dim <= 6; ++dim) {
        const Matrix a = random_matrix(rng, dim), b = random_matrix(rng, dim);
        const Complex lhs = determinant(a * b), rhs = determinant(a) * determinant(b);
        CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("solve") {
    const ComplexVector b{Complex(1, 2), -3.0, 0.5};
    const Solution id = solve(Matrix::identity(3), b);
    CHECK(gap(id.x, b) == 0.0);
    CHECK(id.condition_estimate == doctest::Approx(1.0));

    sampling::Rng rng(4);
    for (std::size_t dim = 1; dim <= 8; ++dim) {
        const Matrix m = random_matrix(rng, dim);
        ComplexVector rhs(dim);
        for (auto& z : rhs) z = sampling::in_disc(rng);
        const Solution s = solve(m, rhs);
        const double residual = gap(m * s.x, rhs);
        CHECK(residual <= 1e-10 * (m.norm_inf() * max_abs(s.x) + max_abs(rhs)));
        CHECK(s.condition_estimate >= 1.0);
    }
}

TEST_CASE("singular solve reports the pivot") {
    try {
        solve(Matrix{{1, 1}, {1, 1}}, ComplexVector{1, 2});
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.pivot() == 1);
    }
    CHECK(std::isinf(condition_estimate(Matrix{{1, 1}, {1, 1}})));
}

TEST_CASE("characteristic polynomial") {
    const ComplexVector c = characteristic_polynomial(Matrix{{2, 1}, {0, 5}});
    CHECK(gap(c, ComplexVector{10, -7, 1}) < 1e-14);
}

TEST_CASE("eigenpairs of small matrices") {
    const auto diag = eigenpairs(Matrix{{2, 0}, {0, 5}});
    REQUIRE(diag.size() == 2);
    for (const auto& e : diag) {
        const ComplexVector unit = std::abs(e.value - 2.0) < 1e-12 ? ComplexVector{1, 0} : ComplexVector{0, 1};
        CHECK(gap(e.left_vector, unit) < 1e-12);
    }

    const Matrix k{{0, -kI}, {kI, 0}};
    const Matrix k2 = k * k;
    CHECK(gap(k2, Matrix::identity(2)) < 1e-15);
    for (const auto& e : eigenpairs(k2)) CHECK(std::abs(e.value - 1.0) < 1e-12);
}

TEST_CASE("eigenpair residuals") {
    sampling::Rng rng(5);
    for (std::size_t dim = 2; dim <= 8; ++dim) {
        const Matrix m = random_matrix(rng, dim);
        const auto pairs = eigenpairs(m);
        CHECK(pairs.size() == dim);
        for (const auto& e : pairs) {
            ComplexVector lm = left_multiply(e.left_vector, m);
            for (std::size_t i = 0; i < dim; ++i) lm[i] -= e.value * e.left_vector[i];
            CHECK(max_abs(lm) <= 1e-8 * m.norm_inf());
            CHECK(e.residual <= 1e-8 * m.norm_inf());
            CHECK(max_abs(e.left_vector) == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("eigenpairs rejects large matrices") {
    CHECK_THROWS_AS(eigenpairs(Matrix::identity(25)), InputError);
}
