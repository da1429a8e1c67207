#include "gtrig/cyclotomic.hpp"
#include "gtrig/errors.hpp"
#include "gtrig/sampling.hpp"
#include "helpers.hpp"

using namespace gtrig;
using boost::multiprecision::cpp_rational;

TEST_CASE("zeta and eta") {
    for (int m = 1; m <= 12; ++m) {
        const CyclotomicSystem sys(m);
        CHECK(std::abs(sys.eta() * sys.eta() - sys.zeta()) < 1e-14);
        CHECK(std::abs(std::pow(sys.eta(), m) + 1.0) < 1e-14);
        CHECK(std::abs(sys.zeta_pow(-1) - std::conj(sys.zeta())) < 1e-15);
    }
    CHECK_THROWS_AS(CyclotomicSystem(0), InputError);
    CHECK_THROWS_AS(CyclotomicSystem(25), InputError);
}

TEST_CASE("small cases reduce to familiar functions") {
    const CyclotomicSystem one(1);
    CHECK(std::abs(eval_S_cyclo(one, 0, 1.0) - 0.3678794412) < 1e-10);

    const CyclotomicSystem two(2);
    CHECK(std::abs(eval_S_cyclo(two, 1, kPi / 2) - 1.0) < 1e-15);
    for (const Complex x : {Complex(0.3), Complex(-1.2, 0.4), Complex(0, 2)}) {
        CHECK(std::abs(eval_S_cyclo(two, 0, x) - std::cos(x)) < 1e-14);
        CHECK(std::abs(eval_S_cyclo(two, 1, x) - std::sin(x)) < 1e-14);
    }

    for (int m = 1; m <= 8; ++m) {
        const ComplexVector v = eval_S_cyclo_all(CyclotomicSystem(m), 0.0);
        for (int l = 0; l < m; ++l) CHECK(std::abs(v[l] - (l == 0 ? 1.0 : 0.0)) < 1e-15);
    }
}

TEST_CASE("rescaling through the general system") {
    const RescalePair cos_pair = rescale_consistency(CyclotomicSystem(2), 0, 0.7);
    CHECK(std::abs(cos_pair.direct - 0.7648421873) < 1e-10);
    CHECK(std::abs(cos_pair.rescaled - 0.7648421873) < 1e-10);

    const CyclotomicSystem three(3);
    for (int l = 0; l < 3; ++l) {
        const RescalePair p = rescale_consistency(three, l, 0.0);
        CHECK(std::abs(p.direct - p.rescaled) < 1e-14);
    }

    const CyclotomicSystem five(5);
    for (int l = 0; l < 5; ++l) {
        const RescalePair p = rescale_consistency(five, l, Complex(0.3, 0.1));
        CHECK(std::abs(p.direct - p.rescaled) <= 1e-11);
    }
}

TEST_CASE("power series") {
    const CyclotomicSystem two(2);
    CHECK(std::abs(taylor_eval_cyclo(two, 1, 0.5, 20) - 0.4794255386) < 1e-10);
    for (int m = 1; m <= 6; ++m) CHECK(taylor_eval_cyclo(CyclotomicSystem(m), 0, 0.0, 5) == Complex(1.0));
    const CyclotomicSystem three(3);
    CHECK(std::abs(taylor_eval_cyclo(three, 2, 1.0, 15) - eval_S_cyclo(three, 2, 1.0)) <= 1e-12);
    CHECK_THROWS_AS(taylor_eval_cyclo(three, 0, 1.0, 57), InputError);
}

TEST_CASE("addition rule") {
    const AdditionRule sine = addition_rule(2, 1);
    CHECK(sine.signs == std::vector<int>{1, 1});
    CHECK(sine.partner == std::vector<int>{1, 0});
    const AdditionRule cosine = addition_rule(2, 0);
    CHECK(cosine.signs == std::vector<int>{1, -1});
    CHECK(cosine.partner == std::vector<int>{0, 1});

    sampling::Rng rng(21);
    for (int m = 2; m <= 6; ++m) {
        const CyclotomicSystem sys(m);
        for (int l = 0; l < m; ++l) {
            const AdditionRule rule = addition_rule(m, l);
            const Complex x1 = sampling::in_disc(rng);
            CHECK(std::abs(apply_addition(sys, rule, x1, 0.0) - eval_S_cyclo(sys, l, x1)) < 1e-14);
            for (int s = 0; s < 20; ++s) {
                const Complex a = sampling::in_disc(rng), b = sampling::in_disc(rng);
                CHECK(std::abs(apply_addition(sys, rule, a, b) - eval_S_cyclo(sys, l, a + b)) <= 1e-9);
            }
        }
    }
    CHECK_THROWS_AS(addition_rule(3, 3), InputError);
}

TEST_CASE("determinant of the cyclotomic shift matrix is constant") {
    sampling::Rng rng(22);
    for (int m = 2; m <= 8; ++m) {
        const CyclotomicSystem sys(m);
        const Complex at_zero = cyclotomic_det(sys, 0.0);
        // f(0) = (1, 0, ..., 0): one diagonal 1 and an anti-diagonal block of -1.
        const double value = (m * (m - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
        CHECK(std::abs(at_zero - value) < 1e-14);
        for (int s = 0; s < 20; ++s) CHECK(std::abs(cyclotomic_det(sys, sampling::in_disc(rng, 2.0)) - at_zero) <= 1e-8);
    }
}

TEST_CASE("m=3 cubic relation") {
    const CyclotomicSystem sys(3);
    sampling::Rng rng(23);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int s = 0; s < 100; ++s) {
        const ComplexVector v = eval_S_cyclo_all(sys, u(rng));
        const Complex f = -v[0] * v[0] * v[0] + v[1] * v[1] * v[1] - v[2] * v[2] * v[2] - 3.0 * v[0] * v[1] * v[2];
        CHECK(std::abs(f - cyclotomic_det(sys, 0.0)) <= 1e-9);
    }
}

TEST_CASE("factorial identity") {
    const FactorialIdentity three = factorial_identity_check(3);
    CHECK(three.sum_a == cpp_rational(3, 2));
    CHECK(three.sum_b == cpp_rational(1, 2));
    CHECK(three.sum_b_any_order == cpp_rational(3));
    CHECK(three.holds);
    CHECK(factorial_identity_check(6).holds);
    for (int n = 3; n <= 60; n += 3) CHECK(factorial_identity_check(n).holds);
    CHECK_THROWS_AS(factorial_identity_check(4), InputError);
    CHECK_THROWS_AS(factorial_identity_check(123), InputError);
}

TEST_CASE("each residue order contributes the same sum") {
    for (int n = 3; n <= 30; n += 3) {
        const FactorialIdentity f = factorial_identity_check(n);
        CHECK(f.sum_b_any_order == 6 * f.sum_b);
    }
}

TEST_CASE("delta") {
    const CyclotomicSystem two(2);
    CHECK(std::abs(delta(two, 0)) < 1e-12);
    CHECK(std::abs(delta(two, 1)) < 1e-12);
    CHECK(std::abs(delta(CyclotomicSystem(1), 0) + 2.0 * std::sinh(kPi)) < 1e-12);
}

TEST_CASE("matrix A") {
    const MatrixAResult one = matrix_A(CyclotomicSystem(1));
    CHECK(one.a.dim() == 1);
    CHECK(std::abs(one.a(0, 0)) == doctest::Approx(2.0 * std::sinh(kPi)));
    for (int m = 1; m <= 8; ++m) {
        const MatrixAResult r = matrix_A(CyclotomicSystem(m));
        const double det = std::abs(r.det);
        CHECK(std::abs(det - r.det_via_factorization) <= 1e-6 * (1 + det));
    }
    CHECK(std::abs(matrix_A(CyclotomicSystem(3)).det) == doctest::Approx(504.7).epsilon(1e-3));
    CHECK_THROWS_AS(matrix_A(CyclotomicSystem(13)), InputError);
}
