#include <algorithm>

#include "gtrig/errors.hpp"
#include "gtrig/gentrig.hpp"
#include "gtrig/oracle.hpp"
#include "gtrig/sampling.hpp"
#include "helpers.hpp"

using namespace gtrig;
using test::gap;

TEST_CASE("tuple coefficients") {
    const GenTrigSystem sys(parse_polynomial("x^3+x^2+1"));
    const auto& r = sys.roots().roots;
    for (int j = 0; j < 3; ++j) {
        CHECK(sys.tuples()(0, j) == Complex(1));
        CHECK(std::abs(sys.tuples()(1, j) - r[j]) < 1e-14);
        CHECK(std::abs(sys.tuples()(2, j) - (-r[j] - r[j] * r[j])) < 1e-13);
    }

    const ComplexVector five{1, 2, 3, 4, 5};
    CHECK(std::abs(tuple_coefficients(five, 1.0)(3, 1) - 118.0) < 1e-12);

    const ComplexVector one{Complex(0.3, 0.2)};
    const auto t = tuple_coefficients(one, 2.5);
    CHECK(t.m() == 1);
    CHECK(t(0, 0) == Complex(2.5));
}

TEST_CASE("tuple recurrence") {
    sampling::Rng rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const GenTrigSystem sys(sampling::random_monic(rng, 2, 8));
        const int m = sys.degree();
        const Polynomial& p = sys.polynomial();
        const auto& t = sys.tuples();
        for (int j = 0; j < m; ++j) {
            const Complex r = sys.roots().roots[j];
            const double bound = 1e-9 * (1 + std::pow(std::abs(r), m));
            for (int l = 1; l < m - 1; ++l) {
                const double sign = l % 2 == 0 ? 1.0 : -1.0;
                CHECK(std::abs(r * t(l, j) - (sign * p[m - l] * r - t(l + 1, j))) <= bound);
            }
            const double s1 = (m - 1) % 2 == 0 ? 1.0 : -1.0;
            CHECK(std::abs(r * t(m - 1, j) - (s1 * p[1] * r + s1 * p[0])) <= bound);
        }
    }
}

TEST_CASE("evaluation examples") {
    const GenTrigSystem minus(parse_polynomial("x^2-1"));
    CHECK(std::abs(eval_S(minus, 0, 0.0) - 2.0) < 1e-15);
    CHECK(std::abs(eval_S(minus, 0, 0.8) - 2.0 * std::cos(0.8)) < 1e-14);

    const GenTrigSystem plus(parse_polynomial("x^2+1"));
    CHECK(std::abs(eval_S(plus, 1, 1.0) - 2.0 * kI * std::sinh(1.0)) < 1e-14);
    CHECK_THROWS_AS(eval_S(plus, 2, 0.0), InputError);

    sampling::Rng rng(7);
    const GenTrigSystem sys(sampling::random_monic(rng, 4, 4));
    for (int l = 0; l < 4; ++l) CHECK(std::abs(eval_S(sys, l, 0.0) - sys.tuples().row_sum(l)) < 1e-14);
}

TEST_CASE("overflow guard names the root") {
    const GenTrigSystem sys(parse_polynomial("x^2+1"));
    CHECK_THROWS_AS(eval_S(sys, 0, 800.0), OverflowError);
}

TEST_CASE("Taylor coefficients") {
    const GenTrigSystem minus(parse_polynomial("x^2-1"));
    const ComplexVector b = taylor_coeffs(minus, 0, 8);
    double factorial = 1.0;
    for (int k = 0; k <= 8; ++k) {
        if (k > 0) factorial *= k;
        const Complex expected = std::pow(-kI, k) * (1.0 + (k % 2 == 0 ? 1.0 : -1.0)) / factorial;
        CHECK(std::abs(b[k] - expected) < 1e-15);
    }
    CHECK_THROWS_AS(taylor_coeffs(minus, 0, 171), InputError);

    sampling::Rng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const GenTrigSystem sys(sampling::random_monic(rng, 2, 6));
        for (int l = 0; l < sys.degree(); ++l) {
            const ComplexVector c = taylor_coeffs(sys, l, 40);
            CHECK(std::abs(c[0] - eval_S(sys, l, 0.0)) < 1e-14);
            const Complex x = sampling::in_disc(rng, 2.0);
            Complex sum{}, power{1.0};
            for (const auto& ck : c) {
                sum += ck * power;
                power *= x;
            }
            CHECK(std::abs(sum - eval_S(sys, l, x)) <= 1e-9);
        }
    }
}

TEST_CASE("Taylor data is symmetric in the roots") {
    sampling::Rng rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const Polynomial p = sampling::random_monic(rng, 2, 6);
        const GenTrigSystem sys(p);
        RootSet shuffled = sys.roots();
        std::shuffle(shuffled.roots.begin(), shuffled.roots.end(), rng);
        const GenTrigSystem other(p, shuffled);
        for (int l = 0; l < sys.degree(); ++l) {
            const ComplexVector a = taylor_coeffs(sys, l, 12), b = taylor_coeffs(other, l, 12);
            double factorial = 1.0;
            for (int k = 0; k <= 12; ++k) {
                if (k > 0) factorial *= k;
                CHECK(std::abs(factorial * (a[k] - b[k])) <= 1e-10);
            }
        }
    }
}

TEST_CASE("integrality of k! b_k for Gaussian-integer coefficients") {
    for (const char* text : {"x^3+x^2+1", "x^4-2x^3+3x+1", "x^3+(2+i)x^2-3x+(1-i)", "x^2+5x-3"}) {
        const GenTrigSystem sys(parse_polynomial(text));
        for (int l = 0; l < sys.degree(); ++l) {
            const ComplexVector b = taylor_coeffs(sys, l, 10);
            double factorial = 1.0;
            for (int k = 0; k <= 10; ++k) {
                if (k > 0) factorial *= k;
                const Complex v = factorial * b[k];
                CHECK(std::abs(v.real() - std::round(v.real())) <= 1e-6);
                CHECK(std::abs(v.imag() - std::round(v.imag())) <= 1e-6);
            }
        }
    }
}

TEST_CASE("derivative matrix") {
    const GenTrigSystem plus(parse_polynomial("x^2+1"));
    CHECK(gap(plus.derivative_matrix(), Matrix{{0, -kI}, {kI, 0}}) == 0.0);

    const GenTrigSystem cubic(parse_polynomial("x^3+x^2+1"));
    CHECK(gap(cubic.derivative_matrix(), Matrix{{0, -kI, 0}, {0, kI, kI}, {-kI, 0, 0}}) == 0.0);

    CHECK_THROWS_AS(GenTrigSystem(parse_polynomial("x-0.5")).derivative_matrix(), InputError);

    sampling::Rng rng(10);
    for (int trial = 0; trial < 10; ++trial) {
        const GenTrigSystem sys(sampling::random_monic(rng, 2, 6));
        for (int s = 0; s < 10; ++s) {
            const Complex x = sampling::in_disc(rng);
            CHECK(gap(sys.derivative_matrix() * eval_S_all(sys, x), oracle::central_difference(sys, x, 1e-5)) <= 1e-6);
        }
    }
}

TEST_CASE("certificate for x^2+1") {
    const GenTrigSystem sys(parse_polynomial("x^2+1"));
    const IdentityCertificate cert = identity_certificate(sys);
    CHECK(std::abs(cert.lambda - 1.0) < 1e-12);
    CHECK(gap(cert.left_vector, ComplexVector{1, 0}) < 1e-12);
    CHECK(std::abs(cert.det_ref - 4.0) < 1e-12);
    for (const Complex x : {Complex(0), Complex(1), kI, Complex(1.7)})
        CHECK(std::abs(eval_det_M(cert, sys, x) - 4.0) < 1e-11);
}

TEST_CASE("certificate for x^m - c is non-degenerate and constant") {
    sampling::Rng rng(12);
    for (const char* text : {"x^3-2", "x^4+3", "x^5-(1+i)", "x^3-1"}) {
        const GenTrigSystem sys(parse_polynomial(text));
        const IdentityCertificate cert = identity_certificate(sys);
        CHECK(std::abs(cert.det_ref) > 1e-3);
        CHECK(cert.eigen_residual < 1e-8);
        CHECK(std::abs(eval_det_M(cert, sys, 0.0) - cert.det_ref) < 1e-12 * (1 + std::abs(cert.det_ref)));
        for (int s = 0; s < 20; ++s) {
            const Complex x = sampling::in_disc(rng);
            CHECK(std::abs(eval_det_M(cert, sys, x) - cert.det_ref) <= 1e-7 * (1 + std::abs(cert.det_ref)));
        }
    }
}

TEST_CASE("certificate constancy on random polynomials") {
    sampling::Rng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        const GenTrigSystem sys(sampling::random_monic(rng, 2, 6));
        const IdentityCertificate cert = identity_certificate(sys);
        CHECK(cert.lambda != Complex{});
        for (int s = 0; s < 20; ++s) {
            const Complex x = sampling::in_disc(rng);
            CHECK(std::abs(eval_det_M(cert, sys, x) - cert.det_ref) <= 1e-7 * (1 + std::abs(cert.det_ref)));
        }
    }
}

TEST_CASE("shift matrix layout") {
    const ComplexVector f{1, 2, 3};
    const Matrix m = shift_matrix(f, 10.0);
    CHECK(gap(m, Matrix{{1, 2, 3}, {2, 3, 10}, {3, 10, 20}}) == 0.0);
}
