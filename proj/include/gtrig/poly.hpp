#pragma once

#include <span>
#include <string>
#include <string_view>

#include "gtrig/types.hpp"

namespace gtrig {

inline constexpr int kMaxDegree = 24;

/// Polynomial with complex coefficients, stored in ascending powers
/// (coeffs()[k] multiplies x^k). Trailing exact zeros are trimmed on
/// construction, so the leading coefficient is always nonzero.
class Polynomial {
public:
    explicit Polynomial(ComplexVector coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const ComplexVector& coeffs() const noexcept { return coeffs_; }
    Complex operator[](int k) const { return k <= degree() && k >= 0 ? coeffs_[k] : Complex{}; }
    Complex leading() const noexcept { return coeffs_.back(); }

    Complex operator()(Complex x) const noexcept;

    /// Sum of |a_k| |x|^k, the scale used for backward-error bounds.
    double magnitude_at(Complex x) const noexcept;
    double max_coeff_modulus() const noexcept { return max_abs(coeffs_); }

    Polynomial derivative() const;
    Polynomial monic() const;

    static Polynomial from_roots(std::span<const Complex> roots, Complex leading = 1.0);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    ComplexVector coeffs_;
};

/// Parses sums of terms like `3`, `2.5*x^4`, `(1-2i)x^2`, `-ix`, `x`.
/// Whitespace is ignored and repeated powers are combined.
Polynomial parse_polynomial(std::string_view text);

/// Parses a comma separated ascending coefficient list, e.g. "1,0,1,1"
/// or "(1+2i), -3".
Polynomial parse_coefficients(std::string_view text);

/// Parses a complex constant such as `2`, `-1.5i` or `0.5-2i`.
Complex parse_complex(std::string_view text);

/// Canonical text form in descending powers; parse_polynomial reads it
/// back bit-exactly.
std::string to_string(const Polynomial& p);

struct RootSet {
    ComplexVector roots;
    double residual = 0.0;  // max |P(r_j)|
};

struct Division {
    Polynomial quotient;
    Complex remainder;
};

/// All roots by simultaneous (Aberth-Ehrlich) iteration. Roots come back
/// with multiplicity, ordered by real part then imaginary part.
RootSet find_roots(const Polynomial& p, double tol = 1e-13, int max_iter = 500);

/// P(x) = (x - r) quotient(x) + remainder.
Division synthetic_divide(const Polynomial& p, Complex r);

/// e_0..e_m of the given roots (e_0 = 1).
ComplexVector elementary_symmetric(std::span<const Complex> roots);

/// p_1..p_count via Newton's identities on the elementary symmetric values.
ComplexVector power_sums(std::span<const Complex> roots, int count);

/// Distance from z to the nearest integer.
double distance_to_integers(Complex z);

}  // namespace gtrig
