#include "gtrig/poly.hpp"

#include <algorithm>

#include "gtrig/errors.hpp"

namespace gtrig {

Polynomial::Polynomial(ComplexVector coeffs) : coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (!is_finite(c)) throw InputError("polynomial coefficient is not finite");
    }
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
    if (coeffs_.empty()) throw InputError("zero polynomial");
}

Complex Polynomial::operator()(Complex x) const noexcept {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::magnitude_at(Complex x) const noexcept {
    const double ax = std::abs(x);
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * ax + std::abs(*it);
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree() == 0) throw InputError("derivative of a constant is the zero polynomial");
    ComplexVector d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    ComplexVector c = coeffs_;
    const Complex lead = c.back();
    for (auto& v : c) v /= lead;
    c.back() = 1.0;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots, Complex leading) {
    ComplexVector c{leading};
    for (const auto& r : roots) {
        c.push_back(Complex{});
        for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
}

Division synthetic_divide(const Polynomial& p, Complex r) {
    const auto& a = p.coeffs();
    const int m = p.degree();
    if (m < 1) throw InputError("synthetic division needs degree >= 1");
    ComplexVector q(m);
    Complex carry = a[m];
    for (int k = m - 1; k >= 0; --k) {
        q[k] = carry;
        carry = a[k] + r * carry;
    }
    return {Polynomial(std::move(q)), carry};
}

ComplexVector elementary_symmetric(std::span<const Complex> roots) {
    ComplexVector e(roots.size() + 1, Complex{});
    e[0] = 1.0;
    std::size_t filled = 0;
    for (const auto& r : roots) {
        ++filled;
        for (std::size_t l = filled; l > 0; --l) e[l] += r * e[l - 1];
    }
    return e;
}

ComplexVector power_sums(std::span<const Complex> roots, int count) {
    if (count < 1) throw InputError("power_sums needs count >= 1");
    const ComplexVector e = elementary_symmetric(roots);
    const int m = static_cast<int>(roots.size());
    auto e_at = [&](int i) { return i <= m ? e[i] : Complex{}; };

    // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
    ComplexVector p(count + 1, Complex{});
    for (int k = 1; k <= count; ++k) {
        Complex acc = (k % 2 == 1 ? 1.0 : -1.0) * static_cast<double>(k) * e_at(k);
        for (int i = 1; i < k; ++i) acc += (i % 2 == 1 ? 1.0 : -1.0) * e_at(i) * p[k - i];
        p[k] = acc;
    }
    p.erase(p.begin());
    return p;
}

double distance_to_integers(Complex z) {
    return std::abs(z - Complex{std::round(z.real()), 0.0});
}

}  // namespace gtrig
