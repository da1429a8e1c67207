#include "gtrig/linalg.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <random>

#include "gtrig/errors.hpp"
#include "gtrig/poly.hpp"

namespace gtrig {

Matrix::Matrix(std::size_t dim, ComplexVector row_major) : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != dim_ * dim_) throw InputError("matrix data does not match dimension");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto& r : rows) {
        if (r.size() != dim_) throw InputError("matrix must be square");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
    return out;
}

ComplexVector Matrix::row(std::size_t r) const {
    return ComplexVector(data_.begin() + static_cast<long>(r * dim_),
                         data_.begin() + static_cast<long>((r + 1) * dim_));
}

Matrix Matrix::transpose() const {
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

double Matrix::norm_one() const {
    double best = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < dim_; ++r) s += std::abs((*this)(r, c));
        best = std::max(best, s);
    }
    return best;
}

double Matrix::norm_inf() const {
    double best = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < dim_; ++c) s += std::abs((*this)(r, c));
        best = std::max(best, s);
    }
    return best;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw InputError("matrix dimensions differ");
    const std::size_t n = a.dim();
    Matrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) continue;
            for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
        }
    return out;
}

ComplexVector operator*(const Matrix& m, std::span<const Complex> v) {
    if (m.dim() != v.size()) throw InputError("matrix-vector dimensions differ");
    ComplexVector out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

ComplexVector left_multiply(std::span<const Complex> v, const Matrix& m) {
    if (m.dim() != v.size()) throw InputError("vector-matrix dimensions differ");
    ComplexVector out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) out[c] += v[r] * m(r, c);
    return out;
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
    Complex s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Matrix power(const Matrix& m, int exponent) {
    if (exponent < 0) throw InputError("negative matrix power");
    Matrix out = Matrix::identity(m.dim());
    for (int i = 0; i < exponent; ++i) out = out * m;
    return out;
}

Matrix vandermonde(std::span<const Complex> nodes) {
    const std::size_t n = nodes.size();
    Matrix v(n);
    for (std::size_t c = 0; c < n; ++c) {
        Complex p = 1.0;
        for (std::size_t r = 0; r < n; ++r) {
            v(r, c) = p;
            p *= nodes[c];
        }
    }
    return v;
}

namespace {

struct LuFactors {
    Matrix lu;
    std::vector<std::size_t> perm;
    double sign = 1.0;
    std::optional<std::size_t> small_pivot;  // first pivot below the floor
};

// With `regularize`, pivots below the floor are pushed up to it (used by
// inverse iteration, where a near-singular shift is the point).
LuFactors factor(Matrix a, double floor, bool regularize) {
    const std::size_t n = a.dim();
    LuFactors f{std::move(a), std::vector<std::size_t>(n), 1.0, std::nullopt};
    Matrix& lu = f.lu;
    for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            if (std::abs(lu(r, k)) > best) {
                best = std::abs(lu(r, k));
                p = r;
            }
        }
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(p, c));
            std::swap(f.perm[k], f.perm[p]);
            f.sign = -f.sign;
        }
        if (best <= floor || best == 0.0) {
            if (!f.small_pivot) f.small_pivot = k;
            if (!regularize) {
                if (best == 0.0) continue;
            } else {
                lu(k, k) = best == 0.0 ? Complex{floor > 0 ? floor : 1e-300} : lu(k, k) / best * floor;
            }
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            const Complex factor = lu(r, k) / lu(k, k);
            lu(r, k) = factor;
            if (factor == Complex{}) continue;
            for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= factor * lu(k, c);
        }
    }
    return f;
}

ComplexVector substitute(const LuFactors& f, std::span<const Complex> b) {
    const std::size_t n = f.lu.dim();
    ComplexVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < i; ++c) x[i] -= f.lu(i, c) * x[c];
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t c = i + 1; c < n; ++c) x[i] -= f.lu(i, c) * x[c];
        x[i] /= f.lu(i, i);
    }
    return x;
}

double inverse_norm_one(const LuFactors& f) {
    const std::size_t n = f.lu.dim();
    double best = 0.0;
    ComplexVector unit(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::fill(unit.begin(), unit.end(), Complex{});
        unit[c] = 1.0;
        double s = 0.0;
        for (const auto& v : substitute(f, unit)) s += std::abs(v);
        best = std::max(best, s);
    }
    return best;
}

constexpr double kSingularRatio = 1e-13;

}  // namespace

Complex determinant(const Matrix& m) {
    if (m.dim() == 0) return 1.0;
    const LuFactors f = factor(m, 0.0, false);
    if (f.small_pivot) return 0.0;
    Complex det = f.sign;
    for (std::size_t i = 0; i < m.dim(); ++i) det *= f.lu(i, i);
    return det;
}

Solution solve(const Matrix& m, std::span<const Complex> b) {
    if (m.dim() != b.size()) throw InputError("solve: right-hand side length differs from dimension");
    const double floor = kSingularRatio * m.norm_inf();
    const LuFactors f = factor(m, floor, false);
    if (f.small_pivot) {
        throw SingularMatrixError("matrix is singular to working precision at pivot " +
                                      std::to_string(*f.small_pivot),
                                  *f.small_pivot);
    }
    return {substitute(f, b), m.norm_one() * inverse_norm_one(f)};
}

double condition_estimate(const Matrix& m) {
    const LuFactors f = factor(m, kSingularRatio * m.norm_inf(), false);
    if (f.small_pivot) return std::numeric_limits<double>::infinity();
    return m.norm_one() * inverse_norm_one(f);
}

ComplexVector characteristic_polynomial(const Matrix& m) {
    const std::size_t n = m.dim();
    ComplexVector c(n + 1, Complex{});
    c[n] = 1.0;
    Matrix prev(n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix mk = m * prev;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        const Matrix amk = m * mk;
        Complex trace{};
        for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
        c[n - k] = -trace / static_cast<double>(k);
        prev = std::move(mk);
    }
    return c;
}

namespace {

double left_residual(const Matrix& at, const ComplexVector& y, Complex mu) {
    const ComplexVector ay = at * y;
    double r = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) r = std::max(r, std::abs(ay[i] - mu * y[i]));
    return r;
}

void normalize_max(ComplexVector& y) {
    const double big = max_abs(y);
    if (big == 0.0) return;
    for (const auto& v : y) {
        if (std::abs(v) >= big * (1.0 - 1e-12)) {
            const Complex pivot = v;
            for (auto& w : y) w /= pivot;
            return;
        }
    }
}

EigenPair left_pair(const Matrix& m, Complex lambda) {
    const std::size_t n = m.dim();
    const Matrix at = m.transpose();
    const double scale = std::max(m.norm_inf(), std::numeric_limits<double>::min());
    const double floor = 1e-14 * scale;

    std::vector<ComplexVector> starts;
    ComplexVector e0(n);
    e0[0] = 1.0;
    starts.push_back(e0);
    starts.emplace_back(n, Complex{1.0});
    std::mt19937_64 rng(0xe16e5ULL);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexVector scrambled(n);
    for (auto& v : scrambled) v = Complex{u(rng), u(rng)};
    starts.push_back(scrambled);

    auto iterate = [&](ComplexVector y, Complex mu, int steps) {
        Matrix shifted = at;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= mu;
        const LuFactors f = factor(shifted, floor, true);
        for (int s = 0; s < steps; ++s) {
            y = substitute(f, y);
            normalize_max(y);
        }
        return y;
    };

    EigenPair best{lambda, {}, std::numeric_limits<double>::infinity()};
    for (const auto& start : starts) {
        Complex mu = lambda;
        ComplexVector y = iterate(start, mu, 4);
        for (int refine = 0; refine < 3; ++refine) {
            Complex num{}, den{};
            const ComplexVector ay = at * y;
            for (std::size_t i = 0; i < n; ++i) {
                num += std::conj(y[i]) * ay[i];
                den += std::conj(y[i]) * y[i];
            }
            const Complex rq = num / den;
            if (left_residual(at, y, rq) >= left_residual(at, y, mu)) break;
            mu = rq;
            y = iterate(y, mu, 1);
        }
        const double res = left_residual(at, y, mu);
        if (res < best.residual) best = {mu, y, res};
        if (best.residual <= 1e-12 * scale) break;
    }
    return best;
}

}  // namespace

std::vector<EigenPair> eigenpairs(const Matrix& m) {
    if (m.dim() == 0) return {};
    if (m.dim() > static_cast<std::size_t>(kMaxDegree)) throw InputError("eigenpairs supports dim <= 24");
    const RootSet ev = find_roots(Polynomial(characteristic_polynomial(m)), 1e-14, 1000);
    std::vector<EigenPair> out;
    out.reserve(ev.roots.size());
    for (const auto& lambda : ev.roots) out.push_back(left_pair(m, lambda));
    return out;
}

}  // namespace gtrig
