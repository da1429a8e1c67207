#include "gtrig/acceptance.hpp"

#include <chrono>
#include <functional>
#include <limits>

#include "gtrig/cyclotomic.hpp"
#include "gtrig/errors.hpp"
#include "gtrig/oracle.hpp"
#include "gtrig/sampling.hpp"

namespace gtrig::acceptance {
namespace {

using sampling::Rng;

class Recorder {
public:
    explicit Recorder(std::vector<Check>& checks) : checks_(checks) {}

    void at_most(std::string name, double measured, double threshold) {
        checks_.push_back({std::move(name), measured, threshold, measured <= threshold, false});
    }
    void above(std::string name, double measured, double threshold) {
        checks_.push_back({std::move(name), measured, threshold, measured > threshold, true});
    }

private:
    std::vector<Check>& checks_;
};

Rng rng_for(const Config& config, int id) { return Rng(config.seed * 1000003ULL + static_cast<std::uint64_t>(id)); }

Polynomial cubic_example() { return parse_polynomial("x^3+x^2+1"); }

void associated_matrix_example(const Config&, Recorder& rec) {
    const GenTrigSystem sys(cubic_example());
    const Matrix got = AssociatedMatrix::descending(associated_matrix(sys).scaled());
    const Matrix expected{{3, 2, 0}, {-1, 0, -3}, {0, 3, 2}};
    double gap = 0.0;
    for (std::size_t i = 0; i < got.data().size(); ++i) gap = std::max(gap, std::abs(got.data()[i] - expected.data()[i]));
    rec.at_most("max |2 pi i C - [[3,2,0],[-1,0,-3],[0,3,2]]|", gap, 1e-10);
}

void cubic_closed_forms(const Config& config, Recorder& rec) {
    const Polynomial p = cubic_example();
    SeriesOptions opt;
    opt.oracle_terms = config.oracle_terms;
    const SeriesResult res = evaluate_sums(p, opt);
    const GenTrigSystem sys(p);

    // Closed forms with C(P)^{-1} worked out by hand (det = 31), written in
    // the roots only; numerators for k = 0, 1, 2.
    const auto numerator = [](int k, Complex r) -> Complex {
        switch (k) {
            case 0: return -3.0 - 9.0 * r + 2.0 / r;
            case 1: return 2.0 + 6.0 * r + 9.0 / r;
            default: return 9.0 - 4.0 * r - 6.0 / r;
        }
    };
    double closed_gap = 0.0, oracle_gap = 0.0;
    for (int k = 0; k < 3; ++k) {
        Complex a{}, b{};
        for (const auto& r : sys.roots().roots) {
            const Complex em = std::exp(-kI * r * kPi), ep = std::exp(kI * r * kPi);
            b += numerator(k, r) / (em - ep);
            a += numerator(k, r) * (em + ep) / (em - ep);
        }
        b *= 2.0 * kPi * kI / 31.0;
        a *= kPi * kI / 31.0;
        closed_gap = std::max({closed_gap, std::abs(res.a[k] - a), std::abs(res.b[k] - b)});
        oracle_gap = std::max({oracle_gap, std::abs(res.a[k] - res.oracle_a[k].value),
                               std::abs(res.b[k] - res.oracle_b[k].value)});
    }
    rec.at_most("max |A_k, B_k - hand closed forms|", closed_gap, 1e-10);
    rec.at_most("max |A_k, B_k - brute-force oracle|", oracle_gap, config.sum_tol);
}

void known_sums(const Config& config, Recorder& rec) {
    SeriesOptions opt;
    opt.oracle_terms = config.oracle_terms;
    const SeriesResult res = evaluate_sums(parse_polynomial("x^2+1"), opt);
    rec.at_most("|A_0 - oracle|  (pi coth pi)", std::abs(res.a[0] - res.oracle_a[0].value), 1e-9);
    rec.at_most("|B_0 - oracle|  (pi / sinh pi)", std::abs(res.b[0] - res.oracle_b[0].value), 1e-9);
    rec.at_most("max |A_1|, |B_1|", std::max(std::abs(res.a[1]), std::abs(res.b[1])), 1e-10);
}

void identity_constancy(const Config& config, Recorder& rec) {
    Rng rng = rng_for(config, 4);
    double worst = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
        const GenTrigSystem sys(sampling::random_monic(rng, 2, 6));
        const IdentityCertificate cert = identity_certificate(sys);
        for (int s = 0; s < 20; ++s) {
            const Complex x = sampling::in_disc(rng);
            const double dev = std::abs(eval_det_M(cert, sys, x) - cert.det_ref) / (1.0 + std::abs(cert.det_ref));
            worst = std::max(worst, dev);
        }
    }
    rec.at_most("max |det M(x) - det M(0)| / (1 + |det M(0)|)", worst, 1e-7);
}

void cyclotomic_determinant(const Config& config, Recorder& rec) {
    Rng rng = rng_for(config, 5);
    for (int m = 2; m <= 7; ++m) {
        const CyclotomicSystem sys(m);
        const double expected = m % 2 == 1 ? 1.0 : -1.0;
        double worst = 0.0;
        for (int s = 0; s < 20; ++s) worst = std::max(worst, std::abs(cyclotomic_det(sys, sampling::in_disc(rng, 2.0)) - expected));
        rec.at_most("m=" + std::to_string(m) + ": max |det M(x) - (-1)^(m-1)|", worst, 1e-8);
    }
}

void cubic_identity(const Config& config, Recorder& rec) {
    Rng rng = rng_for(config, 6);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const CyclotomicSystem sys(3);
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
        const ComplexVector v = eval_S_cyclo_all(sys, u(rng));
        const Complex f = -v[0] * v[0] * v[0] + v[1] * v[1] * v[1] - v[2] * v[2] * v[2] - 3.0 * v[0] * v[1] * v[2];
        worst = std::max(worst, std::abs(f - 1.0));
    }
    rec.at_most("max |-S0^3 + S1^3 - S2^3 - 3 S0 S1 S2 - 1|", worst, 1e-9);
}

void addition_theorem(const Config& config, Recorder& rec) {
    Rng rng = rng_for(config, 7);
    double worst = 0.0;
    for (int m = 2; m <= 6; ++m) {
        const CyclotomicSystem sys(m);
        for (int s = 0; s < 20; ++s) {
            const Complex x1 = sampling::in_disc(rng), x2 = sampling::in_disc(rng);
            for (int l = 0; l < m; ++l) {
                const Complex lhs = eval_S_cyclo(sys, l, x1 + x2);
                worst = std::max(worst, std::abs(lhs - apply_addition(sys, addition_rule(m, l), x1, x2)));
            }
        }
    }
    rec.at_most("max |S_l(x1+x2) - addition rule|, m = 2..6", worst, 1e-9);

    // m = 2: the rule must be the sine and cosine laws.
    const AdditionRule sine = addition_rule(2, 1), cosine = addition_rule(2, 0);
    const bool shapes = sine.signs == std::vector<int>{1, 1} && sine.partner == std::vector<int>{1, 0} &&
                        cosine.signs == std::vector<int>{1, -1} && cosine.partner == std::vector<int>{0, 1};
    rec.at_most("m=2 rule differs from sin/cos addition laws", shapes ? 0.0 : 1.0, 0.0);
    const CyclotomicSystem two(2);
    double trig = 0.0;
    for (int s = 0; s < 20; ++s) {
        const Complex x = sampling::in_disc(rng, 2.0);
        trig = std::max({trig, std::abs(eval_S_cyclo(two, 0, x) - std::cos(x)), std::abs(eval_S_cyclo(two, 1, x) - std::sin(x))});
    }
    rec.at_most("m=2: max |S_0 - cos|, |S_1 - sin|", trig, 1e-12);
}

void triple_agreement(const Config& config, Recorder& rec) {
    Rng rng = rng_for(config, 8);
    double worst = 0.0;
    for (int m = 1; m <= 6; ++m) {
        const CyclotomicSystem sys(m);
        const int terms = std::min(170 / m, 60);
        for (int s = 0; s < 20; ++s) {
            const Complex x = sampling::in_disc(rng, 2.0);
            for (int l = 0; l < m; ++l) {
                const RescalePair pair = rescale_consistency(sys, l, x);
                const Complex series = taylor_eval_cyclo(sys, l, x, terms);
                worst = std::max({worst, std::abs(series - pair.direct), std::abs(pair.direct - pair.rescaled),
                                  std::abs(series - pair.rescaled)});
            }
        }
    }
    rec.at_most("max pairwise gap taylor/direct/rescaled, m <= 6", worst, 1e-10);
}

void factorial_identity(const Config&, Recorder& rec) {
    int failures = 0;
    for (int n = 3; n <= 60; n += 3) failures += factorial_identity_check(n).holds ? 0 : 1;
    rec.at_most("values of n in 3..60 where the exact identity fails", failures, 0.0);
}

void matrix_a_nondegenerate(const Config&, Recorder& rec) {
    for (int m = 1; m <= 8; ++m) {
        const MatrixAResult res = matrix_A(CyclotomicSystem(m));
        const double det = std::abs(res.det);
        rec.above("m=" + std::to_string(m) + ": |det A_m|", det, 1e-6);
        rec.at_most("m=" + std::to_string(m) + ": ||det A_m| - factorization| / (1+|det|)",
                    std::abs(det - res.det_via_factorization) / (1.0 + det), 1e-6);
    }
}

void fourier_quadrature(const Config& config, Recorder& rec) {
    Rng rng = rng_for(config, 11);
    std::vector<Polynomial> family{cubic_example()};
    for (int i = 0; i < 10; ++i) family.push_back(sampling::random_monic(rng, 3, 3, 0.05, true));
    double worst = 0.0;
    for (const auto& p : family) {
        const GenTrigSystem sys(p);
        for (int l = 0; l < 3; ++l)
            for (long n = -5; n <= 5; ++n)
                worst = std::max(worst, std::abs(fourier_coefficient(sys, l, n) - oracle::fourier_coefficient_quadrature(sys, l, n)));
    }
    rec.at_most("max |closed-form c_{-n,l} - quadrature|, |n| <= 5", worst, 1e-8);
}

void derivative_system(const Config& config, Recorder& rec) {
    Rng rng = rng_for(config, 12);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const GenTrigSystem sys(sampling::random_monic(rng, 2, 6));
        for (int s = 0; s < 10; ++s) {
            const Complex x = sampling::in_disc(rng);
            const ComplexVector ks = sys.derivative_matrix() * eval_S_all(sys, x);
            const ComplexVector fd = oracle::central_difference(sys, x, 1e-5);
            for (std::size_t i = 0; i < ks.size(); ++i) worst = std::max(worst, std::abs(ks[i] - fd[i]));
        }
    }
    rec.at_most("max |central difference - K S|", worst, 1e-6);
}

void target_family(const Config& config, Recorder& rec) {
    SeriesOptions opt;
    opt.oracle_terms = config.oracle_terms;
    for (int m = 1; m <= 4; ++m) {
        ComplexVector c(2 * m + 1, Complex{});
        c[0] = 1.0;
        c[2 * m] = 1.0;
        const SeriesResult res = evaluate_sums(Polynomial(c), opt);
        double gap = 0.0;
        for (std::size_t k = 0; k < res.a.size(); ++k)
            gap = std::max({gap, std::abs(res.a[k] - res.oracle_a[k].value), std::abs(res.b[k] - res.oracle_b[k].value)});
        rec.at_most("n^" + std::to_string(2 * m) + "+1: max |closed form - oracle|", gap, config.sum_tol);
    }
}

struct Entry {
    const char* title;
    double time_limit;
    void (*run)(const Config&, Recorder&);
};

constexpr Entry kCriteria[kCriterionCount] = {
    {"associated matrix of x^3+x^2+1", 0.1, associated_matrix_example},
    {"closed forms for x^3+x^2+1", 5.0, cubic_closed_forms},
    {"known sums for x^2+1", 0.0, known_sums},
    {"identity constancy, random polynomials", 10.0, identity_constancy},
    {"cyclotomic determinant identity", 0.0, cyclotomic_determinant},
    {"m=3 explicit identity", 0.0, cubic_identity},
    {"addition theorem", 0.0, addition_theorem},
    {"taylor / direct / rescaled agreement", 0.0, triple_agreement},
    {"exact factorial identity", 2.0, factorial_identity},
    {"non-degeneracy of A_m", 0.0, matrix_a_nondegenerate},
    {"Fourier closed form vs quadrature", 0.0, fourier_quadrature},
    {"derivative system vs finite differences", 0.0, derivative_system},
    {"sums over n^(2m)+1 vs oracle", 0.0, target_family},
};

}  // namespace

bool CriterionResult::passed() const {
    if (!error.empty() || !runtime_ok || checks.empty()) return false;
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const Check* CriterionResult::worst() const {
    const Check* out = nullptr;
    double worst_ratio = -1.0;
    for (const auto& c : checks) {
        double ratio = 0.0;
        if (c.at_least)
            ratio = c.threshold / std::max(c.measured, std::numeric_limits<double>::min());
        else
            ratio = c.threshold > 0 ? c.measured / c.threshold : (c.measured > 0 ? 1e300 : 0.0);
        if (!c.passed) ratio = std::max(ratio, 1e300);
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            out = &c;
        }
    }
    return out;
}

CriterionResult run_criterion(int id, const Config& config) {
    if (id < 1 || id > kCriterionCount) throw InputError("criterion id must be in 1.." + std::to_string(kCriterionCount));
    const Entry& entry = kCriteria[id - 1];
    CriterionResult out;
    out.id = id;
    out.title = entry.title;
    out.time_limit = entry.time_limit;
    Recorder rec(out.checks);
    const auto start = std::chrono::steady_clock::now();
    try {
        entry.run(config, rec);
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.runtime_ok = entry.time_limit <= 0.0 || out.seconds <= entry.time_limit;
    return out;
}

std::vector<CriterionResult> run_all(const Config& config) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, config));
    return out;
}

}  // namespace gtrig::acceptance
