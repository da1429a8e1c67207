#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "gtrig/acceptance.hpp"
#include "gtrig/cyclotomic.hpp"
#include "gtrig/errors.hpp"
#include "gtrig/sampling.hpp"
#include "gtrig/series.hpp"
#include "report.hpp"

namespace gtrig::cli {
namespace {

using report::json;
using report::to_json;

struct Options {
    std::string poly;
    std::string coeffs;
    bool json = false;
    bool descending = false;
    double tol = 1e-13;
    long oracle_n = kDefaultOracleTerms;
    std::uint64_t seed = acceptance::kDefaultSeed;
    double sum_tol = 1e-6;
    std::optional<int> l;
    std::optional<std::string> x;
    int order = 10;
    int m = 3;
    std::string check;
    std::optional<int> n;
    std::vector<int> criteria;
    bool no_oracle = false;
};

constexpr int kSamples = 20;

Polynomial read_polynomial(const Options& o) {
    if (o.poly.empty() == o.coeffs.empty()) throw InputError("give exactly one of --poly or --coeffs");
    return o.poly.empty() ? parse_coefficients(o.coeffs) : parse_polynomial(o.poly);
}

json document(const std::string& command, json inputs) {
    return json{{"command", command}, {"inputs", std::move(inputs)}, {"results", json::object()}, {"diagnostics", json::object()}};
}

json poly_inputs(const Polynomial& p, const Options& o) {
    json coeffs = to_json(p.coeffs());
    return json{{"polynomial", to_string(p)}, {"coefficients", coeffs}, {"tol", o.tol}};
}

ComplexVector reversed(ComplexVector v) {
    std::reverse(v.begin(), v.end());
    return v;
}

// ---- text rendering -------------------------------------------------------

bool is_complex(const json& j) { return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im"); }

std::string scalar(const json& j) {
    if (is_complex(j)) return report::format({j["re"].get<double>(), j["im"].get<double>()});
    if (j.is_number_float()) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
        return buf;
    }
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool is_scalar(const json& j) { return !j.is_structured() || is_complex(j); }

void render(std::ostream& out, const std::string& key, const json& value, int indent) {
    const std::string pad(indent, ' ');
    if (is_scalar(value)) {
        out << pad << key << ": " << scalar(value) << '\n';
        return;
    }
    out << pad << key << ":\n";
    if (value.is_object()) {
        for (const auto& [k, v] : value.items()) render(out, k, v, indent + 2);
        return;
    }
    const bool matrix = !value.empty() && std::all_of(value.begin(), value.end(), [](const json& row) {
        return row.is_array() && std::all_of(row.begin(), row.end(), is_scalar);
    });
    if (matrix) {
        std::vector<std::vector<std::string>> cells;
        std::size_t width = 0;
        for (const auto& row : value) {
            auto& line = cells.emplace_back();
            for (const auto& c : row) {
                line.push_back(scalar(c));
                width = std::max(width, line.back().size());
            }
        }
        for (const auto& line : cells) {
            out << pad << "  ";
            for (const auto& c : line) out << std::string(width - c.size() + 2, ' ') << c;
            out << '\n';
        }
        return;
    }
    for (std::size_t i = 0; i < value.size(); ++i) render(out, "[" + std::to_string(i) + "]", value[i], indent + 2);
}

void emit(std::ostream& out, const json& doc, bool as_json) {
    if (as_json) {
        out << doc.dump(2) << '\n';
        return;
    }
    out << "command: " << doc["command"].get<std::string>() << '\n';
    for (const char* section : {"inputs", "results", "diagnostics"})
        if (!doc[section].empty()) render(out, section, doc[section], 0);
}

// ---- commands -------------------------------------------------------------

json cmd_roots(const Options& o) {
    const Polynomial p = read_polynomial(o);
    const RootSet roots = find_roots(p, o.tol);
    json doc = document("roots", poly_inputs(p, o));
    doc["results"]["roots"] = to_json(roots.roots);
    doc["diagnostics"]["max_residual"] = roots.residual;
    return doc;
}

json cmd_eval(const Options& o) {
    const Polynomial p = read_polynomial(o);
    const GenTrigSystem sys(p, o.tol);
    const Complex x = parse_complex(o.x.value_or("0"));
    json inputs = poly_inputs(p, o);
    inputs["x"] = to_json(x);
    if (o.l) inputs["l"] = *o.l;
    json doc = document("eval", inputs);
    if (o.l)
        doc["results"]["value"] = to_json(eval_S(sys, *o.l, x));
    else
        doc["results"]["values"] = to_json(eval_S_all(sys, x));
    doc["diagnostics"]["root_residual"] = sys.roots().residual;
    return doc;
}

json cmd_taylor(const Options& o) {
    const Polynomial p = read_polynomial(o);
    const GenTrigSystem sys(p, o.tol);
    const int l = o.l.value_or(0);
    json inputs = poly_inputs(p, o);
    inputs["l"] = l;
    inputs["order"] = o.order;
    json doc = document("taylor", inputs);
    doc["results"]["coefficients"] = to_json(taylor_coeffs(sys, l, o.order));
    doc["diagnostics"]["root_residual"] = sys.roots().residual;
    return doc;
}

json cmd_identity(const Options& o) {
    const Polynomial p = read_polynomial(o);
    const GenTrigSystem sys(p, o.tol);
    const IdentityCertificate cert = identity_certificate(sys);
    sampling::Rng rng(o.seed);
    double worst = 0.0;
    for (int s = 0; s < kSamples; ++s) {
        const Complex x = sampling::in_disc(rng);
        worst = std::max(worst, std::abs(eval_det_M(cert, sys, x) - cert.det_ref));
    }
    json inputs = poly_inputs(p, o);
    inputs["seed"] = o.seed;
    inputs["samples"] = kSamples;
    json doc = document("identity", inputs);
    doc["results"]["lambda"] = to_json(cert.lambda);
    doc["results"]["left_vector"] = to_json(cert.left_vector);
    doc["results"]["det_ref"] = to_json(cert.det_ref);
    doc["results"]["max_deviation"] = worst;
    doc["diagnostics"]["eigen_residual"] = cert.eigen_residual;
    doc["diagnostics"]["root_residual"] = sys.roots().residual;
    return doc;
}

json cmd_cyclo(const Options& o) {
    const CyclotomicSystem sys(o.m);
    const int m = o.m;
    std::string check = o.check;
    if (check.empty()) check = o.x ? "eval" : "identity";
    json inputs{{"m", m}, {"check", check}, {"seed", o.seed}};
    sampling::Rng rng(o.seed);
    json results;
    if (check == "eval") {
        const Complex x = parse_complex(*o.x);
        inputs["x"] = to_json(x);
        results["values"] = to_json(eval_S_cyclo_all(sys, x));
    } else if (check == "identity") {
        const double claimed = m % 2 == 1 ? 1.0 : -1.0;
        const Complex at_zero = cyclotomic_det(sys, 0.0);
        double from_claimed = 0.0, variation = 0.0;
        for (int s = 0; s < kSamples; ++s) {
            const Complex det = cyclotomic_det(sys, sampling::in_disc(rng, 2.0));
            from_claimed = std::max(from_claimed, std::abs(det - claimed));
            variation = std::max(variation, std::abs(det - at_zero));
        }
        inputs["samples"] = kSamples;
        results["det_at_zero"] = to_json(at_zero);
        results["max_variation"] = variation;
        results["claimed_det"] = claimed;
        results["max_deviation_from_claimed"] = from_claimed;
    } else if (check == "addition") {
        json rules = json::array();
        double worst = 0.0;
        for (int l = 0; l < m; ++l) {
            const AdditionRule rule = addition_rule(m, l);
            rules.push_back({{"l", l}, {"signs", rule.signs}, {"partner", rule.partner}});
            for (int s = 0; s < kSamples; ++s) {
                const Complex x1 = sampling::in_disc(rng), x2 = sampling::in_disc(rng);
                worst = std::max(worst, std::abs(eval_S_cyclo(sys, l, x1 + x2) - apply_addition(sys, rule, x1, x2)));
            }
        }
        inputs["samples"] = kSamples;
        results["rules"] = rules;
        results["max_error"] = worst;
    } else if (check == "series") {
        const int terms = std::min(170 / m, 60);
        double taylor_direct = 0.0, direct_rescaled = 0.0;
        for (int s = 0; s < kSamples; ++s) {
            const Complex x = sampling::in_disc(rng, 2.0);
            for (int l = 0; l < m; ++l) {
                const RescalePair pair = rescale_consistency(sys, l, x);
                taylor_direct = std::max(taylor_direct, std::abs(taylor_eval_cyclo(sys, l, x, terms) - pair.direct));
                direct_rescaled = std::max(direct_rescaled, std::abs(pair.direct - pair.rescaled));
            }
        }
        inputs["samples"] = kSamples;
        inputs["terms"] = terms;
        results["max_taylor_vs_direct"] = taylor_direct;
        results["max_direct_vs_rescaled"] = direct_rescaled;
    } else if (check == "factorial") {
        if (!o.n) throw InputError("--check factorial needs --n");
        const FactorialIdentity f = factorial_identity_check(*o.n);
        inputs = json{{"n", *o.n}, {"check", check}};
        results["sum_a"] = f.sum_a.str();
        results["sum_b"] = f.sum_b.str();
        results["sum_b_any_order"] = f.sum_b_any_order.str();
        results["holds"] = f.holds;
    } else if (check == "matrix-a") {
        const MatrixAResult a = matrix_A(sys);
        inputs = json{{"m", m}, {"check", check}};
        results["matrix"] = to_json(a.a);
        results["det"] = to_json(a.det);
        results["abs_det"] = std::abs(a.det);
        results["abs_det_via_factorization"] = a.det_via_factorization;
    } else {
        throw InputError("unknown check '" + check + "'");
    }
    json doc = document("cyclo", inputs);
    doc["results"] = results;
    return doc;
}

json cmd_matrix_c(const Options& o) {
    const Polynomial p = read_polynomial(o);
    const GenTrigSystem sys(p, o.tol);
    require_off_integers(sys.roots());
    const AssociatedMatrix am = associated_matrix(sys);
    const auto arrange = [&](const Matrix& mat) { return o.descending ? AssociatedMatrix::descending(mat) : mat; };
    json inputs = poly_inputs(p, o);
    inputs["columns"] = o.descending ? "descending" : "ascending";
    json doc = document("matrix-c", inputs);
    doc["results"]["C"] = to_json(arrange(am.c));
    doc["results"]["two_pi_i_C"] = to_json(arrange(am.scaled()));
    doc["diagnostics"]["condition_estimate"] = am.condition_estimate;
    double gap = 0.0;
    for (std::size_t i = 0; i < am.c.data().size(); ++i) gap = std::max(gap, std::abs(am.c.data()[i] - am.c_cross_check.data()[i]));
    doc["diagnostics"]["cross_check_gap"] = gap;
    doc["diagnostics"]["root_residual"] = sys.roots().residual;
    return doc;
}

json cmd_sum(const Options& o) {
    const Polynomial p = read_polynomial(o);
    SeriesOptions opt;
    opt.root_tol = o.tol;
    opt.oracle_terms = o.oracle_n;
    opt.run_oracle = !o.no_oracle;
    const SeriesResult res = evaluate_sums(p, opt);
    const auto arrange = [&](const ComplexVector& v) { return o.descending ? reversed(v) : v; };

    json inputs = poly_inputs(p, o);
    inputs["order"] = o.descending ? "descending k" : "ascending k";
    inputs["oracle_n"] = opt.run_oracle ? json(o.oracle_n) : json(nullptr);
    json doc = document("sum", inputs);
    doc["results"]["A"] = to_json(arrange(res.a));
    doc["results"]["B"] = to_json(arrange(res.b));
    doc["diagnostics"]["condition_estimate"] = res.condition_estimate;
    doc["diagnostics"]["solve_residual"] = res.solve_residual;
    if (opt.run_oracle) {
        const auto oracle = [&](const ComplexVector& closed, const std::vector<OracleEstimate>& est) {
            json rows = json::array();
            for (std::size_t k = 0; k < est.size(); ++k)
                rows.push_back({{"k", k},
                                {"value", to_json(est[k].value)},
                                {"error_bar", est[k].error_bar},
                                {"residual", std::abs(closed[k] - est[k].value)}});
            if (o.descending) std::reverse(rows.begin(), rows.end());
            return rows;
        };
        doc["diagnostics"]["oracle_A"] = oracle(res.a, res.oracle_a);
        doc["diagnostics"]["oracle_B"] = oracle(res.b, res.oracle_b);
    }
    return doc;
}

int cmd_verify(const Options& o, std::ostream& out) {
    acceptance::Config config;
    config.seed = o.seed;
    config.sum_tol = o.sum_tol;
    config.oracle_terms = o.oracle_n;
    std::vector<int> ids = o.criteria;
    if (ids.empty())
        for (int id = 1; id <= acceptance::kCriterionCount; ++id) ids.push_back(id);

    json criteria = json::array();
    int failed = 0;
    if (!o.json) out << "acceptance criteria (seed " << o.seed << ", sum_tol " << o.sum_tol << ")\n";
    for (int id : ids) {
        const auto r = acceptance::run_criterion(id, config);
        if (!r.passed()) ++failed;
        if (o.json)
            criteria.push_back(to_json(r));
        else
            report::print_criterion(out, r);
    }
    const int passed = static_cast<int>(ids.size()) - failed;
    if (o.json) {
        json doc = document("verify", json{{"seed", o.seed}, {"sum_tol", o.sum_tol}, {"oracle_n", o.oracle_n}, {"criteria", ids}});
        doc["results"]["criteria"] = criteria;
        doc["results"]["passed"] = passed;
        doc["results"]["failed"] = failed;
        doc["diagnostics"]["all_passed"] = failed == 0;
        emit(out, doc, true);
    } else {
        out << passed << "/" << ids.size() << " criteria passed\n";
    }
    return failed == 0 ? 0 : 1;
}

bool json_default() {
    const char* env = std::getenv("GTRIG_OUTPUT");
    return env != nullptr && std::string(env) == "json";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    o.json = json_default();

    CLI::App app{"Generalized trigonometric functions and closed-form rational series", "gtrig"};
    app.require_subcommand(1);

    const auto poly_flags = [&](CLI::App* sub) {
        sub->add_option("--poly", o.poly, "polynomial text, e.g. \"x^3+x^2+1\"");
        sub->add_option("--coeffs", o.coeffs, "ascending coefficients, e.g. \"1,0,1,1\"");
        sub->add_option("--tol", o.tol, "root-finder tolerance")->check(CLI::PositiveNumber);
    };
    const auto common_flags = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "emit a JSON document");
        sub->add_option("--seed", o.seed, "seed for sampled checks");
    };

    auto* roots = app.add_subcommand("roots", "roots of P");
    poly_flags(roots);
    common_flags(roots);

    auto* eval = app.add_subcommand("eval", "evaluate S_l(x)");
    poly_flags(eval);
    common_flags(eval);
    eval->add_option("--l", o.l, "function index (default: all)");
    eval->add_option("--x", o.x, "complex argument, e.g. 0.5-2i");

    auto* taylor = app.add_subcommand("taylor", "Taylor coefficients of S_l at 0");
    poly_flags(taylor);
    common_flags(taylor);
    taylor->add_option("--l", o.l, "function index (default 0)");
    taylor->add_option("--order", o.order, "highest power")->check(CLI::Range(0, 170));

    auto* identity = app.add_subcommand("identity", "identity certificate and det M(x) constancy");
    poly_flags(identity);
    common_flags(identity);

    auto* cyclo = app.add_subcommand("cyclo", "cyclotomic system of x^m - 1");
    common_flags(cyclo);
    cyclo->add_option("--m", o.m, "order m")->check(CLI::Range(1, kMaxDegree));
    cyclo->add_option("--check", o.check, "identity | addition | series | factorial | matrix-a")
        ->check(CLI::IsMember({"identity", "addition", "series", "factorial", "matrix-a"}));
    cyclo->add_option("--n", o.n, "n for the factorial identity (multiple of 3)");
    cyclo->add_option("--x", o.x, "evaluate all S_l at this point");

    auto* matrix_c = app.add_subcommand("matrix-c", "associated matrix C(P)");
    poly_flags(matrix_c);
    common_flags(matrix_c);
    matrix_c->add_flag("--descending-columns", o.descending, "columns in descending powers of n");

    auto* sum = app.add_subcommand("sum", "sums of n^k/P(n) and (-1)^n n^k/P(n)");
    poly_flags(sum);
    common_flags(sum);
    sum->add_flag("--descending-columns", o.descending, "list k from m-1 down to 0");
    sum->add_option("--oracle-n", o.oracle_n, "oracle terms")->check(CLI::Range(1000L, 100000000L));
    sum->add_flag("--no-oracle", o.no_oracle, "skip the brute-force oracle");

    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    common_flags(verify);
    verify->add_option("--sum-tol", o.sum_tol, "closed form vs oracle tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--oracle-n", o.oracle_n, "oracle terms")->check(CLI::Range(1000L, 100000000L));
    verify->add_option("--criterion", o.criteria, "run only these criteria")
        ->check(CLI::Range(1, acceptance::kCriterionCount));

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    try {
        if (name == "verify") return cmd_verify(o, out);
        json doc;
        if (name == "roots") doc = cmd_roots(o);
        else if (name == "eval") doc = cmd_eval(o);
        else if (name == "taylor") doc = cmd_taylor(o);
        else if (name == "identity") doc = cmd_identity(o);
        else if (name == "cyclo") doc = cmd_cyclo(o);
        else if (name == "matrix-c") doc = cmd_matrix_c(o);
        else doc = cmd_sum(o);
        emit(out, doc, o.json);
        return 0;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace gtrig::cli
