#include "report.hpp"

#include <cstdio>
#include <ostream>

namespace gtrig::report {

json to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(std::span<const Complex> v) {
    json out = json::array();
    for (const auto& z : v) out.push_back(to_json(z));
    return out;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

json to_json(const acceptance::CriterionResult& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"measured", c.measured}, {"threshold", c.threshold},
                          {"comparison", c.at_least ? ">" : "<="}, {"passed", c.passed}});
    json out{{"id", r.id}, {"title", r.title}, {"passed", r.passed()}, {"checks", checks}, {"runtime_ok", r.runtime_ok}};
    if (r.time_limit > 0) out["time_limit_s"] = r.time_limit;
    if (!r.error.empty()) out["error"] = r.error;
    return out;
}

std::string format(Complex z) {
    char buf[96];
    const double im = z.imag();
    std::snprintf(buf, sizeof buf, "%.12g%c%.12gi", z.real(), std::signbit(im) ? '-' : '+', std::abs(im));
    return buf;
}

void print_criterion(std::ostream& out, const acceptance::CriterionResult& r) {
    char head[128];
    std::snprintf(head, sizeof head, "%s  %2d  %-44s", r.passed() ? "PASS" : "FAIL", r.id, r.title.c_str());
    out << head;
    if (!r.error.empty()) {
        out << "  error: " << r.error << '\n';
        return;
    }
    if (const auto* w = r.worst()) {
        char detail[256];
        std::snprintf(detail, sizeof detail, "  %s = %.3e (%s %.1e)", w->name.c_str(), w->measured, w->at_least ? ">" : "<=",
                      w->threshold);
        out << detail;
    }
    if (r.time_limit > 0) {
        char t[64];
        std::snprintf(t, sizeof t, "  time %.3fs %s %.1fs", r.seconds, r.runtime_ok ? "<=" : ">", r.time_limit);
        out << t;
    }
    out << '\n';
}

}  // namespace gtrig::report
