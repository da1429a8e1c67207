#include <iostream>

#include "CLI11.hpp"
#include "gtrig/acceptance.hpp"
#include "report.hpp"

int main(int argc, char** argv) {
    using namespace gtrig::acceptance;
    Config config;
    std::vector<int> ids;
    CLI::App app{"Acceptance criteria, one PASS/FAIL line each", "gtrig_acceptance"};
    app.add_option("--criterion", ids, "run only these criteria")->check(CLI::Range(1, kCriterionCount));
    app.add_option("--seed", config.seed, "seed for sampled checks");
    app.add_option("--sum-tol", config.sum_tol, "closed form vs oracle tolerance")->check(CLI::PositiveNumber);
    app.add_option("--oracle-n", config.oracle_terms, "oracle terms")->check(CLI::Range(1000L, 100000000L));
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    if (ids.empty())
        for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);

    int failed = 0;
    for (int id : ids) {
        const auto r = run_criterion(id, config);
        gtrig::report::print_criterion(std::cout, r);
        if (!r.passed()) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
