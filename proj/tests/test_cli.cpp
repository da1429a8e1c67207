#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = gtrig::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    const Run r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

double re(const json& z) { return z["re"].get<double>(); }
double im(const json& z) { return z["im"].get<double>(); }

}  // namespace

TEST_CASE("documents carry the four top-level keys") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"roots", "--poly", "x^2+1"},
             {"eval", "--poly", "x^2+1", "--l", "0", "--x", "0"},
             {"taylor", "--coeffs", "1,0,1", "--order", "4"},
             {"identity", "--poly", "x^3-2"},
             {"cyclo", "--m", "4", "--check", "addition"},
             {"matrix-c", "--poly", "x^3+x^2+1"},
             {"sum", "--poly", "x^2+1", "--oracle-n", "2000"}}) {
        const json doc = run_json(args);
        for (const char* key : {"command", "inputs", "results", "diagnostics"}) CHECK(doc.contains(key));
        CHECK(doc["command"] == args[0]);
    }
}

TEST_CASE("eval x^2+1 at 0") {
    const json doc = run_json({"eval", "--poly", "x^2+1", "--l", "0", "--x", "0"});
    CHECK(re(doc["results"]["value"]) == doctest::Approx(2.0));
    CHECK(im(doc["results"]["value"]) == doctest::Approx(0.0));

    const Run text = run({"eval", "--poly", "x^2+1", "--l", "0", "--x", "0"});
    CHECK(text.code == 0);
    CHECK(text.out.find("value: 2+0i") != std::string::npos);
}

TEST_CASE("sum reproduces the cubic example") {
    const json doc = run_json({"sum", "--poly", "x^3+x^2+1", "--descending-columns"});
    const json& b = doc["results"]["B"];
    REQUIRE(b.size() == 3);
    CHECK(doc["diagnostics"]["condition_estimate"].get<double>() > 1.0);
    for (const auto& row : doc["diagnostics"]["oracle_B"]) CHECK(row["residual"].get<double>() < 1e-6);
    CHECK(doc["diagnostics"]["oracle_B"][0]["k"] == 2);
}

TEST_CASE("matrix-c with descending columns") {
    const json doc = run_json({"matrix-c", "--poly", "x^3+x^2+1", "--descending-columns"});
    const json& m = doc["results"]["two_pi_i_C"];
    CHECK(re(m[0][0]) == doctest::Approx(3.0));
    CHECK(re(m[1][2]) == doctest::Approx(-3.0));
}

TEST_CASE("cyclo identity reports the measured determinant") {
    const json doc = run_json({"cyclo", "--m", "3", "--check", "identity"});
    CHECK(doc["results"]["max_variation"].get<double>() <= 1e-8);
    CHECK(re(doc["results"]["det_at_zero"]) == doctest::Approx(-1.0));
}

TEST_CASE("cyclo factorial") {
    const json doc = run_json({"cyclo", "--check", "factorial", "--n", "3"});
    CHECK(doc["results"]["sum_a"] == "3/2");
    CHECK(doc["results"]["holds"] == true);
}

TEST_CASE("identical inputs give identical output") {
    const std::vector<std::string> args{"identity", "--poly", "x^4+x+1", "--seed", "7", "--json"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("exit codes") {
    CHECK(run({"roots"}).code == 2);
    CHECK(run({"roots", "--poly", "x^2+", "--json"}).code == 2);
    CHECK(run({"roots", "--poly", "x", "--bogus"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"sum", "--poly", "x^2-1"}).code == 2);
    CHECK(run({"sum", "--poly", "x^2+1", "--oracle-n", "10"}).code == 2);
    CHECK(run({"cyclo", "--check", "factorial", "--n", "4"}).code == 2);
    CHECK(run({"eval", "--poly", "x^2+1", "--x", "900"}).code == 3);
    CHECK(run({"--help"}).code == 0);

    const Run bad = run({"roots", "--poly", "x", "--bogus"});
    CHECK(bad.err.find("Usage") != std::string::npos);
}

TEST_CASE("verify exit status follows the criteria") {
    CHECK(run({"verify", "--criterion", "1", "--criterion", "9"}).code == 0);
    const Run tight = run({"verify", "--criterion", "13", "--sum-tol", "1e-14", "--oracle-n", "2000"});
    CHECK(tight.code == 1);
    CHECK(tight.out.find("FAIL") != std::string::npos);
}
