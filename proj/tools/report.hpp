#pragma once

#include <iosfwd>
#include <string>

#include "gtrig/acceptance.hpp"
#include "gtrig/linalg.hpp"
#include "json.hpp"

namespace gtrig::report {

using nlohmann::json;

json to_json(Complex z);
json to_json(std::span<const Complex> v);
json to_json(const Matrix& m);
json to_json(const acceptance::CriterionResult& r);

/// `a+bi` with 12 significant digits.
std::string format(Complex z);

/// One line per criterion: PASS/FAIL, id, title, worst check.
void print_criterion(std::ostream& out, const acceptance::CriterionResult& r);

}  // namespace gtrig::report
