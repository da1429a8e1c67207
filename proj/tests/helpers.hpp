#pragma once

#include <algorithm>

#include "doctest.h"
#include "gtrig/linalg.hpp"

namespace gtrig::test {

inline double gap(const ComplexVector& a, const ComplexVector& b) {
    REQUIRE(a.size() == b.size());
    double out = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
    return out;
}

inline double gap(const Matrix& a, const Matrix& b) { return gap(a.data(), b.data()); }

}  // namespace gtrig::test
