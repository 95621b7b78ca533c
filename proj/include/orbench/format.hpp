#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "orbench/types.hpp"

namespace orbench {

// Statement formatting rules: monetary/distance reals carry one decimal
// place, rates and fractions carry four, integers stay integers.  All
// formatting is locale-independent.

inline scalar_t round1(scalar_t x) { return std::round(x * 10.0) / 10.0; }
inline scalar_t round4(scalar_t x) { return std::round(x * 10000.0) / 10000.0; }

std::string fmt_money(scalar_t x);  // fixed, 1 decimal
std::string fmt_rate(scalar_t x);   // fixed, 4 decimals
std::string fmt_int(std::int64_t v);

}  // namespace orbench
