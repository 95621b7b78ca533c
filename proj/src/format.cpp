#include "orbench/format.hpp"

#include <charconv>
#include <cstdio>

namespace orbench {

namespace {

std::string fixed(scalar_t x, int precision) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed,
                           precision);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string fmt_money(scalar_t x) { return fixed(x, 1); }
std::string fmt_rate(scalar_t x) { return fixed(x, 4); }

std::string fmt_int(std::int64_t v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace orbench
