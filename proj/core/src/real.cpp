#include "we/real.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace we {

std::string to_hex(Real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%La", v);
  return buf;
}

Real from_hex(const std::string& s) {
  if (s.empty()) throw InvalidArgument("empty real literal");
  char* end = nullptr;
  errno = 0;
  Real v = std::strtold(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE)
    throw InvalidArgument("bad real literal: " + s);
  return v;
}

std::string to_string(const BigCount& c) { return c.str(); }

BigCount count_from_string(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidArgument("bad count: " + s);
  return BigCount(s);
}

double log_count(const BigCount& c) {
  if (c <= 0) throw InvalidArgument("log of a non-positive count");
  // msb keeps this exact enough for counts beyond the double range.
  auto bits = boost::multiprecision::msb(c);
  if (bits < 1000) return std::log(c.convert_to<double>());
  unsigned shift = static_cast<unsigned>(bits) - 60;
  BigCount top = c >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

}  // namespace we
