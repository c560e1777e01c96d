#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace we {

// Ordinates of deep plateaus sit near 2^-k for k in the thousands, far below
// the double range; the x87 extended format keeps them normal up to k ~ 16000.
using Real = long double;
static_assert(std::numeric_limits<Real>::max_exponent >= 16384,
              "we requires an extended-range long double");

using BigCount = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters or malformed input. The CLI maps this to exit code 2.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A query needs more of the staircase than was materialized (exit code 3).
class LayoutExceeded : public Error {
 public:
  using Error::Error;
};

std::string to_hex(Real v);
Real from_hex(const std::string& s);

std::string to_string(const BigCount& c);
BigCount count_from_string(const std::string& s);
double log_count(const BigCount& c);

}  // namespace we
