#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace anticycle {

/// Exact counts; path counts grow exponentially on adversarial inputs.
using BigCount = boost::multiprecision::cpp_int;

/// Malformed or out-of-contract input: bad vertex ids, violated preconditions,
/// unparsable files. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured work cap was reached before the answer was certain.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap, const std::string& detail)
      : std::runtime_error(cap + ": " + detail), cap_(std::move(cap)) {}
  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

inline constexpr int kDefaultVertexCap = 1'000'000;

/// Throws InputError when the result would not fit in 63 bits.
inline long long factorial(int s) {
  if (s < 0 || s > 20) throw InputError("factorial argument out of range: " + std::to_string(s));
  long long f = 1;
  for (int i = 2; i <= s; ++i) f *= i;
  return f;
}

}  // namespace anticycle
