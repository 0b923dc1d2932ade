#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace freeiso {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Error with a machine-readable code (mirrored into CLI error reports).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

/// Parses "p/q", integer, or plain decimal strings ("1.25", "-0.5") into an
/// exact rational. Decimals are converted exactly, not via floating point.
Rat parse_rat(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& value);

double rat_to_double(const Rat& value);

Rat rat_abs(const Rat& value);

}  // namespace freeiso
