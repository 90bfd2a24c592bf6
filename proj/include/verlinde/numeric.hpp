#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace verlinde {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// 50 decimal digits (~166-bit mantissa); used for every trigonometric evaluation.
using HighPrecision = boost::multiprecision::cpp_bin_float_50;

/// Raised when a floating evaluation cannot be rounded to an integer with confidence.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed a configured work or memory budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "p/q" in lowest terms; integers are written "p/1".
std::string to_string(const Rational& r);

/// Accepts "p/q" or "p" (optionally signed). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

/// Saturating (k+1)^n, used for work-bound checks.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent);

}  // namespace verlinde
