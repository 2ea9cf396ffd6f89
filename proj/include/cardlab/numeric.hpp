#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cardlab {

/// Arbitrary-precision natural number (ordinal coefficients, finite cardinals).
using Natural = boost::multiprecision::cpp_int;
/// Exact rational (densities, interval endpoints).
using Rational = boost::multiprecision::cpp_rational;
/// An element of a subset of the naturals.
using Element = std::int64_t;

/// Three-valued answer for questions the set algebra may not settle.
enum class Truth { False, True, Unknown };

constexpr Truth truth_of(bool b) noexcept { return b ? Truth::True : Truth::False; }
Truth truth_and(Truth a, Truth b) noexcept;
Truth truth_not(Truth a) noexcept;
const char* to_string(Truth t) noexcept;

std::string to_string(const Natural& n);
/// Prints `p` for integers and `p/q` otherwise.
std::string to_string(const Rational& r);

/// Parses an unsigned decimal literal; throws std::invalid_argument on junk.
Natural parse_natural(std::string_view digits);

}  // namespace cardlab
