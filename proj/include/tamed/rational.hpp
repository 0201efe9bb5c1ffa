#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tamed {

/// Exact unbounded integer used for all multiplicities.
using Int = boost::multiprecision::cpp_int;

/// Exact rational used for taming vectors, window bounds and pairings.
using Rat = boost::multiprecision::cpp_rational;

/// Domain error for all library-level contract violations.
struct TamedError : std::runtime_error {
  explicit TamedError(const std::string& what) : std::runtime_error(what) {}
};

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

inline std::string to_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Parses "n" or "p/q" with optional sign; throws TamedError on junk.
Rat parse_rational(const std::string& text);

/// Largest integer <= x and smallest integer >= x.
Int rat_floor(const Rat& x);
Int rat_ceil(const Rat& x);

}  // namespace tamed
