#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace meyer {

// Exact arithmetic substrate. Every computation in the library is carried
// out over Z or Q; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

// cpp_rational keeps values in lowest terms with a positive denominator,
// which is exactly the canonical form the library's contracts require.
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// "p/q" in lowest terms; plain "p" when the value is an integer.
inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const Int& n) { return n.str(); }

inline int sign(const Rat& r) { return r.sign(); }
inline int sign(const Int& n) { return n.sign(); }

}  // namespace meyer
