#pragma once

/// \file scalar.hpp
/// Exact rational scalars. All coefficient and exponent arithmetic in the
/// library is done over these; no floating point appears anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hahn {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Scalar = boost::multiprecision::cpp_rational;

inline int sign(const Scalar& x) { return x.sign(); }

inline Scalar abs(const Scalar& x) { return x < 0 ? Scalar(-x) : x; }

/// Parse "n", "-n" or "n/d" (d > 0 after normalization). Throws
/// std::invalid_argument on anything else, including "1/0".
inline Scalar parse_scalar(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  try {
    Scalar x(text);
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

inline std::string to_string(const Scalar& x) { return x.str(); }

}  // namespace hahn
