#pragma once

/// \file loghyper.hpp
/// Symbolic calculus on the logarithmic tower l_0 = x, l_{i+1} = log l_i,
/// used as an independent differentiation oracle. Monomials are finite
/// products prod_i l_i^{r_i} with exact rational exponents; their
/// derivative comes from the chain rule alone (l_0' = 1 and
/// l_{i+1}' = l_i'/l_i), never from an asymptotic couple, so agreement
/// with the abstract derivation is a genuine cross-check.
///
/// The map h sends the series monomial t^gamma to prod_i l_i^(-gamma_i);
/// log-series are ordered by pulling that map back, dominant term first.

#include <hahn/couple.hpp>
#include <hahn/derivation.hpp>
#include <hahn/report.hpp>
#include <hahn/scalar.hpp>
#include <hahn/series.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hahn {

/// prod_i l_i^{r_i}, sparse over tower levels; no zero exponents stored.
class LogMonomial {
 public:
  LogMonomial() = default;

  static LogMonomial one() { return LogMonomial(); }
  /// l_level^r.
  static LogMonomial power(std::size_t level, const Scalar& r);

  bool is_one() const { return exponents_.empty(); }
  const std::map<std::size_t, Scalar>& exponents() const { return exponents_; }
  Scalar exponent(std::size_t level) const;
  void set_exponent(std::size_t level, const Scalar& r);

  LogMonomial operator*(const LogMonomial& rhs) const;

  bool operator==(const LogMonomial& rhs) const {
    return exponents_ == rhs.exponents_;
  }

  /// "l0^-1*l1^-2"; "1" for the empty product.
  std::string to_string() const;

 private:
  std::map<std::size_t, Scalar> exponents_;
};

/// Dominance order pulled back through h: the monomial whose exponent
/// vector is larger at the first differing level dominates (its series
/// exponent -r is lex-smaller).
struct LogPullbackLess {
  bool operator()(const LogMonomial& a, const LogMonomial& b) const;
};

class LogSeries {
 public:
  LogSeries() = default;

  static LogSeries zero() { return LogSeries(); }
  static LogSeries constant(const Scalar& c);
  static LogSeries term(const LogMonomial& m, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<LogMonomial, Scalar, LogPullbackLess>& terms() const {
    return terms_;
  }
  const Scalar& coeff(const LogMonomial& m) const;
  void add_term(const LogMonomial& m, const Scalar& c);

  LogSeries operator-() const;
  LogSeries& operator+=(const LogSeries& rhs);
  LogSeries& operator-=(const LogSeries& rhs);
  friend LogSeries operator+(LogSeries a, const LogSeries& b) {
    a += b;
    return a;
  }
  friend LogSeries operator-(LogSeries a, const LogSeries& b) {
    a -= b;
    return a;
  }
  LogSeries operator*(const LogSeries& rhs) const;
  LogSeries scaled(const Scalar& c) const;

  bool operator==(const LogSeries& rhs) const { return terms_ == rhs.terms_; }

  /// "3*l0^-1*l1^-2 + 5", dominant term first (pullback order).
  std::string to_string() const;

 private:
  std::map<LogMonomial, Scalar, LogPullbackLess> terms_;
};

/// h(t^gamma) = prod_i l_i^(-gamma_i), extended linearly; exact bijection
/// between finite series over the index set and log-series on levels
/// below the index size.
LogSeries h_map(const HahnSeries& f);
HahnSeries h_inverse(const LogSeries& s, IndexSet index);

/// Chain-rule derivative of the tower: l_0' = 1, l_{i+1}' = l_i'/l_i;
/// products differentiate by the Leibniz and power rules. Exact.
LogSeries oracle_diff(const LogMonomial& m);
LogSeries oracle_diff(const LogSeries& s);

/// Certifies, against the tower couple psi(e_i) = e_0 + ... + e_i, that h
/// intertwines the abstract derivation with the calculus oracle, is a
/// ring morphism, and preserves order. Requires ctx to carry exactly that
/// couple (throws std::invalid_argument otherwise).
std::vector<CheckResult> verify_isomorphism(const DerivationContext& ctx,
                                            std::size_t samples,
                                            std::uint64_t seed);

}  // namespace hahn
