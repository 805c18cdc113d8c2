#pragma once

/// \file series.hpp
/// Finite-support generalized power series over the value group: formal
/// sums f = sum f_gamma t^gamma with exact rational coefficients. The
/// monomial order is reversed relative to exponents: smaller exponent
/// means bigger monomial, so the term map (keyed by ascending exponent)
/// lists dominant terms first and begin() is the leading term.
///
/// Inverses generally have infinite support, so inversion is budgeted:
/// the caller gets a truncated Neumann sum together with an exact lower
/// bound on the valuation of the residual f * result - 1.

#include <hahn/group.hpp>
#include <hahn/scalar.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace hahn {

class HahnSeries {
 public:
  explicit HahnSeries(IndexSet index) : index_(index) {}

  static HahnSeries zero(IndexSet index) { return HahnSeries(index); }
  static HahnSeries constant(IndexSet index, const Scalar& c);
  static HahnSeries monomial(IndexSet index, const GroupElement& exponent,
                             const Scalar& coeff);

  IndexSet index_set() const { return index_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Terms keyed by exponent, ascending; the first entry is the dominant
  /// (leading) term.
  const std::map<GroupElement, Scalar>& terms() const { return terms_; }

  /// Coefficient at the given exponent, zero if absent.
  const Scalar& coeff(const GroupElement& exponent) const;
  void set_coeff(const GroupElement& exponent, const Scalar& c);

  /// Exponent of the leading term; undefined on zero.
  GroupElement valuation() const;
  /// Leading exponent and coefficient; undefined on zero.
  std::pair<GroupElement, Scalar> leading() const;

  HahnSeries operator-() const;
  HahnSeries& operator+=(const HahnSeries& rhs);
  HahnSeries& operator-=(const HahnSeries& rhs);
  friend HahnSeries operator+(HahnSeries a, const HahnSeries& b) {
    a += b;
    return a;
  }
  friend HahnSeries operator-(HahnSeries a, const HahnSeries& b) {
    a -= b;
    return a;
  }
  friend HahnSeries operator*(const HahnSeries& a, const HahnSeries& b);

  HahnSeries scaled(const Scalar& c) const;

  bool operator==(const HahnSeries& rhs) const {
    return index_ == rhs.index_ && terms_ == rhs.terms_;
  }

  /// "3*t^(0,1) + 5*t^(0,2)" style rendering, dominant term first.
  std::string to_string() const;

 private:
  void require_same_index(const HahnSeries& rhs) const;

  IndexSet index_;
  std::map<GroupElement, Scalar> terms_;
};

inline HahnSeries operator*(const Scalar& c, const HahnSeries& f) {
  return f.scaled(c);
}

/// Field order: f > g when the leading coefficient of f - g is positive.
std::strong_ordering field_compare(const HahnSeries& f, const HahnSeries& g);

bool is_positive(const HahnSeries& f);

/// Asymptotic comparison of nonzero series by valuation.
enum class Dominance {
  dominated,   // f << g: v(f) > v(g)
  same_order,  // v(f) = v(g)
  dominates,   // f >> g: v(f) < v(g)
};

struct DominanceResult {
  Dominance rel;
  /// f ~ g, i.e. v(f - g) > v(f); only possible within same_order.
  bool equivalent;
};

/// Throws std::domain_error if either series is zero.
DominanceResult dominance(const HahnSeries& f, const HahnSeries& g);

struct TruncationBudget {
  /// Number of Neumann summands an inversion may use (also the term cap
  /// for truncate); at least 1.
  std::size_t max_terms;
  /// Optional hard cap: drop result terms with exponent >= cutoff.
  std::optional<GroupElement> valuation_cutoff;

  explicit TruncationBudget(std::size_t terms,
                            std::optional<GroupElement> cutoff = std::nullopt);
};

/// Keeps the budget-many dominant terms (and drops terms at or beyond the
/// cutoff when one is set); idempotent.
HahnSeries truncate(const HahnSeries& f, const TruncationBudget& budget);

struct Inverted {
  HahnSeries series;
  /// Lower bound b with v(f * series - 1) >= b, always positive;
  /// absent when the product is exactly 1.
  std::optional<GroupElement> residual_bound;
};

/// Budgeted multiplicative inverse: writes f = c t^gamma (1 + eps) with
/// eps infinitesimal and returns the Neumann partial sum
/// c^-1 t^-gamma sum_{n<N} (-eps)^n, N = budget.max_terms. Without a
/// cutoff the reported bound N * v(eps) is exact. Throws std::domain_error
/// on zero input and std::invalid_argument when a cutoff makes a positive
/// residual bound impossible (v(f) + cutoff <= 0).
Inverted invert(const HahnSeries& f, const TruncationBudget& budget);

}  // namespace hahn
