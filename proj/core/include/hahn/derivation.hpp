#pragma once

/// \file derivation.hpp
/// The derivation on the series field induced by an asymptotic couple:
/// (t^alpha)' = -sum_i alpha_i t^(alpha + psi(e_i)), extended linearly.
/// Requires a couple that passes the axiom and Hardy-type checks; the
/// leading-term law below depends on alpha |-> alpha + psi(alpha) being
/// strictly increasing, which those checks guarantee.

#include <hahn/couple.hpp>
#include <hahn/report.hpp>
#include <hahn/series.hpp>

#include <cstdint>
#include <vector>

namespace hahn {

class DerivationContext {
 public:
  /// Validates the couple exactly ((A1), (A3), Hardy type); throws
  /// std::invalid_argument naming the failed check otherwise.
  explicit DerivationContext(AsymptoticCouple couple);

  const AsymptoticCouple& couple() const { return couple_; }
  IndexSet index_set() const { return couple_.index_set(); }

  /// alpha + psi(alpha); strictly increasing in alpha on nonzero elements.
  GroupElement exponent_shift(const GroupElement& alpha) const;

  /// (t^alpha)'; zero for alpha = 0.
  HahnSeries derive_monomial(const GroupElement& alpha) const;

  /// Term-wise derivative; derive(c) = 0 for constants.
  HahnSeries derive(const HahnSeries& f) const;

  /// Exact logarithmic derivative of a monomial:
  /// (t^alpha)-dagger = -sum_i alpha_i t^psi(e_i).
  HahnSeries monomial_dagger(const GroupElement& alpha) const;

  /// f'/f with a budgeted inverse. Exact (no residual bound) for
  /// monomials and constants; otherwise the bound of the inverse is
  /// propagated through the multiplication by f'. Throws
  /// std::domain_error on zero input.
  Inverted log_derivative(const HahnSeries& f, const TruncationBudget& budget) const;

  /// Asserts leading(f') = (v(f) + psi(v(f)), -alpha_i f_alpha) where
  /// alpha = v(f) and i is its class. Requires v(f) != 0 (throws
  /// std::invalid_argument: the law excludes f of valuation zero).
  CheckResult leading_term_law(const HahnSeries& f) const;

  /// Sampled H-field checks: elements above all constants have positive
  /// derivative, positive infinitesimals have negative derivative, the
  /// valuation ring splits as constants plus infinitesimals, and the
  /// kernel of the derivation is exactly the constants.
  std::vector<CheckResult> check_hfield(std::size_t samples,
                                        std::uint64_t seed) const;

  /// Asserts the exact identity (t^(c alpha))-dagger = c (t^alpha)-dagger.
  CheckResult power_dagger(const GroupElement& alpha, const Scalar& c) const;

  /// For one series: certifies v(h-dagger) = psi(v(h)) with leading
  /// coefficient -v(h)_i under the given budget; inconclusive when the
  /// residual bound cannot separate the claim, skipped when v(h) = 0.
  CheckResult certify_round_trip(const HahnSeries& h,
                                 const TruncationBudget& budget) const;

  /// Sampled version of the round trip, raising the budget automatically;
  /// aggregates into one check result.
  CheckResult extract_couple(std::size_t samples, std::uint64_t seed,
                             const TruncationBudget& base_budget) const;

 private:
  AsymptoticCouple couple_;
};

/// Classifies a dagger residual bound against the claimed valuation:
/// pass when the bound (or exactness) certifies terms at target are
/// untouched by truncation, inconclusive otherwise.
CheckStatus classify_dagger_bound(const GroupElement& target,
                                  const std::optional<GroupElement>& bound);

}  // namespace hahn
