#pragma once

/// \file tower.hpp
/// Composition of valuations via a convex cut of the index set: indices
/// below the cut form the coarse value group, indices at or above it the
/// convex fine subgroup. Coarsening a series keeps only the exponent
/// prefix; the fine residue re-reads the prefix-zero terms over the
/// suffix indices; composing both residues lands in the coefficient
/// field. Degenerate cuts (0 or the full size) carry their rank-0 side in
/// a one-index set whose coordinate is never used.

#include <hahn/group.hpp>
#include <hahn/report.hpp>
#include <hahn/scalar.hpp>
#include <hahn/series.hpp>

#include <cstdint>
#include <vector>

namespace hahn {

class ValuationTower {
 public:
  /// cut may range from 0 (coarse part trivial) to index.size() (fine
  /// part trivial); throws std::invalid_argument outside that range.
  ValuationTower(IndexSet index, std::size_t cut);

  IndexSet index_set() const { return index_; }
  std::size_t cut() const { return cut_; }
  IndexSet coarse_index_set() const { return coarse_; }
  IndexSet fine_index_set() const { return fine_; }

  /// Prefix (indices < cut) of a value, re-read over the coarse index set.
  GroupElement coarse_of(const GroupElement& value) const;

  /// Coarse valuation: prefix of v(f). Throws std::domain_error on zero.
  GroupElement coarse_value(const HahnSeries& f) const;

  /// Membership in the coarse valuation ring (prefix of v(f) >= 0).
  bool in_coarse_ring(const HahnSeries& f) const;
  /// Membership in the full (composed) valuation ring (v(f) >= 0).
  bool in_full_ring(const HahnSeries& f) const;
  /// Membership of a value in the convex fine subgroup (prefix zero).
  bool in_fine_subgroup(const GroupElement& value) const;

  /// Residue onto the fine series field: keeps the prefix-zero terms and
  /// re-expresses them over the suffix indices. Requires membership in
  /// the coarse ring (throws std::domain_error otherwise). A ring
  /// morphism on that ring.
  HahnSeries residue_fine(const HahnSeries& f) const;

  /// Two-step residue onto the coefficient field: the constant
  /// coefficient. Requires membership in the full ring.
  Scalar compose_place(const HahnSeries& f) const;

 private:
  IndexSet index_;
  std::size_t cut_;
  IndexSet coarse_;
  IndexSet fine_;
};

/// Exhaustive small-grid plus sampled verification: valuation-ring
/// dichotomy, the place as a surjective ring morphism, the coarse
/// projection as an order-preserving quotient with kernel the fine
/// subgroup, convexity of that subgroup, primality of the coarse maximal
/// ideal inside the full ring, and the residue morphism property.
std::vector<CheckResult> verify_tower(const ValuationTower& tower,
                                      std::size_t samples, std::uint64_t seed);

}  // namespace hahn
