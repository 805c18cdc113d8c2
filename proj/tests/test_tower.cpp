#include <hahn/sampling.hpp>
#include <hahn/series.hpp>
#include <hahn/tower.hpp>

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace hahn;

namespace {

GroupElement el(IndexSet index, std::vector<Scalar> coeffs) {
  return GroupElement::from_dense(index, coeffs);
}

}  // namespace

TEST_CASE("tower: construction bounds the cut") {
  CHECK_NOTHROW(ValuationTower(IndexSet(3), 0));
  CHECK_NOTHROW(ValuationTower(IndexSet(3), 3));
  CHECK_THROWS_AS(ValuationTower(IndexSet(3), 4), std::invalid_argument);
}

TEST_CASE("tower: coarse value is the exponent prefix") {
  ValuationTower tower(IndexSet(3), 1);
  IndexSet index(3);
  HahnSeries f = HahnSeries::monomial(index, el(index, {2, -1, 5}), 3);
  CHECK(tower.coarse_of(el(index, {2, -1, 5})) ==
        el(tower.coarse_index_set(), {2}));
  CHECK(tower.coarse_value(f) == el(tower.coarse_index_set(), {2}));
  CHECK(tower.in_coarse_ring(f));
  CHECK(tower.in_full_ring(f));

  HahnSeries g = HahnSeries::monomial(index, el(index, {0, -1, 5}), 1);
  CHECK(tower.in_coarse_ring(g));   // coarse prefix (0) is not negative
  CHECK_FALSE(tower.in_full_ring(g));  // but the full exponent is
}

TEST_CASE("tower: frozen residue and place") {
  IndexSet index(2);
  ValuationTower tower(IndexSet(2), 1);
  HahnSeries f = HahnSeries::constant(index, 3) +
                 HahnSeries::monomial(index, el(index, {0, 1}), 1) +
                 HahnSeries::monomial(index, el(index, {1, 0}), 1);
  // The coarse residue keeps the prefix-zero terms: 3 + s^(1).
  HahnSeries r = tower.residue_fine(f);
  CHECK(r.index_set() == tower.fine_index_set());
  CHECK(r.coeff(GroupElement::zero(tower.fine_index_set())) == 3);
  CHECK(r.coeff(el(tower.fine_index_set(), {1})) == 1);
  CHECK(r.term_count() == 2);
  // The composed place reads the constant coefficient.
  CHECK(tower.compose_place(f) == 3);

  HahnSeries outside = HahnSeries::monomial(index, el(index, {-1, 0}), 1);
  CHECK_THROWS_AS(tower.residue_fine(outside), std::domain_error);
  HahnSeries infinite_fine = HahnSeries::monomial(index, el(index, {0, -2}), 1);
  CHECK_THROWS_AS(tower.compose_place(infinite_fine), std::domain_error);
  CHECK(tower.compose_place(HahnSeries::monomial(index, el(index, {0, 2}), 9)) ==
        0);
}

TEST_CASE("tower: fine subgroup membership and convexity") {
  ValuationTower tower(IndexSet(3), 2);
  IndexSet index(3);
  CHECK(tower.in_fine_subgroup(el(index, {0, 0, -7})));
  CHECK_FALSE(tower.in_fine_subgroup(el(index, {0, 1, 0})));
  CHECK(tower.in_fine_subgroup(GroupElement::zero(index)));

  // 0 <= x <= y with y in the subgroup forces x into it.
  GroupElement y = el(index, {0, 0, 5});
  GroupElement x = el(index, {0, 0, 2});
  CHECK(x >= GroupElement::zero(index));
  CHECK(x <= y);
  CHECK(tower.in_fine_subgroup(x));
}

TEST_CASE("tower: degenerate cuts keep both ends working") {
  IndexSet index(2);
  for (std::size_t cut : {0u, 2u}) {
    ValuationTower tower(index, cut);
    for (const CheckResult& r : verify_tower(tower, 60, 13))
      CHECK(r.status == CheckStatus::pass);
  }
}

TEST_CASE("tower: every cut of small ranks verifies") {
  for (std::size_t size = 1; size <= 3; ++size)
    for (std::size_t cut = 0; cut <= size; ++cut) {
      ValuationTower tower(IndexSet(size), cut);
      for (const CheckResult& r : verify_tower(tower, 80, 29)) {
        CAPTURE(size);
        CAPTURE(cut);
        CAPTURE(r.name);
        CHECK(r.status == CheckStatus::pass);
      }
    }
}

TEST_CASE("tower: membership matches the two-step composition") {
  // v(f) >= 0 exactly when the coarse prefix is in the coarse ring and
  // the fine residue lies in the fine valuation ring.
  IndexSet index(2);
  ValuationTower tower(index, 1);
  Sampler sampler(41);
  for (int k = 0; k < 200; ++k) {
    HahnSeries f = HahnSeries::zero(index);
    for (int j = 0; j < 3; ++j)
      f.set_coeff(sampler.element(index, 3, 2), sampler.rational(9, 5));
    bool full = tower.in_full_ring(f);
    bool composed = tower.in_coarse_ring(f);
    if (composed) {
      HahnSeries r = tower.residue_fine(f);
      composed = r.is_zero() ||
                 r.valuation() >= GroupElement::zero(tower.fine_index_set());
    }
    CHECK(full == composed);
  }
}
