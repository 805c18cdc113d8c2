#include <hahn/sampling.hpp>
#include <hahn/series.hpp>

#include <doctest.h>

#include "support/oracles.hpp"

#include <stdexcept>
#include <vector>

using namespace hahn;

namespace {

GroupElement el(IndexSet index, std::vector<Scalar> coeffs) {
  return GroupElement::from_dense(index, coeffs);
}

HahnSeries sampled_series(IndexSet index, Sampler& sampler, std::size_t terms) {
  HahnSeries f = HahnSeries::zero(index);
  for (std::size_t k = 0; k < terms; ++k)
    f.set_coeff(sampler.element(index, 6, 4), sampler.rational(9, 5));
  return f;
}

}  // namespace

TEST_CASE("series: term map keeps the dominant term first") {
  IndexSet index(2);
  HahnSeries f = HahnSeries::zero(index);
  f.set_coeff(el(index, {0, 2}), 5);
  f.set_coeff(el(index, {0, 1}), 3);
  CHECK(f.term_count() == 2);
  CHECK(f.valuation() == el(index, {0, 1}));
  CHECK(f.leading().second == 3);
  CHECK(f.to_string() == "3*t^(0, 1) + 5*t^(0, 2)");

  f.set_coeff(el(index, {0, 1}), 0);
  CHECK(f.term_count() == 1);
  CHECK(f.coeff(el(index, {0, 1})) == 0);

  CHECK_THROWS_AS(HahnSeries::zero(index).valuation(), std::domain_error);
  CHECK_THROWS_AS(HahnSeries::zero(index).leading(), std::domain_error);
  CHECK_THROWS_AS(f.set_coeff(GroupElement::zero(IndexSet(3)), 1),
                  std::invalid_argument);
}

TEST_CASE("series: ring arithmetic matches the naive oracle") {
  IndexSet index(3);
  Sampler sampler(11);
  for (int k = 0; k < 150; ++k) {
    HahnSeries f = sampled_series(index, sampler, 4);
    HahnSeries g = sampled_series(index, sampler, 4);
    HahnSeries h = sampled_series(index, sampler, 3);
    CHECK(f * g == oracles::naive_multiply(f, g));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + (g - g) == f);
  }
}

TEST_CASE("series: frozen products") {
  IndexSet index(2);
  HahnSeries f = HahnSeries::monomial(index, el(index, {1, 0}), 2);
  f.set_coeff(el(index, {0, 1}), 1);
  HahnSeries g = HahnSeries::monomial(index, el(index, {-1, 0}), 1);
  HahnSeries product = f * g;
  CHECK(product.coeff(GroupElement::zero(index)) == 2);
  CHECK(product.coeff(el(index, {-1, 1})) == 1);
  CHECK(product.term_count() == 2);

  // Cross-term cancellation: (1 + t)(1 - t) = 1 - t^2.
  HahnSeries one = HahnSeries::constant(index, 1);
  HahnSeries t = HahnSeries::monomial(index, el(index, {1, 0}), 1);
  CHECK((one + t) * (one - t) == one - t * t);
}

TEST_CASE("series: field order and dominance") {
  IndexSet index(2);
  HahnSeries big = HahnSeries::monomial(index, el(index, {-1, 0}), 1);
  HahnSeries small = HahnSeries::monomial(index, el(index, {0, 1}), 100);
  CHECK(field_compare(big, small) == std::strong_ordering::greater);
  CHECK(is_positive(big - small));

  DominanceResult d = dominance(small, big);
  CHECK(d.rel == Dominance::dominated);
  CHECK_FALSE(d.equivalent);

  HahnSeries close = small + HahnSeries::monomial(index, el(index, {0, 2}), -7);
  d = dominance(close, small);
  CHECK(d.rel == Dominance::same_order);
  CHECK(d.equivalent);  // same leading term

  d = dominance(small, small.scaled(2));
  CHECK(d.rel == Dominance::same_order);
  CHECK_FALSE(d.equivalent);

  CHECK_THROWS_AS(dominance(HahnSeries::zero(index), big), std::domain_error);

  // Negative leading coefficient: the series sits below zero.
  CHECK_FALSE(is_positive(-big));
  CHECK(field_compare(-big, HahnSeries::zero(index)) ==
        std::strong_ordering::less);
}

TEST_CASE("series: truncation keeps dominant terms and is idempotent") {
  IndexSet index(2);
  HahnSeries f = HahnSeries::zero(index);
  for (int k = 0; k < 6; ++k) f.set_coeff(el(index, {0, k}), k + 1);
  TruncationBudget two(2);
  HahnSeries cut = truncate(f, two);
  CHECK(cut.term_count() == 2);
  CHECK(cut.coeff(el(index, {0, 0})) == 1);
  CHECK(cut.coeff(el(index, {0, 1})) == 2);
  CHECK(truncate(cut, two) == cut);

  TruncationBudget bounded(10, el(index, {0, 3}));
  HahnSeries capped = truncate(f, bounded);
  CHECK(capped.term_count() == 3);  // exponents (0,0), (0,1), (0,2)
  CHECK_THROWS_AS(TruncationBudget(0), std::invalid_argument);
}

TEST_CASE("series: inversion, frozen geometric case") {
  IndexSet index(2);
  HahnSeries one = HahnSeries::constant(index, 1);
  HahnSeries f = one - HahnSeries::monomial(index, el(index, {1, 0}), 1);
  Inverted inv = invert(f, TruncationBudget(4));
  HahnSeries expected = HahnSeries::zero(index);
  for (int k = 0; k < 4; ++k) expected.set_coeff(el(index, {k, 0}), 1);
  CHECK(inv.series == expected);
  REQUIRE(inv.residual_bound.has_value());
  CHECK(*inv.residual_bound == el(index, {4, 0}));
  // The bound is tight here: f * sum - 1 = -t^(4,0).
  CHECK((f * inv.series - one).valuation() == el(index, {4, 0}));
}

TEST_CASE("series: inversion, frozen non-monic case") {
  IndexSet index(2);
  HahnSeries f = HahnSeries::constant(index, 2);
  f.set_coeff(el(index, {0, 1}), 1);
  Inverted inv = invert(f, TruncationBudget(3));
  HahnSeries expected = HahnSeries::constant(index, Scalar(1) / 2);
  expected.set_coeff(el(index, {0, 1}), Scalar(-1) / 4);
  expected.set_coeff(el(index, {0, 2}), Scalar(1) / 8);
  CHECK(inv.series == expected);
  REQUIRE(inv.residual_bound.has_value());
  CHECK(*inv.residual_bound == el(index, {0, 3}));
}

TEST_CASE("series: inversion of units is exact") {
  IndexSet index(2);
  HahnSeries mono = HahnSeries::monomial(index, el(index, {-2, 5}), Scalar(3) / 7);
  Inverted inv = invert(mono, TruncationBudget(2));
  CHECK_FALSE(inv.residual_bound.has_value());
  CHECK(mono * inv.series == HahnSeries::constant(index, 1));
  CHECK_THROWS_AS(invert(HahnSeries::zero(index), TruncationBudget(2)),
                  std::domain_error);
}

TEST_CASE("series: inversion residual always meets the reported bound") {
  IndexSet index(2);
  Sampler sampler(23);
  HahnSeries one = HahnSeries::constant(index, 1);
  for (int k = 0; k < 150; ++k) {
    HahnSeries f = sampled_series(index, sampler, 3);
    if (f.is_zero()) continue;
    for (std::size_t budget : {2u, 4u, 8u}) {
      Inverted inv = invert(f, TruncationBudget(budget));
      HahnSeries residual = f * inv.series - one;
      if (!inv.residual_bound.has_value()) {
        CHECK(residual.is_zero());
        continue;
      }
      CHECK(*inv.residual_bound > GroupElement::zero(index));
      if (!residual.is_zero())
        CHECK(residual.valuation() >= *inv.residual_bound);
    }
  }
}

TEST_CASE("series: inversion cutoff tightens or rejects") {
  IndexSet index(1);
  HahnSeries one = HahnSeries::constant(index, 1);
  HahnSeries f = one - HahnSeries::monomial(index, el(index, {1}), 1);

  // Cutoff below the Neumann bound: result and bound are capped.
  Inverted capped = invert(f, TruncationBudget(10, el(index, {3})));
  HahnSeries expected = HahnSeries::zero(index);
  for (int k = 0; k < 3; ++k) expected.set_coeff(el(index, {k}), 1);
  CHECK(capped.series == expected);
  REQUIRE(capped.residual_bound.has_value());
  CHECK(*capped.residual_bound == el(index, {3}));

  // A cutoff that cannot give a positive residual bound is refused.
  HahnSeries far = HahnSeries::monomial(index, el(index, {-5}), 1) + one;
  CHECK_THROWS_AS(invert(far, TruncationBudget(4, el(index, {2}))),
                  std::invalid_argument);
}
