#include <hahn/group.hpp>
#include <hahn/sampling.hpp>
#include <hahn/scalar.hpp>

#include <doctest.h>

#include "support/oracles.hpp"

#include <stdexcept>

using namespace hahn;

namespace {

GroupElement el(IndexSet index, std::vector<Scalar> coeffs) {
  return GroupElement::from_dense(index, coeffs);
}

}  // namespace

TEST_CASE("scalar: parsing is exact and strict") {
  CHECK(parse_scalar("3/6") == Scalar(1) / 2);
  CHECK(parse_scalar("-7") == Scalar(-7));
  CHECK(parse_scalar("0") == 0);
  CHECK(to_string(parse_scalar("22/4")) == "11/2");
  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("x"), std::invalid_argument);
}

TEST_CASE("scalar: sign and abs") {
  CHECK(sign(Scalar(-3) / 7) == -1);
  CHECK(sign(Scalar(0)) == 0);
  CHECK(sign(Scalar(2)) == 1);
  CHECK(abs(Scalar(-3) / 7) == Scalar(3) / 7);
}

TEST_CASE("group: construction and coefficient access") {
  IndexSet index(2);
  GroupElement g = el(index, {0, 3});
  CHECK(g.coeff(0) == 0);
  CHECK(g.coeff(1) == 3);
  CHECK_THROWS_AS(g.coeff(2), std::out_of_range);
  CHECK_THROWS_AS(IndexSet(0), std::invalid_argument);
  CHECK_THROWS_AS(GroupElement::from_dense(index, {1, 2, 3}),
                  std::invalid_argument);

  g.set_coeff(1, 0);
  CHECK(g.is_zero());
  CHECK(g.support().empty());
}

TEST_CASE("group: arithmetic matches hand values") {
  IndexSet index(2);
  // (0,3) + (1/2)(2,-2) = (1,2)
  CHECK(linear_combine(el(index, {0, 3}), el(index, {2, -2}), Scalar(1) / 2) ==
        el(index, {1, 2}));
  CHECK(el(index, {1, 2}) - el(index, {1, 2}) == GroupElement::zero(index));
  CHECK(-el(index, {1, -2}) == el(index, {-1, 2}));
  CHECK(Scalar(3) * GroupElement::unit(index, 1) == el(index, {0, 3}));
  CHECK(el(index, {1, 2}).to_string() == "(1, 2)");
  CHECK(el(index, {1, Scalar(-5) / 2}).to_string() == "(1, -5/2)");
}

TEST_CASE("group: lexicographic order, frozen cases") {
  IndexSet index(2);
  CHECK(el(index, {1, -5}) < el(index, {1, -4}));
  CHECK(el(index, {0, 100}) < el(index, {Scalar(1) / 100, 0}));
  CHECK(el(index, {1, 0}) > el(index, {0, 7}));
  CHECK(el(index, {0, 0}) == GroupElement::zero(index));
}

TEST_CASE("group: lexicographic order agrees with the dense oracle") {
  IndexSet index(3);
  Sampler sampler(101);
  for (int k = 0; k < 500; ++k) {
    GroupElement g = sampler.element(index, 9, 5);
    GroupElement h = sampler.element(index, 9, 5);
    CHECK((g <=> h) == oracles::lex_compare(g, h));
    // Translation invariance of the order.
    GroupElement shift = sampler.element(index, 9, 5);
    CHECK((g + shift <=> h + shift) == (g <=> h));
  }
}

TEST_CASE("group: archimedean classes, frozen cases") {
  IndexSet index(2);
  CHECK(arch_class(el(index, {0, Scalar(1) / 9})) == 1);
  CHECK(arch_class(el(index, {3, -100})) == 0);
  CHECK_THROWS_AS(arch_class(GroupElement::zero(index)), std::domain_error);

  // (0,7) and (0,-1/3) share a class; no integer multiple separates them.
  CHECK(class_compare(el(index, {0, 7}), el(index, {0, Scalar(-1) / 3})) ==
        std::strong_ordering::equal);
  // e_1 lies in a strictly smaller class than any element touching e_0.
  CHECK(class_compare(el(index, {0, 100}), el(index, {Scalar(1) / 100, 5})) ==
        std::strong_ordering::less);
  CHECK_THROWS_AS(class_compare(el(index, {1, 0}), GroupElement::zero(index)),
                  std::domain_error);
}

TEST_CASE("group: class comparison agrees with the n-multiple oracle") {
  IndexSet index(3);
  Sampler sampler(202);
  for (int k = 0; k < 400; ++k) {
    GroupElement g = sampler.nonzero_element(index, 9, 5);
    GroupElement h = sampler.nonzero_element(index, 9, 5);
    CHECK(class_compare(g, h) == oracles::class_compare(g, h));
    // Scaling never moves the class.
    CHECK(class_compare(g.scaled(Scalar(-7) / 3), g) ==
          std::strong_ordering::equal);
  }
}

TEST_CASE("group: dense round trip") {
  IndexSet index(4);
  Sampler sampler(303);
  for (int k = 0; k < 100; ++k) {
    GroupElement g = sampler.element(index, 9, 5);
    CHECK(GroupElement::from_dense(index, g.dense()) == g);
  }
}

TEST_CASE("sampling: identical seeds give identical streams") {
  Sampler a(99);
  Sampler b(99);
  for (int k = 0; k < 50; ++k) CHECK(a.raw() == b.raw());
  CHECK(sub_seed(7, 1) != sub_seed(7, 2));
  Sampler bounded(5);
  for (int k = 0; k < 200; ++k) {
    long long x = bounded.int_in(-3, 3);
    CHECK(x >= -3);
    CHECK(x <= 3);
    Scalar q = bounded.nonzero_rational(9, 5);
    CHECK(q != 0);
  }
  CHECK_THROWS_AS(bounded.int_in(2, 1), std::invalid_argument);
}
