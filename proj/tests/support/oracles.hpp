#pragma once

// Independent oracles for the tests: naive re-implementations kept out of
// the library on purpose, so the two routes can disagree. Quantifier
// searches note the argument for why their finite grids are complete.

#include <hahn/couple.hpp>
#include <hahn/group.hpp>
#include <hahn/series.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace oracles {

// Lexicographic comparison straight off the dense coordinate vectors.
inline std::strong_ordering lex_compare(const hahn::GroupElement& g,
                                        const hahn::GroupElement& h) {
  std::vector<hahn::Scalar> a = g.dense();
  std::vector<hahn::Scalar> b = h.dense();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (a[i] > b[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

inline hahn::GroupElement lex_abs(const hahn::GroupElement& g) {
  return g < hahn::GroupElement::zero(g.index_set()) ? -g : g;
}

// Archimedean-class comparison straight from the definition:
// [g] is at most [h] in magnitude iff |g| <= n|h| for some integer n >= 1.
// Within one class the required n is |g_i / h_i| rounded up, so a cap of
// 200 is complete for every element the tests draw (coordinate numerators
// at most 9 and denominators at most 9 keep that ratio at or below 81);
// across classes no n works at all, so the cap never misreports that case.
inline std::strong_ordering class_compare(const hahn::GroupElement& g,
                                          const hahn::GroupElement& h) {
  hahn::GroupElement ag = lex_abs(g);
  hahn::GroupElement ah = lex_abs(h);
  auto bounded_by = [](const hahn::GroupElement& x, const hahn::GroupElement& y) {
    for (int n = 1; n <= 200; ++n)
      if (x <= hahn::Scalar(n) * y) return true;
    return false;
  };
  bool g_small = bounded_by(ag, ah);  // [g] in magnitude at most [h]
  bool h_small = bounded_by(ah, ag);
  if (g_small && h_small) return std::strong_ordering::equal;
  if (g_small) return std::strong_ordering::less;
  if (h_small) return std::strong_ordering::greater;
  throw std::logic_error("class comparison cap exceeded: raise the bound");
}

// Half-integer grid {-2, -3/2, ..., 3/2, 2}.
inline std::vector<hahn::Scalar> half_integer_grid() {
  std::vector<hahn::Scalar> grid;
  for (int k = -4; k <= 4; ++k) grid.push_back(hahn::Scalar(k) / 2);
  return grid;
}

// All group elements with every coordinate on the half-integer grid.
inline std::vector<hahn::GroupElement> grid_elements(hahn::IndexSet index) {
  std::vector<hahn::Scalar> grid = half_integer_grid();
  std::vector<hahn::GroupElement> out{hahn::GroupElement::zero(index)};
  for (std::size_t i = 0; i < index.size(); ++i) {
    std::vector<hahn::GroupElement> next;
    next.reserve(out.size() * grid.size());
    for (const hahn::GroupElement& base : out)
      for (const hahn::Scalar& c : grid) {
        hahn::GroupElement g = base;
        g.set_coeff(i, c);
        next.push_back(g);
      }
    out = std::move(next);
  }
  return out;
}

// Brute-force (A3): quantify alpha over the half-integer grid and beta
// over the class representatives e_j (complete in beta, since psi only
// reads the class and every class is realized by some e_j). For psi
// tables with integer entries in [-2, 2] the alpha grid is complete as
// well: a violation alpha + psi(alpha) <= psi(e_j) with alpha > 0 of
// class i forces x := psi(e_j) - psi(e_i) > 0 with class(x) <= i, and
// then (x_i / 2) e_i (or (1/2) e_i when x has an earlier class) is a
// grid violation, because x_i lies in [1, 4].
inline bool brute_a3(const hahn::AsymptoticCouple& couple) {
  hahn::IndexSet index = couple.index_set();
  hahn::GroupElement zero = hahn::GroupElement::zero(index);
  for (const hahn::GroupElement& alpha : grid_elements(index)) {
    if (!(alpha > zero)) continue;
    hahn::GroupElement shifted = alpha + couple.psi(alpha);
    for (std::size_t j = 0; j < index.size(); ++j)
      if (!(shifted > couple.psi_of_class(j))) return false;
  }
  return true;
}

// Brute-force (A3) with beta quantified over the full grid too; used to
// spot-check that the representative reduction above loses nothing.
inline bool brute_a3_full_beta(const hahn::AsymptoticCouple& couple) {
  hahn::IndexSet index = couple.index_set();
  hahn::GroupElement zero = hahn::GroupElement::zero(index);
  std::vector<hahn::GroupElement> grid = grid_elements(index);
  for (const hahn::GroupElement& alpha : grid) {
    if (!(alpha > zero)) continue;
    hahn::GroupElement shifted = alpha + couple.psi(alpha);
    for (const hahn::GroupElement& beta : grid) {
      if (beta.is_zero()) continue;
      if (!(shifted > couple.psi(beta))) return false;
    }
  }
  return true;
}

// Brute-force small derivation: alpha + psi(alpha) > 0 for positive grid
// alpha. Complete for integer tables in [-2, 2] by the same normalization
// as brute_a3 (with psi(e_j) replaced by 0).
inline bool brute_small_derivation(const hahn::AsymptoticCouple& couple) {
  hahn::IndexSet index = couple.index_set();
  hahn::GroupElement zero = hahn::GroupElement::zero(index);
  for (const hahn::GroupElement& alpha : grid_elements(index)) {
    if (!(alpha > zero)) continue;
    if (!(alpha + couple.psi(alpha) > zero)) return false;
  }
  return true;
}

// Brute-force (A1) over grid pairs. Complete for any table: a violation
// psi(alpha + beta) < min(psi(alpha), psi(beta)) forces equal classes i
// with cancellation to a higher class k, and alpha = e_i + e_k,
// beta = -e_i is then a grid witness.
inline bool brute_a1(const hahn::AsymptoticCouple& couple) {
  hahn::IndexSet index = couple.index_set();
  std::vector<hahn::GroupElement> grid = grid_elements(index);
  for (const hahn::GroupElement& alpha : grid) {
    if (alpha.is_zero()) continue;
    for (const hahn::GroupElement& beta : grid) {
      if (beta.is_zero()) continue;
      hahn::GroupElement sum = alpha + beta;
      if (sum.is_zero()) continue;
      const hahn::GroupElement& pa = couple.psi(alpha);
      const hahn::GroupElement& pb = couple.psi(beta);
      if (!(couple.psi(sum) >= (pa <= pb ? pa : pb))) return false;
    }
  }
  return true;
}

// Term-by-term product, accumulated through an ordinary map.
inline hahn::HahnSeries naive_multiply(const hahn::HahnSeries& f,
                                       const hahn::HahnSeries& g) {
  std::map<hahn::GroupElement, hahn::Scalar> acc;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) acc[a + b] += ca * cb;
  hahn::HahnSeries out = hahn::HahnSeries::zero(f.index_set());
  for (const auto& [exp, coef] : acc) out.set_coeff(exp, coef);
  return out;
}

}  // namespace oracles
