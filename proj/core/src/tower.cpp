#include <hahn/tower.hpp>

#include <hahn/json_io.hpp>
#include <hahn/sampling.hpp>

#include <string>
#include <utility>

namespace hahn {

ValuationTower::ValuationTower(IndexSet index, std::size_t cut)
    : index_(index),
      cut_(cut),
      coarse_(cut == 0 ? 1 : cut),
      fine_(cut >= index.size() ? 1 : index.size() - cut) {
  if (cut > index.size())
    throw std::invalid_argument("cut must lie between 0 and the index size");
}

GroupElement ValuationTower::coarse_of(const GroupElement& value) const {
  GroupElement out(coarse_);
  for (const auto& [i, c] : value.support())
    if (i < cut_) out.set_coeff(i, c);
  return out;
}

GroupElement ValuationTower::coarse_value(const HahnSeries& f) const {
  return coarse_of(f.valuation());
}

bool ValuationTower::in_coarse_ring(const HahnSeries& f) const {
  if (f.is_zero()) return true;
  return !(coarse_value(f) < GroupElement::zero(coarse_));
}

bool ValuationTower::in_full_ring(const HahnSeries& f) const {
  if (f.is_zero()) return true;
  return !(f.valuation() < GroupElement::zero(index_));
}

bool ValuationTower::in_fine_subgroup(const GroupElement& value) const {
  return value.support().empty() || value.support().begin()->first >= cut_;
}

HahnSeries ValuationTower::residue_fine(const HahnSeries& f) const {
  if (!in_coarse_ring(f))
    throw std::domain_error("series outside the coarse valuation ring");
  HahnSeries out(fine_);
  for (const auto& [e, c] : f.terms()) {
    if (!in_fine_subgroup(e)) continue;  // positive coarse part: residue 0
    GroupElement suffix(fine_);
    for (const auto& [i, x] : e.support()) suffix.set_coeff(i - cut_, x);
    out.set_coeff(suffix, c);
  }
  return out;
}

Scalar ValuationTower::compose_place(const HahnSeries& f) const {
  if (!in_full_ring(f))
    throw std::domain_error("series outside the composed valuation ring");
  return f.coeff(GroupElement::zero(index_));
}

namespace {

// All exponent vectors with coordinates in {-1, 0, 1}.
std::vector<GroupElement> exponent_grid(IndexSet index) {
  std::vector<GroupElement> out;
  std::vector<long long> digits(index.size(), -1);
  for (;;) {
    GroupElement g(index);
    for (std::size_t i = 0; i < digits.size(); ++i)
      g.set_coeff(i, Scalar(digits[i]));
    out.push_back(std::move(g));
    std::size_t pos = 0;
    while (pos < digits.size() && digits[pos] == 1) digits[pos++] = -1;
    if (pos == digits.size()) return out;
    ++digits[pos];
  }
}

std::vector<HahnSeries> series_pool(const ValuationTower& tower,
                                    std::size_t samples, std::uint64_t seed) {
  IndexSet index = tower.index_set();
  std::vector<HahnSeries> pool;
  if (index.size() <= 3) {
    std::vector<GroupElement> grid = exponent_grid(index);
    for (const GroupElement& e : grid) {
      pool.push_back(HahnSeries::monomial(index, e, 1));
      pool.push_back(HahnSeries::monomial(index, e, -2));
    }
    for (std::size_t a = 0; a < grid.size(); ++a)
      for (std::size_t b = a + 1; b < grid.size(); ++b) {
        HahnSeries f = HahnSeries::monomial(index, grid[a], 1);
        f.set_coeff(grid[b], 1);
        pool.push_back(f);
        HahnSeries g = HahnSeries::monomial(index, grid[a], -1);
        g.set_coeff(grid[b], Scalar(1) / 2);
        pool.push_back(g);
      }
  }
  Sampler s(sub_seed(seed, 31));
  for (std::size_t n = 0; n < samples; ++n) {
    HahnSeries f(index);
    std::size_t terms = 1 + s.index(4);
    for (std::size_t t = 0; t < terms; ++t)
      f.set_coeff(s.element(index, 2, 2), s.rational(3, 2));
    pool.push_back(std::move(f));
  }
  return pool;
}

bool in_coarse_ideal(const ValuationTower& tower, const HahnSeries& f) {
  if (f.is_zero()) return true;
  return tower.in_coarse_ring(f) &&
         GroupElement::zero(tower.coarse_index_set()) < tower.coarse_value(f);
}

}  // namespace

std::vector<CheckResult> verify_tower(const ValuationTower& tower,
                                      std::size_t samples, std::uint64_t seed) {
  IndexSet index = tower.index_set();
  GroupElement zero = GroupElement::zero(index);
  GroupElement coarse_zero = GroupElement::zero(tower.coarse_index_set());
  std::vector<HahnSeries> pool = series_pool(tower, samples, seed);
  std::vector<CheckResult> checks;

  {
    // Every nonzero f, or the exact leading part of its inverse, lies in
    // the full ring; decided by the sign of v(f), corroborated by invert.
    CheckResult check{"valuation_ring_dichotomy", CheckStatus::pass, nullptr, ""};
    std::size_t tested = 0;
    for (const HahnSeries& f : pool) {
      if (f.is_zero()) continue;
      ++tested;
      bool direct = tower.in_full_ring(f);
      Inverted inv = invert(f, TruncationBudget(2));
      bool inverse_side = !(inv.series.valuation() < zero);
      bool inverse_valuation_ok = inv.series.valuation() == -f.valuation();
      if (!(direct || inverse_side) || !inverse_valuation_ok) {
        check.status = CheckStatus::fail;
        check.witness = {{"f", series_to_json(f)}};
        check.note = "neither f nor its inverse lies in the valuation ring";
        break;
      }
    }
    if (check.status == CheckStatus::pass)
      check.note = "dichotomy holds on " + std::to_string(tested) + " series";
    checks.push_back(std::move(check));
  }

  {
    CheckResult check{"place_ring_morphism", CheckStatus::pass, nullptr, ""};
    std::vector<const HahnSeries*> members;
    for (const HahnSeries& f : pool)
      if (tower.in_full_ring(f)) members.push_back(&f);
    std::size_t tested = 0;
    for (std::size_t a = 0; a < members.size() && check.status == CheckStatus::pass;
         ++a)
      for (std::size_t b = a; b < members.size(); b += 7) {
        const HahnSeries& f = *members[a];
        const HahnSeries& g = *members[b];
        ++tested;
        bool additive = tower.compose_place(f + g) ==
                        tower.compose_place(f) + tower.compose_place(g);
        bool multiplicative = tower.compose_place(f * g) ==
                              tower.compose_place(f) * tower.compose_place(g);
        bool two_step = tower.compose_place(f) ==
                        tower.residue_fine(f).coeff(
                            GroupElement::zero(tower.fine_index_set()));
        if (!additive || !multiplicative || !two_step) {
          check.status = CheckStatus::fail;
          check.witness = {{"f", series_to_json(f)}, {"g", series_to_json(g)}};
          check.note = "place is not a ring morphism (or the two-step "
                       "factorization broke)";
          break;
        }
      }
    // Surjectivity onto the coefficient field: constants map to themselves.
    Sampler s(sub_seed(seed, 32));
    for (int n = 0; n < 16 && check.status == CheckStatus::pass; ++n) {
      Scalar c = s.rational(9, 4);
      if (tower.compose_place(HahnSeries::constant(index, c)) != c) {
        check.status = CheckStatus::fail;
        check.witness = {{"constant", c.str()}};
        check.note = "place misses a coefficient-field value";
      }
    }
    if (check.status == CheckStatus::pass)
      check.note = "ring morphism onto the coefficient field on " +
                   std::to_string(tested) + " pairs";
    checks.push_back(std::move(check));
  }

  {
    CheckResult check{"residue_ring_morphism", CheckStatus::pass, nullptr, ""};
    std::vector<const HahnSeries*> members;
    for (const HahnSeries& f : pool)
      if (tower.in_coarse_ring(f)) members.push_back(&f);
    std::size_t tested = 0;
    for (std::size_t a = 0; a < members.size() && check.status == CheckStatus::pass;
         ++a)
      for (std::size_t b = a; b < members.size(); b += 7) {
        const HahnSeries& f = *members[a];
        const HahnSeries& g = *members[b];
        ++tested;
        bool additive = tower.residue_fine(f + g) ==
                        tower.residue_fine(f) + tower.residue_fine(g);
        bool multiplicative = tower.residue_fine(f * g) ==
                              tower.residue_fine(f) * tower.residue_fine(g);
        if (!additive || !multiplicative) {
          check.status = CheckStatus::fail;
          check.witness = {{"f", series_to_json(f)}, {"g", series_to_json(g)}};
          check.note = "fine residue is not a ring morphism";
          break;
        }
      }
    if (check.status == CheckStatus::pass)
      check.note = "residue is a ring morphism on " + std::to_string(tested) +
                   " pairs";
    checks.push_back(std::move(check));
  }

  {
    CheckResult check{"quotient_order_map", CheckStatus::pass, nullptr, ""};
    std::vector<GroupElement> values;
    if (index.size() <= 3) values = exponent_grid(index);
    Sampler s(sub_seed(seed, 33));
    for (std::size_t n = 0; n < samples + 8; ++n)
      values.push_back(s.element(index, 3, 2));
    std::size_t tested = 0;
    for (std::size_t a = 0; a < values.size() && check.status == CheckStatus::pass;
         ++a)
      for (std::size_t b = a; b < values.size(); b += 5) {
        const GroupElement& x = values[a];
        const GroupElement& y = values[b];
        ++tested;
        bool additive = tower.coarse_of(x + y) ==
                        tower.coarse_of(x) + tower.coarse_of(y);
        bool monotone = !(x <= y) || tower.coarse_of(x) <= tower.coarse_of(y);
        bool kernel = (tower.coarse_of(x) == coarse_zero) ==
                      tower.in_fine_subgroup(x);
        if (!additive || !monotone || !kernel) {
          check.status = CheckStatus::fail;
          check.witness = {{"x", element_to_json(x)}, {"y", element_to_json(y)}};
          check.note = "coarse projection is not an order-preserving "
                       "quotient with the fine subgroup as kernel";
          break;
        }
      }
    // Surjectivity: every coarse value is hit by its zero-padded lift.
    for (std::size_t a = 0; a < values.size() && check.status == CheckStatus::pass;
         ++a) {
      GroupElement lift(index);
      for (const auto& [i, c] : values[a].support())
        if (i < tower.cut()) lift.set_coeff(i, c);
      if (!(tower.coarse_of(lift) == tower.coarse_of(values[a]))) {
        check.status = CheckStatus::fail;
        check.witness = {{"value", element_to_json(values[a])}};
        check.note = "coarse value without a lift";
      }
    }
    if (check.status == CheckStatus::pass)
      check.note = "order-preserving surjection with kernel the fine "
                   "subgroup on " + std::to_string(tested) + " pairs";
    checks.push_back(std::move(check));
  }

  {
    CheckResult check{"fine_subgroup_convex", CheckStatus::pass, nullptr, ""};
    std::vector<GroupElement> values;
    if (index.size() <= 3) values = exponent_grid(index);
    Sampler s(sub_seed(seed, 34));
    for (std::size_t n = 0; n < samples; ++n)
      values.push_back(s.element(index, 2, 2));
    std::size_t tested = 0;
    for (const GroupElement& x : values) {
      if (check.status != CheckStatus::pass) break;
      for (const GroupElement& y : values) {
        if (!(zero <= x && x <= y) || !tower.in_fine_subgroup(y)) continue;
        ++tested;
        if (!tower.in_fine_subgroup(x)) {
          check.status = CheckStatus::fail;
          check.witness = {{"inner", element_to_json(x)},
                           {"outer", element_to_json(y)}};
          check.note = "element between 0 and the fine subgroup escapes it";
          break;
        }
      }
    }
    if (check.status == CheckStatus::pass)
      check.note = "convexity holds on " + std::to_string(tested) +
                   " sandwiched pairs";
    checks.push_back(std::move(check));
  }

  {
    // The maximal ideal of the coarse ring stays prime in the full ring.
    CheckResult check{"fine_ideal_prime", CheckStatus::pass, nullptr, ""};
    std::vector<const HahnSeries*> members;
    for (const HahnSeries& f : pool)
      if (!f.is_zero() && tower.in_full_ring(f)) members.push_back(&f);
    std::size_t tested = 0;
    for (std::size_t a = 0; a < members.size() && check.status == CheckStatus::pass;
         ++a)
      for (std::size_t b = a; b < members.size(); b += 7) {
        const HahnSeries& f = *members[a];
        const HahnSeries& g = *members[b];
        ++tested;
        bool product_in = in_coarse_ideal(tower, f * g);
        bool factor_in = in_coarse_ideal(tower, f) || in_coarse_ideal(tower, g);
        if (product_in != factor_in) {
          check.status = CheckStatus::fail;
          check.witness = {{"f", series_to_json(f)}, {"g", series_to_json(g)}};
          check.note = "coarse maximal ideal is not prime in the full ring";
          break;
        }
      }
    if (check.status == CheckStatus::pass)
      check.note = "primality verified on " + std::to_string(tested) +
                   " products";
    checks.push_back(std::move(check));
  }

  sort_checks(checks);
  return checks;
}

}  // namespace hahn
