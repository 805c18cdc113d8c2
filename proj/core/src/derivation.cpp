#include <hahn/derivation.hpp>

#include <hahn/json_io.hpp>
#include <hahn/sampling.hpp>

#include <string>

namespace hahn {

DerivationContext::DerivationContext(AsymptoticCouple couple)
    : couple_(std::move(couple)) {
  for (const CheckResult& check :
       {check_a1(couple_), check_a3(couple_), check_hardy_type(couple_)}) {
    if (check.status != CheckStatus::pass)
      throw std::invalid_argument("derivation needs a valid Hardy-type couple; " +
                                  check.name + " fails");
  }
}

GroupElement DerivationContext::exponent_shift(const GroupElement& alpha) const {
  return alpha + couple_.psi(alpha);
}

HahnSeries DerivationContext::derive_monomial(const GroupElement& alpha) const {
  HahnSeries out(couple_.index_set());
  for (const auto& [i, coeff] : alpha.support()) {
    GroupElement e = alpha + couple_.psi_of_class(i);
    out.set_coeff(e, out.coeff(e) - coeff);
  }
  return out;
}

HahnSeries DerivationContext::derive(const HahnSeries& f) const {
  HahnSeries out(couple_.index_set());
  for (const auto& [alpha, c] : f.terms()) out += c * derive_monomial(alpha);
  return out;
}

HahnSeries DerivationContext::monomial_dagger(const GroupElement& alpha) const {
  HahnSeries out(couple_.index_set());
  for (const auto& [i, coeff] : alpha.support()) {
    const GroupElement& e = couple_.psi_of_class(i);
    out.set_coeff(e, out.coeff(e) - coeff);
  }
  return out;
}

Inverted DerivationContext::log_derivative(const HahnSeries& f,
                                           const TruncationBudget& budget) const {
  if (f.is_zero())
    throw std::domain_error("logarithmic derivative of the zero series");
  if (f.term_count() == 1)
    return {monomial_dagger(f.valuation()), std::nullopt};
  HahnSeries d = derive(f);
  Inverted inv = invert(f, budget);
  HahnSeries result = d * inv.series;
  if (d.is_zero() || !inv.residual_bound) return {result, std::nullopt};
  // result - f'/f = f' (1/f_approx - 1/f) = f' (f f_approx - 1) / f, so the
  // error valuation is at least v(f') - v(f) + bound.
  return {result, d.valuation() - f.valuation() + *inv.residual_bound};
}

CheckResult DerivationContext::leading_term_law(const HahnSeries& f) const {
  if (f.is_zero())
    throw std::domain_error("leading-term law needs a nonzero series");
  GroupElement alpha = f.valuation();
  if (alpha.is_zero())
    throw std::invalid_argument(
        "leading-term law excludes series of valuation zero");
  std::size_t i = arch_class(alpha);
  GroupElement expected_exponent = exponent_shift(alpha);
  Scalar expected_coeff = -alpha.coeff(i) * f.leading().second;

  HahnSeries d = derive(f);
  CheckResult out{"leading_term_law", CheckStatus::pass, nullptr, ""};
  out.witness = {{"valuation", element_to_json(alpha)},
                 {"expected_exponent", element_to_json(expected_exponent)},
                 {"expected_coeff", expected_coeff.str()}};
  if (d.is_zero()) {
    out.status = CheckStatus::fail;
    out.note = "derivative vanished";
    return out;
  }
  auto [actual_exponent, actual_coeff] = d.leading();
  out.witness["actual_exponent"] = element_to_json(actual_exponent);
  out.witness["actual_coeff"] = actual_coeff.str();
  if (!(actual_exponent == expected_exponent) || actual_coeff != expected_coeff) {
    out.status = CheckStatus::fail;
    out.note = "leading term of f' deviates from (v(f) + psi(v(f)), "
               "-alpha_i f_alpha)";
  }
  return out;
}

namespace {

// Random series whose exponents all exceed `floor`, possibly empty.
HahnSeries tail_above(Sampler& s, IndexSet index, const GroupElement& floor,
                      std::size_t max_extra) {
  HahnSeries tail(index);
  std::size_t extra = s.index(max_extra + 1);
  for (std::size_t t = 0; t < extra; ++t) {
    GroupElement e = s.element(index, 3, 2);
    if (!(floor < e)) continue;
    tail.set_coeff(e, s.rational(3, 2));
  }
  return tail;
}

}  // namespace

std::vector<CheckResult> DerivationContext::check_hfield(
    std::size_t samples, std::uint64_t seed) const {
  IndexSet index = couple_.index_set();
  GroupElement zero = GroupElement::zero(index);
  std::vector<CheckResult> checks;

  {
    // f > every constant iff v(f) < 0 with positive leading coefficient;
    // probe constants corroborate the criterion on the sampled side.
    CheckResult check{"h1_above_constants", CheckStatus::pass, nullptr, ""};
    const Scalar probes[] = {Scalar(-10), Scalar(-1), Scalar(0),
                             Scalar(1) / 2, Scalar(10)};
    Sampler s(sub_seed(seed, 11));
    for (std::size_t n = 0; n < samples && check.status == CheckStatus::pass;
         ++n) {
      GroupElement gamma = s.nonzero_element(index, 3, 2);
      if (zero < gamma) gamma = -gamma;
      HahnSeries f = HahnSeries::monomial(index, gamma, s.nonzero_rational(3, 2));
      if (!is_positive(f)) f = -f;
      f += tail_above(s, index, gamma, 3);
      bool above_probes = true;
      for (const Scalar& c : probes)
        above_probes = above_probes &&
                       field_compare(f, HahnSeries::constant(index, c)) ==
                           std::strong_ordering::greater;
      if (!above_probes || !is_positive(derive(f))) {
        check.status = CheckStatus::fail;
        check.witness = {{"f", series_to_json(f)},
                         {"derivative", series_to_json(derive(f))}};
        check.note = above_probes ? "derivative of an element above the "
                                    "constants is not positive"
                                  : "structural criterion disagrees with "
                                    "constant probes";
      }
    }
    if (check.status == CheckStatus::pass)
      check.note = "f > constants implies f' > 0 on " +
                   std::to_string(samples) + " samples";
    checks.push_back(std::move(check));
  }

  {
    CheckResult check{"h1_infinitesimal", CheckStatus::pass, nullptr, ""};
    Sampler s(sub_seed(seed, 12));
    for (std::size_t n = 0; n < samples && check.status == CheckStatus::pass;
         ++n) {
      GroupElement gamma = s.nonzero_element(index, 3, 2);
      if (gamma < zero) gamma = -gamma;
      HahnSeries f = HahnSeries::monomial(index, gamma, s.nonzero_rational(3, 2));
      if (!is_positive(f)) f = -f;
      f += tail_above(s, index, gamma, 3);
      HahnSeries d = derive(f);
      if (!(is_positive(f) && !d.is_zero() && !is_positive(d))) {
        check.status = CheckStatus::fail;
        check.witness = {{"f", series_to_json(f)},
                         {"derivative", series_to_json(d)}};
        check.note = "positive infinitesimal without negative derivative";
      }
    }
    if (check.status == CheckStatus::pass)
      check.note = "0 < f < constants implies f' < 0 on " +
                   std::to_string(samples) + " samples";
    checks.push_back(std::move(check));
  }

  {
    // Valuation ring splits as constants plus infinitesimals, exactly.
    CheckResult check{"h2_decomposition", CheckStatus::pass, nullptr, ""};
    Sampler s(sub_seed(seed, 13));
    for (std::size_t n = 0; n < samples && check.status == CheckStatus::pass;
         ++n) {
      HahnSeries f(index);
      std::size_t terms = s.index(5);
      for (std::size_t t = 0; t < terms; ++t) {
        GroupElement e = s.element(index, 3, 2);
        if (e < zero) continue;
        f.set_coeff(e, s.rational(3, 2));
      }
      Scalar constant_part = f.coeff(zero);
      HahnSeries tail = f - HahnSeries::constant(index, constant_part);
      bool tail_small = tail.is_zero() || zero < tail.valuation();
      bool recombines = f == HahnSeries::constant(index, constant_part) + tail;
      if (!tail_small || !recombines) {
        check.status = CheckStatus::fail;
        check.witness = {{"f", series_to_json(f)}};
        check.note = "f in the valuation ring is not constant + infinitesimal";
      }
    }
    if (check.status == CheckStatus::pass)
      check.note = "valuation ring = constants + infinitesimals on " +
                   std::to_string(samples) + " samples";
    checks.push_back(std::move(check));
  }

  {
    CheckResult check{"constants_kernel", CheckStatus::pass, nullptr, ""};
    Sampler s(sub_seed(seed, 14));
    for (std::size_t n = 0; n < samples && check.status == CheckStatus::pass;
         ++n) {
      HahnSeries c = HahnSeries::constant(index, s.rational(4, 3));
      bool constant_killed = derive(c).is_zero();
      HahnSeries f =
          HahnSeries::monomial(index, s.nonzero_element(index, 3, 2),
                               s.nonzero_rational(3, 2)) +
          HahnSeries::constant(index, s.rational(3, 2));
      bool nonconstant_survives = !derive(f).is_zero();
      if (!constant_killed || !nonconstant_survives) {
        check.status = CheckStatus::fail;
        check.witness = {{"constant", series_to_json(c)},
                         {"nonconstant", series_to_json(f)}};
        check.note = "kernel of the derivation is not exactly the constants";
      }
    }
    if (check.status == CheckStatus::pass)
      check.note = "derive(f) = 0 iff f is constant on " +
                   std::to_string(samples) + " samples";
    checks.push_back(std::move(check));
  }

  sort_checks(checks);
  return checks;
}

CheckResult DerivationContext::power_dagger(const GroupElement& alpha,
                                            const Scalar& c) const {
  HahnSeries lhs = monomial_dagger(alpha.scaled(c));
  HahnSeries rhs = c * monomial_dagger(alpha);
  CheckResult out{"power_dagger", CheckStatus::pass, nullptr,
                  "(t^(c alpha))-dagger = c (t^alpha)-dagger"};
  if (!(lhs == rhs)) {
    out.status = CheckStatus::fail;
    out.witness = {{"alpha", element_to_json(alpha)},
                   {"c", c.str()},
                   {"lhs", series_to_json(lhs)},
                   {"rhs", series_to_json(rhs)}};
    out.note = "dagger is not homogeneous in the exponent";
  }
  return out;
}

CheckStatus classify_dagger_bound(const GroupElement& target,
                                  const std::optional<GroupElement>& bound) {
  if (!bound) return CheckStatus::pass;
  return target < *bound ? CheckStatus::pass : CheckStatus::inconclusive;
}

CheckResult DerivationContext::certify_round_trip(
    const HahnSeries& h, const TruncationBudget& budget) const {
  if (h.is_zero())
    throw std::domain_error("round trip needs a nonzero series");
  CheckResult out{"couple_round_trip", CheckStatus::pass, nullptr, ""};
  GroupElement vh = h.valuation();
  if (vh.is_zero()) {
    out.status = CheckStatus::skipped;
    out.note = "vh = 0: psi is undefined at the valuation of h";
    return out;
  }
  GroupElement target = couple_.psi(vh);
  Inverted dagger = log_derivative(h, budget);
  out.status = classify_dagger_bound(target, dagger.residual_bound);
  if (out.status == CheckStatus::inconclusive) {
    out.note = "residual bound does not reach past psi(vh); raise the budget";
    out.witness = {{"h", series_to_json(h)},
                   {"residual_bound", element_to_json(*dagger.residual_bound)},
                   {"psi_vh", element_to_json(target)}};
    return out;
  }
  Scalar expected_coeff = -vh.coeff(arch_class(vh));
  bool ok = !dagger.series.is_zero() && dagger.series.valuation() == target &&
            dagger.series.leading().second == expected_coeff;
  if (!ok) {
    out.status = CheckStatus::fail;
    out.witness = {{"h", series_to_json(h)},
                   {"dagger", series_to_json(dagger.series)},
                   {"psi_vh", element_to_json(target)},
                   {"expected_coeff", expected_coeff.str()}};
    out.note = "v(h-dagger) or its leading coefficient deviates from the couple";
  }
  return out;
}

CheckResult DerivationContext::extract_couple(
    std::size_t samples, std::uint64_t seed,
    const TruncationBudget& base_budget) const {
  IndexSet index = couple_.index_set();
  Sampler s(sub_seed(seed, 21));
  CheckResult out{"couple_round_trip", CheckStatus::pass, nullptr, ""};
  std::size_t skipped = 0, inconclusive = 0;
  constexpr std::size_t kBudgetCeiling = 64;
  for (std::size_t n = 0; n < samples; ++n) {
    HahnSeries h(index);
    std::size_t terms = 1 + s.index(4);
    for (std::size_t t = 0; t < terms; ++t)
      h.set_coeff(s.element(index, 3, 2), s.rational(3, 2));
    if (h.is_zero() || h.valuation().is_zero()) {
      ++skipped;
      continue;
    }
    CheckResult single{"", CheckStatus::inconclusive, nullptr, ""};
    for (std::size_t budget = base_budget.max_terms; budget <= kBudgetCeiling;
         budget *= 2) {
      single = certify_round_trip(h, TruncationBudget(budget));
      if (single.status != CheckStatus::inconclusive) break;
    }
    if (single.status == CheckStatus::fail) {
      out.status = CheckStatus::fail;
      out.witness = single.witness;
      out.note = single.note;
      return out;
    }
    if (single.status == CheckStatus::inconclusive) {
      ++inconclusive;
      out.witness = single.witness;
    }
  }
  if (inconclusive > 0) {
    out.status = CheckStatus::inconclusive;
    out.note = std::to_string(inconclusive) +
               " samples stayed uncertified at the budget ceiling";
    return out;
  }
  out.note = "psi(vh) = v(h-dagger) certified on " +
             std::to_string(samples - skipped) + " samples (" +
             std::to_string(skipped) + " skipped with vh = 0)";
  return out;
}

}  // namespace hahn
