#include <hahn/series.hpp>

#include <sstream>
#include <stdexcept>

namespace hahn {

HahnSeries HahnSeries::constant(IndexSet index, const Scalar& c) {
  HahnSeries f(index);
  f.set_coeff(GroupElement::zero(index), c);
  return f;
}

HahnSeries HahnSeries::monomial(IndexSet index, const GroupElement& exponent,
                                const Scalar& coeff) {
  HahnSeries f(index);
  f.set_coeff(exponent, coeff);
  return f;
}

const Scalar& HahnSeries::coeff(const GroupElement& exponent) const {
  static const Scalar kZero = 0;
  auto it = terms_.find(exponent);
  return it == terms_.end() ? kZero : it->second;
}

void HahnSeries::set_coeff(const GroupElement& exponent, const Scalar& c) {
  if (exponent.index_set() != index_)
    throw std::invalid_argument("exponent from a different index set");
  if (c == 0)
    terms_.erase(exponent);
  else
    terms_[exponent] = c;
}

GroupElement HahnSeries::valuation() const {
  if (terms_.empty())
    throw std::domain_error("valuation of the zero series is undefined");
  return terms_.begin()->first;
}

std::pair<GroupElement, Scalar> HahnSeries::leading() const {
  if (terms_.empty())
    throw std::domain_error("leading term of the zero series is undefined");
  return *terms_.begin();
}

HahnSeries HahnSeries::operator-() const {
  HahnSeries out(index_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

HahnSeries& HahnSeries::operator+=(const HahnSeries& rhs) {
  require_same_index(rhs);
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

HahnSeries& HahnSeries::operator-=(const HahnSeries& rhs) {
  return *this += -rhs;
}

HahnSeries operator*(const HahnSeries& a, const HahnSeries& b) {
  a.require_same_index(b);
  HahnSeries out(a.index_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      GroupElement e = ea + eb;
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        out.terms_.emplace(std::move(e), ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

HahnSeries HahnSeries::scaled(const Scalar& c) const {
  HahnSeries out(index_);
  if (c == 0) return out;
  for (const auto& [e, x] : terms_) out.terms_.emplace(e, c * x);
  return out;
}

std::string HahnSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Scalar shown = c;
    if (first) {
      first = false;
    } else if (c < 0) {
      out << " - ";
      shown = -c;
    } else {
      out << " + ";
    }
    if (e.is_zero()) {
      out << shown.str();
    } else if (shown == 1) {
      out << "t^" << e.to_string();
    } else if (shown == -1) {
      out << "-t^" << e.to_string();
    } else {
      out << shown.str() << "*t^" << e.to_string();
    }
  }
  return out.str();
}

void HahnSeries::require_same_index(const HahnSeries& rhs) const {
  if (index_ != rhs.index_)
    throw std::invalid_argument("series from different index sets");
}

std::strong_ordering field_compare(const HahnSeries& f, const HahnSeries& g) {
  HahnSeries d = f - g;
  if (d.is_zero()) return std::strong_ordering::equal;
  return d.leading().second > 0 ? std::strong_ordering::greater
                                : std::strong_ordering::less;
}

bool is_positive(const HahnSeries& f) {
  return !f.is_zero() && f.leading().second > 0;
}

DominanceResult dominance(const HahnSeries& f, const HahnSeries& g) {
  if (f.is_zero() || g.is_zero())
    throw std::domain_error("dominance comparison with a zero series");
  GroupElement vf = f.valuation(), vg = g.valuation();
  DominanceResult out{Dominance::same_order, false};
  if (vf > vg) {
    out.rel = Dominance::dominated;
  } else if (vf < vg) {
    out.rel = Dominance::dominates;
  } else {
    HahnSeries d = f - g;
    out.equivalent = d.is_zero() || d.valuation() > vf;
  }
  return out;
}

TruncationBudget::TruncationBudget(std::size_t terms,
                                   std::optional<GroupElement> cutoff)
    : max_terms(terms), valuation_cutoff(std::move(cutoff)) {
  if (max_terms == 0)
    throw std::invalid_argument("truncation budget must allow at least one term");
}

HahnSeries truncate(const HahnSeries& f, const TruncationBudget& budget) {
  HahnSeries out(f.index_set());
  std::size_t kept = 0;
  for (const auto& [e, c] : f.terms()) {
    if (kept == budget.max_terms) break;
    if (budget.valuation_cutoff && !(e < *budget.valuation_cutoff)) continue;
    out.set_coeff(e, c);
    ++kept;
  }
  return out;
}

Inverted invert(const HahnSeries& f, const TruncationBudget& budget) {
  if (f.is_zero()) throw std::domain_error("cannot invert the zero series");
  auto [gamma, c] = f.leading();
  HahnSeries lead_inverse =
      HahnSeries::monomial(f.index_set(), -gamma, Scalar(1) / c);
  // f = c t^gamma (1 + eps); eps collects the non-leading part, which has
  // strictly positive valuation by the leading-term convention.
  HahnSeries eps = f * lead_inverse - HahnSeries::constant(f.index_set(), 1);
  if (eps.is_zero()) return {lead_inverse, std::nullopt};

  if (budget.valuation_cutoff) {
    GroupElement floor = gamma + *budget.valuation_cutoff;
    if (!(GroupElement::zero(f.index_set()) < floor))
      throw std::invalid_argument(
          "valuation cutoff cannot certify a positive residual bound");
  }

  std::size_t n = budget.max_terms;
  HahnSeries sum = HahnSeries::constant(f.index_set(), 1);
  HahnSeries power = HahnSeries::constant(f.index_set(), 1);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * -eps;
    sum += power;
  }
  HahnSeries result = lead_inverse * sum;

  // (1 + eps) * sum_{k<n} (-eps)^k telescopes to 1 - (-eps)^n, so the
  // untruncated residual has valuation exactly n * v(eps).
  GroupElement bound = eps.valuation().scaled(Scalar(n));
  if (budget.valuation_cutoff) {
    HahnSeries capped(f.index_set());
    for (const auto& [e, x] : result.terms())
      if (e < *budget.valuation_cutoff) capped.set_coeff(e, x);
    result = capped;
    // Dropped terms contribute at valuation >= v(f) + cutoff.
    GroupElement drop_bound = gamma + *budget.valuation_cutoff;
    if (drop_bound < bound) bound = drop_bound;
  }
  return {result, bound};
}

}  // namespace hahn
