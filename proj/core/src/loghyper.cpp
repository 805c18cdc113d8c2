#include <hahn/loghyper.hpp>

#include <hahn/json_io.hpp>
#include <hahn/sampling.hpp>

#include <sstream>
#include <stdexcept>

namespace hahn {

LogMonomial LogMonomial::power(std::size_t level, const Scalar& r) {
  LogMonomial m;
  m.set_exponent(level, r);
  return m;
}

Scalar LogMonomial::exponent(std::size_t level) const {
  auto it = exponents_.find(level);
  return it == exponents_.end() ? Scalar(0) : it->second;
}

void LogMonomial::set_exponent(std::size_t level, const Scalar& r) {
  if (r == 0)
    exponents_.erase(level);
  else
    exponents_[level] = r;
}

LogMonomial LogMonomial::operator*(const LogMonomial& rhs) const {
  LogMonomial out = *this;
  for (const auto& [level, r] : rhs.exponents_)
    out.set_exponent(level, out.exponent(level) + r);
  return out;
}

std::string LogMonomial::to_string() const {
  if (exponents_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [level, r] : exponents_) {
    if (!first) out << '*';
    first = false;
    out << 'l' << level;
    if (r != 1) out << '^' << r.str();
  }
  return out.str();
}

bool LogPullbackLess::operator()(const LogMonomial& a,
                                 const LogMonomial& b) const {
  // h^{-1} sends exponent vector r to the series exponent -r; smaller
  // series exponent means dominant, so the larger r at the first
  // differing level comes first.
  auto ia = a.exponents().begin(), ib = b.exponents().begin();
  while (ia != a.exponents().end() || ib != b.exponents().end()) {
    if (ib == b.exponents().end() ||
        (ia != a.exponents().end() && ia->first < ib->first)) {
      if (ia->second != 0) return ia->second > 0;
      ++ia;
    } else if (ia == a.exponents().end() || ib->first < ia->first) {
      if (ib->second != 0) return ib->second < 0;
      ++ib;
    } else {
      if (ia->second != ib->second) return ia->second > ib->second;
      ++ia;
      ++ib;
    }
  }
  return false;
}

LogSeries LogSeries::constant(const Scalar& c) {
  LogSeries s;
  s.add_term(LogMonomial::one(), c);
  return s;
}

LogSeries LogSeries::term(const LogMonomial& m, const Scalar& c) {
  LogSeries s;
  s.add_term(m, c);
  return s;
}

const Scalar& LogSeries::coeff(const LogMonomial& m) const {
  static const Scalar kZero = 0;
  auto it = terms_.find(m);
  return it == terms_.end() ? kZero : it->second;
}

void LogSeries::add_term(const LogMonomial& m, const Scalar& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LogSeries LogSeries::operator-() const {
  LogSeries out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

LogSeries& LogSeries::operator+=(const LogSeries& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

LogSeries& LogSeries::operator-=(const LogSeries& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

LogSeries LogSeries::operator*(const LogSeries& rhs) const {
  LogSeries out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

LogSeries LogSeries::scaled(const Scalar& c) const {
  LogSeries out;
  if (c == 0) return out;
  for (const auto& [m, x] : terms_) out.terms_.emplace(m, c * x);
  return out;
}

std::string LogSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar shown = c;
    if (first) {
      first = false;
    } else if (c < 0) {
      out << " - ";
      shown = -c;
    } else {
      out << " + ";
    }
    if (m.is_one()) {
      out << shown.str();
    } else if (shown == 1) {
      out << m.to_string();
    } else if (shown == -1) {
      out << '-' << m.to_string();
    } else {
      out << shown.str() << '*' << m.to_string();
    }
  }
  return out.str();
}

LogSeries h_map(const HahnSeries& f) {
  LogSeries out;
  for (const auto& [gamma, c] : f.terms()) {
    LogMonomial m;
    for (const auto& [i, x] : gamma.support()) m.set_exponent(i, -x);
    out.add_term(m, c);
  }
  return out;
}

HahnSeries h_inverse(const LogSeries& s, IndexSet index) {
  HahnSeries out(index);
  for (const auto& [m, c] : s.terms()) {
    GroupElement gamma(index);
    for (const auto& [level, r] : m.exponents()) {
      if (level >= index.size())
        throw std::invalid_argument("log-series level outside the index set");
      gamma.set_coeff(level, -r);
    }
    out.set_coeff(gamma, c);
  }
  return out;
}

namespace {

// l_level' as a monomial, by the chain rule applied to l_i = log l_{i-1}:
// l_0' = 1 and l_i' = l_{i-1}' / l_{i-1}.
LogMonomial ell_derivative(std::size_t level) {
  if (level == 0) return LogMonomial::one();
  return ell_derivative(level - 1) * LogMonomial::power(level - 1, -1);
}

}  // namespace

LogSeries oracle_diff(const LogMonomial& m) {
  // d(prod l_i^{r_i}) = sum_i r_i l_i^{r_i - 1} l_i' prod_{j != i} l_j^{r_j}
  //                   = sum_i r_i (m / l_i) l_i'.
  LogSeries out;
  for (const auto& [level, r] : m.exponents()) {
    LogMonomial term = m * LogMonomial::power(level, -1) * ell_derivative(level);
    out.add_term(term, r);
  }
  return out;
}

LogSeries oracle_diff(const LogSeries& s) {
  LogSeries out;
  for (const auto& [m, c] : s.terms()) out += oracle_diff(m).scaled(c);
  return out;
}

std::vector<CheckResult> verify_isomorphism(const DerivationContext& ctx,
                                            std::size_t samples,
                                            std::uint64_t seed) {
  IndexSet index = ctx.index_set();
  {
    AsymptoticCouple expected = AsymptoticCouple::log_couple(index);
    if (!(ctx.couple().psi_table() == expected.psi_table()))
      throw std::invalid_argument(
          "isomorphism check needs the logarithmic tower couple");
  }

  std::vector<CheckResult> checks;
  auto random_series = [&](Sampler& s, std::size_t max_terms) {
    HahnSeries f(index);
    std::size_t terms = s.index(max_terms + 1);
    for (std::size_t t = 0; t < terms; ++t)
      f.set_coeff(s.element(index, 9, 9), s.rational(9, 9));
    return f;
  };

  {
    CheckResult check{"oracle_commutation", CheckStatus::pass, nullptr, ""};
    Sampler s(sub_seed(seed, 41));
    for (std::size_t n = 0; n < samples && check.status == CheckStatus::pass;
         ++n) {
      HahnSeries f = random_series(s, 6);
      if (!(h_map(ctx.derive(f)) == oracle_diff(h_map(f)))) {
        check.status = CheckStatus::fail;
        check.witness = {{"f", series_to_json(f)},
                         {"derived_then_mapped", h_map(ctx.derive(f)).to_string()},
                         {"mapped_then_differentiated",
                          oracle_diff(h_map(f)).to_string()}};
        check.note = "h does not intertwine the derivation with the oracle";
      }
    }
    if (check.status == CheckStatus::pass)
      check.note = "h(f') = oracle(h(f)) on " + std::to_string(samples) +
                   " random series";
    checks.push_back(std::move(check));
  }

  {
    CheckResult check{"ring_morphism", CheckStatus::pass, nullptr, ""};
    Sampler s(sub_seed(seed, 42));
    for (std::size_t n = 0; n < samples && check.status == CheckStatus::pass;
         ++n) {
      HahnSeries f = random_series(s, 4);
      HahnSeries g = random_series(s, 4);
      bool additive = h_map(f + g) == h_map(f) + h_map(g);
      bool multiplicative = h_map(f * g) == h_map(f) * h_map(g);
      bool invertible = h_inverse(h_map(f), index) == f;
      if (!additive || !multiplicative || !invertible) {
        check.status = CheckStatus::fail;
        check.witness = {{"f", series_to_json(f)}, {"g", series_to_json(g)}};
        check.note = "h is not a bijective ring morphism";
      }
    }
    if (check.status == CheckStatus::pass)
      check.note = "bijective ring morphism on " + std::to_string(samples) +
                   " pairs";
    checks.push_back(std::move(check));
  }

  {
    CheckResult check{"order_preservation", CheckStatus::pass, nullptr, ""};
    Sampler s(sub_seed(seed, 43));
    for (std::size_t n = 0; n < samples && check.status == CheckStatus::pass;
         ++n) {
      HahnSeries f = random_series(s, 4);
      HahnSeries g = random_series(s, 4);
      LogSeries d = h_map(f) - h_map(g);
      int log_sign =
          d.is_zero() ? 0 : (d.terms().begin()->second > 0 ? 1 : -1);
      auto cmp = field_compare(f, g);
      int series_sign =
          cmp == std::strong_ordering::equal ? 0
          : (cmp == std::strong_ordering::greater ? 1 : -1);
      if (log_sign != series_sign) {
        check.status = CheckStatus::fail;
        check.witness = {{"f", series_to_json(f)}, {"g", series_to_json(g)}};
        check.note = "pullback order disagrees with the field order";
      }
    }
    if (check.status == CheckStatus::pass)
      check.note = "order preserved on " + std::to_string(samples) +
                   " comparisons";
    checks.push_back(std::move(check));
  }

  {
    // The oracle itself satisfies Leibniz; independent of the derivation.
    CheckResult check{"oracle_leibniz", CheckStatus::pass, nullptr, ""};
    Sampler s(sub_seed(seed, 44));
    for (std::size_t n = 0; n < samples && check.status == CheckStatus::pass;
         ++n) {
      LogMonomial a, b;
      for (std::size_t level = 0; level < index.size(); ++level) {
        a.set_exponent(level, s.rational(4, 3));
        b.set_exponent(level, s.rational(4, 3));
      }
      LogSeries lhs = oracle_diff(a * b);
      LogSeries rhs = oracle_diff(a) * LogSeries::term(b, 1) +
                      LogSeries::term(a, 1) * oracle_diff(b);
      if (!(lhs == rhs)) {
        check.status = CheckStatus::fail;
        check.witness = {{"a", a.to_string()}, {"b", b.to_string()}};
        check.note = "oracle violates the Leibniz rule";
      }
    }
    if (check.status == CheckStatus::pass)
      check.note = "oracle Leibniz rule on " + std::to_string(samples) +
                   " monomial pairs";
    checks.push_back(std::move(check));
  }

  {
    // l_i-dagger = prod_{j <= i} l_j^{-1} transports to t^psi(e_i).
    CheckResult check{"dagger_transport", CheckStatus::pass, nullptr, ""};
    for (std::size_t i = 0; i < index.size(); ++i) {
      LogSeries dagger =
          oracle_diff(LogMonomial::power(i, 1)) *
          LogSeries::term(LogMonomial::power(i, -1), 1);
      HahnSeries transported = h_inverse(dagger, index);
      HahnSeries expected = HahnSeries::monomial(
          index, ctx.couple().psi_of_class(i), 1);
      if (!(transported == expected)) {
        check.status = CheckStatus::fail;
        check.witness = {{"level", std::to_string(i)},
                         {"transported", series_to_json(transported)}};
        check.note = "tower dagger does not land on psi";
        break;
      }
    }
    if (check.status == CheckStatus::pass)
      check.note = "l_i-dagger corresponds to t^psi(e_i) for every level";
    checks.push_back(std::move(check));
  }

  sort_checks(checks);
  return checks;
}

}  // namespace hahn
