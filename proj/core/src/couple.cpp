#include <hahn/couple.hpp>

#include <hahn/json_io.hpp>
#include <hahn/sampling.hpp>

#include <string>

namespace hahn {
namespace {

// Sign of the dominant coefficient: the sign of the element in lex order.
int lead_sign(const GroupElement& g) {
  if (g.is_zero()) return 0;
  return sign(g.support().begin()->second);
}

nlohmann::json pair_witness(const GroupElement& alpha,
                            const GroupElement& beta) {
  return {{"alpha", element_to_json(alpha)}, {"beta", element_to_json(beta)}};
}

}  // namespace

AsymptoticCouple::AsymptoticCouple(IndexSet index,
                                   std::vector<GroupElement> psi_table)
    : index_(index), table_(std::move(psi_table)) {
  if (table_.size() != index_.size())
    throw std::invalid_argument("psi table must assign one value per class");
  for (const GroupElement& value : table_)
    if (value.index_set() != index_)
      throw std::invalid_argument("psi value from a different index set");
}

AsymptoticCouple AsymptoticCouple::log_couple(IndexSet index) {
  std::vector<GroupElement> table;
  table.reserve(index.size());
  GroupElement prefix(index);
  for (std::size_t i = 0; i < index.size(); ++i) {
    prefix += GroupElement::unit(index, i);
    table.push_back(prefix);
  }
  return AsymptoticCouple(index, std::move(table));
}

const GroupElement& AsymptoticCouple::psi_of_class(std::size_t i) const {
  if (i >= table_.size())
    throw std::out_of_range("class index outside the index set");
  return table_[i];
}

const GroupElement& AsymptoticCouple::psi(const GroupElement& gamma) const {
  if (gamma.index_set() != index_)
    throw std::invalid_argument("element from a different index set");
  return table_[arch_class(gamma)];
}

CheckResult check_a1(const AsymptoticCouple& couple) {
  CheckResult out{"axiom_a1", CheckStatus::pass, nullptr,
                  "psi table is non-decreasing across classes"};
  const auto& table = couple.psi_table();
  IndexSet index = couple.index_set();
  for (std::size_t i = 0; i + 1 < table.size(); ++i) {
    if (table[i + 1] < table[i]) {
      // alpha and beta both sit in class i, but their sum lands in class
      // i+1 where psi drops below the minimum.
      GroupElement alpha = GroupElement::unit(index, i);
      GroupElement beta =
          GroupElement::unit(index, i + 1) - GroupElement::unit(index, i);
      out.status = CheckStatus::fail;
      out.witness = pair_witness(alpha, beta);
      out.witness["psi_alpha"] = element_to_json(table[i]);
      out.witness["psi_beta"] = element_to_json(table[i]);
      out.witness["psi_sum"] = element_to_json(table[i + 1]);
      out.note = "psi(alpha+beta) < min(psi(alpha), psi(beta))";
      return out;
    }
  }
  return out;
}

CheckResult check_a2(const AsymptoticCouple& couple) {
  (void)couple;
  return {"axiom_a2", CheckStatus::pass, nullptr,
          "structural: psi reads only the archimedean class, which scalar "
          "multiples preserve"};
}

CheckResult check_a3(const AsymptoticCouple& couple) {
  CheckResult out{"axiom_a3", CheckStatus::pass, nullptr,
                  "closed-form criterion holds for every class pair"};
  const auto& table = couple.psi_table();
  IndexSet index = couple.index_set();
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j) {
      GroupElement x = table[i] - table[j];
      // alpha + psi(alpha) > psi(beta) holds for every positive alpha of
      // class i iff x = psi(e_i) - psi(e_j) is zero, positive, or lies in
      // a strictly smaller archimedean class than e_i.
      if (lead_sign(x) >= 0 || arch_class(x) > i) continue;
      GroupElement alpha = GroupElement::unit(index, i);
      if (arch_class(x) == i) {
        // Half the offending coefficient keeps alpha positive while the
        // sum's class-i coordinate stays negative.
        alpha = GroupElement::unit(index, i, -x.coeff(i) / 2);
      }
      out.status = CheckStatus::fail;
      out.witness = pair_witness(alpha, GroupElement::unit(index, j));
      out.witness["lhs"] = element_to_json(alpha + table[i]);
      out.witness["rhs"] = element_to_json(table[j]);
      out.note = "alpha + psi(alpha) <= psi(beta)";
      return out;
    }
  return out;
}

CheckResult check_hardy_type(const AsymptoticCouple& couple) {
  CheckResult out{"hardy_type", CheckStatus::pass, nullptr,
                  "psi strictly increases toward smaller classes"};
  const auto& table = couple.psi_table();
  IndexSet index = couple.index_set();
  for (std::size_t i = 0; i + 1 < table.size(); ++i) {
    if (!(table[i] < table[i + 1])) {
      out.status = CheckStatus::fail;
      out.witness = pair_witness(GroupElement::unit(index, i),
                                 GroupElement::unit(index, i + 1));
      out.witness["psi_alpha"] = element_to_json(table[i]);
      out.witness["psi_beta"] = element_to_json(table[i + 1]);
      out.note = "beta is infinitesimal relative to alpha, yet psi(beta) "
                 "does not exceed psi(alpha)";
      return out;
    }
  }
  return out;
}

CheckResult check_hahn_type(const AsymptoticCouple& couple) {
  CheckResult out{"hahn_type", CheckStatus::pass, nullptr, ""};
  const auto& table = couple.psi_table();
  IndexSet index = couple.index_set();
  for (std::size_t i = 0; i + 1 < table.size(); ++i) {
    if (table[i] == table[i + 1]) {
      out.status = CheckStatus::fail;
      out.witness = pair_witness(GroupElement::unit(index, i),
                                 GroupElement::unit(index, i + 1));
      out.note = "distinct classes share one psi value, so no scalar "
                 "multiple of beta can raise psi(alpha - c beta)";
      return out;
    }
    if (table[i + 1] < table[i]) {
      // c = 1 is the only ratio cancelling the leading class, and it
      // lands in class i+1 where psi is smaller, not larger.
      GroupElement alpha =
          GroupElement::unit(index, i) + GroupElement::unit(index, i + 1);
      out.status = CheckStatus::fail;
      out.witness = pair_witness(alpha, GroupElement::unit(index, i));
      out.witness["c"] = "1";
      out.witness["psi_alpha"] = element_to_json(table[i]);
      out.witness["psi_after_cancellation"] = element_to_json(table[i + 1]);
      out.note = "cancelling the leading class lowers psi";
      return out;
    }
  }
  // Constructive evidence: cancelling the shared leading class with
  // c = alpha_i / beta_i raises psi (or kills alpha entirely).
  nlohmann::json evidence = nlohmann::json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    GroupElement beta = GroupElement::unit(index, i);
    GroupElement alpha = GroupElement::unit(index, i, 2);
    nlohmann::json item;
    if (i + 1 < table.size()) {
      alpha += GroupElement::unit(index, i + 1);
      item["psi_after_cancellation"] = element_to_json(table[i + 1]);
    } else {
      item["cancellation"] = "alpha - c*beta = 0";
    }
    item["alpha"] = element_to_json(alpha);
    item["beta"] = element_to_json(beta);
    item["c"] = "2";
    item["psi_alpha"] = element_to_json(table[i]);
    evidence.push_back(item);
  }
  out.witness = {{"evidence", evidence}};
  out.note = "psi injective and order-reversing on classes; "
             "c = leading-coefficient ratio raises psi";
  return out;
}

CheckResult check_small_derivation(const AsymptoticCouple& couple) {
  CheckResult out{"small_derivation", CheckStatus::pass, nullptr,
                  "alpha + psi(alpha) > 0 for every positive alpha"};
  const auto& table = couple.psi_table();
  IndexSet index = couple.index_set();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const GroupElement& y = table[i];
    if (lead_sign(y) >= 0 || arch_class(y) > i) continue;
    GroupElement alpha = GroupElement::unit(index, i);
    if (!((alpha + y) < GroupElement::zero(index)) && !(alpha + y).is_zero())
      alpha = GroupElement::unit(index, i, -y.coeff(i) / 2);
    out.status = CheckStatus::fail;
    out.witness = {{"alpha", element_to_json(alpha)},
                   {"value", element_to_json(alpha + y)}};
    out.note = "alpha + psi(alpha) <= 0";
    return out;
  }
  return out;
}

CheckResult check_grounded(const AsymptoticCouple& couple) {
  const auto& table = couple.psi_table();
  GroupElement top = table.front();
  for (const GroupElement& value : table)
    if (top < value) top = value;
  return {"grounded", CheckStatus::pass, {{"max_psi", element_to_json(top)}},
          "a finite index set forces Psi to attain a maximum"};
}

GroupElement max_psi(const AsymptoticCouple& couple) {
  if (check_hardy_type(couple).status != CheckStatus::pass)
    throw std::invalid_argument("max_psi requires a Hardy-type couple");
  return couple.psi_table().back();
}

namespace {

struct SampledAxiom {
  std::string name;
  bool violated = false;
  nlohmann::json violation;
};

// Replays a stored witness pair against the axiom it claims to violate;
// returns true when the violation reproduces.
bool replay_violates(const AsymptoticCouple& couple, const std::string& axiom,
                     const nlohmann::json& witness) {
  IndexSet index = couple.index_set();
  if (axiom == "axiom_a1") {
    GroupElement alpha = element_from_json(witness.at("alpha"), index);
    GroupElement beta = element_from_json(witness.at("beta"), index);
    GroupElement min_psi = couple.psi(alpha);
    if (couple.psi(beta) < min_psi) min_psi = couple.psi(beta);
    return couple.psi(alpha + beta) < min_psi;
  }
  if (axiom == "axiom_a3") {
    GroupElement alpha = element_from_json(witness.at("alpha"), index);
    GroupElement beta = element_from_json(witness.at("beta"), index);
    return !(couple.psi(beta) < alpha + couple.psi(alpha));
  }
  if (axiom == "small_derivation") {
    GroupElement alpha = element_from_json(witness.at("alpha"), index);
    return !(GroupElement::zero(index) < alpha + couple.psi(alpha));
  }
  return false;
}

}  // namespace

CoupleValidation validate_axioms(const AsymptoticCouple& couple,
                                 std::size_t samples, std::uint64_t seed) {
  CoupleValidation out;
  CheckResult a1 = check_a1(couple);
  CheckResult a2 = check_a2(couple);
  CheckResult a3 = check_a3(couple);
  CheckResult hardy = check_hardy_type(couple);
  CheckResult hahn = check_hahn_type(couple);
  CheckResult small = check_small_derivation(couple);
  CheckResult grounded = check_grounded(couple);

  IndexSet index = couple.index_set();
  CheckResult consistency{"sampling_consistency", CheckStatus::skipped, nullptr,
                          "sampling disabled"};
  if (samples > 0) {
    SampledAxiom sampled_a1{"axiom_a1"};
    SampledAxiom sampled_a2{"axiom_a2"};
    SampledAxiom sampled_a3{"axiom_a3"};
    SampledAxiom sampled_small{"small_derivation"};

    {
      Sampler s(sub_seed(seed, 1));
      for (std::size_t n = 0; n < samples; ++n) {
        GroupElement alpha = s.nonzero_element(index, 4, 2);
        GroupElement beta = s.nonzero_element(index, 4, 2);
        if ((alpha + beta).is_zero()) continue;
        GroupElement min_psi = couple.psi(alpha);
        if (couple.psi(beta) < min_psi) min_psi = couple.psi(beta);
        if (couple.psi(alpha + beta) < min_psi && !sampled_a1.violated) {
          sampled_a1.violated = true;
          sampled_a1.violation = pair_witness(alpha, beta);
        }
      }
    }
    {
      Sampler s(sub_seed(seed, 2));
      for (std::size_t n = 0; n < samples; ++n) {
        GroupElement alpha = s.nonzero_element(index, 4, 2);
        long long k = s.int_in(1, 3);
        if (s.coin()) k = -k;
        if (!(couple.psi(alpha.scaled(Scalar(k))) == couple.psi(alpha)) &&
            !sampled_a2.violated) {
          sampled_a2.violated = true;
          sampled_a2.violation = {{"alpha", element_to_json(alpha)},
                                  {"k", std::to_string(k)}};
        }
      }
    }
    {
      Sampler s(sub_seed(seed, 3));
      for (std::size_t n = 0; n < samples; ++n) {
        GroupElement alpha = s.nonzero_element(index, 4, 2);
        if (alpha < GroupElement::zero(index)) alpha = -alpha;
        GroupElement beta = s.nonzero_element(index, 4, 2);
        if (!(couple.psi(beta) < alpha + couple.psi(alpha)) &&
            !sampled_a3.violated) {
          sampled_a3.violated = true;
          sampled_a3.violation = pair_witness(alpha, beta);
        }
      }
    }
    {
      Sampler s(sub_seed(seed, 4));
      for (std::size_t n = 0; n < samples; ++n) {
        GroupElement alpha = s.nonzero_element(index, 4, 2);
        if (alpha < GroupElement::zero(index)) alpha = -alpha;
        if (!(GroupElement::zero(index) < alpha + couple.psi(alpha)) &&
            !sampled_small.violated) {
          sampled_small.violated = true;
          sampled_small.violation = {{"alpha", element_to_json(alpha)}};
        }
      }
    }

    consistency.status = CheckStatus::pass;
    consistency.note = std::to_string(samples) +
                       " samples per axiom; sampled and exact statuses agree";
    auto reconcile = [&](CheckResult& exact, const SampledAxiom& sampled) {
      if (consistency.status == CheckStatus::fail) return;
      if (exact.status == CheckStatus::pass && sampled.violated) {
        consistency.status = CheckStatus::fail;
        consistency.witness = {{"axiom", sampled.name},
                               {"sampled_violation", sampled.violation}};
        consistency.note =
            "sampling found a violation of an exactly-passing check";
      } else if (exact.status == CheckStatus::fail &&
                 !replay_violates(couple, exact.name, exact.witness)) {
        consistency.status = CheckStatus::fail;
        consistency.witness = {{"axiom", exact.name},
                               {"stored_witness", exact.witness}};
        consistency.note = "stored witness does not replay as a violation";
      } else if (exact.status == CheckStatus::pass) {
        exact.note += "; confirmed on " + std::to_string(samples) + " samples";
      }
    };
    reconcile(a1, sampled_a1);
    reconcile(a2, sampled_a2);
    reconcile(a3, sampled_a3);
    reconcile(small, sampled_small);
  }

  out.axioms_ok = a1.status == CheckStatus::pass &&
                  a2.status == CheckStatus::pass &&
                  a3.status == CheckStatus::pass;
  out.hardy_type = hardy.status == CheckStatus::pass;
  out.hahn_type = hahn.status == CheckStatus::pass;
  out.small_derivation = small.status == CheckStatus::pass;
  out.grounded = grounded.status == CheckStatus::pass;
  if (out.hardy_type) out.max_psi = couple.psi_table().back();

  out.checks = {std::move(a1),   std::move(a2),    std::move(a3),
                std::move(hardy), std::move(hahn),  std::move(small),
                std::move(grounded), std::move(consistency)};
  sort_checks(out.checks);
  return out;
}

AsymptoticCouple extend_psi(
    const std::vector<std::pair<GroupElement, GroupElement>>& generators,
    IndexSet ambient) {
  if (generators.empty())
    throw std::invalid_argument("extension needs at least one generator");
  std::vector<std::optional<GroupElement>> table(ambient.size());
  for (const auto& [g, value] : generators) {
    if (g.index_set() != ambient || value.index_set() != ambient)
      throw std::invalid_argument("generator from a different index set");
    if (g.is_zero())
      throw std::invalid_argument("zero generator has no psi value");
    std::size_t i = arch_class(g);
    if (table[i] && !(*table[i] == value))
      throw std::invalid_argument(
          "inconsistent psi assignments within archimedean class " +
          std::to_string(i));
    table[i] = value;
  }
  std::vector<GroupElement> filled;
  filled.reserve(ambient.size());
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    if (!table[i])
      throw std::invalid_argument("archimedean class " + std::to_string(i) +
                                  " is unrepresented among the generators");
    filled.push_back(std::move(*table[i]));
  }
  return AsymptoticCouple(ambient, std::move(filled));
}

}  // namespace hahn
