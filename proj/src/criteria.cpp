#include "l2tree/criteria.hpp"

#include "l2tree/errors.hpp"

namespace l2tree {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Infinite: return "Infinite";
    case Classification::InfiniteNonAmenable: return "InfiniteNonAmenable";
    case Classification::FiniteOrderBound: return "FiniteOrderBound";
    case Classification::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Verified: return "verified";
    case HypothesisStatus::Asserted: return "asserted";
    case HypothesisStatus::Violated: return "violated";
    case HypothesisStatus::Undetermined: return "undetermined";
  }
  return "?";
}

std::string hypothesis::relator_order(std::size_t index, std::uint64_t exponent) {
  return "r" + std::to_string(index) + "-has-order-" + std::to_string(exponent);
}

std::vector<std::string> corollary_notes(const Verdict& v) {
  if (v.b1_lower_bound.sign() <= 0) return {};
  return {
      "G does not have property (T)",
      "G has no commensurated infinite amenable subgroup",
      "IF additionally b2(G) = 0 THEN G is in the class D_reg",
      "IF G is finitely presented and (virtually) indicable THEN G is (virtually) acylindrically hyperbolic",
      "G is C*-simple if and only if it has trivial amenable radical",
  };
}

Verdict evaluate_quotient(const Rat& chi_f, std::size_t m, std::map<std::string, HypothesisStatus> hypotheses) {
  for (const char* name : {hypothesis::kStabilizersInClassC, hypothesis::kNormalSubgroupMeetsStabilizersTrivially,
                           hypothesis::kActionCocompact})
    hypotheses.try_emplace(name, HypothesisStatus::Asserted);

  Verdict v;
  v.k = chi_f + Rat(static_cast<long>(m));
  v.hypotheses = std::move(hypotheses);

  std::vector<std::string> blocking;
  for (const auto& [name, status] : v.hypotheses)
    if (status == HypothesisStatus::Violated || status == HypothesisStatus::Undetermined)
      blocking.push_back(name + " (" + to_string(status) + ")");
  if (!blocking.empty()) {
    v.classification = Classification::Inconclusive;
    std::string note = "no conclusion: hypotheses not satisfied:";
    for (const auto& b : blocking) note += " " + b;
    v.notes.push_back(note + "; k = " + v.k.str());
    return v;
  }

  if (v.k.sign() > 0) {
    v.classification = Classification::FiniteOrderBound;
    v.order_lower_bound = v.k.reciprocal();
    v.notes.push_back("k = " + v.k.str() + " > 0: IF G is finite THEN |G| >= " + v.order_lower_bound->str());
  } else if (v.k.is_zero()) {
    v.classification = Classification::Infinite;
    v.notes.push_back("k = 0: G is infinite");
  } else {
    v.classification = Classification::InfiniteNonAmenable;
    v.b1_lower_bound = -v.k;
    v.notes.push_back("k = " + v.k.str() + " < 0: G is infinite and b1(G) >= " + v.b1_lower_bound.str() +
                      " > 0, so G is non-amenable");
  }
  for (auto& note : corollary_notes(v)) v.notes.push_back(std::move(note));
  return v;
}

Verdict evaluate_torsion_presentation(const TorsionPresentation& tp,
                                      const std::map<std::string, HypothesisStatus>& relator_statuses) {
  const auto form = to_free_product_form(tp);

  PresentationEngine engine;
  engine.n = tp.generators.size();
  engine.m = tp.relators.size();
  for (const auto& r : tp.relators) engine.sum_reciprocal_k += reciprocal_order(GroupOrder::finite(r.exponent));
  engine.n_minus_sum = Rat(static_cast<long>(engine.n)) - engine.sum_reciprocal_k;
  const Rat direct_k = Rat(1) - engine.n_minus_sum;

  std::map<std::string, HypothesisStatus> hyps;
  bool all_orders_verified = true;
  for (std::size_t i = 0; i < tp.relators.size(); ++i) {
    const auto name = hypothesis::relator_order(i + 1, tp.relators[i].exponent);
    const auto it = relator_statuses.find(name);
    const auto status = it == relator_statuses.end() ? HypothesisStatus::Asserted : it->second;
    all_orders_verified = all_orders_verified && status == HypothesisStatus::Verified;
    hyps[name] = status;
  }
  // Vertex groups of the free-product form are finite cyclic, hence in class C,
  // and the quotient graph is finite.
  hyps[hypothesis::kStabilizersInClassC] = HypothesisStatus::Verified;
  hyps[hypothesis::kActionCocompact] = HypothesisStatus::Verified;
  // Exact relator orders are what make N avoid the finite vertex groups.
  hyps[hypothesis::kNormalSubgroupMeetsStabilizersTrivially] =
      all_orders_verified ? HypothesisStatus::Verified : HypothesisStatus::Asserted;

  auto v = evaluate_quotient(form.chi, form.normal_generators, std::move(hyps));
  if (v.k != direct_k)
    throw InternalInconsistencyError("k = 1 - n + sum 1/k_i = " + direct_k.str() + " but chi(F) + m = " + v.k.str());
  v.engine = engine;
  v.notes.push_back("n - sum 1/k_i = " + engine.n_minus_sum.str() + "; k = 1 - n + sum 1/k_i = " + v.k.str());
  v.notes.push_back("order bound uses 1/(1 - n + sum 1/k_i); the form with sum k_i in the denominator is not used");
  return v;
}

}  // namespace l2tree
