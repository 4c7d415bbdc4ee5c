#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "l2tree/criteria.hpp"

using namespace l2tree;

namespace {

Rat q(long p, long d) { return Rat(mpz_class(p), mpz_class(d)); }

void check_verdict_invariants(const Verdict& v) {
  if (v.classification == Classification::Inconclusive) {
    CHECK(v.b1_lower_bound == Rat(0));
    CHECK(!v.order_lower_bound);
    return;
  }
  const bool infinite =
      v.classification == Classification::Infinite || v.classification == Classification::InfiniteNonAmenable;
  CHECK(infinite == (v.k <= Rat(0)));
  CHECK(v.b1_lower_bound == std::max(Rat(0), -v.k));
  CHECK(v.order_lower_bound.has_value() == (v.k > Rat(0)));
  if (v.order_lower_bound) CHECK(*v.order_lower_bound * v.k == Rat(1));
}

}  // namespace

TEST_CASE("evaluate_quotient examples") {
  auto v = evaluate_quotient(q(-127, 42), 3);
  CHECK(v.k == q(-1, 42));
  CHECK(v.classification == Classification::InfiniteNonAmenable);
  CHECK(v.b1_lower_bound == q(1, 42));
  CHECK(!v.order_lower_bound);

  v = evaluate_quotient(Rat(-3), 3);
  CHECK(v.k == Rat(0));
  CHECK(v.classification == Classification::Infinite);
  CHECK(v.b1_lower_bound == Rat(0));

  v = evaluate_quotient(q(-89, 30), 3);
  CHECK(v.k == q(1, 30));
  CHECK(v.classification == Classification::FiniteOrderBound);
  REQUIRE(v.order_lower_bound);
  CHECK(*v.order_lower_bound == Rat(30));
  bool conditional = false;
  for (const auto& n : v.notes) conditional = conditional || n.find("IF G is finite THEN |G| >= 30") != std::string::npos;
  CHECK(conditional);

  for (const char* h : {hypothesis::kStabilizersInClassC, hypothesis::kNormalSubgroupMeetsStabilizersTrivially,
                        hypothesis::kActionCocompact})
    CHECK(v.hypotheses.at(h) == HypothesisStatus::Asserted);
}

TEST_CASE("blocking hypotheses make the verdict inconclusive") {
  for (auto status : {HypothesisStatus::Violated, HypothesisStatus::Undetermined}) {
    const auto v = evaluate_quotient(q(-127, 42), 3, {{hypothesis::kStabilizersInClassC, status}});
    CHECK(v.classification == Classification::Inconclusive);
    CHECK(v.k == q(-1, 42));
    CHECK(v.b1_lower_bound == Rat(0));
    CHECK(corollary_notes(v).empty());
    REQUIRE(!v.notes.empty());
    CHECK(v.notes.front().find(hypothesis::kStabilizersInClassC) != std::string::npos);
    check_verdict_invariants(v);
  }
}

TEST_CASE("evaluate_torsion_presentation examples") {
  auto v = evaluate_torsion_presentation(parse_presentation("< x, y | x^3, y^3, (x*y)^3 >"));
  REQUIRE(v.engine);
  CHECK(v.engine->n_minus_sum == Rat(1));
  CHECK(v.classification == Classification::Infinite);

  v = evaluate_torsion_presentation(parse_presentation("< x, y | x^2, y^3, (x*y)^7 >"));
  CHECK(v.engine->n_minus_sum == q(43, 42));
  CHECK(v.engine->sum_reciprocal_k == q(41, 42));
  CHECK(v.classification == Classification::InfiniteNonAmenable);
  CHECK(v.b1_lower_bound == q(1, 42));

  v = evaluate_torsion_presentation(parse_presentation("< x, y | x^2, y^2, (x*y)^3 >"));
  CHECK(v.k == q(1, 3));
  CHECK(*v.order_lower_bound == Rat(3));

  CHECK(v.hypotheses.at("r1-has-order-2") == HypothesisStatus::Asserted);
  CHECK(v.hypotheses.at(hypothesis::kStabilizersInClassC) == HypothesisStatus::Verified);
  CHECK(v.hypotheses.at(hypothesis::kNormalSubgroupMeetsStabilizersTrivially) == HypothesisStatus::Asserted);
}

TEST_CASE("relator statuses from an oracle feed the verdict") {
  const auto tp = parse_presentation("< x, y | x^2, y^2, (x*y)^3 >");
  std::map<std::string, HypothesisStatus> all_ok{{"r1-has-order-2", HypothesisStatus::Verified},
                                                 {"r2-has-order-2", HypothesisStatus::Verified},
                                                 {"r3-has-order-3", HypothesisStatus::Verified}};
  auto v = evaluate_torsion_presentation(tp, all_ok);
  CHECK(v.hypotheses.at(hypothesis::kNormalSubgroupMeetsStabilizersTrivially) == HypothesisStatus::Verified);
  CHECK(v.classification == Classification::FiniteOrderBound);

  all_ok["r3-has-order-3"] = HypothesisStatus::Violated;
  v = evaluate_torsion_presentation(tp, all_ok);
  CHECK(v.classification == Classification::Inconclusive);
}

TEST_CASE("corollary notes") {
  auto v = evaluate_quotient(q(-127, 42), 3);
  const auto notes = corollary_notes(v);
  REQUIRE(notes.size() == 5);
  CHECK(notes[0].find("property (T)") != std::string::npos);
  CHECK(notes[1].find("commensurated infinite amenable") != std::string::npos);
  CHECK(notes[2].find("D_reg") != std::string::npos);
  CHECK(notes[3].find("acylindrically hyperbolic") != std::string::npos);
  CHECK(notes[4].find("C*-simple") != std::string::npos);
  for (const auto& n : notes) CHECK(std::find(v.notes.begin(), v.notes.end(), n) != v.notes.end());

  CHECK(corollary_notes(evaluate_quotient(Rat(-3), 3)).empty());
  CHECK(corollary_notes(evaluate_quotient(q(-89, 30), 3)).empty());
}

TEST_CASE("verdict invariants on random inputs") {
  std::mt19937 rng(8);
  for (int i = 0; i < 500; ++i) {
    const Rat chi(mpz_class(static_cast<long>(rng() % 200) - 150), mpz_class(static_cast<long>(1 + rng() % 60)));
    check_verdict_invariants(evaluate_quotient(chi, rng() % 8));
  }
}

TEST_CASE("both routes to k agree on random presentations") {
  std::mt19937 rng(12);
  for (int i = 0; i < 300; ++i) {
    const auto tp = testing::random_presentation(rng, 6, 6, 12);
    const auto v = evaluate_torsion_presentation(tp);
    Rat direct = Rat(1) - Rat(static_cast<long>(tp.rank()));
    for (const auto& r : tp.relators) direct += Rat(mpz_class(1), mpz_class(static_cast<unsigned long>(r.exponent)));
    CHECK(v.k == direct);
    check_verdict_invariants(v);
  }
}

TEST_CASE("k strictly decreases as any exponent grows") {
  std::mt19937 rng(19);
  for (int i = 0; i < 200; ++i) {
    auto tp = testing::random_presentation(rng, 4, 5, 10);
    if (tp.relators.empty()) continue;
    const auto k0 = evaluate_torsion_presentation(tp).k;
    auto bigger = tp;
    bigger.relators[rng() % bigger.relators.size()].exponent += 1 + rng() % 5;
    CHECK(evaluate_torsion_presentation(bigger).k < k0);
    auto scaled = tp;
    for (auto& r : scaled.relators) r.exponent *= 2;
    CHECK(evaluate_torsion_presentation(scaled).k < k0);
  }
}
