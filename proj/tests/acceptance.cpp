// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
// All comparisons are exact rational equalities.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "l2tree/catalog.hpp"
#include "l2tree/cli.hpp"
#include "l2tree/coset_enumeration.hpp"
#include "l2tree/criteria.hpp"
#include "l2tree/graph_of_groups.hpp"
#include "l2tree/presentation.hpp"
#include "table_checks.hpp"

using namespace l2tree;

namespace {

constexpr std::size_t kLimit = 10000;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

struct Triple {
  std::uint64_t p, q, r;
  std::string name() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
  }
};

std::vector<Triple> census_triples() {
  std::vector<Triple> out;
  for (std::uint64_t p = 2; p <= 6; ++p)
    for (std::uint64_t q = p; q <= 6; ++q)
      for (std::uint64_t r = q; r <= 6; ++r) out.push_back({p, q, r});
  out.push_back({2, 3, 7});
  return out;
}

Rat q(long p, long d) { return Rat(mpz_class(p), mpz_class(d)); }

Outcome triangle_census() {
  Outcome o;
  std::size_t euclidean = 0;
  for (const auto& t : census_triples()) {
    // Sign of 1/p + 1/q + 1/r - 1 via integers: qr + pr + pq - pqr.
    const auto lhs = static_cast<long>(t.q * t.r + t.p * t.r + t.p * t.q);
    const auto rhs = static_cast<long>(t.p * t.q * t.r);
    const auto expected = lhs == rhs  ? Classification::Infinite
                          : lhs < rhs ? Classification::InfiniteNonAmenable
                                      : Classification::FiniteOrderBound;
    const auto v = evaluate_torsion_presentation(catalog::triangle_presentation(t.p, t.q, t.r));
    o.require(v.classification == expected, t.name() + " classified " + to_string(v.classification));
    if (expected == Classification::Infinite) {
      ++euclidean;
      const bool listed = (t.p == 2 && t.q == 3 && t.r == 6) || (t.p == 2 && t.q == 4 && t.r == 4) ||
                          (t.p == 3 && t.q == 3 && t.r == 3);
      o.require(listed, t.name() + " unexpectedly Euclidean");
    }
  }
  o.require(euclidean == 3, "expected exactly three Euclidean triples");
  o.detail = o.ok ? std::to_string(census_triples().size()) + " triples classified by sign" : o.detail;
  return o;
}

Outcome order_bounds() {
  Outcome o;
  struct Case {
    Triple t;
    std::size_t order;
    long bound;
  };
  std::vector<Case> cases;
  for (std::uint64_t n = 2; n <= 6; ++n) cases.push_back({{2, 2, n}, 2 * n, static_cast<long>(n)});
  cases.push_back({{2, 3, 3}, 12, 6});
  cases.push_back({{2, 3, 4}, 24, 12});
  cases.push_back({{2, 3, 5}, 60, 30});
  for (const auto& c : cases) {
    const auto tp = catalog::triangle_presentation(c.t.p, c.t.q, c.t.r);
    auto result = enumerate(tp, kLimit);
    if (!std::holds_alternative<CosetTable>(result)) {
      o.require(false, c.t.name() + " did not complete");
      continue;
    }
    const auto& table = std::get<CosetTable>(result);
    o.require(table.order() == c.order, c.t.name() + " order " + std::to_string(table.order()));
    const auto statuses = verify_torsion_hypothesis(tp, table);
    for (const auto& [name, s] : statuses)
      o.require(s == HypothesisStatus::Verified, c.t.name() + " " + name + " " + to_string(s));
    const auto v = evaluate_torsion_presentation(tp, statuses);
    o.require(v.order_lower_bound && *v.order_lower_bound == Rat(c.bound), c.t.name() + " bound mismatch");
    o.require(v.order_lower_bound && Rat(static_cast<long>(table.order())) >= *v.order_lower_bound,
              c.t.name() + " order below bound");
  }
  std::ostringstream out, err;
  const char* argv[] = {"l2tree", "census", "--builtin", "--enumerate", "--limit", "10000"};
  const int code = run_cli(6, argv, out, err);
  o.require(code == 0, "census exit code " + std::to_string(code));
  const char* hurwitz[] = {"l2tree", "analyze-presentation", "< x, y | x^2, y^3, (x*y)^7 >", "--enumerate",
                           "--limit", "10000"};
  o.require(run_cli(6, hurwitz, out, err) == 0, "Hurwitz analysis exit code");
  if (o.ok) o.detail = "orders 2n, 12, 24, 60 with bounds n, 6, 12, 30; census exit 0";
  return o;
}

GraphOfGroups rose(std::size_t loops, GroupDescriptor vertex) {
  GraphOfGroups g{{{"v", std::move(vertex)}}, {}};
  for (std::size_t i = 0; i < loops; ++i) g.edges.push_back({"t" + std::to_string(i), "v", "v", catalog::trivial_group()});
  return g;
}

Outcome b1_spot_values() {
  Outcome o;
  GraphOfGroups modular{{{"a", catalog::cyclic_group(2)}, {"b", catalog::cyclic_group(3)}},
                        {{"e", "a", "b", catalog::trivial_group()}}};
  o.require(b1_l2_fundamental(modular).value == q(1, 6), "modular group");
  for (std::size_t n = 1; n <= 10; ++n)
    o.require(b1_l2_fundamental(rose(n, catalog::trivial_group())).value == Rat(static_cast<long>(n) - 1),
              "rose with " + std::to_string(n) + " loops");
  for (std::uint64_t k = 1; k <= 12; ++k)
    o.require(b1_l2_fundamental(rose(0, catalog::cyclic_group(k))).value == Rat(0),
              "single vertex C" + std::to_string(k));
  if (o.ok) o.detail = "1/6; n - 1 for n = 1..10; 0 for finite vertices";
  return o;
}

Outcome chi_additivity() {
  Outcome o;
  std::mt19937 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    const auto g = testing::random_finite_graph(rng, 6, 8, 12);
    std::vector<OrbitCell> cells;
    for (const auto& v : g.vertices) cells.push_back({0, v.group.order});
    for (const auto& e : g.edges) cells.push_back({1, e.group.order});
    o.require(chi_l2_fundamental(g) == euler_char_from_orbit_cells(cells), "graph " + std::to_string(i));
  }
  if (o.ok) o.detail = "200 random graphs";
  return o;
}

Outcome deduction_consistency() {
  Outcome o;
  std::mt19937 rng(1988);
  for (int i = 0; i < 500; ++i) {
    const auto tp = testing::random_presentation(rng, 6, 6, 12);
    Rat direct = Rat(1) - Rat(static_cast<long>(tp.rank()));
    for (const auto& r : tp.relators) direct += Rat(mpz_class(1), mpz_class(static_cast<unsigned long>(r.exponent)));
    const auto form = to_free_product_form(tp);
    const auto via_graph = chi_l2_fundamental(form.graph) + Rat(static_cast<long>(form.normal_generators));
    o.require(direct == via_graph, "presentation " + to_string(tp));
  }
  if (o.ok) o.detail = "500 random presentations";
  return o;
}

Outcome hurwitz() {
  Outcome o;
  const auto v = evaluate_torsion_presentation(catalog::triangle_presentation(2, 3, 7));
  o.require(v.b1_lower_bound == q(1, 42), "b1 bound " + v.b1_lower_bound.str());
  const auto notes = corollary_notes(v);
  o.require(notes.size() == 5, "corollary count " + std::to_string(notes.size()));
  for (const auto& n : notes)
    o.require(std::find(v.notes.begin(), v.notes.end(), n) != v.notes.end(), "missing note: " + n);
  if (o.ok) o.detail = "b1 >= 1/42 with five annotations";
  return o;
}

Outcome oracle_consistency() {
  Outcome o;
  std::size_t tables = 0;
  for (const auto& t : census_triples()) {
    const auto tp = catalog::triangle_presentation(t.p, t.q, t.r);
    auto result = enumerate(tp, kLimit);
    if (!std::holds_alternative<CosetTable>(result)) continue;
    ++tables;
    for (const auto& d : testing::table_defects(std::get<CosetTable>(result), tp)) o.require(false, t.name() + ": " + d);
  }
  o.require(tables == 8, "expected 8 completed census tables, got " + std::to_string(tables));
  if (o.ok) o.detail = std::to_string(tables) + " tables: permutations, inverses, relators trivial";
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 triangle-group census classification", triangle_census},
      {"2 order bounds verified by coset enumeration", order_bounds},
      {"3 b1 spot values", b1_spot_values},
      {"4 chi additivity vs orbit cells", chi_additivity},
      {"5 deduction consistency", deduction_consistency},
      {"6 Hurwitz bound and annotations", hurwitz},
      {"7 oracle self-consistency", oracle_consistency},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << "\n";
  }
  std::cout << (all ? "PASS " : "FAIL ") << "8 formula, census and oracle suites together: "
            << (all ? "criteria 1-7 hold" : "see failures above") << "\n";
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "runtime " << secs << " s\n";
  return all ? 0 : 1;
}
