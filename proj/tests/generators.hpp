#pragma once

// Random inputs shared by the unit and acceptance suites.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "l2tree/catalog.hpp"
#include "l2tree/graph_of_groups.hpp"
#include "l2tree/presentation.hpp"

namespace l2tree::testing {

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline GroupDescriptor finite_group(const std::string& name, std::uint64_t n) {
  auto d = catalog::cyclic_group(n);
  d.name = name;
  return d;
}

/// Connected graph of groups with finite vertex and edge groups satisfying
/// the divisibility condition; loops and parallel edges may occur.
inline GraphOfGroups random_finite_graph(std::mt19937& rng, std::size_t max_vertices, std::size_t max_edges,
                                         std::uint64_t max_order) {
  const std::size_t nv = 1 + rng() % max_vertices;
  const std::size_t min_edges = nv - 1;
  const std::size_t ne = min_edges + rng() % (std::max(max_edges, min_edges) - min_edges + 1);
  GraphOfGroups g;
  for (std::size_t i = 0; i < nv; ++i) {
    const auto n = 1 + rng() % max_order;
    g.vertices.push_back({"v" + std::to_string(i), finite_group("V" + std::to_string(i), n)});
  }
  auto add_edge = [&](std::size_t a, std::size_t b) {
    const auto ga = g.vertices[a].group.order.value(), gb = g.vertices[b].group.order.value();
    const auto ds = divisors(std::gcd(ga, gb));
    const auto k = ds[rng() % ds.size()];
    const auto id = "e" + std::to_string(g.edges.size());
    g.edges.push_back({id, g.vertices[a].id, g.vertices[b].id, finite_group("E" + id, k)});
  };
  for (std::size_t i = 1; i < nv; ++i) add_edge(rng() % i, i);
  while (g.edges.size() < ne) add_edge(rng() % nv, rng() % nv);
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  return g;
}

/// Presentation with n generators and m relators with exponents in [1, max_k];
/// roots are random nonempty words normalized to primitive form.
inline TorsionPresentation random_presentation(std::mt19937& rng, std::size_t max_n, std::size_t max_m,
                                               std::uint64_t max_k) {
  const std::size_t n = 1 + rng() % max_n;
  const std::size_t m = rng() % (max_m + 1);
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back("x" + std::to_string(i + 1));
  std::vector<std::pair<Word, std::uint64_t>> rels;
  while (rels.size() < m) {
    Word w;
    // A single letter is always primitive and cyclically reduced, so the
    // exponent survives normalization unchanged.
    w.push_back({static_cast<std::uint32_t>(rng() % n), static_cast<bool>(rng() % 2)});
    if (rng() % 2) {
      const std::size_t extra = rng() % 4;
      for (std::size_t i = 0; i < extra; ++i) {
        Letter l{static_cast<std::uint32_t>(rng() % n), static_cast<bool>(rng() % 2)};
        if (l == w.back().inverted()) continue;
        w.push_back(l);
      }
      if (w.size() > 1 && w.front() == w.back().inverted()) w.pop_back();
      if (power_root(w).exponent != 1) continue;
    }
    rels.emplace_back(w, 1 + rng() % max_k);
  }
  return TorsionPresentation::from_words(gens, rels);
}

}  // namespace l2tree::testing
