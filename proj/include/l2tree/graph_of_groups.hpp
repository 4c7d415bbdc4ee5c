#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "l2tree/descriptors.hpp"

namespace l2tree {

struct Vertex {
  std::string id;
  GroupDescriptor group;
};

/// Geometric (unoriented) edge; loops and parallel edges are allowed.
struct Edge {
  std::string id;
  std::string source;
  std::string target;
  GroupDescriptor group;

  bool is_loop() const { return source == target; }
};

/// Finite graph of groups carrying metadata only: the embeddings of edge
/// groups into vertex groups are not represented.
struct GraphOfGroups {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  const Vertex* find_vertex(const std::string& id) const;
};

/// Every broken invariant, each naming the offending vertex or edge.
std::vector<std::string> validate(const GraphOfGroups& g);

/// Throws InvalidInputError listing the violations when validate() is nonempty.
void require_valid(const GraphOfGroups& g);

/// Sum of vertex chi minus sum of edge chi.
/// Throws InsufficientDataError naming the first descriptor without chi.
Rat chi_l2_fundamental(const GraphOfGroups& g);

/// Finiteness of the fundamental group where metadata can decide it.
enum class Finiteness { Finite, Infinite, Unknown };

struct FundamentalOrder {
  Finiteness kind = Finiteness::Unknown;
  std::optional<GroupOrder> order;  // set iff kind == Finite
  std::string reason;
};

FundamentalOrder fundamental_group_order(const GraphOfGroups& g);

inline constexpr const char* kAssumesInfinite = "assumes-infinite";

struct B1Result {
  Rat value;
  std::vector<std::string> assumptions;
};

/// First l2-Betti number of the fundamental group: 0 when the group is known
/// to be finite, otherwise
///   sum_v (b1(F_v) - 1/|F_v|) + sum_e 1/|F_e|,
/// flagged "assumes-infinite" when finiteness is undecided.
/// Throws HypothesisError when some edge group has b1 != 0 or unknown, and
/// InsufficientDataError when a vertex b1 is unknown.
B1Result b1_l2_fundamental(const GraphOfGroups& g);

/// Rank of a free complement to the subgroup generated by vertex groups:
/// |E| - |V| + 1.
std::size_t stable_letter_rank(const GraphOfGroups& g);

}  // namespace l2tree
