#include "l2tree/graph_of_groups.hpp"

#include <map>
#include <numeric>
#include <set>

#include "l2tree/errors.hpp"

namespace l2tree {

const Vertex* GraphOfGroups::find_vertex(const std::string& id) const {
  for (const auto& v : vertices)
    if (v.id == id) return &v;
  return nullptr;
}

std::vector<std::string> validate(const GraphOfGroups& g) {
  std::vector<std::string> out;
  if (g.vertices.empty()) {
    out.push_back("graph has no vertices");
    return out;
  }

  std::map<std::string, std::size_t> index;
  for (const auto& v : g.vertices) {
    if (!index.emplace(v.id, index.size()).second)
      out.push_back("vertex '" + v.id + "': duplicate id");
    for (auto& m : descriptor_violations(v.group)) out.push_back("vertex '" + v.id + "': " + m);
  }

  std::set<std::string> edge_ids;
  std::vector<std::size_t> parent(index.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (const auto& e : g.edges) {
    const auto label = "edge '" + e.id + "': ";
    if (!edge_ids.insert(e.id).second) out.push_back(label + "duplicate id");
    for (auto& m : descriptor_violations(e.group)) out.push_back(label + m);
    const auto s = index.find(e.source);
    const auto t = index.find(e.target);
    if (s == index.end() || t == index.end()) {
      out.push_back(label + "unknown endpoint");
      continue;
    }
    parent[find(s->second)] = find(t->second);
    for (const auto* end : {&e.source, &e.target}) {
      const auto& vo = g.find_vertex(*end)->group.order;
      if (!vo.is_finite()) continue;
      if (!e.group.order.is_finite()) {
        out.push_back(label + "infinite edge group at finite vertex '" + *end + "'");
        break;
      }
      if (vo.value() % e.group.order.value() != 0) {
        out.push_back(label + "Lagrange violation: order " + e.group.order.str() +
                      " does not divide order " + vo.str() + " of vertex '" + *end + "'");
        break;
      }
    }
  }

  const auto root = find(0);
  for (const auto& v : g.vertices) {
    if (find(index.at(v.id)) != root) {
      out.push_back("vertex '" + v.id + "': connectivity violation, not reachable from '" +
                    g.vertices.front().id + "'");
      break;
    }
  }
  return out;
}

void require_valid(const GraphOfGroups& g) {
  const auto violations = validate(g);
  if (violations.empty()) return;
  std::string msg = "invalid graph of groups:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw InvalidInputError(msg);
}

Rat chi_l2_fundamental(const GraphOfGroups& g) {
  require_valid(g);
  Rat chi;
  for (const auto& v : g.vertices) chi += chi_l2(v.group);
  for (const auto& e : g.edges) chi -= chi_l2(e.group);
  return chi;
}

namespace {

// a < b with infinity as the top element.
bool order_less(const GroupOrder& a, const GroupOrder& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.value() < b.value();
}

}  // namespace

FundamentalOrder fundamental_group_order(const GraphOfGroups& g) {
  require_valid(g);

  struct Node {
    std::string id;
    GroupOrder order;
  };
  struct Link {
    std::string id;
    std::size_t a, b;
    GroupOrder order;
  };
  std::vector<Node> nodes;
  std::map<std::string, std::size_t> index;
  for (const auto& v : g.vertices) {
    index[v.id] = nodes.size();
    nodes.push_back({v.id, v.group.order});
  }
  std::vector<Link> links;
  for (const auto& e : g.edges) links.push_back({e.id, index[e.source], index[e.target], e.group.order});

  auto infinite = [](std::string why) {
    return FundamentalOrder{Finiteness::Infinite, std::nullopt, std::move(why)};
  };

  // Contraction preserves the fundamental group, so the infinite triggers are
  // re-checked on every intermediate graph.
  for (;;) {
    for (const auto& n : nodes)
      if (n.order.is_infinite()) return infinite("vertex '" + n.id + "' has an infinite group");
    for (const auto& l : links) {
      if (l.a == l.b) return infinite("edge '" + l.id + "' is a loop (HNN extension)");
      if (order_less(l.order, nodes[l.a].order) && order_less(l.order, nodes[l.b].order))
        return infinite("edge '" + l.id + "' is proper in both endpoint groups (nontrivial amalgam)");
    }
    if (links.empty()) break;

    bool contracted = false;
    for (std::size_t i = 0; i < links.size() && !contracted; ++i) {
      const auto l = links[i];
      std::size_t keep;
      if (l.order == nodes[l.a].order)
        keep = l.b;
      else if (l.order == nodes[l.b].order)
        keep = l.a;
      else
        continue;
      const std::size_t gone = keep == l.a ? l.b : l.a;
      links.erase(links.begin() + static_cast<std::ptrdiff_t>(i));
      // Merge `gone` into `keep`.
      for (auto& other : links) {
        if (other.a == gone) other.a = keep;
        if (other.b == gone) other.b = keep;
      }
      nodes[gone].id.clear();
      contracted = true;
    }
    if (!contracted) break;
  }

  std::size_t alive = 0;
  std::optional<GroupOrder> order;
  for (const auto& n : nodes) {
    if (n.id.empty()) continue;
    ++alive;
    order = n.order;
  }
  if (alive == 1 && links.empty())
    return {Finiteness::Finite, order, "graph contracts to a single vertex of order " + order->str()};
  return {Finiteness::Unknown, std::nullopt, "finiteness not decidable from group orders"};
}

B1Result b1_l2_fundamental(const GraphOfGroups& g) {
  require_valid(g);
  for (const auto& e : g.edges) {
    const auto b1 = effective_b1(e.group);
    if (!b1)
      throw HypothesisError("edge '" + e.id + "': b1 of the edge group is unspecified; "
                            "the formula requires b1(F_e) = 0");
    if (!b1->is_zero())
      throw HypothesisError("edge '" + e.id + "': b1 of the edge group is " + b1->str() +
                            "; the formula requires b1(F_e) = 0");
  }
  Rat sum;
  for (const auto& v : g.vertices) {
    const auto b1 = effective_b1(v.group);
    if (!b1) throw InsufficientDataError("vertex '" + v.id + "': b1 of the vertex group is unspecified");
    sum += *b1 - reciprocal_order(v.group.order);
  }
  for (const auto& e : g.edges) sum += reciprocal_order(e.group.order);

  const auto fin = fundamental_group_order(g);
  if (fin.kind == Finiteness::Finite) return {Rat(0), {}};
  B1Result r{sum, {}};
  if (fin.kind == Finiteness::Unknown) r.assumptions.emplace_back(kAssumesInfinite);
  return r;
}

std::size_t stable_letter_rank(const GraphOfGroups& g) {
  require_valid(g);
  return g.edges.size() + 1 - g.vertices.size();
}

}  // namespace l2tree
