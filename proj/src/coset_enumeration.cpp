#include "l2tree/coset_enumeration.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace l2tree {

CosetTable::CosetTable(std::vector<std::string> generators, std::vector<std::uint32_t> entries)
    : generators_(std::move(generators)), entries_(std::move(entries)) {
  const auto cols = columns();
  if (cols == 0) {
    if (!entries_.empty()) throw std::invalid_argument("coset table: entries without generators");
    order_ = 1;
    return;
  }
  if (entries_.empty() || entries_.size() % cols != 0) throw std::invalid_argument("coset table: ragged entries");
  order_ = entries_.size() / cols;
  for (auto e : entries_)
    if (e >= order_) throw std::invalid_argument("coset table: undefined or out-of-range entry");
}

std::uint32_t CosetTable::trace(std::uint32_t coset, std::span<const Letter> w) const {
  for (const auto& l : w) coset = image(coset, l);
  return coset;
}

namespace {

constexpr std::int32_t kUndefined = -1;

struct LimitReached {};

class FelschEnumerator {
 public:
  FelschEnumerator(const TorsionPresentation& tp, std::size_t limit)
      : cols_(2 * tp.generators.size()), limit_(limit), by_first_(cols_) {
    std::set<std::vector<std::size_t>> seen;
    auto add_conjugates = [&](const Word& w) {
      for (std::size_t s = 0; s < w.size(); ++s) {
        std::vector<std::size_t> c;
        c.reserve(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) c.push_back(w[(s + i) % w.size()].column());
        if (seen.insert(c).second) by_first_[c.front()].push_back(std::move(c));
      }
    };
    for (const auto& r : tp.relators) {
      const auto full = power(r.root, r.exponent);
      add_conjugates(full);
      add_conjugates(inverse(full));
    }
  }

  bool run() {
    try {
      new_coset();
      for (std::size_t a = 0; a < parent_.size(); ++a) {
        for (std::size_t x = 0; x < cols_ && live(a); ++x) {
          if (at(a, x) != kUndefined) continue;
          define(static_cast<std::int32_t>(a), x);
          process_deductions();
        }
      }
    } catch (const LimitReached&) {
      return false;
    }
    return true;
  }

  /// Renumbers live cosets in order of first appearance, scanning rows in
  /// order and columns left to right from coset 0.
  std::vector<std::uint32_t> standardized() const {
    std::vector<std::int32_t> renumber(parent_.size(), kUndefined);
    std::vector<std::int32_t> order{0};
    renumber[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t x = 0; x < cols_; ++x) {
        const auto b = at(static_cast<std::size_t>(order[i]), x);
        if (renumber[static_cast<std::size_t>(b)] == kUndefined) {
          renumber[static_cast<std::size_t>(b)] = static_cast<std::int32_t>(order.size());
          order.push_back(b);
        }
      }
    std::vector<std::uint32_t> out;
    out.reserve(order.size() * cols_);
    for (auto c : order)
      for (std::size_t x = 0; x < cols_; ++x)
        out.push_back(static_cast<std::uint32_t>(renumber[static_cast<std::size_t>(at(static_cast<std::size_t>(c), x))]));
    return out;
  }

 private:
  std::int32_t& at(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }
  std::int32_t at(std::size_t c, std::size_t x) const { return table_[c * cols_ + x]; }
  static std::size_t inv(std::size_t x) { return x ^ 1u; }
  bool live(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  std::int32_t new_coset() {
    if (parent_.size() >= limit_) throw LimitReached{};
    const auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kUndefined);
    return c;
  }

  void define(std::int32_t a, std::size_t x) {
    const auto b = new_coset();
    at(static_cast<std::size_t>(a), x) = b;
    at(static_cast<std::size_t>(b), inv(x)) = a;
    deductions_.emplace_back(a, x);
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [a, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(static_cast<std::size_t>(a))) continue;
      for (const auto& w : by_first_[x]) {
        scan(a, w);
        if (!live(static_cast<std::size_t>(a))) break;
      }
      if (!live(static_cast<std::size_t>(a))) continue;
      const auto b = at(static_cast<std::size_t>(a), x);
      if (b == kUndefined) continue;
      for (const auto& w : by_first_[inv(x)]) {
        if (!live(static_cast<std::size_t>(b))) break;
        scan(b, w);
      }
    }
  }

  // Traces w from a in both directions; fills a single gap or records a
  // coincidence.
  void scan(std::int32_t a, const std::vector<std::size_t>& w) {
    std::int32_t f = a, b = a;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (i <= j && at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]) != kUndefined)
      f = at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i++)]);
    if (i > j) {
      if (f != a) coincidence(f, a);
      return;
    }
    while (j >= i && at(static_cast<std::size_t>(b), inv(w[static_cast<std::size_t>(j)])) != kUndefined)
      b = at(static_cast<std::size_t>(b), inv(w[static_cast<std::size_t>(j--)]));
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      const auto x = w[static_cast<std::size_t>(i)];
      at(static_cast<std::size_t>(f), x) = b;
      at(static_cast<std::size_t>(b), inv(x)) = f;
      deductions_.emplace_back(f, x);
    }
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const auto next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t k, std::int32_t l) {
    const auto p = rep(k), q = rep(l);
    if (p == q) return;
    const auto lo = std::min(p, q), hi = std::max(p, q);
    parent_[static_cast<std::size_t>(hi)] = lo;
    dead_queue_.push_back(hi);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    dead_queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < dead_queue_.size(); ++i) {
      const auto g = static_cast<std::size_t>(dead_queue_[i]);
      for (std::size_t x = 0; x < cols_; ++x) {
        const auto d = at(g, x);
        if (d == kUndefined) continue;
        at(static_cast<std::size_t>(d), inv(x)) = kUndefined;
        const auto mu = rep(static_cast<std::int32_t>(g));
        const auto nu = rep(d);
        if (at(static_cast<std::size_t>(mu), x) != kUndefined) {
          merge(nu, at(static_cast<std::size_t>(mu), x));
        } else if (at(static_cast<std::size_t>(nu), inv(x)) != kUndefined) {
          merge(mu, at(static_cast<std::size_t>(nu), inv(x)));
        } else {
          at(static_cast<std::size_t>(mu), x) = nu;
          at(static_cast<std::size_t>(nu), inv(x)) = mu;
          deductions_.emplace_back(mu, x);
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t limit_;
  std::vector<std::vector<std::vector<std::size_t>>> by_first_;  // cyclic conjugates by first column
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::pair<std::int32_t, std::size_t>> deductions_;
  std::vector<std::int32_t> dead_queue_;
};

}  // namespace

std::variant<CosetTable, LimitExceeded> enumerate(const TorsionPresentation& tp, std::size_t limit) {
  if (limit == 0) throw std::invalid_argument("coset limit must be positive");
  check_normal_form(tp);
  if (tp.generators.empty()) return CosetTable({}, {});
  FelschEnumerator e(tp, limit);
  if (!e.run()) return LimitExceeded{limit};
  return CosetTable(tp.generators, e.standardized());
}

std::uint64_t element_order(const CosetTable& t, std::span<const Letter> w) {
  for (const auto& l : w)
    if (l.generator >= t.generators().size()) throw std::invalid_argument("word uses a generator not in the table");
  const auto n = t.order();
  std::vector<std::uint32_t> perm(n);
  for (std::size_t c = 0; c < n; ++c) perm[c] = t.trace(static_cast<std::uint32_t>(c), w);
  std::vector<bool> seen(n, false);
  std::uint64_t order = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (seen[c]) continue;
    std::uint64_t len = 0;
    for (auto x = c; !seen[x]; x = perm[x]) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::map<std::string, HypothesisStatus> verify_torsion_hypothesis(const TorsionPresentation& tp, const CosetTable& t) {
  if (t.generators() != tp.generators) throw std::invalid_argument("coset table does not belong to this presentation");
  std::map<std::string, HypothesisStatus> out;
  for (std::size_t i = 0; i < tp.relators.size(); ++i) {
    const auto& r = tp.relators[i];
    out[hypothesis::relator_order(i + 1, r.exponent)] =
        element_order(t, r.root) == r.exponent ? HypothesisStatus::Verified : HypothesisStatus::Violated;
  }
  return out;
}

}  // namespace l2tree
