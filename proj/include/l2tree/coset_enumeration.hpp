#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "l2tree/criteria.hpp"
#include "l2tree/presentation.hpp"

namespace l2tree {

/// Complete, standardized coset table of the trivial subgroup, i.e. the
/// right regular representation of a finite group. Cosets are 0-based here
/// and 1-based in the JSON export.
class CosetTable {
 public:
  /// `entries` is row-major with 2 * generators.size() columns per coset
  /// (x_0, x_0^-1, x_1, x_1^-1, ...). Throws std::invalid_argument if an
  /// entry is out of range or the shape is wrong.
  CosetTable(std::vector<std::string> generators, std::vector<std::uint32_t> entries);

  std::size_t order() const { return order_; }
  std::size_t columns() const { return 2 * generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }

  std::uint32_t image(std::uint32_t coset, Letter l) const { return entries_[coset * columns() + l.column()]; }
  std::uint32_t trace(std::uint32_t coset, std::span<const Letter> w) const;

 private:
  std::vector<std::string> generators_;
  std::vector<std::uint32_t> entries_;
  std::size_t order_ = 0;
};

struct LimitExceeded {
  std::size_t limit = 0;
};

inline constexpr std::size_t kDefaultCosetLimit = 1'000'000;

/// Felsch-style Todd-Coxeter enumeration over the trivial subgroup. Returns
/// LimitExceeded once more than `limit` cosets would be defined; that says
/// nothing about whether the group is finite.
std::variant<CosetTable, LimitExceeded> enumerate(const TorsionPresentation& tp,
                                                  std::size_t limit = kDefaultCosetLimit);

/// Order of the permutation w induces on the cosets, which is the order of
/// w in the group.
std::uint64_t element_order(const CosetTable& t, std::span<const Letter> w);

/// Verified when the root of relator i has order exactly k_i in the group,
/// violated when its order is a proper divisor. Keys follow
/// hypothesis::relator_order.
std::map<std::string, HypothesisStatus> verify_torsion_hypothesis(const TorsionPresentation& tp,
                                                                  const CosetTable& t);

}  // namespace l2tree
