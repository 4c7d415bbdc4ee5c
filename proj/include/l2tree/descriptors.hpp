#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "l2tree/rational.hpp"

namespace l2tree {

/// Metadata for a vertex or edge group. Unspecified invariants stay
/// unspecified; nothing defaults to zero.
struct GroupDescriptor {
  std::string name;
  GroupOrder order = GroupOrder::finite(1);
  std::optional<Rat> b1;
  std::optional<Rat> b2;
  std::optional<Rat> chi;
  /// Asserts that all l2-Betti numbers above degree 2 vanish, which licenses
  /// chi = b0 - b1 + b2.
  bool two_dim_model = false;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Checks the descriptor's internal consistency; empty when well-formed.
std::vector<std::string> descriptor_violations(const GroupDescriptor& d);

/// b1 of the group if known: the specified value, or 0 for finite groups.
std::optional<Rat> effective_b1(const GroupDescriptor& d);
std::optional<Rat> effective_b2(const GroupDescriptor& d);

enum class Truth { True, False, Undetermined };

struct ClassCResult {
  Truth status = Truth::Undetermined;
  std::string reason;
  std::vector<std::string> missing;  // fields that would resolve Undetermined
};

/// Membership in the class of groups with b1 = b2 = 0 and (chi = 0 or finite).
ClassCResult is_in_class_C(const GroupDescriptor& d);

/// The l2-Euler characteristic, read from `chi` or derived from the Betti
/// numbers. Finite groups always give 1/|G|.
/// Throws InsufficientDataError or ConflictError.
Rat chi_l2(const GroupDescriptor& d);

/// True when chi_l2 would succeed.
bool chi_l2_available(const GroupDescriptor& d);

struct OrbitCell {
  unsigned dimension = 0;
  GroupOrder stabilizer_order = GroupOrder::finite(1);
};

/// Alternating sum over orbit cells of 1/|stabilizer|. Requires a nonempty
/// list of finite stabilizers; throws std::invalid_argument otherwise.
Rat euler_char_from_orbit_cells(std::span<const OrbitCell> cells);

}  // namespace l2tree
