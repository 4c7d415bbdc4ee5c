#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "l2tree/descriptors.hpp"
#include "l2tree/presentation.hpp"

// Built-in descriptors and presentations with known invariants.
namespace l2tree::catalog {

GroupDescriptor trivial_group();
GroupDescriptor cyclic_group(std::uint64_t n);
/// Z: all l2-Betti numbers vanish; the line is a one-dimensional model.
GroupDescriptor infinite_cyclic();
/// F_n, n >= 1: b1 = n - 1, chi = 1 - n.
GroupDescriptor free_group(std::uint64_t n);
/// Closed orientable surface group of genus g >= 1: b1 = 2g - 2, chi = 2 - 2g.
GroupDescriptor surface_group(std::uint64_t genus);

/// Looks up "trivial", "Z", "C<n>", "F<n>", "S<g>".
std::optional<GroupDescriptor> lookup(const std::string& name);

/// <x, y | x^p, y^q, (x*y)^r>.
TorsionPresentation triangle_presentation(std::uint64_t p, std::uint64_t q, std::uint64_t r);

struct CensusEntry {
  std::string name;
  std::string text;
};

/// Triangle groups with 2 <= p <= q <= r <= 6, in lexicographic order.
std::vector<CensusEntry> triangle_census();

}  // namespace l2tree::catalog
