#include "l2tree/catalog.hpp"

#include <stdexcept>

namespace l2tree::catalog {

GroupDescriptor trivial_group() { return cyclic_group(1); }

GroupDescriptor cyclic_group(std::uint64_t n) {
  GroupDescriptor d;
  d.name = n == 1 ? "trivial" : "C" + std::to_string(n);
  d.order = GroupOrder::finite(n);
  d.b1 = Rat(0);
  d.b2 = Rat(0);
  d.chi = reciprocal_order(d.order);
  return d;
}

GroupDescriptor infinite_cyclic() {
  GroupDescriptor d;
  d.name = "Z";
  d.order = GroupOrder::infinite();
  d.b1 = Rat(0);
  d.b2 = Rat(0);
  d.chi = Rat(0);
  d.two_dim_model = true;
  return d;
}

GroupDescriptor free_group(std::uint64_t n) {
  if (n == 0) return trivial_group();
  GroupDescriptor d;
  d.name = "F" + std::to_string(n);
  d.order = GroupOrder::infinite();
  d.b1 = Rat(static_cast<long>(n) - 1);
  d.b2 = Rat(0);
  d.chi = Rat(1 - static_cast<long>(n));
  d.two_dim_model = true;
  return d;
}

GroupDescriptor surface_group(std::uint64_t genus) {
  if (genus == 0) throw std::invalid_argument("surface_group: genus must be positive");
  GroupDescriptor d;
  d.name = "S" + std::to_string(genus);
  d.order = GroupOrder::infinite();
  d.b1 = Rat(2 * static_cast<long>(genus) - 2);
  d.b2 = Rat(0);
  d.chi = Rat(2 - 2 * static_cast<long>(genus));
  d.two_dim_model = true;
  return d;
}

std::optional<GroupDescriptor> lookup(const std::string& name) {
  if (name == "trivial") return trivial_group();
  if (name == "Z") return infinite_cyclic();
  if (name.size() < 2) return std::nullopt;
  const auto digits = name.substr(1);
  if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
    return std::nullopt;
  const auto n = std::stoull(digits);
  if (n == 0) return std::nullopt;
  switch (name.front()) {
    case 'C': return cyclic_group(n);
    case 'F': return free_group(n);
    case 'S': return surface_group(n);
    default: return std::nullopt;
  }
}

TorsionPresentation triangle_presentation(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  const Letter x{0, false};
  const Letter y{1, false};
  return TorsionPresentation::from_words({"x", "y"}, {{{x}, p}, {{y}, q}, {{x, y}, r}});
}

std::vector<CensusEntry> triangle_census() {
  std::vector<CensusEntry> out;
  for (int p = 2; p <= 6; ++p)
    for (int q = p; q <= 6; ++q)
      for (int r = q; r <= 6; ++r) {
        const auto ps = std::to_string(p), qs = std::to_string(q), rs = std::to_string(r);
        out.push_back({"triangle(" + ps + "," + qs + "," + rs + ")",
                       "< x, y | x^" + ps + ", y^" + qs + ", (x*y)^" + rs + " >"});
      }
  return out;
}

}  // namespace l2tree::catalog
