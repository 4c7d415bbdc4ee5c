#include "l2tree/descriptors.hpp"

#include <stdexcept>

#include "l2tree/errors.hpp"

namespace l2tree {

namespace {

std::optional<Rat> betti_route(const GroupDescriptor& d) {
  if (d.order.is_finite()) return reciprocal_order(d.order);
  if (!d.two_dim_model || !d.b1 || !d.b2) return std::nullopt;
  return reciprocal_order(d.order) - *d.b1 + *d.b2;
}

}  // namespace

std::vector<std::string> descriptor_violations(const GroupDescriptor& d) {
  std::vector<std::string> out;
  const auto label = "group '" + d.name + "': ";
  if (d.b1 && d.b1->sign() < 0) out.push_back(label + "b1 is negative");
  if (d.b2 && d.b2->sign() < 0) out.push_back(label + "b2 is negative");
  if (d.order.is_finite()) {
    if (d.b1 && !d.b1->is_zero()) out.push_back(label + "finite group with nonzero b1");
    if (d.b2 && !d.b2->is_zero()) out.push_back(label + "finite group with nonzero b2");
    if (d.chi && *d.chi != reciprocal_order(d.order))
      out.push_back(label + "finite group of order " + d.order.str() + " must have chi = " +
                    reciprocal_order(d.order).str());
  } else if (d.two_dim_model && d.b1 && d.b2 && d.chi && *d.chi != -*d.b1 + *d.b2) {
    out.push_back(label + "chi differs from -b1 + b2 under the two-dimensional model");
  }
  return out;
}

std::optional<Rat> effective_b1(const GroupDescriptor& d) {
  if (d.b1) return d.b1;
  if (d.order.is_finite()) return Rat(0);
  return std::nullopt;
}

std::optional<Rat> effective_b2(const GroupDescriptor& d) {
  if (d.b2) return d.b2;
  if (d.order.is_finite()) return Rat(0);
  return std::nullopt;
}

bool chi_l2_available(const GroupDescriptor& d) { return d.chi || betti_route(d); }

Rat chi_l2(const GroupDescriptor& d) {
  const auto derived = betti_route(d);
  if (d.chi) {
    if (derived && *derived != *d.chi)
      throw ConflictError("group '" + d.name + "': chi " + d.chi->str() +
                          " disagrees with the Betti-number value " + derived->str());
    return *d.chi;
  }
  if (derived) return *derived;
  throw InsufficientDataError("group '" + d.name +
                              "': chi unspecified and not derivable (needs b1, b2 and "
                              "two_dim_model for an infinite group)");
}

ClassCResult is_in_class_C(const GroupDescriptor& d) {
  ClassCResult r;
  const auto b1 = effective_b1(d);
  const auto b2 = effective_b2(d);
  if (b1 && !b1->is_zero()) {
    r.status = Truth::False;
    r.reason = "b1 = " + b1->str() + " is nonzero";
    return r;
  }
  if (b2 && !b2->is_zero()) {
    r.status = Truth::False;
    r.reason = "b2 = " + b2->str() + " is nonzero";
    return r;
  }
  std::optional<Rat> chi;
  if (chi_l2_available(d)) {
    try {
      chi = chi_l2(d);
    } catch (const ConflictError& e) {
      r.status = Truth::False;
      r.reason = e.what();
      return r;
    }
  }
  if (d.order.is_infinite() && chi && !chi->is_zero()) {
    r.status = Truth::False;
    r.reason = "infinite group with chi = " + chi->str();
    return r;
  }
  if (!b1) r.missing.push_back("b1");
  if (!b2) r.missing.push_back("b2");
  if (d.order.is_infinite() && !chi) r.missing.push_back("chi");
  if (!r.missing.empty()) {
    r.status = Truth::Undetermined;
    r.reason = "unspecified:";
    for (const auto& m : r.missing) r.reason += " " + m;
    return r;
  }
  r.status = Truth::True;
  r.reason = d.order.is_finite() ? "finite group" : "b1 = b2 = 0 and chi = 0";
  return r;
}

Rat euler_char_from_orbit_cells(std::span<const OrbitCell> cells) {
  if (cells.empty()) throw std::invalid_argument("orbit-cell list is empty");
  Rat sum;
  for (const auto& c : cells) {
    if (c.stabilizer_order.is_infinite())
      throw std::invalid_argument("orbit cell with infinite stabilizer");
    const Rat term = reciprocal_order(c.stabilizer_order);
    if (c.dimension % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

}  // namespace l2tree
