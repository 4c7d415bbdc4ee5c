#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "l2tree/presentation.hpp"
#include "l2tree/rational.hpp"

namespace l2tree {

enum class Classification { Infinite, InfiniteNonAmenable, FiniteOrderBound, Inconclusive };

/// Undetermined is used when the data can neither confirm nor refute a
/// hypothesis and the caller did not choose to assert it.
enum class HypothesisStatus { Verified, Asserted, Violated, Undetermined };

std::string to_string(Classification c);
std::string to_string(HypothesisStatus s);

namespace hypothesis {
inline constexpr const char* kStabilizersInClassC = "stabilizers-in-class-C";
inline constexpr const char* kNormalSubgroupMeetsStabilizersTrivially = "N-meets-stabilizers-trivially";
inline constexpr const char* kActionCocompact = "action-cocompact";
/// "r<i>-has-order-<k>" for the i-th relator (1-based).
std::string relator_order(std::size_t index, std::uint64_t exponent);
}  // namespace hypothesis

/// Quantities specific to the torsion-presentation route.
struct PresentationEngine {
  std::size_t n = 0;
  std::size_t m = 0;
  Rat sum_reciprocal_k;
  Rat n_minus_sum;  // n - sum 1/k_i
};

struct Verdict {
  Rat k;
  Classification classification = Classification::Inconclusive;
  Rat b1_lower_bound;
  std::optional<Rat> order_lower_bound;
  std::map<std::string, HypothesisStatus> hypotheses;
  std::vector<std::string> notes;
  std::vector<std::string> assumptions;
  std::optional<PresentationEngine> engine;
};

/// Conclusions about G = F/N from k = chi(F) + m:
///   k <= 0: G is infinite; k < 0: b1(G) >= -k > 0; G finite: |G| >= 1/k.
/// Missing entries among the three structural hypotheses are filled in as
/// asserted. A violated or undetermined hypothesis makes the verdict
/// Inconclusive (k is still reported).
Verdict evaluate_quotient(const Rat& chi_f, std::size_t m,
                          std::map<std::string, HypothesisStatus> hypotheses = {});

/// Applies the quotient criteria to <x_1..x_n | r_1^k_1..r_m^k_m> through its
/// free-product form, checking k = 1 - n + sum 1/k_i against chi(F) + m.
/// `relator_statuses` overrides the default "asserted" status of each
/// relator-order hypothesis (e.g. from the coset-enumeration oracle).
Verdict evaluate_torsion_presentation(const TorsionPresentation& tp,
                                      const std::map<std::string, HypothesisStatus>& relator_statuses = {});

/// Consequences of a positive lower bound on b1(G), stated with their
/// preconditions. Empty when b1_lower_bound is zero.
std::vector<std::string> corollary_notes(const Verdict& v);

}  // namespace l2tree
