#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "l2tree/graph_of_groups.hpp"
#include "l2tree/rational.hpp"

namespace l2tree {

/// A generator or its inverse.
struct Letter {
  std::uint32_t generator = 0;
  bool inverse = false;

  Letter inverted() const { return {generator, !inverse}; }
  /// Column index in a coset table: 2*generator for x, 2*generator+1 for x^-1.
  std::size_t column() const { return 2 * std::size_t{generator} + (inverse ? 1 : 0); }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(std::span<const Letter> w);
Word power(std::span<const Letter> w, std::uint64_t exponent);

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(std::span<const Letter> w);

/// Strips inverse pairs from the two ends; the result is a conjugate of w.
/// Expects a freely reduced word.
Word cyclic_reduce(std::span<const Letter> w);

struct PowerRoot {
  Word root;
  std::uint64_t exponent = 1;
};

/// Shortest root with root^exponent == w letter for letter. Expects a
/// nonempty, freely and cyclically reduced word.
PowerRoot power_root(std::span<const Letter> w);

/// Relator root^exponent with a primitive, cyclically reduced root.
struct Relator {
  Word root;
  std::uint64_t exponent = 1;

  friend bool operator==(const Relator&, const Relator&) = default;
};

/// <x_1, ..., x_n | r_1^k_1, ..., r_m^k_m>.
struct TorsionPresentation {
  std::vector<std::string> generators;
  std::vector<Relator> relators;

  std::size_t rank() const { return generators.size(); }

  /// Normalizes each (word, exponent) pair to primitive root form.
  /// Throws std::invalid_argument if a word reduces to the identity.
  static TorsionPresentation from_words(std::vector<std::string> generators,
                                        const std::vector<std::pair<Word, std::uint64_t>>& relators);

  friend bool operator==(const TorsionPresentation&, const TorsionPresentation&) = default;
};

/// Throws std::invalid_argument when a relator breaks the normal form.
void check_normal_form(const TorsionPresentation& tp);

struct ParsedPresentation {
  TorsionPresentation presentation;
  /// One entry per relator whose written form differs from its normal form.
  std::vector<std::string> normalization_log;
};

/// Parses "< x, y | x^2, y^3, (x*y)^7 >". Throws ParseError with location.
ParsedPresentation parse_presentation_logged(std::string_view text);
TorsionPresentation parse_presentation(std::string_view text);

std::string to_string(std::span<const Letter> w, std::span<const std::string> generators);
std::string to_string(const Relator& r, std::span<const std::string> generators);
std::string to_string(const TorsionPresentation& tp);

/// The free product F_n * C_k1 * ... * C_km as a graph of groups, with its
/// Euler characteristic computed in closed form.
struct FreeProductForm {
  GraphOfGroups graph;
  std::size_t normal_generators = 0;  // m
  Rat chi;                            // sum 1/k_i - n - m + 1
};

/// Throws InternalInconsistencyError if the closed form disagrees with the
/// graph-of-groups Euler characteristic.
FreeProductForm to_free_product_form(const TorsionPresentation& tp);

}  // namespace l2tree
