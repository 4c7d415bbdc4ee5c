#include "l2tree/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "l2tree/catalog.hpp"
#include "l2tree/errors.hpp"

namespace l2tree {

Word inverse(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

Word power(std::span<const Letter> w, std::uint64_t exponent) {
  Word out;
  out.reserve(w.size() * exponent);
  for (std::uint64_t i = 0; i < exponent; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word free_reduce(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back() == l.inverted())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(std::span<const Letter> w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

PowerRoot power_root(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = w[i] == w[i - period];
    if (periodic) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(period)), n / period};
  }
  return {Word(w.begin(), w.end()), 1};
}

namespace {

Relator normalize(std::span<const Letter> w, std::uint64_t exponent) {
  auto reduced = cyclic_reduce(free_reduce(w));
  if (reduced.empty()) throw std::invalid_argument("relator reduces to the identity");
  auto pr = power_root(reduced);
  return {std::move(pr.root), pr.exponent * exponent};
}

}  // namespace

TorsionPresentation TorsionPresentation::from_words(
    std::vector<std::string> generators, const std::vector<std::pair<Word, std::uint64_t>>& relators) {
  TorsionPresentation tp;
  tp.generators = std::move(generators);
  for (const auto& [w, e] : relators) {
    if (e == 0) throw std::invalid_argument("relator exponent must be positive");
    for (const auto& l : w)
      if (l.generator >= tp.generators.size()) throw std::invalid_argument("relator uses an unknown generator");
    tp.relators.push_back(normalize(w, e));
  }
  return tp;
}

void check_normal_form(const TorsionPresentation& tp) {
  for (std::size_t i = 0; i < tp.relators.size(); ++i) {
    const auto& r = tp.relators[i];
    const auto label = "relator " + std::to_string(i + 1) + ": ";
    if (r.exponent == 0) throw std::invalid_argument(label + "zero exponent");
    if (r.root.empty()) throw std::invalid_argument(label + "empty root");
    for (const auto& l : r.root)
      if (l.generator >= tp.generators.size()) throw std::invalid_argument(label + "unknown generator");
    if (cyclic_reduce(free_reduce(r.root)) != r.root)
      throw std::invalid_argument(label + "root is not cyclically reduced");
    if (power_root(r.root).exponent != 1) throw std::invalid_argument(label + "root is a proper power");
  }
}

namespace {

// Recursive-descent parser over the presentation grammar. Parenthesised
// groups may carry an exponent anywhere a factor may.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedPresentation run() {
    ParsedPresentation out;
    expect('<');
    do {
      skip_ws();
      const auto [line, col] = location();
      auto name = identifier();
      if (index_.contains(name)) throw ParseError("duplicate generator '" + name + "'", line, col);
      index_.emplace(name, static_cast<std::uint32_t>(gens_.size()));
      gens_.push_back(std::move(name));
    } while (accept(','));
    expect('|');
    out.presentation.generators = gens_;

    skip_ws();
    if (peek() != '>') {
      do {
        skip_ws();
        const auto [line, col] = location();
        const auto start = pos_;
        Word w = factor();
        std::uint64_t e = 1;
        if (accept('^')) e = positive_integer();
        const auto source = std::string(text_.substr(start, pos_ - start));
        Relator r;
        try {
          r = normalize(w, e);
        } catch (const std::invalid_argument&) {
          throw ParseError("relator '" + source + "' reduces to the identity", line, col);
        }
        const auto written = to_string(r, gens_);
        std::string compact;
        for (char c : source)
          if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
        if (compact != written)
          out.normalization_log.push_back("relator " + std::to_string(out.presentation.relators.size() + 1) +
                                          " '" + compact + "' normalized to " + written);
        out.presentation.relators.push_back(std::move(r));
      } while (accept(','));
    }
    expect('>');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after '>'");
    return out;
  }

 private:
  static constexpr std::size_t kMaxWordLength = 1u << 22;

  Word factor() {
    skip_ws();
    Word base;
    if (accept('(')) {
      base = word();
      expect(')');
    } else {
      const auto [line, col] = location();
      const auto name = identifier();
      const auto it = index_.find(name);
      if (it == index_.end()) throw ParseError("unknown generator '" + name + "'", line, col);
      base.push_back({it->second, false});
    }
    skip_ws();
    // A '^' directly after a name or group binds here; a second '^' is the
    // relator-level exponent.
    if (peek() == '^') {
      ++pos_;
      const bool negative = accept('-');
      const auto k = positive_integer();
      if (base.size() * k > kMaxWordLength) fail("expanded word too long");
      base = power(negative ? inverse(base) : base, k);
    }
    return base;
  }

  Word word() {
    Word w = factor();
    while (accept('*')) {
      auto f = factor();
      w.insert(w.end(), f.begin(), f.end());
      if (w.size() > kMaxWordLength) fail("expanded word too long");
    }
    return w;
  }

  std::string identifier() {
    skip_ws();
    const auto c = peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected a generator name");
    const auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t positive_integer() {
    skip_ws();
    const auto [line, col] = location();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 1'000'000'000) throw ParseError("exponent too large", line, col);
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (v == 0) throw ParseError("zero exponent", line, col);
    return v;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::pair<std::size_t, std::size_t> location() const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& what) {
    const auto [line, col] = location();
    throw ParseError(pos_ < text_.size() ? what + ", found '" + text_[pos_] + "'" : what + ", found end of input",
                     line, col);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> gens_;
  std::map<std::string, std::uint32_t> index_;
};

}  // namespace

ParsedPresentation parse_presentation_logged(std::string_view text) { return Parser(text).run(); }

TorsionPresentation parse_presentation(std::string_view text) { return Parser(text).run().presentation; }

std::string to_string(std::span<const Letter> w, std::span<const std::string> generators) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += generators[w[i].generator];
    if (w[i].inverse) out += "^-1";
  }
  return out;
}

std::string to_string(const Relator& r, std::span<const std::string> generators) {
  const bool bare = r.root.size() == 1 && !r.root.front().inverse;
  std::string out = bare ? generators[r.root.front().generator] : "(" + to_string(r.root, generators) + ")";
  if (r.exponent != 1) out += "^" + std::to_string(r.exponent);
  return out;
}

std::string to_string(const TorsionPresentation& tp) {
  std::string out = "< ";
  for (std::size_t i = 0; i < tp.generators.size(); ++i) {
    if (i) out += ", ";
    out += tp.generators[i];
  }
  out += " |";
  for (std::size_t i = 0; i < tp.relators.size(); ++i) {
    out += i ? ", " : " ";
    out += to_string(tp.relators[i], tp.generators);
  }
  out += " >";
  return out;
}

FreeProductForm to_free_product_form(const TorsionPresentation& tp) {
  check_normal_form(tp);
  FreeProductForm f;
  const auto n = tp.generators.size();
  const auto m = tp.relators.size();
  f.normal_generators = m;

  auto& g = f.graph;
  g.vertices.push_back({"base", catalog::trivial_group()});
  for (std::size_t i = 0; i < n; ++i)
    g.edges.push_back({tp.generators[i], "base", "base", catalog::trivial_group()});
  Rat sum_reciprocal;
  for (std::size_t i = 0; i < m; ++i) {
    const auto k = tp.relators[i].exponent;
    const auto id = "y" + std::to_string(i + 1);
    g.vertices.push_back({id, catalog::cyclic_group(k)});
    g.edges.push_back({"base-" + id, "base", id, catalog::trivial_group()});
    sum_reciprocal += reciprocal_order(GroupOrder::finite(k));
  }
  f.chi = sum_reciprocal - Rat(static_cast<long>(n)) - Rat(static_cast<long>(m)) + Rat(1);

  const auto via_graph = chi_l2_fundamental(g);
  if (via_graph != f.chi)
    throw InternalInconsistencyError("free-product Euler characteristic " + f.chi.str() +
                                     " disagrees with the graph-of-groups value " + via_graph.str());
  return f;
}

}  // namespace l2tree
