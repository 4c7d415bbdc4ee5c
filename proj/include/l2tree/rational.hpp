#pragma once

// Exact rationals and group orders. Every invariant in the library is a Rat;
// nothing is ever computed in floating point.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace l2tree {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator, so structural and numerical equality coincide.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const mpz_class& value) : q_(value) {}
  Rat(const mpz_class& numerator, const mpz_class& denominator);

  /// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument.
  static Rat parse(std::string_view text);

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  Rat abs() const;
  Rat reciprocal() const;

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  Rat& operator+=(const Rat& other);
  Rat& operator-=(const Rat& other);
  Rat& operator*=(const Rat& other);
  Rat& operator/=(const Rat& other);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Order of a group: a positive integer or infinity.
class GroupOrder {
 public:
  static GroupOrder finite(std::uint64_t n);
  static GroupOrder infinite() { return GroupOrder{}; }

  /// Positive decimal integer or "inf".
  static GroupOrder parse(std::string_view text);

  bool is_finite() const { return value_ != 0; }
  bool is_infinite() const { return value_ == 0; }
  /// Requires is_finite().
  std::uint64_t value() const;

  std::string str() const;

  friend bool operator==(const GroupOrder&, const GroupOrder&) = default;

 private:
  GroupOrder() = default;
  explicit GroupOrder(std::uint64_t n) : value_(n) {}
  std::uint64_t value_ = 0;  // 0 encodes infinity
};

std::ostream& operator<<(std::ostream& os, const GroupOrder& o);

/// 1/|G|, with 1/|G| = 0 for infinite G. This is b_0 of G.
Rat reciprocal_order(const GroupOrder& order);

}  // namespace l2tree
