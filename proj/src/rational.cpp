#include "l2tree/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace l2tree {

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rat::Rat(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("Rat: zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!is_decimal(digits) || !is_decimal(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rat(mpz_class(std::string(num), 10), d);
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

Rat Rat::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rat: reciprocal of zero");
  return Rat(denominator(), numerator());
}

std::string Rat::str() const {
  if (denominator() == 1) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

Rat& Rat::operator+=(const Rat& other) {
  q_ += other.q_;
  return *this;
}

Rat& Rat::operator-=(const Rat& other) {
  q_ -= other.q_;
  return *this;
}

Rat& Rat::operator*=(const Rat& other) {
  q_ *= other.q_;
  return *this;
}

Rat& Rat::operator/=(const Rat& other) {
  if (other.is_zero()) throw std::domain_error("Rat: division by zero");
  q_ /= other.q_;
  return *this;
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.q_ = -r.q_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

GroupOrder GroupOrder::finite(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("group order must be at least 1");
  return GroupOrder(n);
}

GroupOrder GroupOrder::parse(std::string_view text) {
  if (text == "inf") return infinite();
  if (!is_decimal(text) || text.size() > 19)
    throw std::invalid_argument("malformed group order '" + std::string(text) + "'");
  return finite(std::stoull(std::string(text)));
}

std::uint64_t GroupOrder::value() const {
  if (is_infinite()) throw std::logic_error("GroupOrder::value on infinite order");
  return value_;
}

std::string GroupOrder::str() const { return is_finite() ? std::to_string(value_) : "inf"; }

std::ostream& operator<<(std::ostream& os, const GroupOrder& o) { return os << o.str(); }

Rat reciprocal_order(const GroupOrder& order) {
  if (order.is_infinite()) return Rat(0);
  return Rat(mpz_class(1), mpz_class(static_cast<unsigned long>(order.value())));
}

}  // namespace l2tree
