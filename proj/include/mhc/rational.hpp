#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "mhc/error.hpp"

namespace mhc {

/// Exact integer with unbounded magnitude, used for every coefficient and dimension.
using Integer = boost::multiprecision::cpp_int;

/// Reads an optionally signed run of decimal digits. Leading zeros are plain decimal
/// (the library's own string constructor would read them as octal).
inline Integer decimal_integer(std::string_view text) {
  const bool neg = !text.empty() && text.front() == '-';
  std::string_view digits = text.substr(neg || (!text.empty() && text.front() == '+') ? 1 : 0);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw PreconditionError("'" + std::string(text) + "' is not a decimal integer");
  digits.remove_prefix(std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Integer r(std::string{digits});
  return neg ? Integer(-r) : r;
}

/// Exact rational exponent: reduced, positive denominator, 64-bit parts.
/// Arithmetic that leaves the 64-bit range throws instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw PreconditionError("rational with zero denominator");
    *this = normalized(n, d);
  }

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return normalized(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return normalized(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return normalized(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a) { return normalized(-Wide(a.num_), a.den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Wide lhs = Wide(a.num_) * b.den_;
    const Wide rhs = Wide(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less : lhs > rhs ? std::strong_ordering::greater
                                                              : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  using Wide = __int128;

  static Rational normalized(Wide n, Wide d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Wide a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      Wide t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw PreconditionError("rational exponent overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

inline std::int64_t floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

/// Fractional part in [0, 1).
inline Rational frac_of(const Rational& r) { return r - Rational(floor_of(r)); }

/// "3", "-1/2".
inline std::string to_string(const Rational& r) {
  if (is_integral(r)) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace mhc
