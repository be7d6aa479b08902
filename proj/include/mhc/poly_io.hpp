#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "mhc/error.hpp"
#include "mhc/ring.hpp"

// Text grammar (whitespace insensitive):
//
//   poly   := ["-"] term (("+" | "-") term)*
//   term   := coeff ("*" factor)* | factor ("*" factor)*
//   factor := ("u" | "v") ["^" exp]
//   exp    := integer | "(" integer ["/" integer] ")"
//   coeff  := digits
//
// Exponent integers may carry a sign ("u^-1", "u^(-1/2)").

namespace mhc {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
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
  void expect(char c, const char* what) {
    if (!accept(c)) fail(what);
  }
  std::size_t offset() {
    skip_ws();
    return base_ + pos_;
  }
  /// Moves to an absolute offset (as reported by offset()).
  void seek(std::size_t offset) { pos_ = offset - base_; }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(offset(), what); }

  /// Unsigned digit run, or empty if none.
  std::string_view digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::int64_t signed_int64(const char* what) {
    bool neg = accept('-');
    if (!neg) accept('+');
    std::size_t at = offset();
    std::string_view d = digits();
    if (d.empty()) throw ParseError(at, what);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
    if (ec != std::errc{} || ptr != d.data() + d.size()) throw ParseError(at, "integer out of range");
    return neg ? -value : value;
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

inline Rational parse_exponent(Cursor& cur) {
  if (cur.accept('(')) {
    std::int64_t num = cur.signed_int64("expected exponent numerator");
    std::int64_t den = 1;
    if (cur.accept('/')) {
      std::size_t at = cur.offset();
      den = cur.signed_int64("expected exponent denominator");
      if (den == 0) throw ParseError(at, "zero denominator in exponent");
    }
    cur.expect(')', "expected ')' closing exponent");
    return Rational(num, den);
  }
  char c = cur.peek();
  if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c)))
    return Rational(cur.signed_int64("expected exponent"));
  cur.fail("expected integer or parenthesized rational exponent");
}

inline bool parse_factor(Cursor& cur, Rational& u_exp, Rational& v_exp) {
  char c = cur.peek();
  if (c != 'u' && c != 'v') return false;
  const std::size_t at = cur.offset();
  cur.accept(c);
  Rational e = 1;
  if (cur.accept('^')) e = parse_exponent(cur);
  try {
    (c == 'u' ? u_exp : v_exp) += e;
  } catch (const PreconditionError&) {
    throw ParseError(at, "exponent out of range");
  }
  return true;
}

inline void parse_term(Cursor& cur, Poly& out, bool negative) {
  Integer coeff = 1;
  Rational u_exp = 0, v_exp = 0;
  std::string_view d = cur.digits();
  if (!d.empty()) {
    coeff = decimal_integer(d);
  } else if (!parse_factor(cur, u_exp, v_exp)) {
    cur.fail("expected coefficient or variable");
  }
  while (cur.accept('*')) {
    if (!parse_factor(cur, u_exp, v_exp)) cur.fail("expected 'u' or 'v' after '*'");
  }
  out.add_term({u_exp, v_exp}, negative ? Integer(-coeff) : coeff);
}

}  // namespace detail

/// Parses text in the polynomial grammar. `base_offset` shifts reported error offsets
/// when the text is embedded in a larger string.
inline Poly parse_poly(std::string_view text, std::size_t base_offset = 0) {
  detail::Cursor cur(text, base_offset);
  Poly out;
  bool negative = cur.accept('-');
  detail::parse_term(cur, out, negative);
  while (!cur.at_end()) {
    if (cur.accept('+')) {
      negative = false;
    } else if (cur.accept('-')) {
      negative = true;
    } else {
      cur.fail("expected '+', '-' or end of input");
    }
    detail::parse_term(cur, out, negative);
  }
  return out;
}

/// "p/q" or "p" as used in structured files.
inline Rational parse_rational(std::string_view text) {
  detail::Cursor cur(text);
  std::int64_t num = cur.signed_int64("expected rational");
  std::int64_t den = 1;
  if (cur.accept('/')) {
    std::size_t at = cur.offset();
    den = cur.signed_int64("expected denominator");
    if (den == 0) throw ParseError(at, "zero denominator");
  }
  if (!cur.at_end()) cur.fail("trailing characters after rational");
  return Rational(num, den);
}

namespace detail {

inline std::string format_power(char var, const Rational& e) {
  std::string s(1, var);
  if (e == 1) return s;
  if (is_integral(e)) return s + "^" + std::to_string(e.numerator());
  return s + "^(" + to_string(e) + ")";
}

/// Joins signed terms as "a - b + c". An empty monomial marks the constant term.
class TermWriter {
 public:
  void add(const Integer& coeff, const std::string& monomial) {
    bool neg = coeff < 0;
    Integer mag = neg ? Integer(-coeff) : coeff;
    if (out_.empty()) {
      if (neg) out_ += "-";
    } else {
      out_ += neg ? " - " : " + ";
    }
    if (monomial.empty()) {
      out_ += mag.str();
    } else if (mag == 1) {
      out_ += monomial;
    } else {
      out_ += mag.str() + "*" + monomial;
    }
  }
  std::string str() && { return out_.empty() ? std::string("0") : std::move(out_); }

 private:
  std::string out_;
};

}  // namespace detail

/// Canonical text: terms in ascending (u-exponent, v-exponent) order, unit coefficients
/// dropped before variables, fractional exponents parenthesized.
inline std::string format_poly(const Poly& p) {
  detail::TermWriter w;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    if (e.first != 0) mono = detail::format_power('u', e.first);
    if (e.second != 0) {
      if (!mono.empty()) mono += "*";
      mono += detail::format_power('v', e.second);
    }
    w.add(c, mono);
  }
  return std::move(w).str();
}

inline std::string format_unipoly(const UniPoly& p, char var = 't') {
  detail::TermWriter w;
  for (const auto& [e, c] : p.terms()) w.add(c, e == 0 ? std::string() : detail::format_power(var, e));
  return std::move(w).str();
}

}  // namespace mhc
