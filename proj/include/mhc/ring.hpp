#pragma once

#include <map>
#include <string>
#include <utility>

#include "mhc/error.hpp"
#include "mhc/rational.hpp"

namespace mhc {

/// Exponent pair (exponent of u, exponent of v).
using Bidegree = std::pair<Rational, Rational>;

/// Element of the ring Z[u^(1/n), v^(1/n), u^-1, v^-1] taken over all n: a finite
/// sum of monomials c * u^a * v^b with integer c and rational a, b.
///
/// Terms are kept in ascending lexicographic order on (a, b) and no stored
/// coefficient is zero, so two polynomials are equal iff their term maps are.
class Poly {
 public:
  using Terms = std::map<Bidegree, Integer>;

  Poly() = default;
  Poly(Integer constant) { add_term({0, 0}, std::move(constant)); }  // NOLINT(google-explicit-constructor)
  Poly(int constant) : Poly(Integer(constant)) {}                    // NOLINT(google-explicit-constructor)

  static Poly monomial(Rational u_exp, Rational v_exp, Integer coeff = 1) {
    Poly p;
    p.add_term({u_exp, v_exp}, std::move(coeff));
    return p;
  }

  /// Builds a polynomial from a term map, dropping zero coefficients.
  static Poly from_terms(const Terms& terms) {
    Poly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
  }

  static Poly u() { return monomial(1, 0); }
  static Poly v() { return monomial(0, 1); }
  /// The Lefschetz class L = uv.
  static Poly uv() { return monomial(1, 1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coeff(const Rational& u_exp, const Rational& v_exp) const {
    auto it = terms_.find({u_exp, v_exp});
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// True iff every exponent is an integer.
  bool has_integral_exponents() const {
    for (const auto& [e, c] : terms_)
      if (!is_integral(e.first) || !is_integral(e.second)) return false;
    return true;
  }

  /// Accumulates c * u^e.first * v^e.second, erasing the term if it cancels.
  void add_term(const Bidegree& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Integer& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= k;
    }
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
  }
  friend Poly operator*(Poly a, const Integer& k) { return a *= k; }
  friend Poly operator*(const Integer& k, Poly a) { return a *= k; }
  friend Poly operator*(Poly a, int k) { return a *= Integer(k); }
  friend Poly operator*(int k, Poly a) { return a *= Integer(k); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  Terms terms_;
};

inline Poly pow(Poly base, unsigned exponent) {
  Poly r = 1;
  while (exponent != 0) {
    if (exponent & 1u) r *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return r;
}

/// Substitution (u, v) -> (u^-1, v^-1). Realizes the Hodge number polynomial of a dual.
inline Poly invert_vars(const Poly& a) {
  Poly r;
  for (const auto& [e, c] : a.terms()) r.add_term({-e.first, -e.second}, c);
  return r;
}

/// Polynomial in one variable t with rational exponents; the image of v = 1.
class UniPoly {
 public:
  using Terms = std::map<Rational, Integer>;

  UniPoly() = default;

  static UniPoly monomial(Rational exp, Integer coeff = 1) {
    UniPoly p;
    p.add_term(exp, std::move(coeff));
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coeff(const Rational& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Rational& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Multiplication by t^shift.
  UniPoly shifted(const Rational& shift) const {
    UniPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e + shift, c);
    return r;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

 private:
  Terms terms_;
};

/// u -> t, v -> 1.
inline UniPoly specialize_v(const Poly& a) {
  UniPoly r;
  for (const auto& [e, c] : a.terms()) r.add_term(e.first, c);
  return r;
}

/// Value at u = v = 1. Only meaningful for classes with integral exponents.
inline Integer euler_characteristic(const Poly& a) {
  if (!a.has_integral_exponents())
    throw PreconditionError("Euler characteristic requires integral exponents");
  Integer s = 0;
  for (const auto& [e, c] : a.terms()) s += c;
  return s;
}

/// L^i = (uv)^i.
inline Poly lefschetz(int i) {
  if (i < 0) throw PreconditionError("lefschetz power must be >= 0, got " + std::to_string(i));
  return Poly::monomial(i, i);
}

/// [P^m] = 1 + L + ... + L^m, with [P^-1] = 0.
inline Poly projective(int m) {
  if (m < -1) throw PreconditionError("projective dimension must be >= -1, got " + std::to_string(m));
  Poly r;
  for (int i = 0; i <= m; ++i) r.add_term({i, i}, 1);
  return r;
}

/// [(C^*)^n] = (uv - 1)^n.
inline Poly torus(int n) {
  if (n < 0) throw PreconditionError("torus dimension must be >= 0, got " + std::to_string(n));
  return pow(Poly::uv() - 1, static_cast<unsigned>(n));
}

enum class Builtin { lefschetz, projective, torus };

inline Poly builtin_class(Builtin kind, int param) {
  switch (kind) {
    case Builtin::lefschetz:
      return lefschetz(param);
    case Builtin::projective:
      return projective(param);
    case Builtin::torus:
      return torus(param);
  }
  throw PreconditionError("unknown builtin class");
}

}  // namespace mhc
