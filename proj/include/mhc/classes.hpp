#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mhc/error.hpp"
#include "mhc/poly_io.hpp"
#include "mhc/ring.hpp"

namespace mhc {

/// Grothendieck class of a variety, as an expression over a small vocabulary of
/// standard smooth projective varieties. Evaluation goes through the Hodge-Euler
/// polynomial, so a class is identified with its image in the polynomial ring.
///
/// Leaf parameters are range-checked on construction; evaluation is total.
class ClassExpr {
 public:
  struct Point {};
  struct Projective { int n; };
  struct Curve { int genus; };
  struct P1xP1 {};
  struct BlowupP2 { int points; };
  struct Torus { int n; };
  struct Toric { std::vector<Integer> orbits; };  // orbits[k] = number of k-dimensional orbits
  struct Lefschetz { int power; };
  struct Literal { Poly value; };
  struct Sum;
  struct Difference;
  struct Product;
  struct Scale;
  using Node = std::variant<Point, Projective, Curve, P1xP1, BlowupP2, Torus, Toric, Lefschetz, Literal, Sum,
                            Difference, Product, Scale>;

  /// The zero class.
  ClassExpr();

  static ClassExpr point();
  static ClassExpr projective(int n);
  static ClassExpr curve(int genus);
  static ClassExpr p1xp1();
  static ClassExpr blowup_p2(int points);
  static ClassExpr torus(int n);
  static ClassExpr toric(std::vector<Integer> orbits);
  static ClassExpr lefschetz(int power = 1);
  static ClassExpr literal(Poly p);

  friend ClassExpr operator+(const ClassExpr& a, const ClassExpr& b);
  friend ClassExpr operator-(const ClassExpr& a, const ClassExpr& b);
  friend ClassExpr operator*(const ClassExpr& a, const ClassExpr& b);
  friend ClassExpr operator*(const Integer& k, const ClassExpr& a);

  const Node& node() const;

  Poly evaluate() const;
  /// Text in the class-expression syntax; parse_class(e.to_string()) evaluates to the same class.
  std::string to_string() const;

 private:
  explicit ClassExpr(Node n);

  static void require(bool ok, const char* what) {
    if (!ok) throw PreconditionError(what);
  }

  std::shared_ptr<const Node> node_;
};

struct ClassExpr::Sum { ClassExpr lhs, rhs; };
struct ClassExpr::Difference { ClassExpr lhs, rhs; };
struct ClassExpr::Product { ClassExpr lhs, rhs; };
struct ClassExpr::Scale { Integer factor; ClassExpr operand; };

inline ClassExpr::ClassExpr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
inline ClassExpr::ClassExpr() : ClassExpr(Literal{Poly()}) {}

inline const ClassExpr::Node& ClassExpr::node() const { return *node_; }

inline ClassExpr ClassExpr::point() { return ClassExpr(Point{}); }
inline ClassExpr ClassExpr::projective(int n) {
  require(n >= 0, "projective(n) needs n >= 0");
  return ClassExpr(Projective{n});
}
inline ClassExpr ClassExpr::curve(int genus) {
  require(genus >= 0, "curve(g) needs g >= 0");
  return ClassExpr(Curve{genus});
}
inline ClassExpr ClassExpr::p1xp1() { return ClassExpr(P1xP1{}); }
inline ClassExpr ClassExpr::blowup_p2(int points) {
  require(points >= 0, "blowup_p2(k) needs k >= 0");
  return ClassExpr(BlowupP2{points});
}
inline ClassExpr ClassExpr::torus(int n) {
  require(n >= 0, "torus(n) needs n >= 0");
  return ClassExpr(Torus{n});
}
inline ClassExpr ClassExpr::toric(std::vector<Integer> orbits) {
  require(!orbits.empty(), "toric(...) needs at least one orbit count");
  for (const auto& s : orbits) require(s >= 0, "toric orbit counts must be >= 0");
  return ClassExpr(Toric{std::move(orbits)});
}
inline ClassExpr ClassExpr::lefschetz(int power) {
  require(power >= 0, "lefschetz(i) needs i >= 0");
  return ClassExpr(Lefschetz{power});
}
inline ClassExpr ClassExpr::literal(Poly p) { return ClassExpr(Literal{std::move(p)}); }

inline ClassExpr operator+(const ClassExpr& a, const ClassExpr& b) { return ClassExpr(ClassExpr::Sum{a, b}); }
inline ClassExpr operator-(const ClassExpr& a, const ClassExpr& b) { return ClassExpr(ClassExpr::Difference{a, b}); }
inline ClassExpr operator*(const ClassExpr& a, const ClassExpr& b) { return ClassExpr(ClassExpr::Product{a, b}); }
inline ClassExpr operator*(const Integer& k, const ClassExpr& a) { return ClassExpr(ClassExpr::Scale{k, a}); }

namespace detail {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace detail

inline Poly ClassExpr::evaluate() const {
  const Poly L = Poly::uv();
  return std::visit(
      detail::overloaded{
          [](const Point&) { return Poly(1); },
          [](const Projective& x) { return mhc::projective(x.n); },
          [&](const Curve& x) { return Poly(1) - x.genus * Poly::u() - x.genus * Poly::v() + L; },
          [&](const P1xP1&) { return pow(1 + L, 2); },
          [&](const BlowupP2& x) { return 1 + (1 + x.points) * L + L * L; },
          [](const Torus& x) { return mhc::torus(x.n); },
          [](const Toric& x) {
            Poly r;
            for (std::size_t k = 0; k < x.orbits.size(); ++k) r += x.orbits[k] * mhc::torus(static_cast<int>(k));
            return r;
          },
          [](const Lefschetz& x) { return mhc::lefschetz(x.power); },
          [](const Literal& x) { return x.value; },
          [](const Sum& x) { return x.lhs.evaluate() + x.rhs.evaluate(); },
          [](const Difference& x) { return x.lhs.evaluate() - x.rhs.evaluate(); },
          [](const Product& x) { return x.lhs.evaluate() * x.rhs.evaluate(); },
          [](const Scale& x) { return x.factor * x.operand.evaluate(); },
      },
      *node_);
}

inline std::string ClassExpr::to_string() const {
  auto call = [](const char* name, auto arg) { return std::string(name) + "(" + std::to_string(arg) + ")"; };
  return std::visit(
      detail::overloaded{
          [](const Point&) { return std::string("point"); },
          [&](const Projective& x) { return call("projective", x.n); },
          [&](const Curve& x) { return call("curve", x.genus); },
          [](const P1xP1&) { return std::string("p1xp1"); },
          [&](const BlowupP2& x) { return call("blowup_p2", x.points); },
          [&](const Torus& x) { return call("torus", x.n); },
          [](const Toric& x) {
            std::string s = "toric(";
            for (std::size_t k = 0; k < x.orbits.size(); ++k) s += (k ? "," : "") + x.orbits[k].str();
            return s + ")";
          },
          [&](const Lefschetz& x) { return call("lefschetz", x.power); },
          [](const Literal& x) { return "poly(" + format_poly(x.value) + ")"; },
          [](const Sum& x) { return "(" + x.lhs.to_string() + " + " + x.rhs.to_string() + ")"; },
          [](const Difference& x) { return "(" + x.lhs.to_string() + " - " + x.rhs.to_string() + ")"; },
          [](const Product& x) { return x.lhs.to_string() + "*" + x.rhs.to_string(); },
          [](const Scale& x) { return "(" + x.factor.str() + ")*(" + x.operand.to_string() + ")"; },
      },
      *node_);
}

inline Poly eval_class(const ClassExpr& e) { return e.evaluate(); }

namespace detail {

// expr    := term (("+" | "-") term)*
// term    := unary ("*" unary)*
// unary   := "-" unary | primary
// primary := integer | name ["(" args ")"] | "(" expr ")"
class ClassParser {
 public:
  explicit ClassParser(std::string_view text) : text_(text), cur_(text) {}

  ClassExpr parse() {
    ClassExpr e = expr();
    if (!cur_.at_end()) cur_.fail("unexpected character in class expression");
    return e;
  }

 private:
  // Integer literals stay scalars until they meet a class, so "3*curve(1)" scales.
  struct Value {
    std::optional<Integer> scalar;
    ClassExpr cls;
    ClassExpr as_class() const { return scalar ? ClassExpr::literal(Poly(*scalar)) : cls; }
  };

  ClassExpr expr() { return combine_sums().as_class(); }

  Value combine_sums() {
    Value v = term();
    for (;;) {
      if (cur_.accept('+')) {
        Value r = term();
        v = (v.scalar && r.scalar) ? Value{*v.scalar + *r.scalar, {}} : Value{{}, v.as_class() + r.as_class()};
      } else if (cur_.accept('-')) {
        Value r = term();
        v = (v.scalar && r.scalar) ? Value{*v.scalar - *r.scalar, {}} : Value{{}, v.as_class() - r.as_class()};
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    while (cur_.accept('*')) {
      Value r = unary();
      if (v.scalar && r.scalar) {
        v = Value{*v.scalar * *r.scalar, {}};
      } else if (v.scalar) {
        v = Value{{}, *v.scalar * r.cls};
      } else if (r.scalar) {
        v = Value{{}, *r.scalar * v.cls};
      } else {
        v = Value{{}, v.cls * r.cls};
      }
    }
    return v;
  }

  Value unary() {
    if (cur_.accept('-')) {
      Value v = unary();
      if (v.scalar) return Value{-*v.scalar, {}};
      return Value{{}, Integer(-1) * v.cls};
    }
    return primary();
  }

  Value primary() {
    if (cur_.accept('(')) {
      Value v = combine_sums();
      cur_.expect(')', "expected ')'");
      return v;
    }
    std::string_view d = cur_.digits();
    if (!d.empty()) return Value{decimal_integer(d), {}};
    std::size_t at = cur_.offset();
    std::string name = identifier();
    if (name.empty()) cur_.fail("expected class constructor, integer or '('");
    return Value{{}, constructor(name, at)};
  }

  std::string identifier() {
    std::size_t start = cur_.offset();
    std::size_t end = start;
    if (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) {
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
    }
    cur_.seek(end);
    return std::string(text_.substr(start, end - start));
  }

  std::vector<std::int64_t> int_args() {
    std::vector<std::int64_t> args;
    if (!cur_.accept('(')) return args;
    if (cur_.accept(')')) return args;
    do {
      args.push_back(cur_.signed_int64("expected integer argument"));
    } while (cur_.accept(','));
    cur_.expect(')', "expected ')' after arguments");
    return args;
  }

  int single_int(const std::string& name, std::size_t at, std::optional<int> fallback = std::nullopt) {
    auto args = int_args();
    if (args.empty() && fallback) return *fallback;
    if (args.size() != 1) throw ParseError(at, name + " takes exactly one integer argument");
    if (args[0] < INT32_MIN || args[0] > INT32_MAX) throw ParseError(at, name + " argument out of range");
    return static_cast<int>(args[0]);
  }

  void no_args(const std::string& name, std::size_t at) {
    if (!int_args().empty()) throw ParseError(at, name + " takes no arguments");
  }

  ClassExpr literal_poly(std::size_t at) {
    cur_.expect('(', "expected '(' after poly");
    std::size_t start = cur_.offset();
    std::size_t depth = 1, end = start;
    for (; end < text_.size(); ++end) {
      if (text_[end] == '(') ++depth;
      if (text_[end] == ')' && --depth == 0) break;
    }
    if (end >= text_.size()) throw ParseError(at, "unterminated poly(...)");
    Poly p = parse_poly(text_.substr(start, end - start), start);
    cur_.seek(end);
    cur_.expect(')', "expected ')' closing poly");
    return ClassExpr::literal(std::move(p));
  }

  ClassExpr constructor(const std::string& name, std::size_t at) {
    if (name == "point" || name == "p1xp1") {
      no_args(name, at);
      return name == "point" ? ClassExpr::point() : ClassExpr::p1xp1();
    }
    if (name == "projective") return ClassExpr::projective(single_int(name, at));
    if (name == "curve") return ClassExpr::curve(single_int(name, at));
    if (name == "blowup_p2") return ClassExpr::blowup_p2(single_int(name, at));
    if (name == "torus") return ClassExpr::torus(single_int(name, at));
    if (name == "lefschetz") return ClassExpr::lefschetz(single_int(name, at, 1));
    if (name == "poly") return literal_poly(at);
    if (name == "toric") {
      std::vector<Integer> orbits;
      for (auto s : int_args()) orbits.emplace_back(s);
      if (orbits.empty()) throw ParseError(at, "toric needs orbit counts");
      return ClassExpr::toric(std::move(orbits));
    }
    throw ParseError(at, "unknown class constructor '" + name + "'");
  }

  std::string_view text_;
  Cursor cur_;
};

}  // namespace detail

/// Parses e.g. "curve(3)", "2*projective(1) - point", "toric(3,3,1)", "poly(1 + 2*u*v)".
inline ClassExpr parse_class(std::string_view text) { return detail::ClassParser(text).parse(); }

/// Class of the blow-up of a smooth variety (class `total`) along a smooth centre
/// (class `center`) of codimension c: total + center * ([P^{c-1}] - 1).
inline Poly blowup_class(const Poly& total, const Poly& center, int codim) {
  if (codim < 1) throw PreconditionError("blow-up centre codimension must be >= 1, got " + std::to_string(codim));
  return total + center * (projective(codim - 1) - 1);
}

/// Class of X minus a normal-crossing divisor, given [X] and the level classes
/// D(1), ..., D(N) of disjoint unions of m-fold intersections.
inline Poly open_complement(const Poly& ambient, std::span<const Poly> levels) {
  Poly r = ambient;
  for (std::size_t m = 0; m < levels.size(); ++m) {
    if (m % 2 == 0) {
      r -= levels[m];
    } else {
      r += levels[m];
    }
  }
  return r;
}

struct CubicalPiece {
  int cardinality;  // |I| >= 1
  Poly cls;
};

/// Alternating sum over the pieces X_I of a cubical hyperresolution.
inline Poly cubical_class(std::span<const CubicalPiece> pieces) {
  Poly r;
  for (const auto& piece : pieces) {
    if (piece.cardinality < 1) throw PreconditionError("cubical piece index set must be nonempty");
    if (piece.cardinality % 2 == 1) {
      r += piece.cls;
    } else {
      r -= piece.cls;
    }
  }
  return r;
}

}  // namespace mhc
