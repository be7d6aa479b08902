#pragma once

#include <map>
#include <optional>
#include <string>

#include "mhc/error.hpp"
#include "mhc/rational.hpp"
#include "mhc/ring.hpp"

namespace mhc {

/// What went wrong in a Hodge dimension table, and where.
struct HodgeViolation {
  enum class Kind { negative_dimension, non_integral_weight, asymmetric };
  Kind kind;
  Bidegree at;

  std::string message() const {
    std::string where = "(" + to_string(at.first) + "," + to_string(at.second) + ")";
    switch (kind) {
      case Kind::negative_dimension:
        return "negative dimension at " + where;
      case Kind::non_integral_weight:
        return "non-integral weight " + to_string(at.first + at.second) + " at " + where;
      case Kind::asymmetric:
        return "symmetry violation at " + where;
    }
    return "invalid Hodge table at " + where;
  }
};

using HodgeTable = std::map<Bidegree, Integer>;

/// Checks dimensions are nonnegative, every weight p+q is an integer and
/// h^{p,q} = h^{q,p}. Zero entries count as absent. Reports the first violation,
/// weight problems before symmetry problems.
inline std::optional<HodgeViolation> validate_hodge_table(const HodgeTable& dims) {
  for (const auto& [pq, d] : dims) {
    if (d < 0) return HodgeViolation{HodgeViolation::Kind::negative_dimension, pq};
    if (d != 0 && !is_integral(pq.first + pq.second))
      return HodgeViolation{HodgeViolation::Kind::non_integral_weight, pq};
  }
  for (const auto& [pq, d] : dims) {
    if (d == 0) continue;
    auto it = dims.find({pq.second, pq.first});
    Integer mirror = it == dims.end() ? Integer(0) : it->second;
    if (mirror != d) return HodgeViolation{HodgeViolation::Kind::asymmetric, pq};
  }
  return std::nullopt;
}

/// Finite direct sum of (possibly fractional) Hodge structures, stored as the table
/// of dimensions h^{p,q} over rational bidegrees. Classical structures have integer
/// bidegrees; fractional ones have rational p, q with p+q integral.
class HodgeStructure {
 public:
  HodgeStructure() = default;

  /// Validating constructor; throws PreconditionError on any violation.
  static HodgeStructure make(const HodgeTable& dims) {
    if (auto bad = validate_hodge_table(dims)) throw PreconditionError(bad->message());
    return unchecked(dims);
  }

  /// Stores the table as is (minus zero entries). For intermediate values that are
  /// not yet symmetric, e.g. one half of a conjugate pair.
  static HodgeStructure unchecked(const HodgeTable& dims) {
    HodgeStructure h;
    for (const auto& [pq, d] : dims)
      if (d != 0) h.dims_.emplace(pq, d);
    return h;
  }

  const HodgeTable& dims() const noexcept { return dims_; }
  bool empty() const noexcept { return dims_.empty(); }

  Integer dim(const Rational& p, const Rational& q) const {
    auto it = dims_.find({p, q});
    return it == dims_.end() ? Integer(0) : it->second;
  }

  Integer total_dim() const {
    Integer s = 0;
    for (const auto& [pq, d] : dims_) s += d;
    return s;
  }

  /// Dimensions of the weight-graded pieces, keyed by p+q.
  std::map<Rational, Integer> weight_dims() const {
    std::map<Rational, Integer> g;
    for (const auto& [pq, d] : dims_) g[pq.first + pq.second] += d;
    return g;
  }

  bool is_pure(const Rational& weight) const {
    for (const auto& [pq, d] : dims_)
      if (pq.first + pq.second != weight) return false;
    return true;
  }

  friend bool operator==(const HodgeStructure& a, const HodgeStructure& b) { return a.dims_ == b.dims_; }
  friend bool operator!=(const HodgeStructure& a, const HodgeStructure& b) { return !(a == b); }

 private:
  HodgeTable dims_;
};

inline std::optional<HodgeViolation> validate(const HodgeStructure& h) { return validate_hodge_table(h.dims()); }

/// Sum of h^{p,q} u^p v^q.
inline Poly hn_poly(const HodgeStructure& h) {
  Poly r;
  for (const auto& [pq, d] : h.dims()) r.add_term(pq, d);
  return r;
}

inline HodgeStructure direct_sum(const HodgeStructure& a, const HodgeStructure& b) {
  HodgeTable t = a.dims();
  for (const auto& [pq, d] : b.dims()) t[pq] += d;
  return HodgeStructure::unchecked(t);
}

inline HodgeStructure tensor(const HodgeStructure& a, const HodgeStructure& b) {
  HodgeTable t;
  for (const auto& [pa, da] : a.dims())
    for (const auto& [pb, db] : b.dims()) t[{pa.first + pb.first, pa.second + pb.second}] += da * db;
  return HodgeStructure::unchecked(t);
}

/// Hom(a, b): bidegrees of b minus bidegrees of a.
inline HodgeStructure hom(const HodgeStructure& a, const HodgeStructure& b) {
  HodgeTable t;
  for (const auto& [pa, da] : a.dims())
    for (const auto& [pb, db] : b.dims()) t[{pb.first - pa.first, pb.second - pa.second}] += da * db;
  return HodgeStructure::unchecked(t);
}

/// The trivial structure R with R_C = R^{0,0}.
inline HodgeStructure unit_structure() { return HodgeStructure::unchecked({{{0, 0}, 1}}); }

inline HodgeStructure dual(const HodgeStructure& a) { return hom(a, unit_structure()); }

/// Reads a polynomial as a dimension table. Throws PreconditionError if a coefficient
/// is negative or the result is not a valid Hodge table.
inline HodgeStructure hodge_from_poly(const Poly& p) {
  return HodgeStructure::make(HodgeTable(p.terms().begin(), p.terms().end()));
}

}  // namespace mhc
