#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "mhc/error.hpp"
#include "mhc/hodge.hpp"
#include "mhc/ring.hpp"

namespace mhc {

/// (weight k, eigenvalue angle a): the eigenspace of gamma for exp(2 pi i a).
using EigenKey = std::pair<std::int64_t, Rational>;
using IntBidegree = std::pair<std::int64_t, std::int64_t>;
using EigenPieces = std::map<EigenKey, std::map<IntBidegree, Integer>>;

/// Hodge structure with a finite-order automorphism, stored as the Hodge numbers
/// of each eigenspace of each pure piece. Angles lie in [0, 1); the order of the
/// automorphism is implicit in their denominators.
class EquivariantHodgeStructure {
 public:
  EquivariantHodgeStructure() = default;

  /// Checks angle range, p + q = k, nonnegativity and the conjugation pairing
  /// h(k, a, p, q) = h(k, -a mod 1, q, p). Returns a description of the first problem.
  static std::optional<std::string> check(const EigenPieces& pieces) {
    for (const auto& [key, table] : pieces) {
      const auto& [k, a] = key;
      if (a < 0 || a >= 1) return "angle " + to_string(a) + " outside [0,1)";
      for (const auto& [pq, d] : table) {
        if (d < 0) return "negative dimension in weight " + std::to_string(k);
        if (d != 0 && pq.first + pq.second != k)
          return "bidegree (" + std::to_string(pq.first) + "," + std::to_string(pq.second) +
                 ") does not have weight " + std::to_string(k);
      }
    }
    for (const auto& [key, table] : pieces) {
      const Rational conj = key.second == 0 ? Rational(0) : Rational(1) - key.second;
      for (const auto& [pq, d] : table) {
        if (d == 0) continue;
        Integer mirror = 0;
        if (auto it = pieces.find({key.first, conj}); it != pieces.end())
          if (auto jt = it->second.find({pq.second, pq.first}); jt != it->second.end()) mirror = jt->second;
        if (mirror != d)
          return "conjugation pairing violated at weight " + std::to_string(key.first) + ", angle " +
                 to_string(key.second) + ", bidegree (" + std::to_string(pq.first) + "," +
                 std::to_string(pq.second) + ")";
      }
    }
    return std::nullopt;
  }

  static EquivariantHodgeStructure make(const EigenPieces& pieces) {
    if (auto bad = check(pieces)) throw PreconditionError(*bad);
    return unchecked(pieces);
  }

  /// Skips the conjugation check (weights and angle range are still enforced). Used for
  /// single eigenspaces such as the a = 1/3 half of a conjugate pair.
  static EquivariantHodgeStructure unchecked(const EigenPieces& pieces) {
    EquivariantHodgeStructure e;
    for (const auto& [key, table] : pieces) {
      if (key.second < 0 || key.second >= 1) throw PreconditionError("angle " + to_string(key.second) + " outside [0,1)");
      for (const auto& [pq, d] : table) {
        if (d == 0) continue;
        if (d < 0) throw PreconditionError("negative dimension in equivariant structure");
        if (pq.first + pq.second != key.first) throw PreconditionError("bidegree does not match piece weight");
        e.pieces_[key][pq] = d;
      }
    }
    return e;
  }

  const EigenPieces& pieces() const noexcept { return pieces_; }
  bool empty() const noexcept { return pieces_.empty(); }

  friend bool operator==(const EquivariantHodgeStructure& a, const EquivariantHodgeStructure& b) {
    return a.pieces_ == b.pieces_;
  }

 private:
  EigenPieces pieces_;
};

/// The equivalence with fractional Hodge structures. The invariant part of a
/// weight-k piece keeps its bidegree; the eigenspace of angle a > 0 in bidegree
/// (p, k-p) goes to (p + a, k - p + 1 - a), of weight k + 1.
inline HodgeStructure to_fractional(const EquivariantHodgeStructure& e) {
  HodgeTable t;
  for (const auto& [key, table] : e.pieces()) {
    const auto& [k, a] = key;
    for (const auto& [pq, d] : table) {
      const Rational p(pq.first);
      if (a == 0) {
        t[{p, Rational(k - pq.first)}] += d;
      } else {
        t[{p + a, Rational(k - pq.first + 1) - a}] += d;
      }
    }
  }
  return HodgeStructure::unchecked(t);
}

/// Inverse of to_fractional: bidegree (b, w - b) carries gamma = exp(2 pi i b).
inline EquivariantHodgeStructure from_fractional(const HodgeStructure& h) {
  EigenPieces pieces;
  for (const auto& [pq, d] : h.dims()) {
    const Rational w = pq.first + pq.second;
    if (!is_integral(w)) throw PreconditionError("fractional Hodge structure has non-integral weight " + to_string(w));
    const Rational a = frac_of(pq.first);
    const std::int64_t p = floor_of(pq.first);
    std::int64_t k = w.numerator();
    if (a != 0) --k;
    pieces[{k, a}][{p, k - p}] += d;
  }
  return EquivariantHodgeStructure::unchecked(pieces);
}

inline EquivariantHodgeStructure convolution(const EquivariantHodgeStructure& x, const EquivariantHodgeStructure& y) {
  return from_fractional(tensor(to_fractional(x), to_fractional(y)));
}

inline Poly equiv_hn_poly(const EquivariantHodgeStructure& e) { return hn_poly(to_fractional(e)); }

/// Equivariant Hodge-Euler polynomial of the vanishing fibre of f(x) + g(y), given
/// those of f and g.
inline Poly thom_sebastiani(const Poly& phi_f, const Poly& phi_g) { return -(phi_f * phi_g); }

}  // namespace mhc
