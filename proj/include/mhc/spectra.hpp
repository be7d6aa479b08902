#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mhc/error.hpp"
#include "mhc/hodge.hpp"
#include "mhc/ring.hpp"

namespace mhc {

/// Multiset of pairs (alpha, w) with integer multiplicities m(alpha, w), ordered by
/// alpha then w. Multiplicities may be negative for virtual (Euler-level) values.
class SpectrumTable {
 public:
  using Key = std::pair<Rational, std::int64_t>;
  using Entries = std::map<Key, Integer>;

  SpectrumTable() = default;

  void add(const Rational& alpha, std::int64_t w, const Integer& m) {
    if (m == 0) return;
    auto [it, inserted] = entries_.try_emplace({alpha, w}, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0) entries_.erase(it);
    }
  }

  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  Integer multiplicity(const Rational& alpha, std::int64_t w) const {
    auto it = entries_.find({alpha, w});
    return it == entries_.end() ? Integer(0) : it->second;
  }

  Integer total() const {
    Integer s = 0;
    for (const auto& [k, m] : entries_) s += m;
    return s;
  }

  friend bool operator==(const SpectrumTable& a, const SpectrumTable& b) { return a.entries_ == b.entries_; }

 private:
  Entries entries_;
};

/// First negative entry, if any. A table that comes from the reduced cohomology of
/// a Milnor fibre has only nonnegative multiplicities.
inline std::optional<SpectrumTable::Key> find_negative(const SpectrumTable& t) {
  for (const auto& [k, m] : t.entries())
    if (m < 0) return k;
  return std::nullopt;
}

/// Reads m(alpha, w) off a polynomial written as sum m(alpha, w) u^alpha v^(w - alpha).
inline SpectrumTable m_invariants(const Poly& p) {
  SpectrumTable t;
  for (const auto& [e, c] : p.terms()) {
    const Rational w = e.first + e.second;
    if (!is_integral(w)) throw PreconditionError("monomial of non-integral weight " + to_string(w));
    t.add(e.first, w.numerator(), c);
  }
  return t;
}

inline SpectrumTable characteristic_pairs(const SpectrumTable& t, std::int64_t n) {
  SpectrumTable r;
  for (const auto& [k, m] : t.entries()) r.add(Rational(n) - k.first, k.second, m);
  return r;
}

inline SpectrumTable spectral_pairs(const SpectrumTable& t) {
  SpectrumTable r;
  for (const auto& [k, m] : t.entries()) r.add(k.first, is_integral(k.first) ? k.second + 1 : k.second, m);
  return r;
}

/// Spectrum in Saito's normalization: the polynomial at (t, 1).
inline UniPoly saito_spectrum(const Poly& p) { return specialize_v(p); }

/// Spectrum in Varchenko's normalization: t^-1 times Saito's.
inline UniPoly varchenko_spectrum(const Poly& p) { return saito_spectrum(p).shifted(-1); }

/// Aligned (alpha, w, m) table.
inline std::string format_spectrum_text(const SpectrumTable& t) {
  std::vector<std::vector<std::string>> rows{{"alpha", "w", "m"}};
  for (const auto& [k, m] : t.entries()) rows.push_back({to_string(k.first), std::to_string(k.second), m.str()});
  std::size_t width[3] = {0, 0, 0};
  for (const auto& r : rows)
    for (std::size_t i = 0; i < 3; ++i) width[i] = std::max(width[i], r[i].size());
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (i) os << "  ";
      os << std::string(width[i] - r[i].size(), ' ') << r[i];
    }
    os << '\n';
  }
  return os.str();
}

/// Dimensions of Gr^W_w H^k of a limit mixed Hodge structure. The grading is symmetric
/// about k: g(k + j) = g(k - j).
class WeightDims {
 public:
  /// Accepts a full symmetric grading or only the weights >= k; missing mirrors are
  /// filled in. A given mirror that disagrees, a weight below k without its mirror,
  /// or a negative dimension throws PreconditionError.
  static WeightDims make(std::int64_t k, const std::map<std::int64_t, Integer>& given) {
    std::map<std::int64_t, Integer> g;
    for (const auto& [w, d] : given) {
      if (d < 0) throw PreconditionError("negative dimension at weight " + std::to_string(w));
      if (d != 0) g.emplace(w, d);
    }
    WeightDims out;
    out.k_ = k;
    out.g_ = g;
    for (const auto& [w, d] : g) {
      const std::int64_t mirror = 2 * k - w;
      auto it = g.find(mirror);
      if (it != g.end()) {
        if (it->second != d)
          throw PreconditionError("weight grading not symmetric about " + std::to_string(k) + ": g(" +
                                  std::to_string(w) + ") != g(" + std::to_string(mirror) + ")");
      } else if (w > k) {
        out.g_.emplace(mirror, d);
      } else {
        throw PreconditionError("weight " + std::to_string(w) + " below " + std::to_string(k) +
                                " has no mirror weight " + std::to_string(mirror));
      }
    }
    return out;
  }

  std::int64_t degree() const noexcept { return k_; }
  const std::map<std::int64_t, Integer>& dims() const noexcept { return g_; }

  Integer at(std::int64_t w) const {
    auto it = g_.find(w);
    return it == g_.end() ? Integer(0) : it->second;
  }

  Integer total() const {
    Integer s = 0;
    for (const auto& [w, d] : g_) s += d;
    return s;
  }

 private:
  std::int64_t k_ = 0;
  std::map<std::int64_t, Integer> g_;
};

/// Weight grading of a Hodge table regarded as Gr^W H^k.
inline WeightDims weight_dims(const HodgeStructure& h, std::int64_t k) {
  std::map<std::int64_t, Integer> g;
  for (const auto& [w, d] : h.weight_dims()) {
    if (!is_integral(w)) throw PreconditionError("non-integral weight " + to_string(w));
    g[w.numerator()] += d;
  }
  return WeightDims::make(k, g);
}

/// Jordan block sizes of N = log T_u. The number of blocks of size m equals the
/// dimension of the primitive part of weight k + m - 1, g(k+m-1) - g(k+m+1).
inline std::map<std::int64_t, Integer> jordan_block_counts(const WeightDims& wd) {
  std::map<std::int64_t, Integer> counts;
  if (wd.dims().empty()) return counts;
  const std::int64_t k = wd.degree();
  const std::int64_t top = wd.dims().rbegin()->first;
  Integer covered = 0;
  for (std::int64_t m = 1; k + m - 1 <= top; ++m) {
    Integer c = wd.at(k + m - 1) - wd.at(k + m + 1);
    if (c < 0)
      throw PreconditionError("not a monodromy weight grading: negative primitive dimension for block size " +
                              std::to_string(m));
    if (c != 0) counts.emplace(m, c);
    covered += m * c;
  }
  if (covered != wd.total()) throw PreconditionError("Jordan blocks do not account for every weight");
  return counts;
}

}  // namespace mhc
