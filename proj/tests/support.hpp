#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mhc/mhc.hpp"

namespace mhc::test {

using Rng = std::mt19937_64;

inline Integer binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  Integer r = 1;
  for (std::int64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational random_exponent(Rng& rng, bool fractional) {
  if (!fractional || uniform(rng, 0, 2) == 0) return uniform(rng, -3, 4);
  const int den = uniform(rng, 2, 7);
  return Rational(uniform(rng, -3 * den, 4 * den), den);
}

/// Sparse polynomial with up to `max_terms` terms and small exponents.
inline Poly random_poly(Rng& rng, int max_terms = 5, bool fractional = true, bool laurent = true) {
  Poly p;
  const int n = uniform(rng, 0, max_terms);
  for (int i = 0; i < n; ++i) {
    Rational a = random_exponent(rng, fractional), b = random_exponent(rng, fractional);
    if (!laurent) {
      a = uniform(rng, 0, 3);
      b = uniform(rng, 0, 3);
    }
    Integer c = uniform(rng, -9, 9);
    if (uniform(rng, 0, 9) == 0) c *= Integer("123456789012345678901234567890");
    p.add_term({a, b}, c);
  }
  return p;
}

/// Random Hodge structure, conjugation-symmetric by construction, with rational
/// bidegrees of integral weight when `fractional`.
inline HodgeStructure random_hodge(Rng& rng, bool fractional = false) {
  HodgeTable t;
  const int n = uniform(rng, 0, 4);
  for (int i = 0; i < n; ++i) {
    const Rational w = uniform(rng, -2, 4);
    const Rational p = random_exponent(rng, fractional);
    const Integer d = uniform(rng, 1, 5);
    t[{p, w - p}] += d;
    if (p != w - p) t[{w - p, p}] += d;
  }
  return HodgeStructure::make(t);
}

/// Random Hodge structure with a finite-order automorphism; each non-real eigenspace
/// comes with its conjugate.
inline EquivariantHodgeStructure random_equivariant(Rng& rng) {
  EigenPieces pieces;
  const int n = uniform(rng, 1, 4);
  for (int i = 0; i < n; ++i) {
    const std::int64_t k = uniform(rng, 0, 3);
    const std::int64_t p = uniform(rng, 0, static_cast<int>(k));
    const Integer d = uniform(rng, 1, 3);
    const int order = uniform(rng, 1, 6);
    const Rational a(uniform(rng, 0, order - 1), order);
    const Rational conj = a == 0 ? Rational(0) : Rational(1) - a;
    pieces[{k, a}][{p, k - p}] += d;
    pieces[{k, conj}][{k - p, p}] += d;
  }
  return EquivariantHodgeStructure::make(pieces);
}

inline std::string component_name(const char* prefix, int i) { return prefix + std::to_string(i); }

/// d general lines in the plane degenerating a smooth plane curve of degree d.
inline Stratification lines(int d) {
  Stratification s;
  for (int i = 1; i <= d; ++i) {
    s.components.push_back({component_name("L", i)});
    s.strata_d.emplace(ComponentSet{component_name("L", i)}, ClassExpr::projective(1));
  }
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      s.strata_d.emplace(ComponentSet{component_name("L", i), component_name("L", j)}, ClassExpr::point());
  s.relative_dim = 1;
  return s;
}

/// d general planes in P^3 degenerating a degree d surface, after the small
/// resolution of the d * C(d,2) ordinary double points of the total space: each
/// plane is blown up in d(d-1) points and every double point contributes a P1 x P1.
inline Stratification planes(int d) {
  Stratification s;
  auto e = [](int i) { return component_name("E", i); };
  for (int i = 1; i <= d; ++i) {
    s.components.push_back({e(i)});
    s.strata_d.emplace(ComponentSet{e(i)}, ClassExpr::blowup_p2(d * (d - 1)));
  }
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b) {
      s.strata_d.emplace(ComponentSet{e(a), e(b)}, ClassExpr::projective(1));
      for (int c = b + 1; c <= d; ++c) s.strata_d.emplace(ComponentSet{e(a), e(b), e(c)}, ClassExpr::point());
      for (int r = 1; r <= d; ++r) {
        const std::string f = "F" + std::to_string(a) + "_" + std::to_string(b) + "_" + std::to_string(r);
        s.components.push_back({f});
        s.strata_d.emplace(ComponentSet{f}, ClassExpr::p1xp1());
        s.strata_d.emplace(ComponentSet{f, e(a)}, ClassExpr::projective(1));
        s.strata_d.emplace(ComponentSet{f, e(b)}, ClassExpr::projective(1));
        s.strata_d.emplace(ComponentSet{f, e(a), e(b)}, ClassExpr::point());
      }
    }
  s.relative_dim = 2;
  return s;
}

/// Quartic K3 degenerating to two transverse quadrics meeting along an elliptic
/// curve, with the 16 double points of the total space resolved by P1 x P1's.
inline Stratification k3() {
  Stratification s;
  s.components = {{"Q1"}, {"Q2"}};
  const ClassExpr quadric = ClassExpr::p1xp1() + Integer(16) * ClassExpr::lefschetz();
  s.strata_d.emplace(ComponentSet{"Q1"}, quadric);
  s.strata_d.emplace(ComponentSet{"Q2"}, quadric);
  s.strata_d.emplace(ComponentSet{"Q1", "Q2"}, ClassExpr::curve(1));
  for (int j = 1; j <= 16; ++j) {
    const std::string g = component_name("G", j);
    s.components.push_back({g});
    s.strata_d.emplace(ComponentSet{g}, ClassExpr::p1xp1());
    s.strata_d.emplace(ComponentSet{g, "Q1"}, ClassExpr::projective(1));
    s.strata_d.emplace(ComponentSet{g, "Q2"}, ClassExpr::projective(1));
    s.strata_d.emplace(ComponentSet{g, "Q1", "Q2"}, ClassExpr::point());
  }
  s.relative_dim = 2;
  return s;
}

/// Jordan block counts of the limit fibre's middle cohomology.
inline std::map<std::int64_t, Integer> jordan_of(const Stratification& s) {
  const int n = *s.relative_dim;
  return jordan_block_counts(weight_dims(middle_hodge_numbers(nearby_fibre(s), n), n));
}

/// Polynomial with constant term in [lo, hi] plus a few random integral terms.
inline Poly anchored_poly(Rng& rng, int lo, int hi) {
  Poly p = random_poly(rng, 3, false, false);
  p -= p.coeff(0, 0);
  return p + Poly(uniform(rng, lo, hi));
}

inline std::vector<ComponentSet> subsets_of(const std::vector<std::string>& ids) {
  std::vector<ComponentSet> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << ids.size()); ++mask) {
    ComponentSet J;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (mask & (std::size_t{1} << i)) J.insert(ids[i]);
    out.push_back(J);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

/// Valid stratification on at most `max_components` components: a stratum is kept
/// only when all of its faces were kept, and every kept class has constant term >= 10.
inline Stratification random_stratification(Rng& rng, int max_components = 6) {
  Stratification s;
  std::vector<std::string> ids;
  const int n = uniform(rng, 1, max_components);
  for (int i = 0; i < n; ++i) {
    ids.push_back(component_name("C", i));
    s.components.push_back({ids.back(), uniform(rng, 1, 3)});
  }
  for (const auto& J : subsets_of(ids)) {
    bool faces = true;
    if (J.size() > 1)
      for (const auto& id : J) {
        ComponentSet f = J;
        f.erase(id);
        faces = faces && s.strata_d.contains(f);
      }
    if (faces && (J.size() == 1 || uniform(rng, 0, 3) != 0)) s.strata_d.emplace(J, ClassExpr::literal(anchored_poly(rng, 10, 30)));
  }
  return s;
}

/// Geometrically consistent blow-up centre: Z sits on a nonzero stratum E_A and meets
/// E_B only where E_{A u B} is nonzero; the covers are closed under taking faces.
inline BlowupCenter random_center(Rng& rng, const Stratification& s) {
  std::vector<ComponentSet> strata;
  for (const auto& [J, c] : s.strata_d) strata.push_back(J);
  BlowupCenter ctr;
  ctr.contained_in = strata[uniform(rng, 0, static_cast<int>(strata.size()) - 1)];
  const int a = static_cast<int>(ctr.contained_in.size());
  ctr.codim = uniform(rng, std::max(1, a), a + 2);
  ctr.new_id = "Z";
  std::vector<std::string> rest;
  for (const auto& c : s.components)
    if (!ctr.contained_in.contains(c.id)) rest.push_back(c.id);
  ctr.covers.emplace(ComponentSet{}, ClassExpr::literal(anchored_poly(rng, 1, 3)));
  for (const auto& B : subsets_of(rest)) {
    ComponentSet AB = B;
    AB.insert(ctr.contained_in.begin(), ctr.contained_in.end());
    bool ok = s.strata_d.contains(AB);
    for (const auto& id : B) {
      ComponentSet f = B;
      f.erase(id);
      ok = ok && ctr.covers.contains(f);
    }
    if (ok && uniform(rng, 0, 2) != 0) ctr.covers.emplace(B, ClassExpr::literal(anchored_poly(rng, 1, 3)));
  }
  return ctr;
}

}  // namespace mhc::test
