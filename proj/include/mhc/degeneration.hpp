#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mhc/classes.hpp"
#include "mhc/error.hpp"
#include "mhc/hodge.hpp"
#include "mhc/ring.hpp"

namespace mhc {

/// A set of component ids naming an intersection stratum.
using ComponentSet = std::set<std::string>;

struct Component {
  std::string id;
  int multiplicity = 1;
};

using StrataMap = std::map<ComponentSet, ClassExpr>;

/// Normal-crossing special fibre of a one-parameter degeneration.
///
/// `strata_d` holds the classes [D_J] of the cyclic covers of the closed strata E_J;
/// subsets that are absent have class 0. `strata_e` optionally holds the classes
/// [E_J] of the reduced strata; when it is absent and every multiplicity is 1 the
/// reduced strata coincide with the covers.
struct Stratification {
  std::vector<Component> components;
  StrataMap strata_d;
  std::optional<StrataMap> strata_e;
  std::optional<int> relative_dim;

  bool has_component(const std::string& id) const {
    for (const auto& c : components)
      if (c.id == id) return true;
    return false;
  }
  bool all_reduced() const {
    for (const auto& c : components)
      if (c.multiplicity != 1) return false;
    return true;
  }
};

struct StratificationIssue {
  enum class Kind { duplicate_component, bad_multiplicity, empty_subset, unknown_component, closure };
  Kind kind;
  ComponentSet subset;
  std::string message;
};

inline std::string format_subset(const ComponentSet& s) {
  std::string r = "{";
  for (const auto& id : s) r += (r.size() > 1 ? "," : "") + id;
  return r + "}";
}

namespace detail {

/// Evaluated strata with zero classes dropped.
inline std::map<ComponentSet, Poly> evaluate_strata(const StrataMap& strata) {
  std::map<ComponentSet, Poly> out;
  for (const auto& [J, cls] : strata) {
    Poly p = cls.evaluate();
    if (!p.is_zero()) out.emplace(J, std::move(p));
  }
  return out;
}

inline void check_strata(const Stratification& s, const StrataMap& strata, const char* label,
                         std::vector<StratificationIssue>& issues) {
  using Kind = StratificationIssue::Kind;
  for (const auto& [J, cls] : strata) {
    if (J.empty()) {
      issues.push_back({Kind::empty_subset, J, std::string(label) + " stratum keyed on the empty subset"});
      continue;
    }
    for (const auto& id : J)
      if (!s.has_component(id))
        issues.push_back({Kind::unknown_component, J,
                          std::string(label) + " stratum " + format_subset(J) + " references undeclared component '" +
                              id + "'"});
  }
  // Closure: a nonzero stratum forces every face to be nonzero. Checking the
  // codimension-one faces of every nonzero stratum covers all faces by induction.
  auto nonzero = evaluate_strata(strata);
  for (const auto& [J, cls] : nonzero) {
    if (J.size() < 2) continue;
    for (const auto& id : J) {
      ComponentSet face = J;
      face.erase(id);
      if (!nonzero.contains(face))
        issues.push_back({Kind::closure, J,
                          std::string(label) + " stratum " + format_subset(J) + " is nonzero but its face " +
                              format_subset(face) + " has class 0"});
    }
  }
}

}  // namespace detail

/// Every violated invariant, in a deterministic order. Empty means valid.
inline std::vector<StratificationIssue> validate_stratification(const Stratification& s) {
  using Kind = StratificationIssue::Kind;
  std::vector<StratificationIssue> issues;
  std::set<std::string> seen;
  for (const auto& c : s.components) {
    if (!seen.insert(c.id).second)
      issues.push_back({Kind::duplicate_component, {c.id}, "component '" + c.id + "' declared twice"});
    if (c.multiplicity < 1)
      issues.push_back({Kind::bad_multiplicity, {c.id},
                        "component '" + c.id + "' has non-positive multiplicity " + std::to_string(c.multiplicity)});
  }
  detail::check_strata(s, s.strata_d, "D", issues);
  if (s.strata_e) detail::check_strata(s, *s.strata_e, "E", issues);
  return issues;
}

inline void require_valid(const Stratification& s) {
  auto issues = validate_stratification(s);
  if (issues.empty()) return;
  std::string msg = "invalid stratification:";
  for (const auto& i : issues) msg += "\n  " + i.message;
  throw PreconditionError(msg);
}

/// [D(m)]: sum of the classes of all m-fold strata.
inline Poly strata_level_class(const Stratification& s, int m) {
  if (m < 1) throw PreconditionError("stratum level must be >= 1, got " + std::to_string(m));
  require_valid(s);
  Poly r;
  for (const auto& [J, cls] : s.strata_d)
    if (J.size() == static_cast<std::size_t>(m)) r += cls.evaluate();
  return r;
}

namespace detail {

inline bool is_subset(const ComponentSet& small, const ComponentSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline Poly open_class(const std::map<ComponentSet, Poly>& closed, const ComponentSet& J) {
  Poly r;
  for (const auto& [K, p] : closed) {
    if (!is_subset(J, K)) continue;
    if ((K.size() - J.size()) % 2 == 0) {
      r += p;
    } else {
      r -= p;
    }
  }
  return r;
}

}  // namespace detail

/// [D^0_J]: the part of D_J lying on no further component, by Moebius inversion
/// over the strata containing J.
inline Poly open_stratum_class(const Stratification& s, const ComponentSet& J) {
  if (J.empty()) throw PreconditionError("open stratum needs a nonempty subset");
  for (const auto& id : J)
    if (!s.has_component(id)) throw PreconditionError("unknown component '" + id + "'");
  require_valid(s);
  return detail::open_class(detail::evaluate_strata(s.strata_d), J);
}

/// Motivic nearby fibre: sum over strata of (-1)^{|J|-1} [D_J] [P^{|J|-1}].
inline Poly nearby_fibre(const Stratification& s) {
  require_valid(s);
  Poly r;
  for (const auto& [J, p] : detail::evaluate_strata(s.strata_d)) {
    Poly term = p * projective(static_cast<int>(J.size()) - 1);
    if (J.size() % 2 == 1) {
      r += term;
    } else {
      r -= term;
    }
  }
  return r;
}

/// Same quantity through the open strata: sum of (-1)^{j-1} [D^0(j)] (uv - 1)^{j-1}.
inline Poly nearby_fibre_open(const Stratification& s) {
  require_valid(s);
  auto closed = detail::evaluate_strata(s.strata_d);
  Poly r;
  for (const auto& [J, p] : closed) {
    Poly term = detail::open_class(closed, J) * torus(static_cast<int>(J.size()) - 1);
    if (J.size() % 2 == 1) {
      r += term;
    } else {
      r -= term;
    }
  }
  return r;
}

/// [E] by inclusion-exclusion over the reduced strata.
inline Poly special_fibre_class(const Stratification& s) {
  require_valid(s);
  const StrataMap* strata = nullptr;
  if (s.strata_e) {
    strata = &*s.strata_e;
  } else if (s.all_reduced()) {
    strata = &s.strata_d;
  } else {
    throw PreconditionError("special fibre class needs reduced strata classes when some multiplicity exceeds 1");
  }
  Poly r;
  for (const auto& [J, cls] : *strata) {
    if (J.size() % 2 == 1) {
      r += cls.evaluate();
    } else {
      r -= cls.evaluate();
    }
  }
  return r;
}

/// Motivic vanishing fibre: nearby fibre minus [E].
inline Poly vanishing_fibre(const Stratification& s) { return nearby_fibre(s) - special_fibre_class(s); }

/// A blow-up of the total space along a connected submanifold Z of the special fibre.
struct BlowupCenter {
  ComponentSet contained_in;              // A: the components containing Z
  int codim = 1;                          // c = codim(Z, X)
  std::map<ComponentSet, ClassExpr> covers;  // [W_B] for B disjoint from A; absent means 0
  std::string new_id;                     // id of the exceptional component
};

/// Strata of the blown-up degeneration. For an old subset J with K = J n A and
/// B = J \ A the classes become
///   [D'_J]       = [D_J] + [W_B] ([P^{c-|K|-1}] - 1)
///   [D'_{J+new}] = [W_B] [P^{c-|K|-1}]
/// with [P^-1] = 0. The exceptional component gets multiplicity sum_{i in A} e_i.
/// Reduced strata are not transformed; the result carries covers only.
inline Stratification blowup_transform(const Stratification& s, const BlowupCenter& ctr) {
  require_valid(s);
  const auto& A = ctr.contained_in;
  if (A.empty()) throw PreconditionError("blow-up centre must lie on at least one component");
  for (const auto& id : A)
    if (!s.has_component(id)) throw PreconditionError("blow-up centre references unknown component '" + id + "'");
  if (ctr.codim < 1 || ctr.codim < static_cast<int>(A.size()))
    throw PreconditionError("blow-up codimension " + std::to_string(ctr.codim) + " is below max(1, |A|) = " +
                            std::to_string(std::max<std::size_t>(1, A.size())));
  if (ctr.new_id.empty() || s.has_component(ctr.new_id))
    throw PreconditionError("exceptional component id '" + ctr.new_id + "' must be fresh and nonempty");
  if (A.size() > 24) throw PreconditionError("blow-up centre lies on too many components");
  for (const auto& [B, w] : ctr.covers)
    for (const auto& id : B) {
      if (!s.has_component(id)) throw PreconditionError("cover subset references unknown component '" + id + "'");
      if (A.contains(id))
        throw PreconditionError("cover subset " + format_subset(B) + " meets the centre's components");
    }

  std::map<ComponentSet, Poly> out = detail::evaluate_strata(s.strata_d);
  const std::vector<std::string> a_ids(A.begin(), A.end());
  const std::size_t n_subsets = std::size_t{1} << a_ids.size();

  for (const auto& [B, w] : detail::evaluate_strata(ctr.covers)) {
    for (std::size_t mask = 0; mask < n_subsets; ++mask) {
      ComponentSet J = B;
      int k = 0;
      for (std::size_t i = 0; i < a_ids.size(); ++i)
        if (mask & (std::size_t{1} << i)) {
          J.insert(a_ids[i]);
          ++k;
        }
      const Poly fibre = projective(ctr.codim - k - 1);
      if (!J.empty()) out[J] += w * (fibre - 1);
      ComponentSet with_new = J;
      with_new.insert(ctr.new_id);
      out[with_new] += w * fibre;
    }
  }

  Stratification r;
  r.components = s.components;
  int mult = 0;
  for (const auto& c : s.components)
    if (A.contains(c.id)) mult += c.multiplicity;
  r.components.push_back({ctr.new_id, mult});
  for (auto& [J, p] : out)
    if (!p.is_zero()) r.strata_d.emplace(J, ClassExpr::literal(std::move(p)));
  r.relative_dim = s.relative_dim;
  return r;
}

/// Hodge numbers of the middle cohomology H^n of the limit fibre, read off the nearby
/// fibre class under the hypothesis that every other H^j is spanned by a class of
/// type (j/2, j/2) for even j and vanishes for odd j.
inline HodgeStructure middle_hodge_numbers(const Poly& psi, int n) {
  if (n < 0) throw PreconditionError("relative dimension must be >= 0");
  Poly rest = psi;
  for (int j = 0; j <= 2 * n; j += 2)
    if (j != n) rest -= lefschetz(j / 2);
  if (n % 2 == 1) rest = -rest;
  HodgeTable table(rest.terms().begin(), rest.terms().end());
  if (auto bad = validate_hodge_table(table))
    throw PreconditionError("nearby fibre is inconsistent with one-dimensional outer cohomology: " + bad->message());
  return HodgeStructure::unchecked(table);
}

}  // namespace mhc
