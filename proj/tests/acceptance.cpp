// Acceptance checks: prints one PASS/FAIL line per criterion and exits nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace mhc;
using test::binom;
using test::Rng;

namespace {

using Counts = std::map<std::int64_t, Integer>;

/// Empty on success, otherwise the first mismatch.
using Check = std::function<std::string()>;

template <class A, class B>
std::string differs(const std::string& what, const A& got, const B& want) {
  std::ostringstream os;
  os << what << ": got " << got << ", expected " << want;
  return os.str();
}

std::string show(const Counts& c) {
  std::string s = "{";
  for (const auto& [m, n] : c) s += (s.size() > 1 ? ", " : "") + std::to_string(m) + ": " + n.str();
  return s + "}";
}

std::string lines_family() {
  for (int d = 2; d <= 8; ++d) {
    const Stratification s = test::lines(d);
    const Poly want = Integer(d - binom(d, 2)) * Poly::from_terms({{{0, 0}, 1}, {{1, 1}, 1}});
    const Poly psi = nearby_fibre(s);
    if (psi != want) return differs("d=" + std::to_string(d) + " nearby", format_poly(psi), format_poly(want));
    const Integer g = binom(d - 1, 2);
    const HodgeStructure h = middle_hodge_numbers(psi, 1);
    if (h.dim(1, 1) != g || h.dim(0, 0) != g || h.dims().size() != (g == 0 ? 0u : 2u))
      return "d=" + std::to_string(d) + ": middle Hodge numbers do not give genus " + g.str();
    Counts blocks;
    if (g != 0) blocks.emplace(2, g);
    const Counts got = test::jordan_of(s);
    if (got != blocks) return differs("d=" + std::to_string(d) + " Jordan", show(got), show(blocks));
  }
  return "";
}

std::string planes_family() {
  for (int d = 2; d <= 6; ++d) {
    const Stratification s = test::planes(d);
    const std::string at = "d=" + std::to_string(d) + " ";
    const Poly one_uv = parse_poly("1 + u*v");
    const Poly d1 = Integer(d) * (1 + Poly::monomial(1, 1, d * d - d + 1) + lefschetz(2)) +
                    Integer(d) * binom(d, 2) * one_uv * one_uv;
    // d(d-1)(d+1/2) = d(d-1)(2d+1)/2 and d(d-1)(2d-1)/3 are integers.
    const Poly d2 = Integer(d * (d - 1) * (2 * d + 1) / 2) * one_uv;
    const Poly d3 = Integer(d * (d - 1) * (2 * d - 1) / 3);
    const Poly psi = Integer(binom(d - 1, 3) + 1) * (1 + lefschetz(2)) + Poly::monomial(1, 1, d * (2 * d * d - 6 * d + 7) / 3);
    if (strata_level_class(s, 1) != d1) return differs(at + "D(1)", format_poly(strata_level_class(s, 1)), format_poly(d1));
    if (strata_level_class(s, 2) != d2) return differs(at + "D(2)", format_poly(strata_level_class(s, 2)), format_poly(d2));
    if (strata_level_class(s, 3) != d3) return differs(at + "D(3)", format_poly(strata_level_class(s, 3)), format_poly(d3));
    if (nearby_fibre(s) != psi) return differs(at + "nearby", format_poly(nearby_fibre(s)), format_poly(psi));
    Counts want;
    if (binom(d - 1, 3) != 0) want.emplace(3, binom(d - 1, 3));
    want.emplace(1, Integer(d * d * d - 2 * d * d + d + 2) / 2);
    if (test::jordan_of(s) != want) return differs(at + "Jordan", show(test::jordan_of(s)), show(want));
  }
  return "";
}

std::string k3_example() {
  const Stratification s = test::k3();
  const Poly psi = nearby_fibre(s);
  if (format_poly(psi) != "1 + v + u + 18*u*v + u*v^2 + u^2*v + u^2*v^2")
    return differs("nearby", format_poly(psi), "1 + u + v + 18uv + u^2v + uv^2 + u^2v^2");
  if (format_unipoly(specialize_v(psi)) != "2 + 20*t + 2*t^2")
    return differs("v=1", format_unipoly(specialize_v(psi)), "2 + 20*t + 2*t^2");
  const Counts want{{1, 18}, {2, 2}};
  if (test::jordan_of(s) != want) return differs("Jordan", show(test::jordan_of(s)), show(want));
  return "";
}

std::string open_closed(int trials) {
  Rng rng(2024);
  for (int i = 0; i < trials; ++i) {
    const Stratification s = test::random_stratification(rng);
    if (nearby_fibre(s) != nearby_fibre_open(s))
      return differs("case " + std::to_string(i), format_poly(nearby_fibre_open(s)), format_poly(nearby_fibre(s)));
  }
  return "";
}

std::string blowup_invariance(int trials) {
  Rng rng(2025);
  for (int i = 0; i < trials; ++i) {
    const Stratification s = test::random_stratification(rng);
    const BlowupCenter c = test::random_center(rng, s);
    const Stratification r = blowup_transform(s, c);
    if (nearby_fibre(r) != nearby_fibre(s))
      return differs("case " + std::to_string(i), format_poly(nearby_fibre(r)), format_poly(nearby_fibre(s)));
  }
  return "";
}

std::string thom_sebastiani_check(int trials) {
  const Poly a2 = parse_poly("u^(1/3)*v^(2/3) + u^(2/3)*v^(1/3)");
  const Poly a1 = parse_poly("u^(1/2)*v^(1/2)");
  const Poly phi = thom_sebastiani(a2, a1);
  const Poly want = -parse_poly("u^(5/6)*v^(7/6) + u^(7/6)*v^(5/6)");
  if (phi != want) return differs("ts", format_poly(phi), format_poly(want));
  if (format_unipoly(saito_spectrum(-phi)) != "t^(5/6) + t^(7/6)")
    return differs("saito", format_unipoly(saito_spectrum(-phi)), "t^(5/6) + t^(7/6)");

  // Oracle: eigenvalue data of A_2 (angles 1/3, 2/3) and A_1 (angle 1/2) convolved.
  const auto x = EquivariantHodgeStructure::make({{{0, Rational(1, 3)}, {{{0, 0}, 1}}}, {{0, Rational(2, 3)}, {{{0, 0}, 1}}}});
  const auto y = EquivariantHodgeStructure::make({{{0, Rational(1, 2)}, {{{0, 0}, 1}}}});
  if (-equiv_hn_poly(convolution(x, y)) != phi) return "convolution of A2 and A1 disagrees with ts";

  Rng rng(2026);
  for (int i = 0; i < trials; ++i) {
    const auto p = test::random_equivariant(rng), q = test::random_equivariant(rng);
    if (equiv_hn_poly(convolution(p, q)) != equiv_hn_poly(p) * equiv_hn_poly(q))
      return "convolution not multiplicative in case " + std::to_string(i);
  }
  return "";
}

std::string homomorphisms(int trials) {
  Rng rng(2027);
  for (int i = 0; i < trials; ++i) {
    const HodgeStructure a = test::random_hodge(rng, i % 2 == 0), b = test::random_hodge(rng, i % 3 == 0);
    const std::string at = "case " + std::to_string(i) + ": ";
    if (hn_poly(direct_sum(a, b)) != hn_poly(a) + hn_poly(b)) return at + "direct sum";
    if (hn_poly(tensor(a, b)) != hn_poly(a) * hn_poly(b)) return at + "tensor";
    if (hn_poly(hom(a, b)) != invert_vars(hn_poly(a)) * hn_poly(b)) return at + "Hom";
    if (dual(dual(a)) != a) return at + "double dual";
  }
  return "";
}

/// Orbit counts from the fan of P^n: cones are the proper subsets of the n+1 rays,
/// and a cone of dimension k closes off an orbit of dimension n-k.
std::vector<Integer> projective_orbits(int n) {
  std::vector<Integer> s(n + 1, 0);
  for (unsigned mask = 0; mask + 1 < (1u << (n + 1)); ++mask) s[n - std::popcount(mask)] += 1;
  return s;
}

std::string toric_formula() {
  for (int n = 1; n <= 3; ++n) {
    const Poly got = eval_class(ClassExpr::toric(projective_orbits(n)));
    const Poly want = eval_class(ClassExpr::projective(n));
    if (got != want) return differs("P^" + std::to_string(n), format_poly(got), format_poly(want));
  }
  return "";
}

std::string parser_round_trip(int trials) {
  Rng rng(2028);
  const std::string alphabet = "uv0123456789+-*^()/ x";
  for (int i = 0; i < trials; ++i) {
    const Poly p = test::random_poly(rng, 8);
    const std::string text = format_poly(p);
    if (parse_poly(text) != p) return "round trip failed for " + text;

    std::string bad = text;
    switch (test::uniform(rng, 0, 2)) {
      case 0: bad.insert(test::uniform(rng, 0, static_cast<int>(bad.size())), 1, alphabet[test::uniform(rng, 0, 20)]); break;
      case 1: bad.erase(test::uniform(rng, 0, static_cast<int>(bad.size()) - 1), 1); break;
      default: bad.resize(test::uniform(rng, 0, static_cast<int>(bad.size()))); break;
    }
    try {
      parse_poly(bad);
    } catch (const ParseError& e) {
      if (e.offset() > bad.size()) return "error offset past the end for \"" + bad + "\"";
    } catch (const std::exception& e) {
      return "unpositioned error for \"" + bad + "\": " + e.what();
    }
  }
  return "";
}

}  // namespace

int main() {
  constexpr int kTrials = 1000;
  const std::vector<std::pair<std::string, Check>> criteria{
      {"AC1 lines: nearby fibre, genus and Jordan blocks for d = 2..8", lines_family},
      {"AC2 planes: level classes, nearby fibre and Jordan blocks for d = 2..6", planes_family},
      {"AC3 K3 from two quadrics: nearby fibre, v = 1 specialization, Jordan blocks", k3_example},
      {"AC4 open and closed strata formulas agree on 1000 random stratifications", [] { return open_closed(kTrials); }},
      {"AC5 nearby fibre invariant under 1000 random blow-ups", [] { return blowup_invariance(kTrials); }},
      {"AC6 Thom-Sebastiani for the cusp and multiplicativity of convolution", [] { return thom_sebastiani_check(kTrials); }},
      {"AC7 Hodge number polynomial respects sum, tensor, Hom and double dual", [] { return homomorphisms(kTrials); }},
      {"AC8 toric orbit counts reproduce projective spaces P^1..P^3", toric_formula},
      {"AC9 parser round trip and positioned errors on 1000 random inputs", [] { return parser_round_trip(kTrials); }},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %s  (%.0f ms)%s%s\n", problem.empty() ? "PASS" : "FAIL", name.c_str(), ms,
                problem.empty() ? "" : "\n      ", problem.c_str());
    failed += !problem.empty();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
