#pragma once

// Hand-rolled random generators and independent oracles shared by the tests.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "blowchern/io.hpp"

namespace testsupport {

using namespace blowchern;

inline Rational small_rational(std::mt19937_64& rng, int span = 4, int max_den = 3) {
  std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Random polynomial with terms of degree <= max_degree.
inline GradedPoly random_poly(std::mt19937_64& rng, const TablePtr& t, int max_degree, int max_terms = 6) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<std::size_t> pick(0, t->size() - 1);
  GradedPoly out(t);
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    std::vector<std::uint16_t> e(t->size(), 0);
    std::uniform_int_distribution<int> deg(0, max_degree);
    int target = deg(rng), got = 0;
    for (int guard = 0; guard < 20 && got < target; ++guard) {
      std::size_t v = pick(rng);
      if (got + (*t)[v].degree > target) continue;
      ++e[v];
      got += (*t)[v].degree;
    }
    out += GradedPoly::monomial(t, Monomial(e, *t), small_rational(rng));
  }
  return out;
}

/// Random homogeneous polynomial of the given degree in the degree-1 variables of t.
inline GradedPoly random_homogeneous(std::mt19937_64& rng, const TablePtr& t, int degree, int max_terms = 4) {
  std::vector<std::size_t> linear;
  for (std::size_t i = 0; i < t->size(); ++i) {
    if ((*t)[i].degree == 1) linear.push_back(i);
  }
  std::uniform_int_distribution<std::size_t> pick(0, linear.size() - 1);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  GradedPoly out(t);
  if (degree == 0) return GradedPoly::constant(t, small_rational(rng));
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    std::vector<std::uint16_t> e(t->size(), 0);
    for (int j = 0; j < degree; ++j) ++e[linear[pick(rng)]];
    out += GradedPoly::monomial(t, Monomial(e, *t), small_rational(rng));
  }
  return out;
}

/// Random linear forms used as formal Chern roots.
inline std::vector<GradedPoly> random_roots(std::mt19937_64& rng, const TablePtr& t, int count) {
  std::vector<GradedPoly> roots;
  for (int i = 0; i < count; ++i) roots.push_back(random_homogeneous(rng, t, 1, 3));
  return roots;
}

/// Splitting-principle oracle: prod (1 + r_i), expanded directly.
inline GradedPoly total_from_roots(const TablePtr& t, const std::vector<GradedPoly>& roots) {
  GradedPoly out = GradedPoly::constant(t, 1);
  for (const auto& r : roots) out = out * (GradedPoly::constant(t, 1) + r);
  return out;
}

inline BundleClass bundle_from_roots(const RingPtr& ring, const std::vector<GradedPoly>& roots) {
  return BundleClass::from_total(ring, static_cast<int>(roots.size()),
                                 ring->reduce(total_from_roots(ring->table(), roots)));
}

/// Random formal bundle: random homogeneous c_i, not necessarily split.
inline BundleClass random_bundle(std::mt19937_64& rng, const RingPtr& ring, int rank) {
  std::vector<GradedPoly> c{ring->one()};
  for (int i = 1; i <= rank; ++i) c.push_back(ring->reduce(random_homogeneous(rng, ring->table(), i)));
  return BundleClass(ring, rank, std::move(c));
}

/// Complete homogeneous symmetric polynomial h_k of the roots: the Segre
/// class s_k of a split bundle is (-1)^k h_k.
inline GradedPoly complete_homogeneous(const TablePtr& t, const std::vector<GradedPoly>& roots, int k) {
  // h_k(r_1..r_m) = sum_j r_m^j h_{k-j}(r_1..r_{m-1}).
  std::vector<GradedPoly> h(k + 1, GradedPoly(t));
  h[0] = GradedPoly::constant(t, 1);
  for (const auto& r : roots) {
    std::vector<GradedPoly> next(k + 1, GradedPoly(t));
    for (int a = 0; a <= k; ++a) {
      GradedPoly rp = GradedPoly::constant(t, 1);
      for (int j = 0; j <= a; ++j) {
        next[a] += rp * h[a - j];
        rp = rp * r;
      }
    }
    h = std::move(next);
  }
  return h[k];
}

/// Applies rewrite rules in a random order, one occurrence at a time, then
/// truncates. Used to test confluence of RingPresentation::reduce.
inline GradedPoly reduce_randomly(std::mt19937_64& rng, const RingPresentation& ring, GradedPoly p) {
  const auto& t = ring.table();
  for (int guard = 0; guard < 100000; ++guard) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < p.terms().size(); ++i) {
      const auto& m = p.terms()[i].mono;
      for (std::size_t v = 0; v < t->size(); ++v) {
        const RewriteRule* r = ring.rule_for(v);
        if (r && m.exponent(v) >= r->power) {
          candidates.push_back(i);
          break;
        }
      }
    }
    if (candidates.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const Term term = p.terms()[candidates[pick(rng)]];
    std::vector<const RewriteRule*> rules;
    for (std::size_t v = 0; v < t->size(); ++v) {
      const RewriteRule* r = ring.rule_for(v);
      if (r && term.mono.exponent(v) >= r->power) rules.push_back(r);
    }
    std::uniform_int_distribution<std::size_t> pick_rule(0, rules.size() - 1);
    const RewriteRule* r = rules[pick_rule(rng)];
    GradedPoly single = GradedPoly::monomial(t, term.mono, term.coeff);
    GradedPoly rest = GradedPoly::monomial(
        t, term.mono.with_exponent(r->var, term.mono.exponent(r->var) - r->power, *t), term.coeff);
    p = p - single + rest * r->replacement;
  }
  return ring.dim() ? truncate(p, *ring.dim()) : p;
}

}  // namespace testsupport
