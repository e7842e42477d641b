// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "support/generators.hpp"

using namespace blowchern;
using namespace testsupport;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " [" << what << "]";
    }
  }
  void require(const VerificationReport& r) { require(r.pass, to_text(r)); }
};

// alpha built from scratch over Q[n1..nd][z] with only ring primitives, then
// pushed forward by the Segre rule: the expected value is d - 1.
Rational independent_pushforward_of_alpha(int d) {
  const int D = 2 * d + 2;
  std::vector<VarTable::Entry> vars;
  for (int i = 1; i <= d; ++i) vars.push_back({"n" + std::to_string(i), i});
  auto base = RingPresentation::free(vars, D);
  std::vector<GradedPoly> c{base->one()};
  for (int i = 1; i <= d; ++i) c.push_back(base->var("n" + std::to_string(i)));
  RingPtr xt = projective_bundle_ring(base, c, d, "z", D);
  GradedPoly z = xt->var("z"), one = xt->one();
  GradedPoly bracket = xt->zero();
  for (int i = 0; i <= d; ++i) {
    GradedPoly ci = embed(c[d - i], xt->table());
    bracket += ci;
    bracket -= (one - z) * power(one + z, static_cast<unsigned>(i)) * ci;
  }
  GradedPoly alpha = xt->reduce(exact_div_by_var(bracket, "z"));
  GradedPoly pushed = segre_pushforward(alpha, c, d, "z", base).value();
  if (!pushed.homogeneous_degree(0)) return -1000;
  return pushed.constant_term();
}

// chi of a smooth complete intersection of the given degrees in P^n, read off
// (1+h)^(n+1) / prod (1 + a h) with plain rational series arithmetic.
Rational ci_euler(int n, const std::vector<int>& degrees) {
  const int dim = n - static_cast<int>(degrees.size());
  std::vector<Rational> s(dim + 1, 0);
  // (1+h)^(n+1) coefficients
  for (int k = 0; k <= dim; ++k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n + 1, k);
    s[k] = Rational(b);
  }
  for (int a : degrees) {
    // divide by (1 + a h)
    for (int k = 1; k <= dim; ++k) s[k] -= a * s[k - 1];
  }
  Rational prod = 1;
  for (int a : degrees) prod *= a;
  return s[dim] * prod;
}

Outcome ac1() {
  Outcome o;
  for (int d = 1; d <= 8; ++d) {
    auto r = verify_pushforward_identity(d);
    o.require(r);
    o.require(r.elapsed_ms < 1000.0, "d=" + std::to_string(d) + " took " + std::to_string(r.elapsed_ms) + " ms");
    o.require(independent_pushforward_of_alpha(d) == d - 1, "independent g_*alpha at d=" + std::to_string(d));
  }
  return o;
}

Outcome ac2() {
  Outcome o;
  for (int d = 1; d <= 8; ++d) o.require(verify_restriction_identity(d));
  auto r = verify_restriction_identity(2);
  auto ctx = universal_context(2, 0, default_max_degree(2));
  GradedPoly expected = ctx->ringXt->parse("1 + n1 + 2*n2 + (1 + n1)*z");
  GradedPoly reported = ctx->ringXt->parse(r.parameters["lhs"].get<std::string>());
  o.require(reported == expected, "d=2 lhs " + reported.to_string());
  // Hand value of the right side at d = 2: (1 - z)(1 + n1 + n2 + 2z + n1 z + z^2).
  GradedPoly rhs = ctx->ringXt->parse("(1 - z)*(1 + n1 + n2 + 2*z + n1*z + z^2)");
  o.require(rhs == expected, "d=2 rhs " + rhs.to_string());
  return o;
}

Outcome ac3() {
  Outcome o;
  for (int d = 1; d <= 6; ++d) {
    for (int e = d; e <= d + 3; ++e) o.require(verify_oldrec_equals_porteous(d, e));
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  for (int d = 1; d <= 6; ++d) o.require(verify_difflp_equals_porteous(d));
  return o;
}

Outcome ac5() {
  Outcome o;
  for (int d = 1; d <= 5; ++d) o.require(verify_simlem_equals_main(d, 20, 1000 + d));
  return o;
}

Outcome ac6() {
  Outcome o;
  o.require(verify_codim_one());
  auto ctx = universal_context(1, 0, 6);
  o.require(porteous_alpha(*ctx).is_zero(), "alpha at d=1");
  o.require(porteous_delta(ctx, ctx->ringX->parse("1 + h + n1^2")).is_zero(), "Porteous term at d=1");
  // Log-tangent factor (1 - z)(1 + Z1 + z)/(1 + Z1) under z = -Z1.
  auto t = VarTable::make({{"z", 1}, {"Z1", 1}});
  GradedPoly z = GradedPoly::variable(t, "z"), Z1 = GradedPoly::variable(t, "Z1");
  GradedPoly one = GradedPoly::constant(t, 1);
  GradedPoly raw = (one - z) * (one + Z1 + z) * series_inverse(one + Z1, 6);
  GradedPoly factor = truncate(subst(raw, {{"z", -Z1}}, t), 6);
  o.require(factor == one, "log-tangent factor " + factor.to_string());
  return o;
}

Outcome ac7() {
  Outcome o;
  auto bp = blowup_total_chern(linear_scenario(2, 0));
  o.require(bp.pushed.to_string() == "1 + 3*H + 4*H^2", "Bl_pt P2 pushforward " + bp.pushed.to_string());
  o.require(bp.chi == 4, "Bl_pt P2 chi");
  auto bl = blowup_total_chern(linear_scenario(3, 1));
  o.require(bl.chi == 6, "Bl_line P3 chi");
  o.require(bl.pushed.component(1) == bl.ctx->ringY->parse("4*H"), "Bl_line P3 degree-one part");
  auto bc = blowup_total_chern(ci_scenario(3, {2, 2}));
  o.require(bc.chi == 4, "Bl_CI(2,2) P3 chi");

  auto all = catalog();
  o.require(all.size() >= 10, "catalog size");
  for (const auto& s : all) {
    o.require(euler_identity_check(s));
    Rational chi_x = std::holds_alternative<LinearCenter>(s.center)
                         ? Rational(std::get<LinearCenter>(s.center).dim + 1)
                         : ci_euler(s.ambient_dim, s.normal_degrees());
    Rational expected = Rational(s.ambient_dim + 1) + Rational(s.codim() - 1) * chi_x;
    o.require(blowup_total_chern(s).chi == expected, s.label + " chi oracle");
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  auto r = RingPresentation::free({{"a", 1}, {"b", 1}, {"c", 1}, {"u", 2}}, 8);
  std::mt19937_64 rng(8080);
  int cases = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int ra = 1 + static_cast<int>(rng() % 4), rb = 1 + static_cast<int>(rng() % 4);
    auto xa = random_roots(rng, r->table(), ra);
    auto xb = random_roots(rng, r->table(), rb);
    BundleClass A = bundle_from_roots(r, xa), B = bundle_from_roots(r, xb);
    std::vector<GradedPoly> both = xa, neg, shifted;
    both.insert(both.end(), xb.begin(), xb.end());
    GradedPoly l = random_homogeneous(rng, r->table(), 1, 2);
    for (const auto& x : xa) {
      neg.push_back(-x);
      shifted.push_back(x + l);
    }
    bool ok = whitney_sum(A, B) == bundle_from_roots(r, both) && dual(A) == bundle_from_roots(r, neg) &&
              tensor_line(A, l) == bundle_from_roots(r, shifted) && quotient_chern(whitney_sum(A, B), A) == B;
    o.require(ok, "case " + std::to_string(trial));
    ++cases;
  }
  o.require(cases >= 200, "case count");
  return o;
}

Outcome ac9() {
  Outcome o;
  for (int dp = 0; dp <= 5; ++dp) {
    for (int e = 0; e <= 3; ++e) {
      auto r = verify_newnormal_extremes(dp, e);
      o.require(r);
      o.require(r.parameters.contains("twist"), "twist not recorded");
    }
  }
  o.notes << " twist=" << to_string(Twist::MinusExceptional);
  return o;
}

Outcome ac10() {
  Outcome o;
  for (int d = 1; d <= 8; ++d) o.require(verify_self_intersection(d));
  for (int d = 1; d <= 4; ++d) o.require(verify_key_formula(d));
  // Independent: with e = j_*(-1), j^*(e) = zeta and e^2 = j_*(-zeta) in codimension 3.
  auto ctx = universal_context(3, 0, 8);
  BlowupClass e = BlowupClass::minus_exceptional(ctx);
  o.require(bl_restrict(e) == ctx->zeta_class(), "j^*e");
  o.require(bl_equal(e * e, BlowupClass::j_push(ctx, -ctx->zeta_class())), "e^2");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 universal pushforward identity, d=1..8", ac1},
      {"AC2 universal restriction identity, d=1..8", ac2},
      {"AC3 operator form equals Porteous, d<=6, rank E<=d+3", ac3},
      {"AC4 log-tangent form equals Porteous, d<=6", ac4},
      {"AC5 global-bundle normal class equals parsed operator, d<=5", ac5},
      {"AC6 codimension-one degeneracy", ac6},
      {"AC7 concrete scenarios and catalog Euler identity", ac7},
      {"AC8 bundle calculus against splitting oracle", ac8},
      {"AC9 proper-transform operator extremes, d'<=5", ac9},
      {"AC10 self-intersection d<=8 and key formula d<=4", ac10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes << " exception: " << e.what();
    }
    double ms = elapsed_ms_since(start);
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << static_cast<long>(ms) << " ms)" << o.notes.str()
              << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << (failed ? "acceptance: FAILED" : "acceptance: all criteria passed") << "\n";
  return failed ? 1 : 0;
}
