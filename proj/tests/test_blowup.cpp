#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace blowchern;
using namespace testsupport;

namespace {

GradedPoly xt_poly(const ContextPtr& ctx, const std::string& s) { return ctx->ringXt->parse(s); }

}  // namespace

// ------------------------------------------------------------------ context

TEST(Context, UniversalProjectionFormulaOnGenerators) {
  for (int d = 1; d <= 4; ++d) {
    auto ctx = universal_context(d, 1, 2 * d + 2);
    const auto& ry = ctx->ringY;
    const auto& rx = ctx->ringX;
    std::vector<GradedPoly> ys{ry->one(), ry->var("H"), ry->var("q1")};
    std::vector<GradedPoly> xs{rx->one(), rx->var("h"), rx->var("q1")};
    for (int i = 1; i <= d; ++i) {
      ys.push_back(ry->var("n" + std::to_string(i)));
      xs.push_back(rx->var("n" + std::to_string(i)));
    }
    for (const auto& a : ys) {
      for (const auto& b : xs) {
        ASSERT_EQ(ctx->push_i(rx->reduce(ctx->pull_i(a) * b)), ry->reduce(a * ctx->push_i(b)));
      }
    }
  }
}

TEST(Context, ZetaSatisfiesGrothendieckRelation) {
  for (int d = 1; d <= 5; ++d) {
    auto ctx = universal_context(d, 0, 2 * d + 2);
    const auto& xt = ctx->ringXt;
    GradedPoly rel = xt->zero();
    auto c = ctx->chern_on_xt();
    for (int i = 0; i <= d; ++i) rel += c[i] * power(ctx->zeta_class(), static_cast<unsigned>(d - i));
    ASSERT_TRUE(xt->reduce(rel).is_zero()) << "d = " << d;
  }
}

TEST(Context, SplitContextNormalBundle) {
  auto ctx = split_context(3, 8);
  EXPECT_EQ(ctx->N.total(), ctx->ringX->parse("(1+z1)*(1+z2)*(1+z3)"));
  EXPECT_EQ(ctx->push_i(ctx->ringX->one()), ctx->ringY->parse("Z1*Z2*Z3"));
  EXPECT_EQ(ctx->pull_i(ctx->ringY->parse("H + Z2")), ctx->ringX->parse("h + z2"));
}

TEST(Context, GlobalBundleContext) {
  auto ry = RingPresentation::free({{"H", 1}, {"K", 1}}, 6);
  BundleClass nhat = BundleClass::from_total(ry, 2, ry->parse("1 + H + 2*K + H*K"));
  auto ctx = global_bundle_context(ry, nhat);
  EXPECT_EQ(ctx->d, 2);
  EXPECT_EQ(ctx->N.total(), ctx->ringX->parse("1 + h + 2*k + h*k"));
  EXPECT_EQ(ctx->push_i(ctx->ringX->one()), ry->parse("H*K"));
  EXPECT_EQ(ctx->push_i(ctx->ringX->var("h")), ry->parse("H^2*K"));
}

TEST(Context, RejectsBadCodimension) {
  EXPECT_THROW(universal_context(0, 0, 4), Error);
  EXPECT_THROW(split_context(0, 4), Error);
}

// ------------------------------------------------------------------ Porteous

TEST(Porteous, AlphaExamples) {
  auto u1 = universal_context(1, 0, 6);
  EXPECT_TRUE(porteous_alpha(*u1).is_zero());
  EXPECT_EQ(porteous_alpha_raw(*u1), parse_poly("n1 + z", u1->ringXt->table()));

  auto pt = scenario_context(linear_scenario(2, 0));
  EXPECT_EQ(porteous_alpha(*pt).value(), xt_poly(pt, "-1 + z"));
  EXPECT_EQ(porteous_alpha_raw(*pt), parse_poly("-1 + z + z^2", pt->ringXt->table()));

  auto u2 = universal_context(2, 0, 6);
  EXPECT_EQ(porteous_alpha_raw(*u2), parse_poly("n2 - 1 + (1 + n1)*z + z^2", u2->ringXt->table()));
  EXPECT_EQ(porteous_alpha(*u2).value(), xt_poly(u2, "-1 + z"));
}

TEST(Porteous, BracketIsDivisibleByZeta) {
  for (int d = 1; d <= 8; ++d) {
    auto ctx = universal_context(d, 0, 2 * d + 2);
    GradedPoly b = porteous_bracket(*ctx);
    ASSERT_EQ(exact_div_by_var(b, "z") * GradedPoly::variable(b.table(), "z"), b);
  }
}

TEST(Porteous, DeltaExamples) {
  auto u1 = universal_context(1, 0, 6);
  EXPECT_TRUE(porteous_delta(u1, u1->ringX->parse("1 + h + n1")).is_zero());

  auto pt = scenario_context(linear_scenario(2, 0));
  BlowupClass delta = porteous_delta(pt, pt->ringX->one());
  EXPECT_TRUE(delta.y_part().is_zero());
  EXPECT_EQ(delta.x_part(), xt_poly(pt, "-1 + z"));
  EXPECT_TRUE(porteous_delta(pt, pt->ringX->zero()).is_zero());
}

// ---------------------------------------------------------- blow-up classes

TEST(BlowupClass, PushforwardExamples) {
  auto ctx = universal_context(2, 0, 6);
  GradedPoly b = ctx->ringY->parse("1 + H + n1*H");
  EXPECT_EQ(bl_pushforward(BlowupClass::f_pull(ctx, b)), b);
  EXPECT_EQ(bl_pushforward(BlowupClass::j_push(ctx, ctx->zeta_class())), ctx->push_i(ctx->ringX->one()));
  EXPECT_TRUE(bl_pushforward(BlowupClass::j_push(ctx, ctx->ringXt->one())).is_zero());
}

TEST(BlowupClass, RestrictionExamples) {
  auto ctx = universal_context(3, 0, 8);
  EXPECT_EQ(bl_restrict(BlowupClass::f_pull(ctx, ctx->ringY->one())), ctx->ringXt->one());
  EXPECT_EQ(bl_restrict(BlowupClass::j_push(ctx, ctx->ringXt->one())), -ctx->zeta_class());
  EXPECT_EQ(bl_restrict(BlowupClass::minus_exceptional(ctx)), ctx->zeta_class());
}

TEST(BlowupClass, EqualityExamples) {
  auto ctx = universal_context(2, 0, 6);
  BlowupClass a = BlowupClass::f_pull(ctx, ctx->ringY->parse("1 + H")) +
                  BlowupClass::j_push(ctx, xt_poly(ctx, "z + h"));
  EXPECT_TRUE(bl_equal(a, a));
  EXPECT_FALSE(bl_equal(a, a + BlowupClass::j_push(ctx, ctx->ringXt->one())));
  // Two representations of f^*[X].
  GradedPoly top = ctx->ringXt->reduce(ctx->chern_on_xt()[1] + ctx->zeta_class());
  EXPECT_TRUE(bl_equal(BlowupClass::f_pull(ctx, ctx->cycle), BlowupClass::j_push(ctx, top)));
}

TEST(BlowupClass, ContextMismatch) {
  auto a = universal_context(2, 0, 6), b = universal_context(2, 0, 6);
  try {
    (void)(BlowupClass::zero(a) + BlowupClass::zero(b));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::context_mismatch);
  }
}

TEST(BlowupClass, MissingMaps) {
  BlowupContext raw = *universal_context(2, 0, 6);
  raw.lift.reset();
  auto no_push = make_context(raw, 6);
  try {
    bl_pushforward(BlowupClass::j_push(no_push, no_push->ringXt->one()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::no_pushforward);
  }
  BlowupContext raw2 = *universal_context(2, 0, 6);
  raw2.pull.reset();
  auto no_pull = make_context(raw2, 6);
  try {
    bl_restrict(BlowupClass::f_pull(no_pull, no_pull->ringY->var("H")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::no_pullback);
  }
}

TEST(BlowupClass, ProductMatchesRestrictionOfExceptional) {
  // e = j_*(-1), so e^2 = j_*(-j^* e) = j_*(-zeta).
  auto ctx = universal_context(3, 0, 8);
  BlowupClass e = BlowupClass::minus_exceptional(ctx);
  EXPECT_TRUE(bl_equal(e * e, BlowupClass::j_push(ctx, -ctx->zeta_class())));
  EXPECT_FALSE(bl_equal(e * e, BlowupClass::j_push(ctx, ctx->zeta_class())));
}

// ------------------------------------------------------------- properties

TEST(BlowupProperty, SelfIntersectionCoherence) {
  std::mt19937_64 rng(300);
  for (int d = 1; d <= 4; ++d) {
    auto ctx = universal_context(d, 0, 2 * d + 2);
    const auto& xt = ctx->ringXt;
    for (int i = 0; i < 25; ++i) {
      GradedPoly beta = xt->reduce(random_poly(rng, xt->table(), 2 * d + 1));
      ASSERT_EQ(bl_restrict(BlowupClass::j_push(ctx, beta)), xt->reduce(-ctx->zeta_class() * beta));
    }
  }
}

TEST(BlowupProperty, ProjectionFormulaCoherence) {
  std::mt19937_64 rng(301);
  for (int d = 1; d <= 4; ++d) {
    const int D = 2 * d + 2;
    auto ctx = universal_context(d, 0, D);
    const auto& ry = ctx->ringY;
    const auto& xt = ctx->ringXt;
    std::vector<GradedPoly> gens{ry->one(), ry->var("H")};
    for (int i = 1; i <= d; ++i) gens.push_back(ry->var("n" + std::to_string(i)));
    for (const auto& b : gens) {
      for (int i = 0; i < 10; ++i) {
        GradedPoly beta = xt->reduce(random_poly(rng, xt->table(), D - 1));
        BlowupClass prod = BlowupClass::f_pull(ctx, b) * BlowupClass::j_push(ctx, beta);
        ASSERT_EQ(bl_pushforward(prod), ry->reduce(b * ctx->push_i(ctx->g_push(beta))));
      }
    }
  }
}

TEST(BlowupProperty, ComparisonIsLinear) {
  std::mt19937_64 rng(302);
  auto ctx = universal_context(3, 0, 8);
  const auto& ry = ctx->ringY;
  const auto& xt = ctx->ringXt;
  for (int i = 0; i < 30; ++i) {
    BlowupClass a(ctx, ry->reduce(random_poly(rng, ry->table(), 8)), xt->reduce(random_poly(rng, xt->table(), 7)));
    BlowupClass b(ctx, ry->reduce(random_poly(rng, ry->table(), 8)), xt->reduce(random_poly(rng, xt->table(), 7)));
    ASSERT_EQ(bl_pushforward(a + b), ry->reduce(bl_pushforward(a) + bl_pushforward(b)));
    ASSERT_EQ(bl_restrict(a - b), xt->reduce(bl_restrict(a) - bl_restrict(b)));
    ASSERT_TRUE(bl_equal(a + b, b + a));
  }
}

TEST(BlowupProperty, RingProductIsCommutativeAndAssociative) {
  std::mt19937_64 rng(303);
  auto ctx = universal_context(2, 0, 6);
  const auto& ry = ctx->ringY;
  const auto& xt = ctx->ringXt;
  auto rnd = [&] {
    return BlowupClass(ctx, ry->reduce(random_poly(rng, ry->table(), 4, 3)),
                       xt->reduce(random_poly(rng, xt->table(), 3, 3)));
  };
  for (int i = 0; i < 30; ++i) {
    BlowupClass a = rnd(), b = rnd(), c = rnd();
    ASSERT_TRUE(bl_equal(a * b, b * a));
    ASSERT_TRUE(bl_equal((a * b) * c, a * (b * c)));
  }
}

TEST(Verify, KeyFormulaAndSelfIntersection) {
  for (int d = 1; d <= 4; ++d) {
    auto r = verify_key_formula(d);
    EXPECT_TRUE(r.pass) << to_text(r);
  }
  for (int d = 1; d <= 8; ++d) {
    auto r = verify_self_intersection(d);
    EXPECT_TRUE(r.pass) << to_text(r);
  }
}

TEST(Verify, UniversalIdentitiesSmallCodim) {
  for (int d = 1; d <= 5; ++d) {
    auto p = verify_pushforward_identity(d);
    auto r = verify_restriction_identity(d);
    EXPECT_TRUE(p.pass) << to_text(p);
    EXPECT_TRUE(r.pass) << to_text(r);
  }
  EXPECT_EQ(verify_restriction_identity(1).parameters["lhs"], "1 + n1");
}

TEST(Verify, ReportsResidualOnFailure) {
  auto ctx = universal_context(2, 0, 6);
  BlowupClass a = BlowupClass::f_pull(ctx, ctx->ringY->one());
  BlowupClass b = a + BlowupClass::j_push(ctx, ctx->zeta_class());
  EXPECT_EQ(pair_residual(a, a), "0");
  std::string res = pair_residual(a, b);
  EXPECT_NE(res, "0");
  EXPECT_NE(res.find("f_*"), std::string::npos);
}

TEST(Verify, JsonSchema) {
  auto r = verify_pushforward_identity(2);
  auto j = to_json(r);
  for (const char* key : {"check", "parameters", "pass", "residual", "elapsed_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["check"], "pushforward_identity");
  EXPECT_EQ(j["residual"], "0");
}
