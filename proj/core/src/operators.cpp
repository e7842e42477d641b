#include "blowchern/operators.hpp"

#include <algorithm>

namespace blowchern {

namespace {

GradedPoly mul_in(const RingPtr& ring, const GradedPoly& a, const GradedPoly& b) {
  auto bound = ring->dim();
  return ring->reduce(bound ? truncated_product(a, b, *bound) : a * b);
}

std::string idx_name(const char* stem, int i) { return stem + std::to_string(i); }

BundleClass formal_bundle(const RingPtr& ring, const char* stem, int rank) {
  std::vector<GradedPoly> c{ring->one()};
  for (int i = 1; i <= rank; ++i) c.push_back(ring->var(idx_name(stem, i)));
  return BundleClass(ring, rank, std::move(c));
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

int operator_bound(const BlowupContext& ctx) {
  return std::max(ctx.ringY->dim().value_or(2 * ctx.d + 2), ctx.ringXt->dim().value_or(0));
}

}  // namespace

GradedPoly porteous_bracket(const BlowupContext& ctx) {
  const auto& t = ctx.ringXt->table();
  const int d = ctx.d;
  auto c = ctx.chern_on_xt();
  GradedPoly one = GradedPoly::constant(t, 1);
  GradedPoly z = GradedPoly::variable(t, ctx.zeta);
  GradedPoly plain(t), twisted(t);
  GradedPoly zpow = one;
  for (int i = 0; i <= d; ++i) {
    plain += c[d - i];
    twisted += zpow * c[d - i];
    zpow = zpow * (one + z);
  }
  return plain - (one - z) * twisted;
}

GradedPoly porteous_alpha_raw(const BlowupContext& ctx) {
  GradedPoly bracket = porteous_bracket(ctx);
  try {
    return exact_div_by_var(bracket, ctx.zeta);
  } catch (const Error& e) {
    throw Error(ErrorKind::internal, std::string("Porteous bracket is not divisible by zeta: ") + e.what());
  }
}

ChowClass porteous_alpha(const BlowupContext& ctx) {
  return ChowClass(ctx.ringXt, porteous_alpha_raw(ctx));
}

BlowupClass porteous_delta(const ContextPtr& ctx, const GradedPoly& cX) {
  GradedPoly alpha = porteous_alpha(*ctx).value();
  return BlowupClass::j_push(ctx, mul_in(ctx->ringXt, ctx->g_pull(cX), alpha));
}

// ------------------------------------------------------ formal operators

TwistedOperator TwistedOperator::from_expr(int d, int e_excess, GradedPoly expr, std::string zeta) {
  TwistedOperator op;
  op.d = d;
  op.e_excess = e_excess;
  op.zeta = std::move(zeta);
  std::size_t z = expr.table()->index_of(op.zeta);
  std::vector<Term> free, positive;
  for (const auto& t : expr.terms()) (t.mono.exponent(z) == 0 ? free : positive).push_back(t);
  op.f0 = GradedPoly::from_canonical(expr.table(), std::move(free));
  op.fplus = GradedPoly::from_canonical(expr.table(), std::move(positive));
  op.expr = std::move(expr);
  return op;
}

TablePtr operator_table(int d, int e_excess, const std::string& zeta) {
  std::vector<VarTable::Entry> vars{{zeta, 1}};
  for (int i = 1; i <= d; ++i) vars.push_back({idx_name("n", i), i});
  for (int j = 1; j <= e_excess; ++j) vars.push_back({idx_name("q", j), j});
  return VarTable::make(std::move(vars));
}

PreparedOperator::PreparedOperator(const TwistedOperator& op, const ContextPtr& ctx,
                                   const OperatorInterpretation& interp)
    : ctx_(ctx) {
  const auto& xt = ctx->ringXt;
  const auto& optab = *op.expr.table();

  Assignment to_x, to_xt;
  for (const auto& e : optab.entries()) {
    if (e.name == op.zeta) continue;
    auto it = interp.on_x.find(e.name);
    if (it == interp.on_x.end()) {
      throw Error(ErrorKind::invalid_argument, "no interpretation for operator variable '" + e.name + "'");
    }
    GradedPoly onx = ctx->ringX->reduce(embed(it->second, ctx->ringX->table()));
    to_xt.emplace(e.name, ctx->g_pull(onx));
    to_x.emplace(e.name, std::move(onx));
  }
  to_xt.emplace(op.zeta, ctx->zeta_class());

  f0y_ = ctx->ringY->reduce(embed(interp.f0_on_y, ctx->ringY->table()));
  if (ctx->pull) {
    GradedPoly f0x = ctx->ringX->reduce(subst(op.f0, to_x, ctx->ringX->table()));
    if (!(f0x == ctx->pull_i(f0y_))) {
      throw Error(ErrorKind::inconsistent_scenario,
                  "the Y-class given for F0 does not restrict to F0 on X (" + f0x.to_string() +
                      " vs " + ctx->pull_i(f0y_).to_string() + ")");
    }
  }

  GradedPoly over_zeta;
  try {
    over_zeta = op.fplus.is_zero() ? GradedPoly(op.expr.table()) : exact_div_by_var(op.fplus, op.zeta);
  } catch (const Error& e) {
    throw Error(ErrorKind::internal, std::string("zeta-positive part is not divisible by zeta: ") + e.what());
  }
  p_ = xt->reduce(subst(over_zeta, to_xt, xt->table()));
  on_x_part_ = ctx->restrict_to_xt(f0y_) + mul_in(xt, ctx->zeta_class(), p_);
}

BlowupClass PreparedOperator::apply(const BlowupClass& a) const {
  if (a.ctx() != ctx_) throw Error(ErrorKind::context_mismatch, "class is not on this blow-up");
  const auto& xt = ctx_->ringXt;
  GradedPoly y = mul_in(ctx_->ringY, f0y_, a.y_part());
  GradedPoly x = xt->zero();
  if (!a.y_part().is_zero() && !p_.is_zero()) x -= mul_in(xt, p_, ctx_->restrict_to_xt(a.y_part()));
  if (!a.x_part().is_zero()) x += mul_in(xt, on_x_part_, a.x_part());
  return BlowupClass(ctx_, y, x);
}

BlowupClass apply_twisted_operator(const TwistedOperator& op, const ContextPtr& ctx,
                                   const OperatorInterpretation& interp, const BlowupClass& a) {
  if (a.ctx() != ctx) throw Error(ErrorKind::context_mismatch, "class is not on this blow-up");
  return PreparedOperator(op, ctx, interp).apply(a);
}

TwistedOperator main_normal_chern(int d, int excess, int max_degree) {
  if (d < 1) throw Error(ErrorKind::invalid_argument, "codimension must be at least 1");
  if (excess < 0) throw Error(ErrorKind::invalid_argument, "rank of E must be at least d");
  auto ring = std::make_shared<const RingPresentation>(operator_table(d, excess), std::vector<RewriteRule>{},
                                                       max_degree);
  GradedPoly z = ring->var("z");
  BundleClass nn = formal_bundle(ring, "n", d);
  BundleClass cc = tensor_line(formal_bundle(ring, "q", excess), z);
  GradedPoly inv = series_inverse(ring->one() - z, max_degree);
  GradedPoly expr = truncated_product(truncated_product(nn.total(), cc.total(), max_degree), inv, max_degree);
  return TwistedOperator::from_expr(d, excess, std::move(expr));
}

OperatorInterpretation main_interpretation(const BlowupContext& ctx, const BundleClass& nhat,
                                           const BundleClass& chat) {
  OperatorInterpretation in;
  in.f0_on_y = mul_in(ctx.ringY, nhat.total(), chat.total());
  for (int i = 1; i <= ctx.d; ++i) in.on_x.emplace(idx_name("n", i), ctx.N.c(i));
  for (int j = 1; j <= chat.rank(); ++j) in.on_x.emplace(idx_name("q", j), ctx.pull_i(chat.c(j)));
  return in;
}

BlowupClass simlem_normal_chern(const BundleClass& nhat, const BundleClass& chat, const ContextPtr& ctx) {
  if (nhat.ring() != ctx->ringY || chat.ring() != ctx->ringY) {
    throw Error(ErrorKind::ring_mismatch, "global bundles must live over A(Y)");
  }
  if (nhat.rank() != ctx->d) throw Error(ErrorKind::inconsistent_scenario, "rank of Nhat differs from d");
  for (int i = 1; i <= ctx->d; ++i) {
    if (!(ctx->pull_i(nhat.c(i)) == ctx->N.c(i))) {
      throw Error(ErrorKind::inconsistent_scenario, "Nhat does not restrict to N on X");
    }
  }
  const int top = ctx->ringY->dim().value_or(2 * ctx->d + 2);
  BlowupClass ell = BlowupClass::minus_exceptional(ctx);
  std::vector<BlowupClass> lpow{BlowupClass::f_pull(ctx, ctx->ringY->one())};
  for (int k = 1; k <= top; ++k) lpow.push_back(lpow.back() * ell);

  const int r = chat.rank();
  BlowupClass twisted = BlowupClass::zero(ctx);
  for (int k = 0; k <= r; ++k) {
    for (int i = 0; i <= k; ++i) {
      Rational b = binomial(r - i, k - i);
      if (b == 0 || chat.c(i).is_zero()) continue;
      twisted += b * (BlowupClass::f_pull(ctx, chat.c(i)) * lpow[k - i]);
    }
  }
  BlowupClass inv = BlowupClass::zero(ctx);
  for (const auto& l : lpow) inv += l;
  return BlowupClass::f_pull(ctx, nhat.total()) * twisted * inv;
}

TwistedOperator oldrec_operator(int d, int max_degree) {
  if (d < 1) throw Error(ErrorKind::invalid_argument, "codimension must be at least 1");
  auto ring = std::make_shared<const RingPresentation>(operator_table(d, 0), std::vector<RewriteRule>{},
                                                       max_degree);
  GradedPoly z = ring->var("z");
  BundleClass nn = formal_bundle(ring, "n", d);
  GradedPoly twisted = tensor_line(nn, z).total();
  GradedPoly expr = truncated_product(truncated_product(ring->one() - z, twisted, max_degree),
                                      series_inverse(nn.total(), max_degree), max_degree);
  return TwistedOperator::from_expr(d, 0, std::move(expr));
}

PreparedOperator oldrec_prepared(const ContextPtr& ctx) {
  OperatorInterpretation in;
  in.f0_on_y = ctx->ringY->one();
  for (int i = 1; i <= ctx->d; ++i) in.on_x.emplace(idx_name("n", i), ctx->N.c(i));
  return PreparedOperator(oldrec_operator(ctx->d, operator_bound(*ctx)), ctx, in);
}

BlowupClass oldrec_total_chern(const ContextPtr& ctx, const GradedPoly& cY) {
  return oldrec_prepared(ctx).apply(BlowupClass::f_pull(ctx, cY));
}

TwistedOperator difflp_operator(int d, int max_degree) {
  if (d < 1) throw Error(ErrorKind::invalid_argument, "codimension must be at least 1");
  std::vector<VarTable::Entry> vars{{"z", 1}};
  for (int i = 1; i <= d; ++i) vars.push_back({idx_name("Z", i), 1});
  auto t = VarTable::make(std::move(vars));
  GradedPoly one = GradedPoly::constant(t, 1);
  GradedPoly z = GradedPoly::variable(t, "z");
  // (1 + Z + z)/(1 + Z) = 1 + z (1 - Z + Z^2 - ...), one root at a time.
  GradedPoly expr = one - z;
  for (int i = 1; i <= d; ++i) {
    GradedPoly zi = GradedPoly::variable(t, idx_name("Z", i));
    GradedPoly geo = one, term = one;
    for (int k = 1; k < max_degree; ++k) {
      term = -(term * zi);
      geo += term;
    }
    expr = truncated_product(expr, one + z * geo, max_degree);
  }
  return TwistedOperator::from_expr(d, 0, std::move(expr));
}

PreparedOperator difflp_prepared(const ContextPtr& ctx) {
  const auto& xtab = *ctx->ringX->table();
  std::vector<GradedPoly> roots;
  for (int i = 1; i <= ctx->d; ++i) {
    auto name = idx_name("z", i);
    if (!xtab.find(name)) {
      throw Error(ErrorKind::invalid_argument, "difflp needs a split context with class " + name + " on X");
    }
    roots.push_back(ctx->ringX->var(name));
  }
  return difflp_prepared(ctx, roots);
}

PreparedOperator difflp_prepared(const ContextPtr& ctx, const std::vector<GradedPoly>& z_on_x) {
  if (static_cast<int>(z_on_x.size()) != ctx->d) {
    throw Error(ErrorKind::invalid_argument, "difflp needs exactly d hypersurface classes");
  }
  OperatorInterpretation in;
  in.f0_on_y = ctx->ringY->one();
  for (int i = 1; i <= ctx->d; ++i) in.on_x.emplace(idx_name("Z", i), z_on_x[i - 1]);
  return PreparedOperator(difflp_operator(ctx->d, operator_bound(*ctx)), ctx, in);
}

BlowupClass difflp_total_chern(const ContextPtr& ctx, const GradedPoly& cY) {
  return difflp_prepared(ctx).apply(BlowupClass::f_pull(ctx, cY));
}

BlowupClass difflp_total_chern(const ContextPtr& ctx, const GradedPoly& cY,
                               const std::vector<GradedPoly>& z_on_x) {
  return difflp_prepared(ctx, z_on_x).apply(BlowupClass::f_pull(ctx, cY));
}

GradedPoly reduce_on_exceptional(const GradedPoly& expr, const std::vector<GradedPoly>& chern, int rank,
                                 const std::string& zeta, int max_degree) {
  const auto& t = expr.table();
  std::vector<RewriteRule> rules{grothendieck_rule(chern, rank, t, zeta)};
  return RingPresentation(t, std::move(rules), max_degree).reduce(expr);
}

std::string to_string(Twist t) {
  return t == Twist::MinusExceptional ? "minus_exceptional" : "plus_exceptional";
}

TwistedOperator newnormal_chern(int dprime, int e, Twist twist, int max_degree) {
  if (dprime < 0 || e < 0) throw Error(ErrorKind::invalid_argument, "ranks must be >= 0");
  auto ring = std::make_shared<const RingPresentation>(operator_table(dprime, e), std::vector<RewriteRule>{},
                                                       max_degree);
  GradedPoly z = ring->var("z");
  GradedPoly ell = twist == Twist::MinusExceptional ? z : -z;
  BundleClass nn = formal_bundle(ring, "n", dprime);
  BundleClass cc = tensor_line(formal_bundle(ring, "q", e), ell);
  GradedPoly expr = ring->reduce(nn.total() * cc.total());
  return TwistedOperator::from_expr(dprime, e, std::move(expr));
}

}  // namespace blowchern
