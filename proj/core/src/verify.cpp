#include "blowchern/verify.hpp"

#include <random>
#include <sstream>

#include "blowchern/geometry.hpp"

namespace blowchern {

double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

namespace {

using Clock = std::chrono::steady_clock;

std::string idx_name(const char* stem, int i) { return stem + std::to_string(i); }

int bound_for(int d, std::optional<int> max_degree) {
  int D = max_degree.value_or(default_max_degree(d));
  if (D < 1) throw Error(ErrorKind::invalid_argument, "truncation degree must be positive");
  return D;
}

void require_codim(int d, int lo = 1) {
  if (d < lo) throw Error(ErrorKind::invalid_argument, "codimension must be at least " + std::to_string(lo));
}

// First failing residual wins; later ones are only counted.
struct Tally {
  bool pass = true;
  std::string residual = "0";
  int failures = 0;

  void add(bool ok, const std::string& what, const std::string& res) {
    if (ok) return;
    if (pass) residual = what + ": " + res;
    pass = false;
    ++failures;
  }
  void add_poly(const std::string& what, const GradedPoly& lhs, const GradedPoly& rhs) {
    GradedPoly diff = lhs - rhs;
    add(diff.is_zero(), what, diff.to_string());
  }
  void add_pair(const std::string& what, const BlowupClass& a, const BlowupClass& b) {
    std::string r = pair_residual(a, b);
    add(r == "0", what, r);
  }
};

VerificationReport finish(std::string check, nlohmann::json params, const Tally& t, Clock::time_point start) {
  VerificationReport r;
  r.check = std::move(check);
  r.parameters = std::move(params);
  if (t.failures > 1) r.parameters["failures"] = t.failures;
  r.pass = t.pass;
  r.residual = t.residual;
  r.elapsed_ms = elapsed_ms_since(start);
  return r;
}

// f^*b + Porteous term for c(X) = i^*b s(N). Since g^* is a ring map the
// Porteous class g^*(i^*b s(N)) alpha is g^*i^*b times a fixed Q.
class PorteousOracle {
 public:
  explicit PorteousOracle(ContextPtr ctx) : ctx_(std::move(ctx)) {
    int top = ctx_->ringX->dim().value_or(2 * ctx_->d + 2);
    top_ = ctx_->ringXt->dim().value_or(top);
    GradedPoly s = ctx_->g_pull(segre_class(ctx_->N, top));
    q_ = ctx_->ringXt->reduce(truncated_product(s, porteous_alpha(*ctx_).value(), top_));
  }

  BlowupClass total(const GradedPoly& cY) const {
    GradedPoly x = ctx_->ringXt->reduce(truncated_product(ctx_->restrict_to_xt(cY), q_, top_));
    return BlowupClass::f_pull(ctx_, cY) + BlowupClass::j_push(ctx_, x);
  }

 private:
  ContextPtr ctx_;
  GradedPoly q_;
  int top_ = 0;
};

GradedPoly random_homogeneous(std::mt19937_64& rng, const RingPtr& ring, int degree) {
  std::uniform_int_distribution<int> coeff(-3, 3), den(1, 3);
  const auto& t = ring->table();
  GradedPoly out = ring->zero();
  // H^a K^(degree-a)
  for (int a = 0; a <= degree; ++a) {
    int c = coeff(rng);
    if (c == 0) continue;
    std::vector<std::uint16_t> e{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(degree - a)};
    Rational q(c, den(rng));
    q.canonicalize();
    out += GradedPoly::monomial(t, Monomial(std::move(e), *t), q);
  }
  return out;
}

BundleClass random_bundle(std::mt19937_64& rng, const RingPtr& ring, int rank) {
  std::vector<GradedPoly> c{ring->one()};
  for (int i = 1; i <= rank; ++i) c.push_back(random_homogeneous(rng, ring, i));
  return BundleClass(ring, rank, std::move(c));
}

}  // namespace

std::string pair_residual(const BlowupClass& a, const BlowupClass& b) {
  // Both maps are linear, so comparing the difference is enough.
  BlowupClass diff = a - b;
  GradedPoly dp = bl_pushforward(diff);
  GradedPoly dr = bl_restrict(diff);
  if (dp.is_zero() && dr.is_zero()) return "0";
  return "f_*: " + dp.to_string() + "; j^*: " + dr.to_string();
}

VerificationReport verify_pushforward_identity(int d, std::optional<int> max_degree) {
  auto start = Clock::now();
  require_codim(d);
  int D = bound_for(d, max_degree);
  auto ctx = universal_context(d, 0, D);
  GradedPoly pushed = ctx->g_push(porteous_alpha(*ctx).value());
  Tally t;
  t.add_poly("g_*(alpha) - (d-1)", pushed, GradedPoly::constant(ctx->ringX->table(), d - 1));
  return finish("pushforward_identity", {{"d", d}, {"max_degree", D}}, t, start);
}

VerificationReport verify_restriction_identity(int d, std::optional<int> max_degree) {
  auto start = Clock::now();
  require_codim(d);
  int D = bound_for(d, max_degree);
  auto ctx = universal_context(d, 0, D);
  const auto& xt = ctx->ringXt;
  GradedPoly z = ctx->zeta_class();
  GradedPoly one = xt->one();
  auto c = ctx->chern_on_xt();
  GradedPoly cN = xt->zero();
  GradedPoly twisted = xt->zero();
  for (int i = 0; i <= d; ++i) {
    cN += c[i];
    twisted += c[i] * power(one + z, static_cast<unsigned>(d - i));
  }
  GradedPoly lhs = xt->reduce(cN - z * porteous_alpha(*ctx).value());
  GradedPoly rhs = xt->reduce((one - z) * twisted);
  Tally t;
  t.add_poly("j^* difference", lhs, rhs);
  return finish("restriction_identity", {{"d", d}, {"max_degree", D}, {"lhs", lhs.to_string()}}, t, start);
}

VerificationReport verify_oldrec_equals_porteous(int d, int rank_e, std::optional<int> max_degree) {
  auto start = Clock::now();
  require_codim(d);
  if (rank_e < d) throw Error(ErrorKind::invalid_argument, "rank of E must be at least d");
  int D = bound_for(d, max_degree);
  auto ctx = universal_context(d, 0, D);
  const auto& ry = ctx->ringY;
  Tally t;

  std::vector<std::pair<std::string, GradedPoly>> basis;
  for (int k = 0; k <= D; ++k) basis.emplace_back("H^" + std::to_string(k), power(ry->var("H"), k));
  for (int i = 1; i <= d; ++i) basis.emplace_back(idx_name("n", i), ry->var(idx_name("n", i)));
  PreparedOperator op = oldrec_prepared(ctx);
  PorteousOracle porteous(ctx);
  for (const auto& [name, b] : basis) {
    t.add_pair("f^*" + name, op.apply(BlowupClass::f_pull(ctx, b)), porteous.total(b));
  }

  // The operator is c(T_Y~)/f^*c(T_Y); times c(N_Y~ P(E)) it must give the
  // relative tangent class c(E(1)) = c(NN(1)) c(CC(1)).
  const int excess = rank_e - d;
  TwistedOperator main_op = main_normal_chern(d, excess, D);
  const auto& tab = main_op.expr.table();
  auto ring = std::make_shared<const RingPresentation>(tab, std::vector<RewriteRule>{}, D);
  GradedPoly old_expr = embed(oldrec_operator(d, D).expr, tab);
  GradedPoly z = ring->var("z");
  std::vector<GradedPoly> nc{ring->one()}, qc{ring->one()};
  for (int i = 1; i <= d; ++i) nc.push_back(ring->var(idx_name("n", i)));
  for (int j = 1; j <= excess; ++j) qc.push_back(ring->var(idx_name("q", j)));
  GradedPoly rhs = truncated_product(tensor_line(BundleClass(ring, d, nc), z).total(),
                                     tensor_line(BundleClass(ring, excess, qc), z).total(), D);
  t.add_poly("operator times normal class", truncated_product(old_expr, main_op.expr, D), rhs);

  return finish("oldrec_equals_porteous", {{"d", d}, {"rank_e", rank_e}, {"max_degree", D}}, t, start);
}

VerificationReport verify_difflp_equals_porteous(int d, std::optional<int> max_degree) {
  auto start = Clock::now();
  require_codim(d);
  int D = bound_for(d, max_degree);
  auto ctx = split_context(d, D);
  const auto& ry = ctx->ringY;
  Tally t;

  std::vector<std::pair<std::string, GradedPoly>> basis;
  for (int k = 0; k <= D; ++k) basis.emplace_back("H^" + std::to_string(k), power(ry->var("H"), k));
  for (int i = 1; i <= d; ++i) basis.emplace_back(idx_name("Z", i), ry->var(idx_name("Z", i)));
  PreparedOperator op = difflp_prepared(ctx);
  PorteousOracle porteous(ctx);
  for (const auto& [name, b] : basis) {
    t.add_pair("f^*" + name, op.apply(BlowupClass::f_pull(ctx, b)), porteous.total(b));
  }

  // alpha of the universal model specialises to the split one.
  auto uni = universal_context(d, 0, D);
  std::vector<std::string> roots;
  for (int i = 1; i <= d; ++i) roots.push_back(idx_name("z", i));
  Assignment sym;
  for (int i = 1; i <= d; ++i) sym.emplace(idx_name("n", i), elementary_symmetric(ctx->ringXt->table(), roots, i));
  GradedPoly specialised = ctx->ringXt->reduce(subst(porteous_alpha(*uni).value(), sym, ctx->ringXt->table()));
  t.add_poly("alpha under n_i = e_i(z)", specialised, porteous_alpha(*ctx).value());

  return finish("difflp_equals_porteous", {{"d", d}, {"max_degree", D}}, t, start);
}

VerificationReport verify_simlem_equals_main(int d, int cases, std::uint64_t seed) {
  auto start = Clock::now();
  require_codim(d);
  if (cases < 1) throw Error(ErrorKind::invalid_argument, "need at least one case");
  const int D = default_max_degree(d);
  auto ringY = RingPresentation::free({{"H", 1}, {"K", 1}}, D);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> crank(0, 3);
  Tally t;
  for (int c = 0; c < cases; ++c) {
    BundleClass nhat = random_bundle(rng, ringY, d);
    BundleClass chat = random_bundle(rng, ringY, crank(rng));
    auto ctx = global_bundle_context(ringY, nhat);
    BlowupClass direct = simlem_normal_chern(nhat, chat, ctx);
    TwistedOperator op = main_normal_chern(d, chat.rank(), D);
    BlowupClass parsed = apply_twisted_operator(op, ctx, main_interpretation(*ctx, nhat, chat),
                                                BlowupClass::f_pull(ctx, ringY->one()));
    t.add_pair("case " + std::to_string(c), direct, parsed);
  }
  return finish("simlem_equals_main",
                {{"d", d}, {"cases", cases}, {"seed", seed}, {"max_degree", D}}, t, start);
}

VerificationReport verify_codim_one(std::optional<int> max_degree) {
  auto start = Clock::now();
  int D = bound_for(1, max_degree);
  auto ctx = universal_context(1, 0, D);
  const auto& rx = ctx->ringX;
  const auto& ry = ctx->ringY;
  Tally t;

  GradedPoly cX = rx->parse("1 + h + n1 + h^2 - 3*h*n1");
  BlowupClass delta = porteous_delta(ctx, cX);
  t.add(delta.is_zero(), "Porteous term", delta.to_string());

  // As a formal series the factor is (1-z)(1 + z/(1+Z1)); it is 1 once the
  // relation z = -Z1 of the rank-one projective bundle is imposed.
  GradedPoly factor = difflp_operator(1, D).expr;
  Assignment on_line{{"z", -GradedPoly::variable(factor.table(), "Z1")}};
  GradedPoly reduced = truncate(subst(factor, on_line, factor.table()), D);
  t.add(reduced == GradedPoly::constant(factor.table(), 1), "log-tangent factor", reduced.to_string());
  auto split = split_context(1, D);
  PreparedOperator lt = difflp_prepared(split);
  for (int k = 0; k <= D; ++k) {
    GradedPoly b = power(split->ringY->var("H"), k);
    BlowupClass got = lt.apply(BlowupClass::f_pull(split, b));
    bool same = got.x_part().is_zero() && got.y_part() == b;
    t.add(same, "log-tangent form on f^*H^" + std::to_string(k), got.to_string());
  }

  for (int k = 0; k <= D; ++k) {
    GradedPoly b = power(ry->var("H"), k);
    BlowupClass got = oldrec_total_chern(ctx, b);
    bool same = got.x_part().is_zero() && got.y_part() == b;
    t.add(same, "operator form on f^*H^" + std::to_string(k), got.to_string());
  }
  return finish("codim_one_degeneracy", {{"d", 1}, {"max_degree", D}}, t, start);
}

VerificationReport verify_newnormal_extremes(int dprime, int e, Twist twist, std::optional<int> max_degree) {
  auto start = Clock::now();
  if (dprime < 0 || e < 0) throw Error(ErrorKind::invalid_argument, "ranks must be >= 0");
  int D = max_degree.value_or(std::max(dprime + e, default_max_degree(dprime)));
  Tally t;

  // Proper intersection: no excess, the operator is c(NN) with nothing to parse.
  {
    TwistedOperator op = newnormal_chern(dprime, 0, twist, D);
    GradedPoly cn = GradedPoly::constant(op.expr.table(), 1);
    for (int i = 1; i <= dprime; ++i) cn += GradedPoly::variable(op.expr.table(), idx_name("n", i));
    t.add(op.fplus.is_zero(), "proper extreme: zeta part", op.fplus.to_string());
    t.add_poly("proper extreme: F0 vs c(NN)", op.f0, truncate(cn, D));
  }

  // X = W: NN = 0 and the operator must be c(f^*N_YZ (x) O(-X~)). Anchor it on
  // a line in P^3 inside P^(3+e), where N_YZ = O(1)^e.
  bool alt_consistent = false;
  {
    auto ctx = scenario_context(linear_scenario(3, 1));
    const auto& ry = ctx->ringY;
    const auto& rx = ctx->ringX;
    BlowupClass line_class = BlowupClass::f_pull(ctx, ry->one() + ry->var("H")) +
                             BlowupClass::minus_exceptional(ctx);
    BlowupClass honest = power(line_class, static_cast<unsigned>(e));

    OperatorInterpretation in;
    in.f0_on_y = ry->reduce(power(ry->one() + ry->var("H"), static_cast<unsigned>(e)));
    GradedPoly cx = rx->reduce(power(rx->one() + rx->var("h"), static_cast<unsigned>(e)));
    for (int j = 1; j <= e; ++j) in.on_x.emplace(idx_name("q", j), cx.component(j));
    BlowupClass unit = BlowupClass::f_pull(ctx, ry->one());

    BlowupClass parsed = apply_twisted_operator(newnormal_chern(0, e, twist, D), ctx, in, unit);
    t.add_pair("X = W extreme against O(1)^e twisted by O(-X~)", parsed, honest);
    Twist other = twist == Twist::MinusExceptional ? Twist::PlusExceptional : Twist::MinusExceptional;
    BlowupClass alt = apply_twisted_operator(newnormal_chern(0, e, other, D), ctx, in, unit);
    alt_consistent = pair_residual(alt, honest) == "0";
  }

  // W = zero section of E: NN = N, CC = E/N, and c(NN) c(CC twisted) is the
  // normal-bundle operator times c(O(X~)) = 1 - zeta.
  if (dprime >= 1) {
    TwistedOperator nn = newnormal_chern(dprime, e, twist, D);
    TwistedOperator mn = main_normal_chern(dprime, e, D);
    const auto& tab = nn.expr.table();
    GradedPoly one = GradedPoly::constant(tab, 1);
    GradedPoly times = truncated_product(embed(mn.expr, tab), one - GradedPoly::variable(tab, "z"), D);
    t.add_poly("normal-bundle instance", truncate(nn.expr, D), times);
    t.add_poly("F0 factorisation", truncate(nn.f0, D), truncate(embed(mn.f0, tab), D));
  }

  return finish("newnormal_extremes",
                {{"dprime", dprime},
                 {"e", e},
                 {"twist", to_string(twist)},
                 {"opposite_twist_consistent", alt_consistent},
                 {"max_degree", D}},
                t, start);
}

VerificationReport verify_self_intersection(int d, std::optional<int> max_degree) {
  auto start = Clock::now();
  require_codim(d);
  int D = bound_for(d, max_degree);
  auto ctx = universal_context(d, 0, D);
  GradedPoly got = bl_restrict(BlowupClass::j_push(ctx, ctx->ringXt->one()));
  Tally t;
  // At d = 1 the class -zeta has normal form n1.
  t.add_poly("j^* j_*(1) + zeta", got, ctx->ringXt->reduce(-ctx->zeta_class()));
  return finish("self_intersection", {{"d", d}, {"max_degree", D}, {"value", got.to_string()}}, t, start);
}

VerificationReport verify_key_formula(int d, std::optional<int> max_degree) {
  auto start = Clock::now();
  require_codim(d);
  int D = bound_for(d, max_degree);
  auto ctx = universal_context(d, 0, D);
  const auto& rx = ctx->ringX;
  const auto& xt = ctx->ringXt;
  GradedPoly cN = xt->zero();
  for (const auto& c : ctx->chern_on_xt()) cN += c;
  GradedPoly cQ = truncated_product(cN, series_inverse(xt->one() - ctx->zeta_class(), d), d);
  GradedPoly top = xt->reduce(cQ.component(d - 1));

  std::vector<GradedPoly> samples{rx->one(), rx->var("h"), rx->var("n1"), rx->parse("h^2 - 2*n1 + 1/2"),
                                  rx->var(idx_name("n", d))};
  Tally t;
  for (const auto& cX : samples) {
    BlowupClass pulled = BlowupClass::f_pull(ctx, ctx->push_i(cX));
    BlowupClass pushed = BlowupClass::j_push(ctx, xt->reduce(top * ctx->g_pull(cX)));
    t.add_pair("cX = " + cX.to_string(), pulled, pushed);
  }
  // A wrong representation must be told apart.
  BlowupClass wrong = BlowupClass::j_push(ctx, xt->one());
  BlowupClass right = BlowupClass::f_pull(ctx, ctx->push_i(rx->one()));
  bool distinguished = d == 1 ? true : pair_residual(wrong, right) != "0";
  t.add(distinguished, "distinguishes j_*(1) from f^*[X]", "bl_equal returned true");
  return finish("key_formula", {{"d", d}, {"max_degree", D}}, t, start);
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS " : "FAIL ") << r.check << " " << r.parameters.dump();
  if (!r.pass) out << "\n  residual: " << r.residual;
  return out.str();
}

nlohmann::json to_json(const VerificationReport& r) {
  return {{"check", r.check},
          {"parameters", r.parameters},
          {"pass", r.pass},
          {"residual", r.residual},
          {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace blowchern
