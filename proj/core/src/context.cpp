#include "blowchern/context.hpp"

#include <cctype>

namespace blowchern {

GradedPoly BlowupContext::pull_i(const GradedPoly& y) const {
  if (!pull) throw Error(ErrorKind::no_pullback, "context has no pullback i^*");
  return ringX->reduce(subst(ringY->reduce(y), *pull, ringX->table()));
}

GradedPoly BlowupContext::push_i(const GradedPoly& x) const {
  if (!lift) throw Error(ErrorKind::no_pushforward, "context has no pushforward i_*");
  GradedPoly lifted = subst(ringX->reduce(x), *lift, ringY->table());
  auto bound = ringY->dim();
  return ringY->reduce(bound ? truncated_product(lifted, cycle, *bound) : lifted * cycle);
}

GradedPoly BlowupContext::g_pull(const GradedPoly& x) const {
  return ringXt->reduce(embed(x, ringXt->table()));
}

GradedPoly BlowupContext::g_push(const GradedPoly& beta) const {
  const auto& comps = N.components();
  return segre_pushforward(beta, comps, d, zeta, ringX).value();
}

std::vector<GradedPoly> BlowupContext::chern_on_xt() const {
  std::vector<GradedPoly> out;
  for (int i = 0; i <= d; ++i) out.push_back(g_pull(N.c(i)));
  return out;
}

ContextPtr make_context(BlowupContext ctx, std::optional<int> xt_dim) {
  if (!ctx.ringY || !ctx.ringX) throw Error(ErrorKind::invalid_argument, "context needs both rings");
  if (ctx.d < 1) throw Error(ErrorKind::invalid_argument, "codimension must be at least 1");
  if (ctx.N.ring() != ctx.ringX) {
    throw Error(ErrorKind::ring_mismatch, "normal bundle must live over A(X)");
  }
  if (ctx.N.rank() != ctx.d) {
    throw Error(ErrorKind::inconsistent_scenario, "normal bundle rank differs from codimension");
  }
  if (ctx.ringX->table()->find(ctx.zeta)) {
    throw Error(ErrorKind::invalid_argument, "zeta name '" + ctx.zeta + "' already used in A(X)");
  }
  ctx.ringXt = projective_bundle_ring(ctx.ringX, ctx.N.components(), ctx.d, ctx.zeta, xt_dim);
  if (ctx.lift) {
    if (!ctx.cycle.table()) throw Error(ErrorKind::invalid_argument, "pushforward needs a cycle class");
    ctx.cycle = ctx.ringY->reduce(embed(ctx.cycle, ctx.ringY->table()));
    if (!ctx.cycle.is_homogeneous_of(ctx.d)) {
      throw Error(ErrorKind::grading_violation, "cycle class of X must have degree d");
    }
  }
  return std::make_shared<const BlowupContext>(std::move(ctx));
}

namespace {

std::string idx_name(const char* stem, int i) { return stem + std::to_string(i); }

}  // namespace

ContextPtr universal_context(int d, int excess, int max_degree) {
  if (d < 1) throw Error(ErrorKind::invalid_argument, "codimension must be at least 1");
  if (excess < 0) throw Error(ErrorKind::invalid_argument, "excess rank must be >= 0");
  std::vector<VarTable::Entry> common;
  for (int i = 1; i <= d; ++i) common.push_back({idx_name("n", i), i});
  for (int j = 1; j <= excess; ++j) common.push_back({idx_name("q", j), j});
  auto y_vars = common;
  y_vars.insert(y_vars.begin(), {"H", 1});
  auto x_vars = common;
  x_vars.insert(x_vars.begin(), {"h", 1});

  BlowupContext ctx;
  ctx.ringY = RingPresentation::free(y_vars, max_degree);
  ctx.ringX = RingPresentation::free(x_vars, max_degree);
  ctx.d = d;
  std::vector<GradedPoly> c{ctx.ringX->one()};
  for (int i = 1; i <= d; ++i) c.push_back(ctx.ringX->var(idx_name("n", i)));
  ctx.N = BundleClass(ctx.ringX, d, std::move(c));
  ctx.pull = Assignment{{"H", ctx.ringX->var("h")}};
  ctx.lift = Assignment{{"h", ctx.ringY->var("H")}};
  ctx.cycle = ctx.ringY->var(idx_name("n", d));
  ctx.label = "universal d=" + std::to_string(d);
  return make_context(std::move(ctx), max_degree);
}

ContextPtr split_context(int d, int max_degree) {
  if (d < 1) throw Error(ErrorKind::invalid_argument, "codimension must be at least 1");
  std::vector<VarTable::Entry> y_vars{{"H", 1}}, x_vars{{"h", 1}};
  for (int i = 1; i <= d; ++i) {
    y_vars.push_back({idx_name("Z", i), 1});
    x_vars.push_back({idx_name("z", i), 1});
  }
  BlowupContext ctx;
  ctx.ringY = RingPresentation::free(y_vars, max_degree);
  ctx.ringX = RingPresentation::free(x_vars, max_degree);
  ctx.d = d;
  Assignment pull{{"H", ctx.ringX->var("h")}}, lift{{"h", ctx.ringY->var("H")}};
  GradedPoly total = ctx.ringX->one();
  GradedPoly cycle = ctx.ringY->one();
  for (int i = 1; i <= d; ++i) {
    auto zx = ctx.ringX->var(idx_name("z", i));
    auto zy = ctx.ringY->var(idx_name("Z", i));
    pull.emplace(idx_name("Z", i), zx);
    lift.emplace(idx_name("z", i), zy);
    total = truncated_product(total, ctx.ringX->one() + zx, d);
    cycle = cycle * zy;
  }
  ctx.N = BundleClass::from_total(ctx.ringX, d, total);
  ctx.pull = std::move(pull);
  ctx.lift = std::move(lift);
  ctx.cycle = std::move(cycle);
  ctx.label = "split d=" + std::to_string(d);
  return make_context(std::move(ctx), max_degree);
}

ContextPtr global_bundle_context(const RingPtr& ringY, const BundleClass& nhat) {
  if (nhat.ring() != ringY) throw Error(ErrorKind::ring_mismatch, "Nhat must live over A(Y)");
  std::vector<VarTable::Entry> x_vars;
  Assignment pull, lift;
  for (const auto& e : ringY->table()->entries()) {
    if (e.name.empty() || !std::isupper(static_cast<unsigned char>(e.name[0]))) {
      throw Error(ErrorKind::invalid_argument, "variable '" + e.name + "' is not upper-case");
    }
    std::string lower = e.name;
    lower[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(lower[0])));
    x_vars.push_back({lower, e.degree});
  }
  auto x_table = VarTable::make(x_vars);
  std::vector<RewriteRule> x_rules;
  for (const auto& r : ringY->rules()) {
    Assignment to_x;
    for (std::size_t i = 0; i < x_table->size(); ++i) {
      to_x.emplace((*ringY->table())[i].name, GradedPoly::variable(x_table, (*x_table)[i].name));
    }
    x_rules.push_back(RewriteRule{r.var, r.power, subst(r.replacement, to_x, x_table)});
  }
  BlowupContext ctx;
  ctx.ringY = ringY;
  ctx.ringX = std::make_shared<const RingPresentation>(x_table, std::move(x_rules), ringY->dim());
  for (std::size_t i = 0; i < x_table->size(); ++i) {
    const auto& upper = (*ringY->table())[i].name;
    const auto& lower = (*x_table)[i].name;
    pull.emplace(upper, ctx.ringX->var(lower));
    lift.emplace(lower, ringY->var(upper));
  }
  ctx.d = nhat.rank();
  ctx.pull = std::move(pull);
  ctx.lift = std::move(lift);
  ctx.cycle = nhat.c(nhat.rank());
  std::vector<GradedPoly> c;
  for (int i = 0; i <= nhat.rank(); ++i) c.push_back(ctx.ringX->reduce(subst(nhat.c(i), *ctx.pull, x_table)));
  ctx.N = BundleClass(ctx.ringX, ctx.d, std::move(c));
  ctx.label = "global bundle d=" + std::to_string(ctx.d);
  return make_context(std::move(ctx), ringY->dim());
}

}  // namespace blowchern
