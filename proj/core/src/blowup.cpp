#include "blowchern/blowup.hpp"

namespace blowchern {

namespace {

GradedPoly reduce_in(const RingPtr& ring, const GradedPoly& p) {
  return ring->reduce(p.table() ? embed(p, ring->table()) : ring->zero());
}

GradedPoly mul_in(const RingPtr& ring, const GradedPoly& a, const GradedPoly& b) {
  auto bound = ring->dim();
  return ring->reduce(bound ? truncated_product(a, b, *bound) : a * b);
}

}  // namespace

BlowupClass::BlowupClass(ContextPtr ctx, const GradedPoly& y, const GradedPoly& x)
    : ctx_(std::move(ctx)), y_(reduce_in(ctx_->ringY, y)), x_(reduce_in(ctx_->ringXt, x)) {}

BlowupClass BlowupClass::zero(ContextPtr ctx) {
  auto y = ctx->ringY->zero();
  auto x = ctx->ringXt->zero();
  return BlowupClass(std::move(ctx), y, x);
}

BlowupClass BlowupClass::f_pull(ContextPtr ctx, const GradedPoly& y) {
  auto x = ctx->ringXt->zero();
  return BlowupClass(std::move(ctx), y, x);
}

BlowupClass BlowupClass::j_push(ContextPtr ctx, const GradedPoly& x) {
  auto y = ctx->ringY->zero();
  return BlowupClass(std::move(ctx), y, x);
}

BlowupClass BlowupClass::minus_exceptional(ContextPtr ctx) {
  auto x = GradedPoly::constant(ctx->ringXt->table(), -1);
  return j_push(std::move(ctx), x);
}

void BlowupClass::check_ctx(const BlowupClass& o) const {
  if (ctx_ != o.ctx_) throw Error(ErrorKind::context_mismatch, "blow-up classes from different contexts");
}

BlowupClass& BlowupClass::operator+=(const BlowupClass& o) {
  check_ctx(o);
  y_ += o.y_;
  x_ += o.x_;
  return *this;
}

BlowupClass& BlowupClass::operator-=(const BlowupClass& o) {
  check_ctx(o);
  y_ -= o.y_;
  x_ -= o.x_;
  return *this;
}

BlowupClass operator*(const Rational& c, BlowupClass a) {
  a.y_ *= c;
  a.x_ *= c;
  return a;
}

BlowupClass BlowupClass::operator-() const { return Rational(-1) * *this; }

BlowupClass operator*(const BlowupClass& a, const BlowupClass& b) {
  a.check_ctx(b);
  const auto& ctx = *a.ctx_;
  const auto& xt = ctx.ringXt;
  GradedPoly y = mul_in(ctx.ringY, a.y_, b.y_);
  GradedPoly x = xt->zero();
  if (!b.x_.is_zero() && !a.y_.is_zero()) x += mul_in(xt, ctx.restrict_to_xt(a.y_), b.x_);
  if (!a.x_.is_zero() && !b.y_.is_zero()) x += mul_in(xt, ctx.restrict_to_xt(b.y_), a.x_);
  if (!a.x_.is_zero() && !b.x_.is_zero()) {
    x -= mul_in(xt, ctx.zeta_class(), mul_in(xt, a.x_, b.x_));
  }
  BlowupClass r;
  r.ctx_ = a.ctx_;
  r.y_ = std::move(y);
  r.x_ = xt->reduce(x);
  return r;
}

BlowupClass power(const BlowupClass& a, unsigned k) {
  BlowupClass r = BlowupClass::f_pull(a.ctx(), a.ctx()->ringY->one());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

std::string BlowupClass::to_string() const {
  return "f^*(" + y_.to_string() + ") + j_*(" + x_.to_string() + ")";
}

GradedPoly bl_pushforward(const BlowupClass& a) {
  const auto& ctx = *a.ctx();
  GradedPoly out = a.y_part();
  if (!a.x_part().is_zero()) out += ctx.push_i(ctx.g_push(a.x_part()));
  return out;
}

GradedPoly bl_restrict(const BlowupClass& a) {
  const auto& ctx = *a.ctx();
  const auto& xt = ctx.ringXt;
  GradedPoly out = ctx.restrict_to_xt(a.y_part());
  out -= mul_in(xt, ctx.zeta_class(), a.x_part());
  return out;
}

bool bl_equal(const BlowupClass& a, const BlowupClass& b) {
  if (a.ctx() != b.ctx()) throw Error(ErrorKind::context_mismatch, "blow-up classes from different contexts");
  BlowupClass diff = a - b;
  return bl_pushforward(diff).is_zero() && bl_restrict(diff).is_zero();
}

}  // namespace blowchern
