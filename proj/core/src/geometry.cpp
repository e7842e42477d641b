#include "blowchern/geometry.hpp"

#include <chrono>

namespace blowchern {

int Scenario::codim() const {
  if (const auto* lin = std::get_if<LinearCenter>(&center)) return ambient_dim - lin->dim;
  return static_cast<int>(std::get<CompleteIntersectionCenter>(center).degrees.size());
}

std::vector<int> Scenario::normal_degrees() const {
  if (const auto* ci = std::get_if<CompleteIntersectionCenter>(&center)) return ci->degrees;
  return std::vector<int>(static_cast<std::size_t>(codim()), 1);
}

void Scenario::validate() const {
  if (ambient_dim < 1) throw Error(ErrorKind::invalid_argument, "ambient dimension must be >= 1");
  if (ambient_dim > 60) throw Error(ErrorKind::invalid_argument, "ambient dimension too large");
  if (const auto* lin = std::get_if<LinearCenter>(&center)) {
    if (lin->dim < 0 || lin->dim >= ambient_dim) {
      throw Error(ErrorKind::invalid_argument, "linear center needs 0 <= dim < ambient_dim");
    }
    return;
  }
  const auto& deg = std::get<CompleteIntersectionCenter>(center).degrees;
  if (deg.empty() || static_cast<int>(deg.size()) > ambient_dim) {
    throw Error(ErrorKind::invalid_argument, "complete intersection needs 1..ambient_dim hypersurfaces");
  }
  for (int a : deg) {
    if (a < 1 || a > 1000) throw Error(ErrorKind::invalid_argument, "hypersurface degrees must be in 1..1000");
  }
}

Scenario linear_scenario(int n, int m, std::string label) {
  if (label.empty()) label = "P" + std::to_string(m) + " in P" + std::to_string(n);
  return Scenario{n, LinearCenter{m}, std::move(label)};
}

Scenario ci_scenario(int n, std::vector<int> degrees, std::string label) {
  if (label.empty()) {
    label = "CI(";
    for (std::size_t i = 0; i < degrees.size(); ++i) label += (i ? "," : "") + std::to_string(degrees[i]);
    label += ") in P" + std::to_string(n);
  }
  return Scenario{n, CompleteIntersectionCenter{std::move(degrees)}, std::move(label)};
}

ContextPtr scenario_context(const Scenario& s) {
  s.validate();
  const int n = s.ambient_dim, d = s.codim(), m = s.center_dim();
  Rational weight = 1;
  for (int a : s.normal_degrees()) {
    if (std::holds_alternative<CompleteIntersectionCenter>(s.center)) weight *= a;
  }
  BlowupContext ctx;
  ctx.ringY = RingPresentation::truncated_polynomial("H", n);
  ctx.ringX = RingPresentation::truncated_polynomial("h", m, weight);
  ctx.d = d;
  GradedPoly h = ctx.ringX->var("h");
  GradedPoly total = ctx.ringX->one();
  for (int a : s.normal_degrees()) total = ctx.ringX->reduce(total * (ctx.ringX->one() + Rational(a) * h));
  ctx.N = BundleClass::from_total(ctx.ringX, d, total);
  ctx.pull = Assignment{{"H", h}};
  ctx.lift = Assignment{{"h", ctx.ringY->var("H")}};
  ctx.cycle = weight * power(ctx.ringY->var("H"), static_cast<unsigned>(d));
  ctx.label = s.label;
  return make_context(std::move(ctx), n - 1);
}

ChowClass center_tangent_chern(const Scenario& s, const ContextPtr& ctx) {
  const auto& rx = ctx->ringX;
  const int m = s.center_dim();
  GradedPoly h = rx->var("h");
  GradedPoly num = truncated_power(rx->one() + h, static_cast<unsigned>(s.ambient_dim + 1), m);
  return ChowClass(rx, truncated_product(num, series_inverse(ctx->N.total(), m), m));
}

Rational ambient_euler(const Scenario& s) { return s.ambient_dim + 1; }

BlowupChern blowup_total_chern(const Scenario& s) {
  BlowupChern out;
  out.ctx = scenario_context(s);
  const auto& ry = out.ctx->ringY;
  GradedPoly cY = ry->reduce(power(ry->one() + ry->var("H"), static_cast<unsigned>(s.ambient_dim + 1)));
  ChowClass cX = center_tangent_chern(s, out.ctx);
  out.chi_center = degree(cX);
  out.total = BlowupClass::f_pull(out.ctx, cY) + porteous_delta(out.ctx, cX.value());
  out.pushed = bl_pushforward(out.total);
  out.restricted = bl_restrict(out.total);
  out.chi = degree(ChowClass(ry, out.pushed));
  return out;
}

VerificationReport euler_identity_check(const Scenario& s) {
  auto start = std::chrono::steady_clock::now();
  BlowupChern b = blowup_total_chern(s);
  Rational expected = ambient_euler(s) + Rational(s.codim() - 1) * b.chi_center;
  VerificationReport r;
  r.check = "euler_identity";
  r.parameters = {{"scenario", s.label},
                  {"ambient_dim", s.ambient_dim},
                  {"codim", s.codim()},
                  {"chi_blowup", to_string(b.chi)},
                  {"chi_expected", to_string(expected)},
                  {"chi_center", to_string(b.chi_center)}};
  r.pass = b.chi == expected;
  r.residual = to_string(b.chi - expected);
  r.elapsed_ms = elapsed_ms_since(start);
  return r;
}

std::vector<GradedPoly> center_divisor_restrictions(const Scenario& s, const ContextPtr& ctx) {
  std::vector<GradedPoly> out;
  GradedPoly h = ctx->ringX->var("h");
  for (int a : s.normal_degrees()) out.push_back(ctx->ringX->reduce(Rational(a) * h));
  return out;
}

std::vector<Scenario> catalog() {
  return {
      linear_scenario(2, 0, "point in P2"),
      linear_scenario(3, 0, "point in P3"),
      linear_scenario(3, 1, "line in P3"),
      linear_scenario(4, 0, "point in P4"),
      linear_scenario(4, 1, "line in P4"),
      linear_scenario(4, 2, "plane in P4"),
      ci_scenario(2, {3}, "cubic curve in P2"),
      ci_scenario(2, {2}, "conic in P2"),
      ci_scenario(3, {2}, "quadric surface in P3"),
      ci_scenario(3, {2, 2}, "CI(2,2) curve in P3"),
      ci_scenario(3, {1, 2}, "plane conic in P3"),
      ci_scenario(4, {2, 3}, "CI(2,3) surface in P4"),
      ci_scenario(4, {2, 2, 2}, "CI(2,2,2) curve in P4"),
  };
}

}  // namespace blowchern
