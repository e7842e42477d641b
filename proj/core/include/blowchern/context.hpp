#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "blowchern/bundles.hpp"

namespace blowchern {

/// The blow-up square for X -> Y of codimension d with normal bundle N.
/// i^* is substitution `pull` (Y variables -> X classes; unnamed variables
/// carry over by name). i_* lifts by `lift` (X variables -> Y classes) and
/// multiplies by the cycle class [X] in A(Y). Either map may be absent.
struct BlowupContext {
  RingPtr ringY;
  RingPtr ringX;
  RingPtr ringXt;  // ringX[zeta] modulo the Grothendieck relation of N
  int d = 0;
  BundleClass N;   // over ringX
  std::string zeta = "z";
  std::optional<Assignment> pull;
  std::optional<Assignment> lift;
  GradedPoly cycle;  // over ringY; meaningful only with `lift`
  std::string label;

  /// i^*: A(Y) -> A(X), in normal form.
  GradedPoly pull_i(const GradedPoly& y) const;
  /// i_*: A(X) -> A(Y), in normal form.
  GradedPoly push_i(const GradedPoly& x) const;
  /// g^*: A(X) -> A(X~), in normal form.
  GradedPoly g_pull(const GradedPoly& x) const;
  /// g^* i^*.
  GradedPoly restrict_to_xt(const GradedPoly& y) const { return g_pull(pull_i(y)); }
  /// g_*: A(X~) -> A(X).
  GradedPoly g_push(const GradedPoly& beta) const;
  GradedPoly zeta_class() const { return ringXt->var(zeta); }
  /// c_i(N) as classes on X~.
  std::vector<GradedPoly> chern_on_xt() const;
};

using ContextPtr = std::shared_ptr<const BlowupContext>;

/// Assembles ringXt from ringX and N and validates the pieces.
ContextPtr make_context(BlowupContext ctx, std::optional<int> xt_dim);

/// Formal universal context in codimension d:
///   A(Y) = Q[H, n1..nd, q1..qe], A(X) = Q[h, n1..nd, q1..qe], both cut at
///   `max_degree`; c_i(N) = n_i; i^*H = h; [X] = n_d (the top class of a
///   global extension of N). q_j are excess classes of rank `excess`.
ContextPtr universal_context(int d, int excess, int max_degree);

/// N split as a sum of line bundles: A(Y) = Q[H, Z1..Zd], A(X) = Q[h, z1..zd],
/// i^*Z_i = z_i, c(N) = prod (1 + z_i), [X] = Z1...Zd.
ContextPtr split_context(int d, int max_degree);

/// Center cut out by a section of a global bundle Nhat of rank d on a ring
/// over ringY: A(X) is a copy of A(Y) with lower-case names, N = i^* Nhat and
/// [X] = c_d(Nhat). All variable names of ringY must start upper-case.
ContextPtr global_bundle_context(const RingPtr& ringY, const BundleClass& nhat);

}  // namespace blowchern
