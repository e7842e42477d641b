#pragma once

#include <string>

#include "blowchern/blowup.hpp"

namespace blowchern {

// ---------------------------------------------------------------- Porteous

/// Bracket sum c_{d-i} - (1-zeta) sum (1+zeta)^i c_{d-i} on X~, unreduced.
GradedPoly porteous_bracket(const BlowupContext& ctx);
/// bracket / zeta before any rewriting.
GradedPoly porteous_alpha_raw(const BlowupContext& ctx);
/// Normal form of bracket / zeta in A(X~).
ChowClass porteous_alpha(const BlowupContext& ctx);
/// c(Y~) - f^*c(Y) = j_*(g^*c(X) alpha).
BlowupClass porteous_delta(const ContextPtr& ctx, const GradedPoly& cX);

// ------------------------------------------------------ formal operators

/// A polynomial in zeta and formal Chern variables, read as an operator on
/// the blow-up: the zeta-free part F0 stands for a class pulled back from Y
/// and each zeta^k m (k >= 1) acts on f^*b as j_*(-zeta^(k-1) m g^*i^*b).
struct TwistedOperator {
  int d = 0;
  int e_excess = 0;
  std::string zeta = "z";
  GradedPoly expr;
  GradedPoly f0;
  GradedPoly fplus;

  static TwistedOperator from_expr(int d, int e_excess, GradedPoly expr, std::string zeta = "z");
};

/// What the operator's variables mean on a given blow-up. `f0_on_y` is the
/// Y-class standing for F0; `on_x` sends every non-zeta variable to a class
/// on X.
struct OperatorInterpretation {
  GradedPoly f0_on_y;
  Assignment on_x;
};

/// Table [z, n1..nd, q1..qe] with deg n_i = i, deg q_j = j.
TablePtr operator_table(int d, int e_excess, const std::string& zeta = "z");

/// An operator evaluated on one blow-up: y' = F0 y and
/// x' = -P g^*i^*y + (g^*i^*F0 + zeta P) x with P = F+/zeta on X~.
class PreparedOperator {
 public:
  PreparedOperator(const TwistedOperator& op, const ContextPtr& ctx, const OperatorInterpretation& interp);

  BlowupClass apply(const BlowupClass& a) const;
  const GradedPoly& f0_on_y() const { return f0y_; }
  const GradedPoly& p_on_xt() const { return p_; }

 private:
  ContextPtr ctx_;
  GradedPoly f0y_, p_, on_x_part_;
};

BlowupClass apply_twisted_operator(const TwistedOperator& op, const ContextPtr& ctx,
                                   const OperatorInterpretation& interp, const BlowupClass& a);

/// c(NN) c(CC (x) O(-X~)) / c(O(X~)) with c1(O(-X~)) = zeta, cut at max_degree.
/// CC has rank `excess` = rank E - d.
TwistedOperator main_normal_chern(int d, int excess, int max_degree);
/// F0 -> c(Nhat) c(Chat) on Y; n_i -> c_i(N), q_j -> i^*c_j(Chat).
OperatorInterpretation main_interpretation(const BlowupContext& ctx, const BundleClass& nhat,
                                           const BundleClass& chat);

/// The same normal class computed directly in the blow-up ring from global
/// bundles Nhat, Chat on Y, applied to [Y~].
BlowupClass simlem_normal_chern(const BundleClass& nhat, const BundleClass& chat,
                                const ContextPtr& ctx);

/// (1-zeta) c(NN (x) O(1)) / c(NN), cut at max_degree. F0 = 1.
TwistedOperator oldrec_operator(int d, int max_degree);
PreparedOperator oldrec_prepared(const ContextPtr& ctx);
BlowupClass oldrec_total_chern(const ContextPtr& ctx, const GradedPoly& cY);

/// (1-zeta) prod (1+Z_i+zeta) / prod (1+Z_i) over [z, Z1..Zd], cut at max_degree.
TwistedOperator difflp_operator(int d, int max_degree);
/// Needs a split context (X variables z1..zd with c(N) = prod (1+z_i)).
PreparedOperator difflp_prepared(const ContextPtr& ctx);
PreparedOperator difflp_prepared(const ContextPtr& ctx, const std::vector<GradedPoly>& z_on_x);
BlowupClass difflp_total_chern(const ContextPtr& ctx, const GradedPoly& cY);
/// Same with the restrictions z_i of the hypersurface classes given explicitly.
BlowupClass difflp_total_chern(const ContextPtr& ctx, const GradedPoly& cY,
                               const std::vector<GradedPoly>& z_on_x);

/// Normal form of an operator expression on P(N): imposes the Grothendieck
/// relation for the given Chern classes (over the operator table) and cuts at
/// max_degree.
GradedPoly reduce_on_exceptional(const GradedPoly& expr, const std::vector<GradedPoly>& chern, int rank,
                                 const std::string& zeta, int max_degree);

/// Which line bundle twists CC in the proper-transform operator.
enum class Twist { MinusExceptional, PlusExceptional };
std::string to_string(Twist t);

/// c(NN) c(CC (x) O(-+X~)) with rank NN = dprime, rank CC = e. F0 = c(NN) c(CC).
TwistedOperator newnormal_chern(int dprime, int e, Twist twist, int max_degree);

}  // namespace blowchern
