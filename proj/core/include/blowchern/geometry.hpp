#pragma once

#include <string>
#include <variant>
#include <vector>

#include "blowchern/operators.hpp"
#include "blowchern/verify.hpp"

namespace blowchern {

/// Linear subspace P^dim inside the ambient P^n.
struct LinearCenter {
  int dim = 0;
};

/// Transversal intersection of hypersurfaces of the given degrees. Smoothness
/// and transversality are assumed, not checked.
struct CompleteIntersectionCenter {
  std::vector<int> degrees;
};

struct Scenario {
  int ambient_dim = 0;
  std::variant<LinearCenter, CompleteIntersectionCenter> center;
  std::string label;

  /// Codimension of the center.
  int codim() const;
  int center_dim() const { return ambient_dim - codim(); }
  /// Degrees a_i with N = sum O(a_i)|_X (all 1 for a linear center).
  std::vector<int> normal_degrees() const;
  /// Throws invalid_argument on bad parameters.
  void validate() const;
};

Scenario linear_scenario(int n, int m, std::string label = {});
Scenario ci_scenario(int n, std::vector<int> degrees, std::string label = {});

/// A(P^n) = Q[H]/(H^(n+1)), A(X) = Q[h]/(h^(dim X + 1)) with h^(dim X) of
/// degree prod a_i; i^*H = h, i_*h^k = (prod a_i) H^(d+k).
ContextPtr scenario_context(const Scenario& s);

/// c(T_X) = (1+h)^(n+1) / prod (1 + a_i h).
ChowClass center_tangent_chern(const Scenario& s, const ContextPtr& ctx);
/// Euler characteristic of P^n.
Rational ambient_euler(const Scenario& s);

struct BlowupChern {
  ContextPtr ctx;
  BlowupClass total;      // c(T_Y~) as f^*c(P^n) + j_*(g^*c(X) alpha)
  GradedPoly pushed;      // f_* of it
  GradedPoly restricted;  // j^* of it
  Rational chi_center;
  Rational chi;           // degree of the top part of `pushed`
};

BlowupChern blowup_total_chern(const Scenario& s);

/// chi(Y~) = chi(P^n) + (d-1) chi(X).
VerificationReport euler_identity_check(const Scenario& s);

/// The Z_i = a_i H restricted to X, for feeding the log-tangent form.
std::vector<GradedPoly> center_divisor_restrictions(const Scenario& s, const ContextPtr& ctx);

/// Linear and complete-intersection centers in P^2..P^4.
std::vector<Scenario> catalog();

}  // namespace blowchern
