#pragma once

#include <string>

#include "blowchern/context.hpp"

namespace blowchern {

/// f^*(y) + j_*(x) on the blow-up. The representation is not unique; compare
/// with bl_equal.
class BlowupClass {
 public:
  BlowupClass() = default;
  BlowupClass(ContextPtr ctx, const GradedPoly& y, const GradedPoly& x);

  static BlowupClass zero(ContextPtr ctx);
  static BlowupClass f_pull(ContextPtr ctx, const GradedPoly& y);
  static BlowupClass j_push(ContextPtr ctx, const GradedPoly& x);
  /// c_1(O(-X~)) = -[X~] = j_*(-1).
  static BlowupClass minus_exceptional(ContextPtr ctx);

  const ContextPtr& ctx() const { return ctx_; }
  const GradedPoly& y_part() const { return y_; }
  const GradedPoly& x_part() const { return x_; }
  bool is_zero() const { return y_.is_zero() && x_.is_zero(); }

  BlowupClass& operator+=(const BlowupClass& o);
  BlowupClass& operator-=(const BlowupClass& o);
  friend BlowupClass operator+(BlowupClass a, const BlowupClass& b) { return a += b; }
  friend BlowupClass operator-(BlowupClass a, const BlowupClass& b) { return a -= b; }
  friend BlowupClass operator*(const Rational& c, BlowupClass a);
  /// Ring product: (f^*a + j_*b)(f^*c + j_*g) = f^*(ac) + j_*(g^*i^*a g + g^*i^*c b - zeta b g).
  friend BlowupClass operator*(const BlowupClass& a, const BlowupClass& b);
  BlowupClass operator-() const;

  std::string to_string() const;

 private:
  void check_ctx(const BlowupClass& o) const;
  ContextPtr ctx_;
  GradedPoly y_;
  GradedPoly x_;
};

BlowupClass power(const BlowupClass& a, unsigned k);

/// f_*(a) = y + i_* g_* x.
GradedPoly bl_pushforward(const BlowupClass& a);
/// j^*(a) = g^* i^* y - zeta x.
GradedPoly bl_restrict(const BlowupClass& a);
bool bl_equal(const BlowupClass& a, const BlowupClass& b);

}  // namespace blowchern
