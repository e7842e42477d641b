#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blowchern/gradedpoly.hpp"

namespace blowchern {

/// var^power -> replacement. The replacement is homogeneous of degree
/// power*deg(var) and mentions var only to exponents below power.
struct RewriteRule {
  std::size_t var = 0;
  unsigned power = 1;
  GradedPoly replacement;
};

/// A graded ring Q[vars]/(top-power relations), optionally truncated above
/// `dim`. When `fundamental` is set, `degree()` reads its coefficient times
/// `fundamental_degree` (e.g. h^dim X = deg X points on a complete
/// intersection).
class RingPresentation {
 public:
  RingPresentation(TablePtr table, std::vector<RewriteRule> rules,
                   std::optional<int> dim = std::nullopt,
                   std::optional<Monomial> fundamental = std::nullopt,
                   Rational fundamental_degree = 1);

  /// Q[var]/(var^(dim+1)) with var^dim fundamental.
  static std::shared_ptr<const RingPresentation> truncated_polynomial(
      std::string var, int dim, Rational fundamental_degree = 1);
  /// Free polynomial ring on `vars`, truncated above `max_degree`.
  static std::shared_ptr<const RingPresentation> free(std::vector<VarTable::Entry> vars,
                                                      int max_degree);

  const TablePtr& table() const { return table_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::optional<int> dim() const { return dim_; }
  const std::optional<Monomial>& fundamental() const { return fundamental_; }
  const Rational& fundamental_degree() const { return fundamental_degree_; }
  const RewriteRule* rule_for(std::size_t var) const;

  /// Exhaustive rule application followed by truncation at dim.
  GradedPoly reduce(const GradedPoly& p) const;

  GradedPoly zero() const { return GradedPoly(table_); }
  GradedPoly one() const { return GradedPoly::constant(table_, 1); }
  GradedPoly var(std::string_view name) const { return GradedPoly::variable(table_, name); }
  GradedPoly parse(std::string_view text) const { return reduce(parse_poly(text, table_)); }

 private:
  TablePtr table_;
  std::vector<RewriteRule> rules_;
  std::vector<int> rule_index_;
  std::optional<int> dim_;
  std::optional<Monomial> fundamental_;
  Rational fundamental_degree_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

/// Normal-form element of a presented ring.
class ChowClass {
 public:
  ChowClass() = default;
  /// Reduces `value` into normal form.
  ChowClass(RingPtr ring, const GradedPoly& value);

  const RingPtr& ring() const { return ring_; }
  const GradedPoly& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  ChowClass component(int degree) const;
  std::string to_string() const { return value_.to_string(); }

  friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator-(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const Rational& c, const ChowClass& a);
  ChowClass operator-() const;
  bool operator==(const ChowClass& other) const;

 private:
  static void check_ring(const ChowClass& a, const ChowClass& b);
  RingPtr ring_;
  GradedPoly value_;
};

ChowClass normal_form(const GradedPoly& p, const RingPtr& ring);

/// Grothendieck relation of the projective bundle of lines P(N) with
/// zeta = c1(O(1)): zeta^d -> -(c1 zeta^(d-1) + ... + cd). `chern[i]` are the
/// classes c_i (i = 0..rank), over `table`, which must contain `zeta`.
RewriteRule grothendieck_rule(std::span<const GradedPoly> chern, int rank, const TablePtr& table,
                              std::string_view zeta);

/// A(P(N)) = base[zeta]/(Grothendieck relation), truncated at `dim`.
RingPtr projective_bundle_ring(const RingPtr& base, std::span<const GradedPoly> chern, int rank,
                               const std::string& zeta, std::optional<int> dim);

/// g_* for g: P(N) -> base: zeta^(d-1+j) g^*a -> s_j(N) a, lower powers -> 0.
/// `beta` may be raw (unreduced); the rule is linear in zeta powers.
ChowClass segre_pushforward(const GradedPoly& beta, std::span<const GradedPoly> chern, int rank,
                            std::string_view zeta, const RingPtr& base);

/// Coefficient of the fundamental monomial scaled by its degree.
Rational degree(const ChowClass& a);

}  // namespace blowchern
