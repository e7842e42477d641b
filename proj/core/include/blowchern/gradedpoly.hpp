#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "blowchern/error.hpp"

namespace blowchern {

using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Ordered list of graded variables. The order fixed here is the order used
/// for tie-breaking in the canonical monomial order.
class VarTable {
 public:
  struct Entry {
    std::string name;
    int degree = 1;
    bool operator==(const Entry&) const = default;
  };

  explicit VarTable(std::vector<Entry> entries);

  static std::shared_ptr<const VarTable> make(std::vector<Entry> entries);

  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const { return entries_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws invalid_argument when the name is unknown.
  std::size_t index_of(std::string_view name) const;

  /// New table with `more` appended after the existing variables.
  std::shared_ptr<const VarTable> extended(const std::vector<Entry>& more) const;

  bool operator==(const VarTable& other) const { return entries_ == other.entries_; }

 private:
  std::vector<Entry> entries_;
};

using TablePtr = std::shared_ptr<const VarTable>;

bool same_table(const TablePtr& a, const TablePtr& b);

/// Exponent vector together with its weighted degree. Stored inline, so
/// tables are limited to kMaxVars variables.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 32;

  Monomial() = default;
  Monomial(std::span<const std::uint16_t> exps, const VarTable& table);

  static Monomial one(const VarTable& table);
  static Monomial var(const VarTable& table, std::size_t index, unsigned power = 1);

  int degree() const { return degree_; }
  std::size_t size() const { return n_; }
  unsigned exponent(std::size_t i) const { return exps_[i]; }
  std::span<const std::uint16_t> exponents() const { return {exps_.data(), n_}; }
  bool is_one() const { return degree_ == 0; }
  /// Copy with the exponent of variable i replaced.
  Monomial with_exponent(std::size_t i, unsigned e, const VarTable& table) const;

  /// Product of monomials over the same table.
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const;

 private:
  friend class GradedPoly;
  friend struct MonomialHash;
  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint8_t n_ = 0;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Canonical order: ascending weighted degree, ties broken by the larger
/// exponent of the earliest variable coming first.
bool canonical_less(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Exact-rational polynomial in graded variables. Terms are kept sorted in
/// canonical order with no zero coefficients, so structural equality is
/// polynomial equality.
class GradedPoly {
 public:
  GradedPoly() = default;
  explicit GradedPoly(TablePtr table);

  static GradedPoly constant(TablePtr table, const Rational& c);
  static GradedPoly variable(TablePtr table, std::string_view name);
  static GradedPoly monomial(TablePtr table, Monomial m, const Rational& c = 1);
  /// Builds from unsorted terms; like terms are combined.
  static GradedPoly from_terms(TablePtr table, std::vector<Term> terms);
  /// Adopts terms that are already canonical: sorted, distinct, nonzero.
  static GradedPoly from_canonical(TablePtr table, std::vector<Term> terms);

  const TablePtr& table() const { return table_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// -1 for the zero polynomial.
  int max_degree() const;
  /// Degree when every term has the same degree; zero is homogeneous of every
  /// degree and yields `fallback`.
  std::optional<int> homogeneous_degree(std::optional<int> fallback = std::nullopt) const;
  bool is_homogeneous_of(int degree) const;
  GradedPoly component(int degree) const;
  /// Highest exponent of variable `index` over all terms.
  unsigned max_exponent(std::size_t index) const;

  GradedPoly& operator+=(const GradedPoly& other);
  GradedPoly& operator-=(const GradedPoly& other);
  GradedPoly& operator*=(const Rational& c);

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
  friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }
  GradedPoly operator-() const;

  bool operator==(const GradedPoly& other) const;

  /// Canonical text form, e.g. `1 + 3*H + 4*H^2`.
  std::string to_string() const;

 private:
  void check_table(const GradedPoly& other) const;
  TablePtr table_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul, neg };

/// Dispatching form of the ring operations; `b` is ignored for `neg`.
GradedPoly poly_arith(const GradedPoly& a, const GradedPoly& b, ArithOp op);

GradedPoly truncate(const GradedPoly& a, int max_degree);

/// Product with every term of degree above `max_degree` dropped, without
/// forming those terms.
GradedPoly truncated_product(const GradedPoly& a, const GradedPoly& b, int max_degree);

GradedPoly power(const GradedPoly& a, unsigned k);
GradedPoly truncated_power(const GradedPoly& a, unsigned k, int max_degree);

/// b with truncate(a*b, max_degree) == 1. Requires constant term 1.
GradedPoly series_inverse(const GradedPoly& a, int max_degree);

/// a / v for a polynomial every term of which contains v.
GradedPoly exact_div_by_var(const GradedPoly& a, std::string_view var);

/// Simultaneous substitution var -> polynomial over `target`. Variables not
/// named in `assignment` are carried over by name into `target`.
using Assignment = std::map<std::string, GradedPoly, std::less<>>;
GradedPoly subst(const GradedPoly& a, const Assignment& assignment, const TablePtr& target);
/// Same, with the target taken from the replacements (or a's own table when
/// the assignment is empty).
GradedPoly subst(const GradedPoly& a, const Assignment& assignment);

/// Re-expresses a over another table, matching variables by name.
GradedPoly embed(const GradedPoly& a, const TablePtr& target);

/// Parses `3/2*H^2 - (1+n1)*z` style expressions over `table`.
GradedPoly parse_poly(std::string_view text, const TablePtr& table);

/// e_k of the given degree-1 variables.
GradedPoly elementary_symmetric(const TablePtr& table, const std::vector<std::string>& vars, int k);

}  // namespace blowchern
