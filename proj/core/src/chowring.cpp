#include "blowchern/chowring.hpp"

#include <map>

namespace blowchern {

RingPresentation::RingPresentation(TablePtr table, std::vector<RewriteRule> rules,
                                   std::optional<int> dim, std::optional<Monomial> fundamental,
                                   Rational fundamental_degree)
    : table_(std::move(table)),
      rules_(std::move(rules)),
      rule_index_(table_->size(), -1),
      dim_(dim),
      fundamental_(std::move(fundamental)),
      fundamental_degree_(std::move(fundamental_degree)) {
  if (dim_ && *dim_ < 0) throw Error(ErrorKind::invalid_argument, "ring dimension must be >= 0");
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    auto& r = rules_[k];
    if (r.var >= table_->size()) throw Error(ErrorKind::invalid_argument, "rule variable out of range");
    const auto& name = (*table_)[r.var].name;
    if (rule_index_[r.var] != -1) {
      throw Error(ErrorKind::invalid_argument, "two rewrite rules for '" + name + "'");
    }
    if (r.power < 1) throw Error(ErrorKind::invalid_argument, "rule power must be positive");
    if (!r.replacement.table()) r.replacement = GradedPoly(table_);
    if (!same_table(r.replacement.table(), table_)) {
      throw Error(ErrorKind::table_mismatch, "rule for '" + name + "' uses another table");
    }
    int need = static_cast<int>(r.power) * (*table_)[r.var].degree;
    if (!r.replacement.is_homogeneous_of(need)) {
      throw Error(ErrorKind::grading_violation,
                  "replacement for " + name + "^" + std::to_string(r.power) +
                      " is not homogeneous of degree " + std::to_string(need));
    }
    if (r.replacement.max_exponent(r.var) >= r.power) {
      throw Error(ErrorKind::invalid_argument,
                  "replacement for '" + name + "' does not lower its exponent");
    }
    rule_index_[r.var] = static_cast<int>(k);
  }
  if (fundamental_) {
    if (fundamental_->size() != table_->size()) {
      throw Error(ErrorKind::table_mismatch, "fundamental monomial uses another table");
    }
    if (!dim_) dim_ = fundamental_->degree();
    if (fundamental_->degree() != *dim_) {
      throw Error(ErrorKind::invalid_argument, "fundamental monomial must have degree dim");
    }
  }
}

RingPtr RingPresentation::truncated_polynomial(std::string var, int dim, Rational fundamental_degree) {
  auto table = VarTable::make({{var, 1}});
  std::vector<RewriteRule> rules{{0, static_cast<unsigned>(dim + 1), GradedPoly(table)}};
  return std::make_shared<const RingPresentation>(table, std::move(rules), dim,
                                                  Monomial::var(*table, 0, dim),
                                                  std::move(fundamental_degree));
}

RingPtr RingPresentation::free(std::vector<VarTable::Entry> vars, int max_degree) {
  auto table = VarTable::make(std::move(vars));
  return std::make_shared<const RingPresentation>(table, std::vector<RewriteRule>{}, max_degree);
}

const RewriteRule* RingPresentation::rule_for(std::size_t var) const {
  int k = rule_index_.at(var);
  return k < 0 ? nullptr : &rules_[k];
}

GradedPoly RingPresentation::reduce(const GradedPoly& p) const {
  if (p.table() && !same_table(p.table(), table_)) {
    throw Error(ErrorKind::table_mismatch, "polynomial is not over this ring's table");
  }
  const int limit = dim_.value_or(-1);
  auto needs_rule = [&](const Monomial& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (rule_index_[i] >= 0 && m.exponent(i) >= rules_[rule_index_[i]].power) return true;
    }
    return false;
  };
  bool normal = true, too_big = false;
  for (const auto& t : p.terms()) {
    if (limit >= 0 && t.mono.degree() > limit) {
      too_big = true;
    } else if (needs_rule(t.mono)) {
      normal = false;
      break;
    }
  }
  if (normal) {
    if (!too_big) return p.table() ? p : GradedPoly(table_);
    return truncate(p, limit);
  }

  std::vector<Term> done;
  std::vector<Term> work(p.terms().begin(), p.terms().end());
  // Rules are homogeneous, so every pass preserves degree and the loop only
  // runs long if the rule set itself cycles.
  for (int round = 0; !work.empty(); ++round) {
    if (round > 100000) throw Error(ErrorKind::internal, "rewriting does not terminate");
    std::vector<Term> next;
    for (auto& t : work) {
      if (limit >= 0 && t.mono.degree() > limit) continue;
      const RewriteRule* rule = nullptr;
      for (std::size_t i = 0; i < t.mono.size(); ++i) {
        if (rule_index_[i] >= 0 && t.mono.exponent(i) >= rules_[rule_index_[i]].power) {
          rule = &rules_[rule_index_[i]];
          break;
        }
      }
      if (!rule) {
        done.push_back(std::move(t));
        continue;
      }
      Monomial rest =
          t.mono.with_exponent(rule->var, t.mono.exponent(rule->var) - rule->power, *table_);
      for (const auto& r : rule->replacement.terms()) {
        next.push_back(Term{rest * r.mono, t.coeff * r.coeff});
      }
    }
    work = GradedPoly::from_terms(table_, std::move(next)).terms();
  }
  return GradedPoly::from_terms(table_, std::move(done));
}

// ---------------------------------------------------------------- ChowClass

ChowClass::ChowClass(RingPtr ring, const GradedPoly& value)
    : ring_(std::move(ring)), value_(ring_->reduce(value.table() ? value : GradedPoly(ring_->table()))) {}

ChowClass ChowClass::component(int degree) const {
  ChowClass c = *this;
  c.value_ = value_.component(degree);
  return c;
}

void ChowClass::check_ring(const ChowClass& a, const ChowClass& b) {
  if (a.ring_ != b.ring_) throw Error(ErrorKind::ring_mismatch, "classes live in different rings");
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
  ChowClass::check_ring(a, b);
  ChowClass r = a;
  r.value_ += b.value_;
  return r;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) {
  ChowClass::check_ring(a, b);
  ChowClass r = a;
  r.value_ -= b.value_;
  return r;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  ChowClass::check_ring(a, b);
  auto bound = a.ring_->dim();
  GradedPoly prod = bound ? truncated_product(a.value_, b.value_, *bound) : a.value_ * b.value_;
  return ChowClass(a.ring_, prod);
}

ChowClass operator*(const Rational& c, const ChowClass& a) {
  ChowClass r = a;
  r.value_ *= c;
  return r;
}

ChowClass ChowClass::operator-() const {
  ChowClass r = *this;
  r.value_ = -value_;
  return r;
}

bool ChowClass::operator==(const ChowClass& other) const {
  check_ring(*this, other);
  return value_ == other.value_;
}

ChowClass normal_form(const GradedPoly& p, const RingPtr& ring) { return ChowClass(ring, p); }

// ------------------------------------------------------- projective bundles

RewriteRule grothendieck_rule(std::span<const GradedPoly> chern, int rank, const TablePtr& table,
                              std::string_view zeta) {
  if (rank < 1) throw Error(ErrorKind::empty_bundle, "projective bundle of a rank-0 bundle");
  std::size_t z = table->index_of(zeta);
  GradedPoly zeta_poly = GradedPoly::variable(table, zeta);
  GradedPoly rhs(table);
  GradedPoly zpow = GradedPoly::constant(table, 1);
  // Accumulate from c_d zeta^0 up to c_1 zeta^(d-1).
  for (int i = rank; i >= 1; --i) {
    if (static_cast<std::size_t>(i) < chern.size()) {
      GradedPoly c = embed(chern[i], table);
      if (c.max_exponent(z) > 0) {
        throw Error(ErrorKind::invalid_argument, "Chern classes must not involve zeta");
      }
      rhs -= c * zpow;
    }
    zpow = zpow * zeta_poly;
  }
  return RewriteRule{z, static_cast<unsigned>(rank), rhs};
}

RingPtr projective_bundle_ring(const RingPtr& base, std::span<const GradedPoly> chern, int rank,
                               const std::string& zeta, std::optional<int> dim) {
  if (rank < 1) throw Error(ErrorKind::empty_bundle, "projective bundle of a rank-0 bundle");
  auto table = base->table()->extended({{zeta, 1}});
  std::vector<RewriteRule> rules;
  for (const auto& r : base->rules()) {
    rules.push_back(RewriteRule{r.var, r.power, embed(r.replacement, table)});
  }
  rules.push_back(grothendieck_rule(chern, rank, table, zeta));
  return std::make_shared<const RingPresentation>(table, std::move(rules), dim);
}

ChowClass segre_pushforward(const GradedPoly& beta, std::span<const GradedPoly> chern, int rank,
                            std::string_view zeta, const RingPtr& base) {
  if (rank < 1) throw Error(ErrorKind::empty_bundle, "pushforward from P of a rank-0 bundle");
  const auto& src = *beta.table();
  std::size_t z = src.index_of(zeta);
  const auto& dst = base->table();

  std::vector<std::size_t> to_dst(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (i == z) continue;
    auto j = dst->find(src[i].name);
    if (!j) throw Error(ErrorKind::table_mismatch, "variable '" + src[i].name + "' not in base ring");
    to_dst[i] = *j;
  }

  // Group the zeta-free coefficients by zeta power.
  std::map<unsigned, std::vector<Term>> by_power;
  for (const auto& t : beta.terms()) {
    unsigned k = t.mono.exponent(z);
    if (static_cast<int>(k) < rank - 1) continue;
    std::vector<std::uint16_t> e(dst->size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (i != z) e[to_dst[i]] = static_cast<std::uint16_t>(t.mono.exponent(i));
    }
    by_power[k].push_back(Term{Monomial(std::move(e), *dst), t.coeff});
  }
  if (by_power.empty()) return ChowClass(base, GradedPoly(dst));

  int jmax = static_cast<int>(by_power.rbegin()->first) - (rank - 1);
  GradedPoly total = GradedPoly::constant(dst, 1);
  for (int i = 1; i <= rank && static_cast<std::size_t>(i) < chern.size(); ++i) {
    total += embed(chern[i], dst);
  }
  GradedPoly segre = series_inverse(total, jmax);

  GradedPoly out(dst);
  for (auto& [k, terms] : by_power) {
    int j = static_cast<int>(k) - (rank - 1);
    GradedPoly coeff = GradedPoly::from_terms(dst, std::move(terms));
    out += coeff * segre.component(j);
  }
  return ChowClass(base, out);
}

Rational degree(const ChowClass& a) {
  const auto& ring = *a.ring();
  if (!ring.dim() || !ring.fundamental()) {
    throw Error(ErrorKind::no_degree_map, "ring has no fundamental class");
  }
  return a.value().coefficient(*ring.fundamental()) * ring.fundamental_degree();
}

}  // namespace blowchern
