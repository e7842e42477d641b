#include "blowchern/gradedpoly.hpp"

#include <algorithm>
#include <unordered_set>

#include <absl/container/flat_hash_map.h>

namespace blowchern {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::table_mismatch: return "table mismatch";
    case ErrorKind::not_a_unit: return "not a unit series";
    case ErrorKind::not_divisible: return "not divisible";
    case ErrorKind::grading_violation: return "grading violation";
    case ErrorKind::empty_bundle: return "empty bundle";
    case ErrorKind::no_degree_map: return "no degree map";
    case ErrorKind::rank_underflow: return "rank underflow";
    case ErrorKind::ring_mismatch: return "ring mismatch";
    case ErrorKind::inconsistent_scenario: return "inconsistent scenario";
    case ErrorKind::no_pushforward: return "no pushforward";
    case ErrorKind::no_pullback: return "no pullback";
    case ErrorKind::context_mismatch: return "context mismatch";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::internal: return "internal error";
  }
  return "error";
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------- VarTable

VarTable::VarTable(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.size() > Monomial::kMaxVars) {
    throw Error(ErrorKind::invalid_argument,
                "at most " + std::to_string(Monomial::kMaxVars) + " variables per table");
  }
  std::unordered_set<std::string> seen;
  for (const auto& e : entries_) {
    if (e.name.empty()) throw Error(ErrorKind::invalid_argument, "empty variable name");
    if (e.degree < 1) {
      throw Error(ErrorKind::invalid_argument,
                  "variable '" + e.name + "' must have positive degree");
    }
    if (!seen.insert(e.name).second) {
      throw Error(ErrorKind::invalid_argument, "duplicate variable '" + e.name + "'");
    }
  }
}

std::shared_ptr<const VarTable> VarTable::make(std::vector<Entry> entries) {
  return std::make_shared<const VarTable>(std::move(entries));
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t VarTable::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::invalid_argument, "unknown variable '" + std::string(name) + "'");
}

std::shared_ptr<const VarTable> VarTable::extended(const std::vector<Entry>& more) const {
  auto all = entries_;
  all.insert(all.end(), more.begin(), more.end());
  return make(std::move(all));
}

bool same_table(const TablePtr& a, const TablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::span<const std::uint16_t> exps, const VarTable& table) {
  if (exps.size() != table.size()) {
    throw Error(ErrorKind::table_mismatch, "exponent vector length differs from table size");
  }
  n_ = static_cast<std::uint8_t>(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    exps_[i] = exps[i];
    degree_ += exps[i] * table[i].degree;
  }
}

Monomial Monomial::one(const VarTable& table) {
  Monomial m;
  m.n_ = static_cast<std::uint8_t>(table.size());
  return m;
}

Monomial Monomial::var(const VarTable& table, std::size_t index, unsigned power) {
  if (index >= table.size()) throw Error(ErrorKind::invalid_argument, "variable index out of range");
  return one(table).with_exponent(index, power, table);
}

Monomial Monomial::with_exponent(std::size_t i, unsigned e, const VarTable& table) const {
  if (e > 0xFFFF) throw Error(ErrorKind::invalid_argument, "exponent too large");
  Monomial r = *this;
  r.degree_ += (static_cast<int>(e) - static_cast<int>(exps_[i])) * table[i].degree;
  r.exps_[i] = static_cast<std::uint16_t>(e);
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.n_ = a.n_;
  for (std::size_t i = 0; i < a.n_; ++i) {
    r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] + b.exps_[i]);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

bool Monomial::operator==(const Monomial& other) const {
  return n_ == other.n_ && std::equal(exps_.begin(), exps_.begin() + n_, other.exps_.begin());
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < m.n_; ++i) {
    h ^= m.exps_[i];
    h *= 1099511628211ull;
  }
  return h;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] != eb[i]) return ea[i] > eb[i];
  }
  return false;
}

// -------------------------------------------------------------- GradedPoly

namespace {

bool term_less(const Term& a, const Term& b) { return canonical_less(a.mono, b.mono); }

using Accumulator = absl::flat_hash_map<Monomial, Rational, MonomialHash>;

// acc += a*b, skipping temporaries and gcds when everything is integral.
void addmul(Rational& acc, const Rational& a, const Rational& b) {
  if (mpz_cmp_ui(a.get_den_mpz_t(), 1) == 0 && mpz_cmp_ui(b.get_den_mpz_t(), 1) == 0 &&
      mpz_cmp_ui(acc.get_den_mpz_t(), 1) == 0) {
    mpz_addmul(acc.get_num_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    return;
  }
  thread_local Rational tmp;
  mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
}

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back(Term{m, std::move(c)});
  }
  std::sort(out.begin(), out.end(), term_less);
  return out;
}

}  // namespace

GradedPoly::GradedPoly(TablePtr table) : table_(std::move(table)) {}

GradedPoly GradedPoly::constant(TablePtr table, const Rational& c) {
  GradedPoly p(table);
  if (c != 0) {
    p.terms_.push_back(Term{Monomial::one(*table), c});
    p.terms_.back().coeff.canonicalize();
  }
  return p;
}

GradedPoly GradedPoly::variable(TablePtr table, std::string_view name) {
  auto idx = table->index_of(name);
  return monomial(table, Monomial::var(*table, idx));
}

GradedPoly GradedPoly::monomial(TablePtr table, Monomial m, const Rational& c) {
  if (m.size() != table->size()) {
    throw Error(ErrorKind::table_mismatch, "monomial does not belong to this table");
  }
  GradedPoly p(std::move(table));
  if (c != 0) {
    p.terms_.push_back(Term{std::move(m), c});
    p.terms_.back().coeff.canonicalize();
  }
  return p;
}

GradedPoly GradedPoly::from_terms(TablePtr table, std::vector<Term> terms) {
  Accumulator acc;
  for (auto& t : terms) {
    if (t.mono.size() != table->size()) {
      throw Error(ErrorKind::table_mismatch, "term does not belong to this table");
    }
    acc[t.mono] += t.coeff;
  }
  GradedPoly p(std::move(table));
  p.terms_ = drain(acc);
  return p;
}

GradedPoly GradedPoly::from_canonical(TablePtr table, std::vector<Term> terms) {
  GradedPoly p(std::move(table));
  p.terms_ = std::move(terms);
  return p;
}

void GradedPoly::check_table(const GradedPoly& other) const {
  if (!table_ || !other.table_) return;
  if (!same_table(table_, other.table_)) {
    throw Error(ErrorKind::table_mismatch, "operands use different variable tables");
  }
}

Rational GradedPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
  return 0;
}

Rational GradedPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return canonical_less(t.mono, x); });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

int GradedPoly::max_degree() const { return terms_.empty() ? -1 : terms_.back().mono.degree(); }

std::optional<int> GradedPoly::homogeneous_degree(std::optional<int> fallback) const {
  if (terms_.empty()) return fallback;
  int d = terms_.front().mono.degree();
  if (terms_.back().mono.degree() != d) return std::nullopt;
  return d;
}

bool GradedPoly::is_homogeneous_of(int degree) const {
  auto d = homogeneous_degree(degree);
  return d && *d == degree;
}

GradedPoly GradedPoly::component(int degree) const {
  GradedPoly p(table_);
  for (const auto& t : terms_) {
    if (t.mono.degree() == degree) p.terms_.push_back(t);
  }
  return p;
}

unsigned GradedPoly::max_exponent(std::size_t index) const {
  unsigned m = 0;
  for (const auto& t : terms_) m = std::max(m, t.mono.exponent(index));
  return m;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& other) {
  check_table(other);
  if (!table_) table_ = other.table_;
  if (other.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && canonical_less(a->mono, b->mono))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || canonical_less(b->mono, a->mono)) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.push_back(Term{std::move(a->mono), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& other) { return *this += -other; }

GradedPoly& GradedPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  a.check_table(b);
  TablePtr table = a.table_ ? a.table_ : b.table_;
  GradedPoly r(table);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  Accumulator acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) addmul(acc[s.mono * t.mono], s.coeff, t.coeff);
  }
  r.terms_ = drain(acc);
  return r;
}

bool GradedPoly::operator==(const GradedPoly& other) const {
  if (terms_.empty() && other.terms_.empty()) return true;
  check_table(other);
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

namespace {

std::string render_monomial(const Monomial& m, const VarTable& table) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    unsigned e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += table[i].name;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += blowchern::to_string(mag);
    } else {
      if (mag != 1) out += blowchern::to_string(mag) + "*";
      out += render_monomial(t.mono, *table_);
    }
  }
  return out;
}

// -------------------------------------------------------------- operations

GradedPoly poly_arith(const GradedPoly& a, const GradedPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::neg: return -a;
  }
  throw Error(ErrorKind::internal, "unknown arithmetic operation");
}

GradedPoly truncate(const GradedPoly& a, int max_degree) {
  std::vector<Term> kept;
  for (const auto& t : a.terms()) {
    if (t.mono.degree() > max_degree) break;
    kept.push_back(t);
  }
  return GradedPoly::from_canonical(a.table(), std::move(kept));
}

GradedPoly truncated_product(const GradedPoly& a, const GradedPoly& b, int max_degree) {
  if (a.table() && b.table() && !same_table(a.table(), b.table())) {
    throw Error(ErrorKind::table_mismatch, "operands use different variable tables");
  }
  TablePtr table = a.table() ? a.table() : b.table();
  Accumulator acc;
  for (const auto& s : a.terms()) {
    if (s.mono.degree() > max_degree) break;
    int room = max_degree - s.mono.degree();
    for (const auto& t : b.terms()) {
      if (t.mono.degree() > room) break;
      addmul(acc[s.mono * t.mono], s.coeff, t.coeff);
    }
  }
  return GradedPoly::from_canonical(table, drain(acc));
}

GradedPoly power(const GradedPoly& a, unsigned k) {
  GradedPoly r = GradedPoly::constant(a.table(), 1);
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

GradedPoly truncated_power(const GradedPoly& a, unsigned k, int max_degree) {
  GradedPoly r = GradedPoly::constant(a.table(), 1);
  for (unsigned i = 0; i < k; ++i) r = truncated_product(r, a, max_degree);
  return truncate(r, max_degree);
}

GradedPoly series_inverse(const GradedPoly& a, int max_degree) {
  if (a.constant_term() != 1 || (a.size() > 0 && !a.terms().front().mono.is_one())) {
    throw Error(ErrorKind::not_a_unit,
                "series inverse needs constant term 1, got " + to_string(a.constant_term()));
  }
  // 1/(1+u) = sum (-u)^k collected degree by degree:
  // b_0 = 1, b_k = -sum_{j=1..k} a_j b_{k-j}.
  std::vector<GradedPoly> parts(max_degree + 1, GradedPoly(a.table()));
  for (int k = 1; k <= max_degree; ++k) parts[k] = a.component(k);
  std::vector<GradedPoly> inv(max_degree + 1, GradedPoly(a.table()));
  inv[0] = GradedPoly::constant(a.table(), 1);
  GradedPoly total = inv[0];
  for (int k = 1; k <= max_degree; ++k) {
    GradedPoly acc(a.table());
    for (int j = 1; j <= k; ++j) {
      if (parts[j].is_zero() || inv[k - j].is_zero()) continue;
      acc += parts[j] * inv[k - j];
    }
    inv[k] = -acc;
    total += inv[k];
  }
  return total;
}

GradedPoly exact_div_by_var(const GradedPoly& a, std::string_view var) {
  const auto& table = *a.table();
  std::size_t v = table.index_of(var);
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    if (t.mono.exponent(v) == 0) {
      throw Error(ErrorKind::not_divisible,
                  "term " + GradedPoly::monomial(a.table(), t.mono, t.coeff).to_string() +
                      " is not divisible by " + std::string(var));
    }
    out.push_back(Term{t.mono.with_exponent(v, t.mono.exponent(v) - 1, table), t.coeff});
  }
  return GradedPoly::from_terms(a.table(), std::move(out));
}

GradedPoly subst(const GradedPoly& a, const Assignment& assignment, const TablePtr& target) {
  const auto& src = *a.table();
  std::vector<std::optional<GradedPoly>> image(src.size());
  for (const auto& [name, poly] : assignment) {
    auto idx = src.find(name);
    if (!idx) continue;
    if (poly.table() && !same_table(poly.table(), target)) {
      throw Error(ErrorKind::table_mismatch,
                  "replacement for '" + name + "' is not over the target table");
    }
    if (!poly.is_homogeneous_of(src[*idx].degree)) {
      throw Error(ErrorKind::grading_violation,
                  "replacement for '" + name + "' is not homogeneous of degree " +
                      std::to_string(src[*idx].degree));
    }
    GradedPoly p = poly;
    if (!p.table()) p = GradedPoly(target);
    image[*idx] = std::move(p);
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (image[i]) continue;
    auto j = target->find(src[i].name);
    if (!j) {
      if (a.max_exponent(i) == 0) continue;
      throw Error(ErrorKind::table_mismatch,
                  "variable '" + src[i].name + "' has no image in the target table");
    }
    if ((*target)[*j].degree != src[i].degree) {
      throw Error(ErrorKind::grading_violation,
                  "variable '" + src[i].name + "' changes degree between tables");
    }
    image[i] = GradedPoly::monomial(target, Monomial::var(*target, *j));
  }

  // powers[i][k] = image[i]^k, built lazily.
  std::vector<std::vector<GradedPoly>> powers(src.size());
  auto pow_of = [&](std::size_t i, unsigned k) -> const GradedPoly& {
    auto& row = powers[i];
    if (row.empty()) row.push_back(GradedPoly::constant(target, 1));
    while (row.size() <= k) row.push_back(row.back() * *image[i]);
    return row[k];
  };

  // Images that are single terms (renamings, scalings) are applied in place.
  std::vector<const Term*> single(src.size(), nullptr);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (image[i] && image[i]->size() == 1) single[i] = &image[i]->terms()[0];
  }

  Accumulator acc;
  for (const auto& t : a.terms()) {
    bool simple = true;
    for (std::size_t i = 0; i < src.size() && simple; ++i) {
      if (t.mono.exponent(i) > 0 && !single[i]) simple = false;
    }
    if (simple) {
      Monomial m = Monomial::one(*target);
      Rational c = t.coeff;
      for (std::size_t i = 0; i < src.size(); ++i) {
        for (unsigned k = 0; k < t.mono.exponent(i); ++k) {
          m = m * single[i]->mono;
          c *= single[i]->coeff;
        }
      }
      acc[m] += c;
      continue;
    }
    GradedPoly prod = GradedPoly::constant(target, t.coeff);
    for (std::size_t i = 0; i < src.size() && !prod.is_zero(); ++i) {
      unsigned e = t.mono.exponent(i);
      if (e > 0) prod = prod * pow_of(i, e);
    }
    for (const auto& s : prod.terms()) acc[s.mono] += s.coeff;
  }
  return GradedPoly::from_canonical(target, drain(acc));
}

GradedPoly subst(const GradedPoly& a, const Assignment& assignment) {
  TablePtr target = a.table();
  for (const auto& [name, poly] : assignment) {
    if (poly.table()) {
      target = poly.table();
      break;
    }
  }
  return subst(a, assignment, target);
}

GradedPoly embed(const GradedPoly& a, const TablePtr& target) {
  if (same_table(a.table(), target)) {
    GradedPoly r = a;
    if (a.table() != target) r = GradedPoly::from_terms(target, a.terms());
    return r;
  }
  const auto& src = *a.table();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    map[i] = target->find(src[i].name);
    if (map[i] && (*target)[*map[i]].degree != src[i].degree) {
      throw Error(ErrorKind::grading_violation,
                  "variable '" + src[i].name + "' changes degree between tables");
    }
  }
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    std::vector<std::uint16_t> e(target->size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.mono.exponent(i) == 0) continue;
      if (!map[i]) {
        throw Error(ErrorKind::table_mismatch,
                    "variable '" + src[i].name + "' is missing from the target table");
      }
      e[*map[i]] = static_cast<std::uint16_t>(t.mono.exponent(i));
    }
    out.push_back(Term{Monomial(std::move(e), *target), t.coeff});
  }
  return GradedPoly::from_terms(target, std::move(out));
}

GradedPoly elementary_symmetric(const TablePtr& table, const std::vector<std::string>& vars, int k) {
  for (const auto& v : vars) {
    if ((*table)[table->index_of(v)].degree != 1) {
      throw Error(ErrorKind::grading_violation, "elementary symmetric needs degree-1 variables");
    }
  }
  GradedPoly prod = GradedPoly::constant(table, 1);
  for (const auto& v : vars) {
    prod = truncated_product(prod, GradedPoly::constant(table, 1) + GradedPoly::variable(table, v),
                             k);
  }
  return prod.component(k);
}

}  // namespace blowchern
