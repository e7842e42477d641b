#include "blowchern/bundles.hpp"

namespace blowchern {

namespace {

void trim(std::vector<GradedPoly>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

void check_same_ring(const BundleClass& a, const BundleClass& b) {
  if (a.ring() != b.ring()) throw Error(ErrorKind::ring_mismatch, "bundles live over different rings");
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

}  // namespace

BundleClass::BundleClass(RingPtr ring, int rank, std::vector<GradedPoly> chern)
    : ring_(std::move(ring)), rank_(rank) {
  if (!ring_) throw Error(ErrorKind::invalid_argument, "bundle without a ring");
  if (rank_ < 0) throw Error(ErrorKind::invalid_argument, "negative rank");
  if (chern.empty()) chern.push_back(ring_->one());
  for (std::size_t i = 0; i < chern.size(); ++i) {
    GradedPoly ci = ring_->reduce(chern[i].table() ? chern[i] : ring_->zero());
    if (!ci.is_homogeneous_of(static_cast<int>(i))) {
      throw Error(ErrorKind::grading_violation,
                  "c_" + std::to_string(i) + " is not homogeneous of degree " + std::to_string(i));
    }
    chern_.push_back(std::move(ci));
  }
  if (!(chern_[0] == ring_->one())) throw Error(ErrorKind::invalid_argument, "c_0 must be 1");
  trim(chern_);
  if (static_cast<int>(chern_.size()) > rank_ + 1) {
    throw Error(ErrorKind::invalid_argument,
                "Chern class c_" + std::to_string(chern_.size() - 1) + " exceeds rank " +
                    std::to_string(rank_));
  }
}

BundleClass BundleClass::trivial(RingPtr ring, int rank) { return BundleClass(std::move(ring), rank, {}); }

BundleClass BundleClass::line(RingPtr ring, const GradedPoly& c1) {
  auto one = ring->one();
  return BundleClass(std::move(ring), 1, {one, c1});
}

BundleClass BundleClass::from_total(RingPtr ring, int rank, const GradedPoly& total) {
  GradedPoly t = ring->reduce(total);
  int top = t.max_degree();
  std::vector<GradedPoly> parts;
  for (int i = 0; i <= top; ++i) parts.push_back(t.component(i));
  return BundleClass(std::move(ring), rank, std::move(parts));
}

GradedPoly BundleClass::c(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= chern_.size()) return ring_->zero();
  return chern_[i];
}

GradedPoly BundleClass::total() const {
  GradedPoly t = ring_->zero();
  for (const auto& ci : chern_) t += ci;
  return t;
}

bool BundleClass::operator==(const BundleClass& other) const {
  if (ring_ != other.ring_ || rank_ != other.rank_) return false;
  if (chern_.size() != other.chern_.size() || beyond_.size() != other.beyond_.size()) return false;
  for (std::size_t i = 0; i < chern_.size(); ++i) {
    if (!(chern_[i] == other.chern_[i])) return false;
  }
  for (std::size_t i = 0; i < beyond_.size(); ++i) {
    if (!(beyond_[i] == other.beyond_[i])) return false;
  }
  return true;
}

BundleClass whitney_sum(const BundleClass& a, const BundleClass& b) {
  check_same_ring(a, b);
  const auto& ring = a.ring();
  int top = static_cast<int>(a.components().size() + b.components().size()) - 2;
  std::vector<GradedPoly> out;
  for (int k = 0; k <= top; ++k) {
    GradedPoly ck = ring->zero();
    for (int i = 0; i <= k; ++i) {
      GradedPoly ai = a.c(i);
      if (ai.is_zero()) continue;
      GradedPoly bj = b.c(k - i);
      if (!bj.is_zero()) ck += ai * bj;
    }
    out.push_back(std::move(ck));
  }
  return BundleClass(ring, a.rank() + b.rank(), std::move(out));
}

BundleClass dual(const BundleClass& a) {
  std::vector<GradedPoly> out = a.components();
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return BundleClass(a.ring(), a.rank(), std::move(out));
}

BundleClass tensor_line(const BundleClass& a, const GradedPoly& l) {
  const auto& ring = a.ring();
  GradedPoly ell = ring->reduce(l);
  if (!ell.is_homogeneous_of(1)) {
    throw Error(ErrorKind::grading_violation, "twisting class must be homogeneous of degree 1");
  }
  const int r = a.rank();
  std::vector<GradedPoly> lpow{ring->one()};
  for (int k = 1; k <= r; ++k) lpow.push_back(ring->reduce(lpow.back() * ell));
  std::vector<GradedPoly> out;
  for (int k = 0; k <= r; ++k) {
    GradedPoly ck = ring->zero();
    for (int i = 0; i <= k; ++i) {
      GradedPoly ci = a.c(i);
      if (ci.is_zero()) continue;
      Rational b = binomial(r - i, k - i);
      if (b != 0) ck += b * (ci * lpow[k - i]);
    }
    out.push_back(ring->reduce(ck));
  }
  return BundleClass(ring, r, std::move(out));
}

BundleClass quotient_chern(const BundleClass& e, const BundleClass& s, std::optional<int> bound) {
  check_same_ring(e, s);
  if (s.rank() > e.rank()) {
    throw Error(ErrorKind::rank_underflow, "quotient of rank " + std::to_string(e.rank()) +
                                               " by rank " + std::to_string(s.rank()));
  }
  const auto& ring = e.ring();
  int rank = e.rank() - s.rank();
  int top = bound.value_or(ring->dim().value_or(e.rank()));
  top = std::max(top, rank);
  GradedPoly q = ring->reduce(truncated_product(e.total(), segre_class(s, top), top));

  std::vector<GradedPoly> kept;
  for (int i = 0; i <= rank; ++i) kept.push_back(q.component(i));
  BundleClass out(ring, rank, std::move(kept));
  for (int i = rank + 1; i <= top; ++i) out.beyond_.push_back(q.component(i));
  trim(out.beyond_);
  return out;
}

GradedPoly segre_class(const BundleClass& a, int bound) {
  return a.ring()->reduce(series_inverse(a.total(), bound));
}

}  // namespace blowchern
