#pragma once

#include <optional>
#include <vector>

#include "blowchern/chowring.hpp"

namespace blowchern {

/// Rank plus total Chern class, stored as components c_0 = 1, c_1, ... in
/// normal form. Purely formal: nothing forces c_i = 0 above the rank except
/// that construction refuses such components. Quotients may produce nonzero
/// classes past the rank; those are kept apart in `beyond_rank()`.
class BundleClass {
 public:
  BundleClass() = default;
  /// `chern` may omit c_0 only when empty; trailing zero components are fine.
  BundleClass(RingPtr ring, int rank, std::vector<GradedPoly> chern);

  static BundleClass trivial(RingPtr ring, int rank);
  static BundleClass line(RingPtr ring, const GradedPoly& c1);
  /// Splits a total class into graded pieces; pieces above the rank must vanish.
  static BundleClass from_total(RingPtr ring, int rank, const GradedPoly& total);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  /// c_i, zero for i past the stored list.
  GradedPoly c(int i) const;
  ChowClass component(int i) const { return ChowClass(ring_, c(i)); }
  const std::vector<GradedPoly>& components() const { return chern_; }
  GradedPoly total() const;
  /// Components c_{rank+1}, c_{rank+2}, ... of a quotient series, trailing zeros trimmed.
  const std::vector<GradedPoly>& beyond_rank() const { return beyond_; }

  bool operator==(const BundleClass& other) const;

 private:
  friend BundleClass quotient_chern(const BundleClass&, const BundleClass&, std::optional<int>);
  RingPtr ring_;
  int rank_ = 0;
  std::vector<GradedPoly> chern_;
  std::vector<GradedPoly> beyond_;
};

BundleClass whitney_sum(const BundleClass& a, const BundleClass& b);
BundleClass dual(const BundleClass& a);
/// c_k(A (x) L) = sum_i C(r-i, k-i) c_i(A) l^(k-i), l = c1(L).
BundleClass tensor_line(const BundleClass& a, const GradedPoly& l);
/// c(E)/c(S) expanded through `bound` (default: ring dim, else rank of E).
BundleClass quotient_chern(const BundleClass& e, const BundleClass& s,
                           std::optional<int> bound = std::nullopt);
/// s(A) = 1/c(A) through degree `bound`.
GradedPoly segre_class(const BundleClass& a, int bound);

}  // namespace blowchern
