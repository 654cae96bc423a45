// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "jetchow/binomial.hpp"
#include "jetchow/chow_ring.hpp"

namespace jetchow {

// Total Chern class c_0 + c_1 + ... + c_rank of a bundle, stored as graded
// pieces. Invariants: c_0 = 1, each c_i homogeneous of degree i, and c_i = 0
// beyond the rank.
class TotalChern {
 public:
  TotalChern(int rank, std::vector<ClassExpr> classes) : rank_(rank) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    if (classes.empty()) throw std::invalid_argument("missing degree-0 piece");
    if (classes.size() > static_cast<std::size_t>(rank) + 1) {
      throw std::invalid_argument("more graded pieces than the rank allows");
    }
    // Held by value: the padding push_backs below may reallocate the vector
    // this would otherwise reference into.
    RingPtr ring = classes.front().ring();
    if (classes.front() != ClassExpr::constant(ring, Rational(1))) {
      throw std::invalid_argument("degree-0 piece must be 1");
    }
    for (std::size_t i = 1; i < classes.size(); ++i) {
      if (!same_ring(classes[i].ring(), ring)) {
        throw std::invalid_argument("graded pieces from different rings");
      }
      if (!classes[i].is_homogeneous(static_cast<int>(i))) {
        throw std::invalid_argument("piece " + std::to_string(i) +
                                    " is not homogeneous of its degree");
      }
    }
    classes_ = std::move(classes);
    while (classes_.size() < static_cast<std::size_t>(rank) + 1) {
      classes_.push_back(ClassExpr::zero(ring));
    }
  }

  static TotalChern trivial(const RingPtr& ring, int rank) {
    std::vector<ClassExpr> classes;
    classes.push_back(ClassExpr::constant(ring, Rational(1)));
    return TotalChern(rank, std::move(classes));
  }

  int rank() const { return rank_; }
  const RingPtr& ring() const { return classes_.front().ring(); }

  // Zero outside [0, rank].
  ClassExpr c(int i) const {
    if (i < 0 || i > rank_) return ClassExpr::zero(ring());
    return classes_[static_cast<std::size_t>(i)];
  }

  friend bool operator==(const TotalChern& a, const TotalChern& b) {
    return a.rank_ == b.rank_ && a.classes_ == b.classes_;
  }

 private:
  int rank_;
  std::vector<ClassExpr> classes_;
};

// c_i(E^v) = (-1)^i c_i(E).
inline TotalChern dual(const TotalChern& c) {
  std::vector<ClassExpr> out;
  out.reserve(static_cast<std::size_t>(c.rank()) + 1);
  for (int i = 0; i <= c.rank(); ++i) {
    out.push_back(i % 2 == 0 ? c.c(i) : negate(c.c(i)));
  }
  return TotalChern(c.rank(), std::move(out));
}

// Chern classes of a rank-r bundle twisted by a line class l:
//   c_i(E (x) l) = sum_{j=0}^{i} binomial(r-j, i-j) c_j(E) l^{i-j}.
inline TotalChern twist_by_line(const TotalChern& c, int r, const ClassExpr& ell) {
  if (r != c.rank()) throw std::invalid_argument("rank does not match total class");
  if (!same_ring(ell.ring(), c.ring())) {
    throw std::invalid_argument("line class from a different ring");
  }
  if (!ell.is_zero() && !ell.is_homogeneous(1)) {
    throw std::invalid_argument("twist class must be homogeneous of degree 1");
  }
  std::vector<ClassExpr> out;
  out.reserve(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) {
    ClassExpr acc = ClassExpr::zero(c.ring());
    for (int j = 0; j <= i; ++j) {
      long long coeff = binomial(r - j, i - j);
      if (coeff == 0) continue;
      acc = add(acc, scale(mul(c.c(j), pow(ell, i - j)), Rational(coeff)));
    }
    out.push_back(std::move(acc));
  }
  return TotalChern(r, std::move(out));
}

// Whitney product: c(E + F) = c(E) c(F), ranks add.
inline TotalChern whitney(const TotalChern& a, const TotalChern& b) {
  if (!same_ring(a.ring(), b.ring())) {
    throw std::invalid_argument("operands belong to different rings");
  }
  int rank = a.rank() + b.rank();
  std::vector<ClassExpr> out;
  out.reserve(static_cast<std::size_t>(rank) + 1);
  for (int k = 0; k <= rank; ++k) {
    ClassExpr acc = ClassExpr::zero(a.ring());
    for (int i = 0; i <= k; ++i) {
      acc = add(acc, mul(a.c(i), b.c(k - i)));
    }
    out.push_back(std::move(acc));
  }
  return TotalChern(rank, std::move(out));
}

// c(T_X) for the total space X = P_Y(E) of a scroll ring, assembled from the
// relative Euler sequence and the relative tangent sequence:
//   c(T_{X/Y}) = c(pi^*(E^v) (x) L)  (trivial kernel),
//   c(T_X) = c(T_{X/Y}) pi^* c(T_Y).
// The degree-r piece of the twisted class vanishes modulo the ring relation,
// so the result is a genuine rank-n total class.
inline TotalChern tangent_classes_scroll(const RingPtr& ring) {
  if (!ring->has_chern_wu()) {
    throw std::invalid_argument("tangent assembly needs a scroll ring");
  }
  int r = ring->r();
  int m = ring->m();
  std::vector<ClassExpr> ce;
  ce.reserve(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) ce.push_back(gen_e(ring, i));
  TotalChern twisted = twist_by_line(dual(TotalChern(r, std::move(ce))), r, gen_L(ring));
  if (!twisted.c(r).is_zero()) {
    throw std::logic_error("top twisted piece failed to vanish modulo the ring relation");
  }
  std::vector<ClassExpr> relative;
  relative.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) relative.push_back(twisted.c(i));
  TotalChern fiberwise(r - 1, std::move(relative));
  std::vector<ClassExpr> ct;
  ct.reserve(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) ct.push_back(gen_t(ring, j));
  return whitney(fiberwise, TotalChern(m, std::move(ct)));
}

}  // namespace jetchow
