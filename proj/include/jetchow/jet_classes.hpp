// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jetchow/binomial.hpp"
#include "jetchow/chern.hpp"
#include "jetchow/chow_ring.hpp"

// Top Chern class of the first jet bundle J_1(L) on a scroll X = P_Y(E),
// computed along two independent routes:
//
//   cn_closed     a closed-form coefficient table A_{s1,s2} contracted
//                 against L-powers and base Chern classes;
//   cn_expansion  brute-force assembly from c(T_X) via the jet-bundle
//                 exact sequence, using only ring and Chern primitives.
//
// The two routes share no code path past the ring arithmetic; their
// agreement is the central correctness property of the library.

namespace jetchow::jets {

// Coefficient of L^{n-s1-s2} c_{s1}(E^v) c_{s2}(T_Y) in the closed form,
// n = m + r - 1:
//   A_{s1,s2} = sum_{t=0}^{n} (-1)^t (n+1-t) binomial(r-s1, t-s1-s2).
inline long long coeff_A(int m, int r, int s1, int s2) {
  if (m < 1) throw std::domain_error("base dimension m must be positive");
  if (r < 2) throw std::domain_error("rank r must be at least 2");
  if (s1 < 0 || s2 < 0) throw std::domain_error("negative coefficient index");
  if (s1 + s2 > m) throw std::domain_error("coefficient index out of range: s1 + s2 > m");
  long long n = static_cast<long long>(m) + r - 1;
  detail::Wide acc = 0;
  for (long long t = 0; t <= n; ++t) {
    detail::Wide term = detail::Wide(n + 1 - t) * binomial(r - s1, t - s1 - s2);
    acc += (t % 2 == 0) ? term : -term;
  }
  return detail::narrow(acc);
}

struct CoeffTable {
  int m = 0;
  int r = 0;
  // (s1, s2) -> A_{s1,s2} over the full domain s1, s2 >= 0, s1 + s2 <= m.
  std::map<std::pair<int, int>, long long> entries;
};

// Cached table per (m, r); safe under concurrent lookups.
inline const CoeffTable& coeff_table(int m, int r) {
  static std::map<std::pair<int, int>, CoeffTable> cache;
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  auto key = std::make_pair(m, r);
  auto it = cache.find(key);
  if (it == cache.end()) {
    CoeffTable table;
    table.m = m;
    table.r = r;
    for (int s1 = 0; s1 <= m; ++s1) {
      for (int s2 = 0; s1 + s2 <= m; ++s2) {
        table.entries[{s1, s2}] = coeff_A(m, r, s1, s2);
      }
    }
    it = cache.emplace(key, std::move(table)).first;
  }
  return it->second;
}

// Closed form: sum over the coefficient table, with c_{s1}(E^v) rewritten
// as (-1)^{s1} e_{s1}.
inline ClassExpr cn_closed(const RingPtr& ring) {
  if (!ring->has_chern_wu()) throw std::invalid_argument("closed form needs a scroll ring");
  int m = ring->m();
  int r = ring->r();
  int n = ring->n();
  const CoeffTable& table = coeff_table(m, r);
  ClassExpr total = ClassExpr::zero(ring);
  for (const auto& [key, a] : table.entries) {
    if (a == 0) continue;
    auto [s1, s2] = key;
    ClassExpr e_part = gen_e(ring, s1);
    if (e_part.is_zero()) continue;
    if (s1 % 2 == 1) e_part = negate(e_part);
    ClassExpr term = mul(mul(e_part, gen_t(ring, s2)), pow(gen_L(ring), n - s1 - s2));
    total = add(total, scale(term, Rational(a)));
  }
  return total;
}

inline ClassExpr cn_closed(int m, int r) { return cn_closed(make_scroll_ring(m, r)); }

// Independent oracle: c_n(J_1(L)) = sum_{t=0}^{n} (n+1-t) (-1)^t c_t(T_X) L^{n-t},
// with c(T_X) assembled by tangent_classes_scroll. Never touches coeff_A.
inline ClassExpr cn_expansion(const RingPtr& ring) {
  if (!ring->has_chern_wu()) throw std::invalid_argument("expansion needs a scroll ring");
  int n = ring->n();
  TotalChern tangent = tangent_classes_scroll(ring);
  ClassExpr total = ClassExpr::zero(ring);
  for (int t = 0; t <= n; ++t) {
    ClassExpr term = mul(tangent.c(t), pow(gen_L(ring), n - t));
    long long weight = (t % 2 == 0) ? (n + 1 - t) : -(n + 1 - t);
    total = add(total, scale(term, Rational(weight)));
  }
  return total;
}

inline ClassExpr cn_expansion(int m, int r) { return cn_expansion(make_scroll_ring(m, r)); }

// Hand-printed case formulas for r >= m, bypassing the coefficient sum:
//   r >= m+2:  0
//   r =  m+1:  c_m(E) L^{r-1}
//   r =  m:    (c_{m-1}(E)(c_1(E) + K_Y) + m c_m(E)) L^{r-1},  K_Y = -t_1.
inline ClassExpr special_case_cn(const RingPtr& ring) {
  int m = ring->m();
  int r = ring->r();
  if (r < m) {
    throw std::domain_error("no closed special case for r < m; use cn_closed");
  }
  if (r >= m + 2) return ClassExpr::zero(ring);
  ClassExpr l_factor = pow(gen_L(ring), r - 1);
  if (r == m + 1) return mul(gen_e(ring, m), l_factor);
  ClassExpr canonical_twist = sub(gen_e(ring, 1), gen_t(ring, 1));
  ClassExpr base = add(mul(gen_e(ring, m - 1), canonical_twist),
                       scale(gen_e(ring, m), Rational(m)));
  return mul(base, l_factor);
}

inline ClassExpr special_case_cn(int m, int r) {
  return special_case_cn(make_scroll_ring(m, r));
}

// Sectional invariant of a scroll over (Y, E), rank(E) = m = dim Y:
//   v(Y, E) = 1 + (1/2)((m-2) c_m(E) + (K_Y + c_1(E)) c_{m-1}(E)).
// The constant 1 rides along as the degree-0 piece; callers evaluate the
// degree-m piece plus that constant.
inline ClassExpr fukuma_v(int m, const TotalChern& cE) {
  if (cE.rank() != m) throw std::invalid_argument("fukuma_v needs rank(E) = m");
  const RingPtr& ring = cE.ring();
  ClassExpr canonical_twist = sub(cE.c(1), gen_t(ring, 1));
  ClassExpr inner = add(scale(cE.c(m), Rational(m - 2)),
                        mul(canonical_twist, cE.c(m - 1)));
  return add(ClassExpr::constant(ring, Rational(1)),
             scale(inner, Rational(1, 2)));
}

struct PluckerCodegree {
  long long total = 0;            // c_1(J_1(L)) on the curve
  long long dual_curve_part = 0;  // degree of the dual curve locus
  long long flex_part = 0;        // properly counted flexes

  friend bool operator==(const PluckerCodegree& a, const PluckerCodegree& b) {
    return a.total == b.total && a.dual_curve_part == b.dual_curve_part &&
           a.flex_part == b.flex_part;
  }
};

// Discriminant degree for a smooth plane curve of degree d >= 2 polarized
// by L = (d-1)H: total = d + 3d(d-2) = 3d^2 - 5d.
inline PluckerCodegree plucker_codegree(long long d) {
  if (d < 2) throw std::domain_error("plucker_codegree needs degree d >= 2");
  PluckerCodegree out;
  out.dual_curve_part = d;
  out.flex_part = detail::narrow(detail::Wide(3) * d * (d - 2));
  out.total = detail::narrow(detail::Wide(d) + out.flex_part);
  return out;
}

// Numeric evaluation of base generators: value of e_i at index i-1, value
// of t_j at index j-1. Used for preset and heuristic-witness evaluation.
struct BaseAssignment {
  std::vector<Rational> e_values;
  std::vector<Rational> t_values;
};

enum class BasePreset {
  // (Y, E) = (P^m, direct sum of m copies of O(1)): c_i(E) = binomial(m, i) H^i,
  // c_j(T_Y) = binomial(m+1, j) H^j, with H^m the point class.
  ProjectiveSpaceUnitSum,
};

inline BaseAssignment assignment_for_preset(const RingPtr& ring, BasePreset preset) {
  if (preset != BasePreset::ProjectiveSpaceUnitSum) {
    throw std::invalid_argument("unknown base preset");
  }
  if (ring->e_count() != ring->m()) {
    throw std::invalid_argument(
        "preset (P^m, O(1) summands) needs Chern generators of E up to degree m");
  }
  BaseAssignment out;
  int m = ring->m();
  for (int i = 1; i <= ring->e_count(); ++i) out.e_values.push_back(Rational(binomial(m, i)));
  for (int j = 1; j <= ring->t_count(); ++j) out.t_values.push_back(Rational(binomial(m + 1, j)));
  return out;
}

namespace detail_eval {

inline Rational base_monomial_value(const RingSpec& ring, const Monomial& mono,
                                    const BaseAssignment& asg) {
  Rational value(1);
  for (int i = 1; i <= ring.e_count(); ++i) {
    Exponent exp = mono[ring.e_index(i)];
    for (Exponent k = 0; k < exp; ++k) value *= asg.e_values[static_cast<std::size_t>(i - 1)];
  }
  for (int j = 1; j <= ring.t_count(); ++j) {
    Exponent exp = mono[ring.t_index(j)];
    for (Exponent k = 0; k < exp; ++k) value *= asg.t_values[static_cast<std::size_t>(j - 1)];
  }
  return value;
}

}  // namespace detail_eval

// Evaluates a top-dimensional class against the fundamental class of X:
// every degree-n monomial in normal form factors as L^{r-1} times a base
// monomial of degree m, and L^{r-1} integrates to 1 along the fibers.
// Components of degree below n contribute nothing.
inline Rational evaluate_top(const ClassExpr& expr, const BaseAssignment& asg) {
  const RingSpec& ring = *expr.ring();
  Rational value(0);
  ClassExpr top = component(expr, ring.n());
  for (const auto& [mono, c] : top.terms()) {
    if (static_cast<int>(mono[ring.l_index()]) != ring.r() - 1) {
      throw std::logic_error("top monomial with unexpected L-exponent");
    }
    value += c * detail_eval::base_monomial_value(ring, mono, asg);
  }
  return value;
}

// Evaluates a base-only expression (no L factor) of shape
// constant + degree-m piece against the fundamental class of Y.
inline Rational evaluate_base(const ClassExpr& expr, const BaseAssignment& asg) {
  const RingSpec& ring = *expr.ring();
  Rational value(0);
  for (const auto& [mono, c] : expr.terms()) {
    if (mono[ring.l_index()] != 0) {
      throw std::domain_error("expression is not a base class");
    }
    int d = ring.base_degree(mono);
    if (d == 0) {
      value += c;
    } else if (d == ring.m()) {
      value += c * detail_eval::base_monomial_value(ring, mono, asg);
    } else {
      throw std::domain_error("expression has pieces of intermediate degree; "
                              "only constant + top evaluate against a point");
    }
  }
  return value;
}

}  // namespace jetchow::jets
