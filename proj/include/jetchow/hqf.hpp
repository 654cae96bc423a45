// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jetchow/binomial.hpp"
#include "jetchow/chow_ring.hpp"

// Top Chern class of J_1(L) for a hyperquadric fibration f: X -> B over a
// smooth curve of genus g: dim X = n, e = deg c_1(E) for E = f_* L, and
// b = deg beta where X sits in |2 xi - pi^* beta| inside P = P_B(E).
//
// Two independent routes again:
//   cn_closed     2 A e - B b + 4 C (1 - g) with (A, B, C) from abc(n);
//   cn_recursion  restriction calculus in the evaluation ring {L, F},
//                 F^2 = 0, using only the restricted classes of T_P and
//                 of the divisor class of X, then the top-degree
//                 evaluation L^n = 2e - b, L^{n-1} F = 2.
// The ambient relation for L-powers is never needed: all inputs to the
// recursion are already expressed in L and F.

namespace jetchow::hqf {

struct HQFInput {
  long long n = 0;  // dim X, >= 3
  long long g = 0;  // genus of the base curve
  long long e = 0;  // deg c_1(f_* L)
  long long b = 0;  // deg beta
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

// L^n = 2e - b must be positive for ample L at every n. The constraint
// 2e - 5b >= 0 counts singular fibers and is established only at n = 4;
// elsewhere its failure is a warning, not an error.
inline ValidationReport validate(const HQFInput& in) {
  ValidationReport out;
  if (in.n < 3) out.violations.push_back("n >= 3 violated");
  if (in.g < 0) out.violations.push_back("g >= 0 violated");
  if (2 * in.e - in.b <= 0) out.violations.push_back("2e - b > 0 violated (ample degree)");
  long long fibers = 2 * in.e - 5 * in.b;
  if (fibers < 0) {
    if (in.n == 4) {
      out.violations.push_back("2e - 5b >= 0 violated (singular fiber count)");
    } else {
      out.warnings.push_back(
          "2e - 5b < 0; nonnegativity is only established at n = 4");
    }
  }
  return out;
}

namespace detail_hqf {

inline void require_valid(const HQFInput& in) {
  ValidationReport report = validate(in);
  if (report.ok()) return;
  std::string message = "invalid input:";
  for (const std::string& v : report.violations) message += " " + v + ";";
  throw std::domain_error(message);
}

inline long long signed_pow2(long long i) {
  if (i < 0 || i > 62) throw std::overflow_error("power of two out of range");
  return 1LL << i;
}

}  // namespace detail_hqf

struct ABCTriple {
  long long A = 0;
  long long B = 0;
  long long C = 0;

  friend bool operator==(const ABCTriple& x, const ABCTriple& y) {
    return x.A == y.A && x.B == y.B && x.C == y.C;
  }
};

// Direct summation of the three coefficient double sums:
//   A = sum_t (-1)^t (n+1-t) sum_i (-1)^i 2^i binomial(n, t-i)
//   B = sum_t (-1)^t (n+1-t) sum_i (-1)^i 2^i (i+1) binomial(n+1, t-i)
//   C = sum_t (-1)^t (n+1-t) sum_i (-1)^i 2^i binomial(n+1, t-i-1)
inline ABCTriple abc(long long n) {
  if (n < 3) throw std::domain_error("abc needs n >= 3");
  using detail::Wide;
  Wide a = 0, bb = 0, c = 0;
  for (long long t = 0; t <= n; ++t) {
    Wide inner_a = 0, inner_b = 0, inner_c = 0;
    for (long long i = 0; i <= t; ++i) {
      Wide p2 = detail_hqf::signed_pow2(i);
      Wide sign = (i % 2 == 0) ? 1 : -1;
      inner_a += sign * p2 * binomial(n, t - i);
      inner_b += sign * p2 * (i + 1) * binomial(n + 1, t - i);
      inner_c += sign * p2 * binomial(n + 1, t - i - 1);
    }
    Wide weight = ((t % 2 == 0) ? 1 : -1) * Wide(n + 1 - t);
    a += weight * inner_a;
    bb += weight * inner_b;
    c += weight * inner_c;
  }
  return {detail::narrow(a), detail::narrow(bb), detail::narrow(c)};
}

inline long long cn_closed(const HQFInput& in) {
  detail_hqf::require_valid(in);
  ABCTriple t = abc(in.n);
  using detail::Wide;
  return detail::narrow(Wide(2) * t.A * in.e - Wide(t.B) * in.b +
                        Wide(4) * t.C * (1 - in.g));
}

// Restriction of (2 xi - pi^* beta)^i to X, already reduced to {L, F}:
//   2^i L^i - i b 2^{i-1} L^{i-1} F.
inline ClassExpr divisor_power_restricted(const RingPtr& ring, const HQFInput& in, int i) {
  if (i == 0) return ClassExpr::constant(ring, Rational(1));
  ClassExpr l = gen_L(ring);
  ClassExpr head = scale(pow(l, i), Rational(detail_hqf::signed_pow2(i)));
  Rational f_coeff = Rational(-in.b) * Rational(i) * Rational(detail_hqf::signed_pow2(i - 1));
  ClassExpr tail = scale(mul(pow(l, i - 1), gen_F(ring)), f_coeff);
  return add(head, tail);
}

// Restriction of c_s(T_P) to X:
//   binomial(n+1, s) L^s - e binomial(n, s-1) L^{s-1} F
//   + 2 (1-g) binomial(n+1, s-1) L^{s-1} F.
inline ClassExpr ambient_tangent_restricted(const RingPtr& ring, const HQFInput& in, int s) {
  if (s == 0) return ClassExpr::constant(ring, Rational(1));
  long long n = in.n;
  ClassExpr l = gen_L(ring);
  ClassExpr out = scale(pow(l, s), Rational(binomial(n + 1, s)));
  Rational f_coeff = Rational(-in.e) * Rational(binomial(n, s - 1)) +
                     Rational(2) * Rational(1 - in.g) * Rational(binomial(n + 1, s - 1));
  out = add(out, scale(mul(pow(l, s - 1), gen_F(ring)), f_coeff));
  return out;
}

// Independent oracle. Assembles c_t(T_X) from the normal-bundle recursion
//   c_t(T_X) = sum_{i=0}^{t} (-1)^i c_{t-i}(T_P)|_X ((2 xi - pi^* beta)|_X)^i,
// feeds it into the jet-bundle alternating sum, and evaluates the top class.
inline long long cn_recursion(const HQFInput& in) {
  detail_hqf::require_valid(in);
  int n = static_cast<int>(in.n);
  RingPtr ring = make_fibration_ring(n);
  std::vector<ClassExpr> tangent;
  tangent.reserve(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) {
    ClassExpr acc = ClassExpr::zero(ring);
    for (int i = 0; i <= t; ++i) {
      ClassExpr term = mul(ambient_tangent_restricted(ring, in, t - i),
                           divisor_power_restricted(ring, in, i));
      acc = add(acc, i % 2 == 0 ? term : negate(term));
    }
    tangent.push_back(std::move(acc));
  }
  ClassExpr total = ClassExpr::zero(ring);
  for (int t = 0; t <= n; ++t) {
    ClassExpr term = mul(tangent[static_cast<std::size_t>(t)], pow(gen_L(ring), n - t));
    long long weight = (t % 2 == 0) ? (n + 1 - t) : -(n + 1 - t);
    total = add(total, scale(term, Rational(weight)));
  }
  // Top-degree evaluation: L^n = 2e - b, L^{n-1} F = 2.
  Rational value(0);
  ClassExpr top = component(total, n);
  for (const auto& [mono, c] : top.terms()) {
    int l_exp = static_cast<int>(mono[ring->l_index()]);
    int f_exp = static_cast<int>(mono[ring->f_index()]);
    if (l_exp == n && f_exp == 0) {
      value += c * Rational(2 * in.e - in.b);
    } else if (l_exp == n - 1 && f_exp == 1) {
      value += c * Rational(2);
    } else {
      throw std::logic_error("unexpected top monomial in evaluation ring");
    }
  }
  return value.as_integer();
}

// Number of singular fibers at n = 4.
inline long long singular_fiber_count(long long e, long long b) {
  long long count = 2 * e - 5 * b;
  if (count < 0) {
    throw std::domain_error("2e - 5b >= 0 violated (singular fiber count)");
  }
  return count;
}

struct ObstructionSearch {
  long long e_bound = 0;
  long long b_bound = 0;
  std::vector<std::pair<long long, long long>> witnesses;  // (e, b)
  std::string explanation;
};

// Exhaustive scan for integer pairs with (2e-b) + 3(2e-5b) = 4, 2e-b > 0,
// 2e-5b >= 0, |e| <= e_max, |b| <= b_max. The equation is linear in e for
// each b, so the scan is a single pass over b. An empty witness list means
// the vanishing cannot occur within the bounds.
inline ObstructionSearch defect_obstruction_search(long long e_max, long long b_max) {
  if (e_max < 1 || b_max < 1) throw std::domain_error("search bounds must be positive");
  ObstructionSearch out;
  out.e_bound = e_max;
  out.b_bound = b_max;
  for (long long b = -b_max; b <= b_max; ++b) {
    long long rhs = 4 + 16 * b;  // the equation rearranged to 8e = 4 + 16b
    if (rhs % 8 != 0) continue;
    long long e = rhs / 8;
    if (e < -e_max || e > e_max) continue;
    if (2 * e - b <= 0) continue;
    if (2 * e - 5 * b < 0) continue;
    out.witnesses.emplace_back(e, b);
  }
  out.explanation =
      "writing p = 2e - b and s = 2e - 5b, the constraint p + 3s = 4 with "
      "p > 0 and s >= 0 admits only (p, s) = (4, 0) or (1, 1); these force "
      "2e = 5 or 2e = 1, and neither is even";
  return out;
}

}  // namespace jetchow::hqf
