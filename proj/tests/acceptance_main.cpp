// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: eight criteria, one line each, exit 0 only if all pass.
// Each criterion re-derives its expectations directly against the library
// so a regression in any module shows up as a single readable failure.

#include <chrono>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "jetchow/jetchow.hpp"
#include "testing_support.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  bool pass = true;
  std::string detail;

  void fail(std::string why) {
    if (pass) detail = std::move(why);
    pass = false;
  }
};

// 1. The closed-form top jet class equals the tangent-expansion oracle on
//    every ring with n <= 8.
Criterion oracle_equivalence() {
  using namespace jetchow;
  Criterion c;
  auto start = Clock::now();
  int pairs = 0;
  for (int m = 1; m + 1 <= 8; ++m) {
    for (int r = 2; m + r - 1 <= 8; ++r) {
      RingPtr ring = make_scroll_ring(m, r);
      if (jets::cn_closed(ring) != jets::cn_expansion(ring)) {
        c.fail("mismatch at m=" + std::to_string(m) + " r=" + std::to_string(r));
      }
      ++pairs;
    }
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 30.0) c.fail("runtime budget of 30 s exceeded");
  if (c.pass) {
    c.detail = "closed form = expansion oracle on " + std::to_string(pairs) +
               " rings (n <= 8), " + std::to_string(elapsed).substr(0, 5) + " s";
  }
  return c;
}

// 2. Case formulas agree with the closed form for r >= m, and the four
//    coefficient-table identities hold exhaustively.
Criterion case_formulas_and_identities() {
  using namespace jetchow;
  Criterion c;
  auto start = Clock::now();
  for (int m = 1; m + 1 <= 8; ++m) {
    for (int r = 2; m + r - 1 <= 8; ++r) {
      if (r < m) continue;
      if (jets::special_case_cn(m, r) != jets::cn_closed(m, r)) {
        c.fail("case formula mismatch at m=" + std::to_string(m) +
               " r=" + std::to_string(r));
      }
    }
  }
  for (int m = 1; m <= 6; ++m) {
    // High rank: every table entry vanishes.
    for (int r = m + 2; r <= m + 6; ++r) {
      for (const auto& [key, value] : jets::coeff_table(m, r).entries) {
        if (value != 0) c.fail("nonzero entry at r >= m + 2");
      }
    }
    // r = m + 1: single surviving entry (m, 0) with value (-1)^m.
    for (const auto& [key, value] : jets::coeff_table(m, m + 1).entries) {
      long long expected = key == std::make_pair(m, 0) ? (m % 2 == 0 ? 1 : -1) : 0;
      if (value != expected) c.fail("bad entry at r = m + 1");
    }
    // r = m: exactly the three predicted entries survive.
    if (m >= 2) {
      long long sign = m % 2 == 0 ? 1 : -1;
      for (const auto& [key, value] : jets::coeff_table(m, m).entries) {
        long long expected = 0;
        if (key == std::make_pair(m, 0)) expected = sign * m;
        else if (key == std::make_pair(m - 1, 1)) expected = sign;
        else if (key == std::make_pair(m - 1, 0)) expected = -sign;
        if (value != expected) c.fail("bad entry at r = m");
      }
    }
  }
  // Alternating binomial sums vanish for 2 <= m <= 30.
  for (int m = 2; m <= 30; ++m) {
    long long first = 0, second = 0;
    for (int t = 0; t <= m; ++t) {
      long long sign = t % 2 == 0 ? 1 : -1;
      first += sign * jetchow::binomial(m - 1, t);
      second += sign * t * jetchow::binomial(m, t);
    }
    if (first != 0 || second != 0) c.fail("alternating sum nonzero at m=" + std::to_string(m));
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 1.0) c.fail("runtime budget of 1 s exceeded");
  if (c.pass) c.detail = "case formulas and coefficient identities, m <= 6 / m <= 30";
  return c;
}

// 3. The sectional-invariant identity at r = m, plus its evaluation on the
//    projective-space preset, where the top class degenerates to zero.
Criterion sectional_invariant() {
  using namespace jetchow;
  Criterion c;
  for (int m = 2; m <= 6; ++m) {
    RingPtr ring = make_scroll_ring(m, m);
    std::vector<ClassExpr> ce;
    for (int i = 0; i <= m; ++i) ce.push_back(gen_e(ring, i));
    TotalChern bundle(m, std::move(ce));
    ClassExpr v = jets::fukuma_v(m, bundle);
    ClassExpr rhs = mul(add(sub(scale(v, Rational(2)),
                                ClassExpr::constant(ring, Rational(2))),
                            scale(gen_e(ring, m), Rational(2))),
                        pow(gen_L(ring), m - 1));
    if (jets::cn_closed(ring) != rhs) {
      c.fail("ring identity fails at m=" + std::to_string(m));
    }
  }
  for (int m = 1; m <= 6; ++m) {
    RingPtr ring = make_scroll_ring(m, m >= 2 ? m : 2);
    jets::BaseAssignment preset = jets::assignment_for_preset(
        ring, jets::BasePreset::ProjectiveSpaceUnitSum);
    std::vector<ClassExpr> ce;
    for (int i = 0; i <= m; ++i) ce.push_back(gen_e(ring, i));
    TotalChern bundle(m, std::move(ce));
    if (jets::evaluate_base(jets::fukuma_v(m, bundle), preset) != Rational(0)) {
      c.fail("preset v != 0 at m=" + std::to_string(m));
    }
    if (jets::evaluate_base(gen_e(ring, m), preset) != Rational(1)) {
      c.fail("preset c_m != 1 at m=" + std::to_string(m));
    }
    if (m >= 2 &&
        jets::evaluate_top(jets::cn_closed(ring), preset) != Rational(0)) {
      c.fail("preset top class != 0 at m=" + std::to_string(m));
    }
  }
  if (c.pass) c.detail = "ring identity and preset degeneration, m <= 6";
  return c;
}

// 4. Fibration coefficients: the reference triple, closed form versus the
//    restriction recursion on the full valid grid, and the linear rewrite.
Criterion fibration_agreement() {
  using namespace jetchow;
  Criterion c;
  auto start = Clock::now();
  if (hqf::abc(4) != hqf::ABCTriple{4, 16, -1}) c.fail("reference triple wrong");
  long long cases = 0;
  for (long long n = 3; n <= 8; ++n) {
    for (long long g = 0; g <= 3; ++g) {
      for (long long e = -10; e <= 10; ++e) {
        for (long long b = -10; b <= 10; ++b) {
          hqf::HQFInput in{n, g, e, b};
          if (!hqf::validate(in).ok()) continue;
          ++cases;
          if (hqf::cn_closed(in) != hqf::cn_recursion(in)) {
            c.fail("closed/recursion mismatch at n=" + std::to_string(n) +
                   " g=" + std::to_string(g) + " e=" + std::to_string(e) +
                   " b=" + std::to_string(b));
          }
        }
      }
    }
  }
  {
    using namespace jetchow::cli::detail_verify;
    LinearForm lhs = Rational(8) * kE - Rational(16) * kB - Rational(4) * (kOne - kG);
    LinearForm rhs = (Rational(2) * kE - kB) +
                     Rational(3) * (Rational(2) * kE - Rational(5) * kB) -
                     Rational(4) * (kOne - kG);
    if (!(lhs == rhs)) c.fail("linear rewrite fails symbolically");
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 10.0) c.fail("runtime budget of 10 s exceeded");
  if (c.pass) {
    c.detail = "closed form = recursion on " + std::to_string(cases) +
               " valid tuples, " + std::to_string(elapsed).substr(0, 5) + " s";
  }
  return c;
}

// 5. The Diophantine obstruction has no witness up to 10^4.
Criterion obstruction_scan() {
  using namespace jetchow;
  Criterion c;
  auto start = Clock::now();
  hqf::ObstructionSearch search = hqf::defect_obstruction_search(10000, 10000);
  if (!search.witnesses.empty()) {
    c.fail("unexpected witness e=" + std::to_string(search.witnesses[0].first) +
           " b=" + std::to_string(search.witnesses[0].second));
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 1.0) c.fail("runtime budget of 1 s exceeded");
  if (c.pass) c.detail = "no integer witness with |e|, |b| <= 10^4";
  return c;
}

// 6. Plane-curve discriminant degrees and their genus-based cross-check.
Criterion plane_curve_codegree() {
  using namespace jetchow;
  Criterion c;
  if (!(jets::plucker_codegree(3) == jets::PluckerCodegree{12, 3, 9})) {
    c.fail("cubic reference values wrong");
  }
  for (long long d = 2; d <= 20; ++d) {
    jets::PluckerCodegree v = jets::plucker_codegree(d);
    long long g = (d - 1) * (d - 2) / 2;
    if (v.total != (2 * g - 2) + 2 * d * (d - 1)) {
      c.fail("genus cross-check fails at d=" + std::to_string(d));
    }
    if (v.total != v.dual_curve_part + v.flex_part) {
      c.fail("parts do not sum at d=" + std::to_string(d));
    }
  }
  if (c.pass) c.detail = "cubic = {12, 3, 9}; genus cross-check for d <= 20";
  return c;
}

// 7. The positive-defect decision table column by column, and the exact
//    scroll defect in the n >= 2m regime.
Criterion classification_table() {
  using namespace jetchow;
  using classify::Outcome;
  Criterion c;
  auto expect = [&c](const classify::Classification& got,
                     std::vector<Outcome> want, long long n, long long k) {
    if (got.outcomes != want) {
      c.fail("table mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    for (Outcome o : got.outcomes) {
      if (o != Outcome::Undetermined && got.citations.empty()) {
        c.fail("decided outcome without citation");
      }
    }
  };
  for (long long n = 1; n <= 20; ++n) {
    expect(classify::classify_by_defect(n, n, true), {Outcome::ProjectiveSpace}, n, n);
    if (n - 1 >= 1) {
      expect(classify::classify_by_defect(n, n - 1, true), {Outcome::Impossible}, n, n - 1);
    }
    if (n - 2 >= 1) {
      expect(classify::classify_by_defect(n, n - 2, true), {Outcome::ScrollOverCurve},
             n, n - 2);
    }
    if (n - 3 >= 1) {
      expect(classify::classify_by_defect(n, n - 3, true), {Outcome::Impossible},
             n, n - 3);
    }
    if (n - 4 >= 1) {
      expect(classify::classify_by_defect(n, n - 4, true),
             {Outcome::GrassmannianG14, Outcome::HyperplaneSectionOfG14}, n, n - 4);
      expect(classify::classify_by_defect(n, n - 4, false), {Outcome::Undetermined},
             n, n - 4);
    }
  }
  for (int m = 1; m <= 20; ++m) {
    for (int r = 2; r <= 20; ++r) {
      long long gap = static_cast<long long>(m) + r - 1 - 2 * m;
      if (gap < 0) continue;
      classify::Classification got = classify::scroll_defect(m, r);
      if (!got.defect || *got.defect != gap) {
        c.fail("scroll defect wrong at m=" + std::to_string(m) +
               " r=" + std::to_string(r));
      }
    }
  }
  if (c.pass) c.detail = "decision table for n <= 20; exact defect for m, r <= 20";
  return c;
}

// 8. Randomized ring laws and reduction-order confluence.
Criterion ring_property_suite() {
  using namespace jetchow;
  namespace support = jetchow::testing;
  Criterion c;
  auto start = Clock::now();
  std::vector<RingPtr> rings;
  for (int m = 1; m <= 3; ++m) {
    for (int r = 2; r <= 4; ++r) rings.push_back(make_scroll_ring(m, r));
  }
  auto rng = support::fixed_rng(8080);
  int cases = 10000;
  for (int k = 0; k < cases; ++k) {
    const RingPtr& ring = rings[static_cast<std::size_t>(k) % rings.size()];
    ClassExpr a = normal_form_terms(ring, support::random_raw_terms(ring, rng, 4));
    ClassExpr b = normal_form_terms(ring, support::random_raw_terms(ring, rng, 4));
    ClassExpr d = normal_form_terms(ring, support::random_raw_terms(ring, rng, 4));
    if (a + b != b + a) c.fail("addition not commutative");
    if (a * b != b * a) c.fail("multiplication not commutative");
    if ((a * b) * d != a * (b * d)) c.fail("multiplication not associative");
    if (a * (b + d) != a * b + a * d) c.fail("distributivity fails");
    if (normal_form(a) != a) c.fail("normal form not idempotent");
    ClassExpr whole = ClassExpr::zero(ring);
    for (int deg = 0; deg <= ring->n(); ++deg) {
      ClassExpr piece = component(a, deg);
      if (!piece.is_zero() && !piece.is_homogeneous(deg)) c.fail("grading broken");
      whole = whole + piece;
    }
    if (whole != a) c.fail("components do not sum back");
  }
  int confluence_cases = 2000;
  for (int k = 0; k < confluence_cases; ++k) {
    const RingPtr& ring = rings[static_cast<std::size_t>(k) % rings.size()];
    TermMap raw = support::random_raw_terms(ring, rng, 5);
    if (normal_form_terms(ring, raw).terms() !=
        support::random_order_reduce(ring, raw, rng)) {
      c.fail("random-order reduction disagrees with the library");
    }
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 10.0) c.fail("runtime budget of 10 s exceeded");
  if (c.pass) {
    c.detail = std::to_string(cases) + " law cases + " +
               std::to_string(confluence_cases) + " confluence cases, " +
               std::to_string(elapsed).substr(0, 5) + " s";
  }
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    Criterion (*fn)();
  };
  const Entry entries[] = {
      {"criterion 1 (oracle equivalence)", oracle_equivalence},
      {"criterion 2 (case formulas and identities)", case_formulas_and_identities},
      {"criterion 3 (sectional invariant)", sectional_invariant},
      {"criterion 4 (fibration agreement)", fibration_agreement},
      {"criterion 5 (obstruction scan)", obstruction_scan},
      {"criterion 6 (plane curve codegree)", plane_curve_codegree},
      {"criterion 7 (classification table)", classification_table},
      {"criterion 8 (ring property suite)", ring_property_suite},
  };
  int failed = 0;
  for (const Entry& entry : entries) {
    Criterion result = entry.fn();
    std::printf("%s %s: %s\n", result.pass ? "PASS" : "FAIL", entry.label,
                result.detail.c_str());
    if (!result.pass) ++failed;
  }
  if (failed > 0) {
    std::printf("%d of 8 criteria failed\n", failed);
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}
