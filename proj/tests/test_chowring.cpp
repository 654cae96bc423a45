// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "jetchow/chow_ring.hpp"
#include "testing_support.hpp"

using namespace jetchow;
namespace support = jetchow::testing;

TEST_CASE("scroll ring layout") {
  RingPtr ring = make_scroll_ring(2, 3);
  CHECK(ring->m() == 2);
  CHECK(ring->r() == 3);
  CHECK(ring->n() == 4);
  CHECK(ring->width() == 5);  // L, e1, e2, t1, t2
  CHECK(ring->e_count() == 2);
  CHECK(ring->t_count() == 2);
  CHECK(ring->has_chern_wu());
  CHECK_FALSE(ring->has_fiber());
  CHECK(ring->generators()[ring->l_index()].name == "L");
  CHECK(ring->degree_of(ring->e_index(2)) == 2);
  CHECK(ring->degree_of(ring->t_index(1)) == 1);

  // Bundle rank caps the e generators at min(r, m).
  RingPtr tall = make_scroll_ring(5, 3);
  CHECK(tall->e_count() == 3);
  CHECK(tall->t_count() == 5);

  CHECK_THROWS_AS(make_scroll_ring(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_scroll_ring(2, 1), std::invalid_argument);
}

TEST_CASE("frozen product in the minimal ring") {
  RingPtr ring = make_scroll_ring(1, 2);
  ClassExpr L = gen_L(ring);
  ClassExpr product = mul(L, L);
  CHECK(product == mul(gen_e(ring, 1), L));
  CHECK(product.str() == "L*e1");
}

TEST_CASE("normal form bounds hold after reduction") {
  auto check_bounds = [](const RingPtr& ring, const ClassExpr& expr) {
    const RingSpec& spec = *ring;
    for (const auto& [mono, c] : expr.terms()) {
      CHECK_FALSE(c.is_zero());
      if (spec.has_chern_wu()) {
        CHECK(static_cast<int>(mono[spec.l_index()]) < spec.r());
      }
      CHECK(spec.base_degree(mono) <= spec.m());
      CHECK(spec.total_degree(mono) <= spec.n());
      if (spec.has_fiber()) CHECK(mono[spec.f_index()] <= 1);
    }
  };
  auto rng = support::fixed_rng(101);
  for (int m = 1; m <= 3; ++m) {
    for (int r = 2; r <= 4; ++r) {
      RingPtr ring = make_scroll_ring(m, r);
      for (int k = 0; k < 50; ++k) {
        TermMap raw = support::random_raw_terms(ring, rng, 6);
        check_bounds(ring, normal_form_terms(ring, raw));
      }
    }
  }
}

TEST_CASE("ring axioms on random expressions") {
  auto rng = support::fixed_rng(202);
  RingPtr ring = make_scroll_ring(2, 3);
  for (int k = 0; k < 200; ++k) {
    ClassExpr a = normal_form_terms(ring, support::random_raw_terms(ring, rng, 5));
    ClassExpr b = normal_form_terms(ring, support::random_raw_terms(ring, rng, 5));
    ClassExpr c = normal_form_terms(ring, support::random_raw_terms(ring, rng, 5));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(normal_form(a) == a);
    CHECK(a - a == ClassExpr::zero(ring));
  }
}

TEST_CASE("reduction is confluent") {
  auto rng = support::fixed_rng(303);
  for (int m = 1; m <= 3; ++m) {
    for (int r = 2; r <= 4; ++r) {
      RingPtr ring = make_scroll_ring(m, r);
      for (int k = 0; k < 100; ++k) {
        TermMap raw = support::random_raw_terms(ring, rng, 6);
        ClassExpr library = normal_form_terms(ring, raw);
        TermMap independent = support::random_order_reduce(ring, raw, rng);
        CHECK(library.terms() == independent);
      }
    }
  }
}

TEST_CASE("normalization commutes with raw products") {
  auto rng = support::fixed_rng(404);
  RingPtr ring = make_scroll_ring(2, 3);
  for (int k = 0; k < 100; ++k) {
    TermMap raw_a = support::random_raw_terms(ring, rng, 4);
    TermMap raw_b = support::random_raw_terms(ring, rng, 4);
    ClassExpr via_raw = normal_form_terms(ring, support::raw_product(raw_a, raw_b));
    ClassExpr via_reduced =
        mul(normal_form_terms(ring, raw_a), normal_form_terms(ring, raw_b));
    CHECK(via_raw == via_reduced);
  }
}

TEST_CASE("graded components partition an expression") {
  auto rng = support::fixed_rng(505);
  RingPtr ring = make_scroll_ring(2, 3);
  for (int k = 0; k < 50; ++k) {
    ClassExpr a = normal_form_terms(ring, support::random_raw_terms(ring, rng, 8));
    ClassExpr sum = ClassExpr::zero(ring);
    for (int d = 0; d <= ring->n(); ++d) {
      ClassExpr piece = component(a, d);
      CHECK((piece.is_zero() || piece.is_homogeneous(d)));
      sum = sum + piece;
    }
    CHECK(sum == a);
  }
}

TEST_CASE("powers and scalars") {
  RingPtr ring = make_scroll_ring(2, 3);
  ClassExpr L = gen_L(ring);
  CHECK(pow(L, 0) == ClassExpr::constant(ring, Rational(1)));
  CHECK(pow(L, 3) == mul(L, mul(L, L)));
  CHECK(pow(L, ring->n() + 1) == ClassExpr::zero(ring));
  CHECK(Rational(0) * L == ClassExpr::zero(ring));
  CHECK(Rational(-2) * L == negate(L + L));
  CHECK_THROWS_AS(pow(L, -1), std::invalid_argument);
}

TEST_CASE("mixing rings is rejected") {
  RingPtr a = make_scroll_ring(2, 3);
  RingPtr b = make_scroll_ring(3, 2);
  CHECK_THROWS_AS(add(gen_L(a), gen_L(b)), std::invalid_argument);
  CHECK_THROWS_AS(mul(gen_L(a), gen_e(b, 1)), std::invalid_argument);
  // Structurally identical rings interoperate even as distinct objects.
  RingPtr a2 = make_scroll_ring(2, 3);
  CHECK(same_ring(a, a2));
  CHECK(add(gen_L(a), gen_L(a2)) == Rational(2) * gen_L(a));
  TermMap bad;
  bad[Monomial(2, 0)] = Rational(1);
  CHECK_THROWS_AS(ClassExpr::from_terms(a, bad), std::invalid_argument);
}

TEST_CASE("fibration ring truncates without rewriting") {
  RingPtr ring = make_fibration_ring(3);
  CHECK_FALSE(ring->has_chern_wu());
  CHECK(ring->has_fiber());
  ClassExpr L = gen_L(ring);
  ClassExpr F = gen_F(ring);
  CHECK(mul(F, F) == ClassExpr::zero(ring));
  CHECK(pow(L, 3) != ClassExpr::zero(ring));
  CHECK(pow(L, 4) == ClassExpr::zero(ring));
  CHECK(mul(pow(L, 2), F) != ClassExpr::zero(ring));
  CHECK(mul(pow(L, 3), F) == ClassExpr::zero(ring));
}

TEST_CASE("expression rendering") {
  RingPtr ring = make_scroll_ring(2, 3);
  CHECK(ClassExpr::zero(ring).str() == "0");
  CHECK(ClassExpr::constant(ring, Rational(1, 2)).str() == "1/2");
  // Terms of equal degree render in monomial order: t2 sorts before L*e1.
  ClassExpr expr = sub(scale(mul(gen_L(ring), gen_e(ring, 1)), Rational(3)),
                       gen_t(ring, 2));
  CHECK(expr.str() == "-t2 + 3*L*e1");
  ClassExpr squared = pow(gen_L(ring), 2);
  CHECK(squared.str() == "L^2");
}
