// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jetchow/rational.hpp"

// Truncated graded quotient rings modeling the Chow ring of a projective
// bundle P_Y(E) -> Y, with formal generators
//
//   L          tautological class (degree 1),
//   e_1..e_k   Chern classes of E, k = min(r, m),
//   t_1..t_m   Chern classes of T_Y,
//   F          fiber class (degree 1, evaluation rings only).
//
// K_Y is represented as -t_1. Relations, applied by normal_form:
//   (a) L^r = sum_{i=1}^{k} (-1)^{i+1} e_i L^{r-i}   (quotient convention),
//   (b) products of base generators of total degree > m vanish,
//   (c) everything of total degree > n vanishes,
//   (d) F^2 = 0 where F exists.
// Generators e_i with i > min(r, m) and t_j with j > m are never created;
// they are identically zero.

namespace jetchow {

enum class GenKind { Tautological, BaseChernE, BaseChernTangent, Fiber };

struct Generator {
  std::string name;
  int degree = 1;
  GenKind kind = GenKind::Tautological;

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.name == b.name && a.degree == b.degree && a.kind == b.kind;
  }
};

using Exponent = std::uint16_t;
using Monomial = std::vector<Exponent>;  // dense, one slot per generator

// Immutable ring description. Construct through make_scroll_ring or
// make_fibration_ring; safely shareable across threads.
class RingSpec {
 public:
  RingSpec(std::vector<Generator> generators, int m, int r, int n,
           bool chern_wu)
      : generators_(std::move(generators)),
        m_(m),
        r_(r),
        n_(n),
        chern_wu_(chern_wu) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const Generator& g = generators_[i];
      if (g.degree < 1) throw std::invalid_argument("generator degree must be >= 1");
      for (std::size_t j = i + 1; j < generators_.size(); ++j) {
        if (generators_[j].name == g.name) {
          throw std::invalid_argument("duplicate generator name: " + g.name);
        }
      }
      switch (g.kind) {
        case GenKind::Tautological: l_index_ = static_cast<int>(i); break;
        case GenKind::Fiber: f_index_ = static_cast<int>(i); break;
        case GenKind::BaseChernE: e_indices_.push_back(static_cast<int>(i)); break;
        case GenKind::BaseChernTangent: t_indices_.push_back(static_cast<int>(i)); break;
      }
    }
    if (l_index_ < 0) throw std::invalid_argument("ring needs a tautological generator");
  }

  int m() const { return m_; }
  int r() const { return r_; }
  int n() const { return n_; }
  bool has_chern_wu() const { return chern_wu_; }
  bool has_fiber() const { return f_index_ >= 0; }

  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t width() const { return generators_.size(); }

  std::size_t l_index() const { return static_cast<std::size_t>(l_index_); }

  std::size_t f_index() const {
    if (f_index_ < 0) throw std::logic_error("ring has no fiber generator");
    return static_cast<std::size_t>(f_index_);
  }

  // Count of e-generators, i.e. min(r, m) for scroll rings.
  int e_count() const { return static_cast<int>(e_indices_.size()); }
  int t_count() const { return static_cast<int>(t_indices_.size()); }

  std::size_t e_index(int i) const {
    if (i < 1 || i > e_count()) throw std::out_of_range("no such e-generator");
    return static_cast<std::size_t>(e_indices_[static_cast<std::size_t>(i - 1)]);
  }

  std::size_t t_index(int j) const {
    if (j < 1 || j > t_count()) throw std::out_of_range("no such t-generator");
    return static_cast<std::size_t>(t_indices_[static_cast<std::size_t>(j - 1)]);
  }

  int degree_of(std::size_t index) const { return generators_[index].degree; }

  bool is_base_generator(std::size_t index) const {
    GenKind k = generators_[index].kind;
    return k == GenKind::BaseChernE || k == GenKind::BaseChernTangent ||
           k == GenKind::Fiber;
  }

  int base_degree(const Monomial& mono) const {
    int d = 0;
    for (std::size_t i = 0; i < width(); ++i) {
      if (is_base_generator(i)) d += static_cast<int>(mono[i]) * degree_of(i);
    }
    return d;
  }

  int total_degree(const Monomial& mono) const {
    int d = 0;
    for (std::size_t i = 0; i < width(); ++i) {
      d += static_cast<int>(mono[i]) * degree_of(i);
    }
    return d;
  }

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.m_ == b.m_ && a.r_ == b.r_ && a.n_ == b.n_ &&
           a.chern_wu_ == b.chern_wu_ && a.generators_ == b.generators_;
  }

 private:
  std::vector<Generator> generators_;
  int m_;
  int r_;
  int n_;
  bool chern_wu_;
  int l_index_ = -1;
  int f_index_ = -1;
  std::vector<int> e_indices_;
  std::vector<int> t_indices_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

// Scroll ring for P_Y(E) -> Y with dim Y = m and rank E = r >= 2:
// generators L, e_1..e_{min(r,m)}, t_1..t_m; top dimension n = m + r - 1.
inline RingPtr make_scroll_ring(int m, int r) {
  if (m < 1) throw std::invalid_argument("base dimension m must be positive");
  if (r < 2) throw std::invalid_argument("rank r must be at least 2 for a scroll");
  std::vector<Generator> gens;
  gens.push_back({"L", 1, GenKind::Tautological});
  int e_top = r < m ? r : m;
  for (int i = 1; i <= e_top; ++i) {
    gens.push_back({"e" + std::to_string(i), i, GenKind::BaseChernE});
  }
  for (int j = 1; j <= m; ++j) {
    gens.push_back({"t" + std::to_string(j), j, GenKind::BaseChernTangent});
  }
  return std::make_shared<RingSpec>(std::move(gens), m, r, m + r - 1, true);
}

// Two-generator evaluation ring {L, F} over a curve base: F^2 = 0, total
// truncation at n, and no rewrite for powers of L (the ambient relation is
// unknown; top-degree values are supplied by an evaluation map instead).
inline RingPtr make_fibration_ring(int n) {
  if (n < 1) throw std::invalid_argument("top dimension must be positive");
  std::vector<Generator> gens;
  gens.push_back({"L", 1, GenKind::Tautological});
  gens.push_back({"F", 1, GenKind::Fiber});
  return std::make_shared<RingSpec>(std::move(gens), 1, 0, n, false);
}

using TermMap = std::map<Monomial, Rational>;

// Element of a RingSpec in normal form: every stored monomial has nonzero
// coefficient, L-exponent below r (when the ring has the L-rewrite), base
// degree at most m, total degree at most n, and F-exponent at most 1.
// Values are immutable; all operations below are pure.
class ClassExpr {
 public:
  explicit ClassExpr(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("null ring");
  }

  static ClassExpr zero(RingPtr ring) { return ClassExpr(std::move(ring)); }

  static ClassExpr constant(RingPtr ring, const Rational& c) {
    ClassExpr out(std::move(ring));
    if (!c.is_zero()) out.terms_.emplace(Monomial(out.ring_->width(), 0), c);
    return out;
  }

  static ClassExpr generator(RingPtr ring, std::size_t index) {
    ClassExpr out(std::move(ring));
    if (index >= out.ring_->width()) throw std::out_of_range("generator index");
    Monomial mono(out.ring_->width(), 0);
    mono[index] = 1;
    return from_terms(out.ring_, {{std::move(mono), Rational(1)}});
  }

  // Normalizing constructor; accepts arbitrary (unreduced) term data.
  static ClassExpr from_terms(const RingPtr& ring, TermMap raw);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_homogeneous(int d) const {
    for (const auto& [mono, c] : terms_) {
      if (ring_->total_degree(mono) != d) return false;
    }
    return true;
  }

  std::string str() const;

  friend bool operator==(const ClassExpr& a, const ClassExpr& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ClassExpr& a, const ClassExpr& b) { return !(a == b); }

 private:
  RingPtr ring_;
  TermMap terms_;
};

namespace detail {

inline void require_same_ring(const ClassExpr& a, const ClassExpr& b) {
  if (!same_ring(a.ring(), b.ring())) {
    throw std::invalid_argument("operands belong to different rings");
  }
}

inline void accumulate(TermMap& map, const Monomial& mono, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = map.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) map.erase(it);
  }
}

// Reduces one monomial modulo the ring relations, depth-first. Each
// L-rewrite strictly lowers the L-exponent and preserves total degree,
// so the recursion terminates and the truncation checks commute with it.
inline void reduce_monomial(const RingSpec& ring, const Monomial& mono,
                            const Rational& coeff, TermMap& out) {
  if (coeff.is_zero()) return;
  if (ring.has_fiber() && mono[ring.f_index()] > 1) return;
  if (ring.base_degree(mono) > ring.m()) return;
  if (ring.total_degree(mono) > ring.n()) return;
  std::size_t l = ring.l_index();
  if (ring.has_chern_wu() && static_cast<int>(mono[l]) >= ring.r()) {
    for (int i = 1; i <= ring.e_count(); ++i) {
      Monomial child = mono;
      child[l] = static_cast<Exponent>(child[l] - i);
      ++child[ring.e_index(i)];
      Rational sign = (i % 2 == 1) ? coeff : -coeff;
      reduce_monomial(ring, child, sign, out);
    }
    return;
  }
  accumulate(out, mono, coeff);
}

}  // namespace detail

inline ClassExpr ClassExpr::from_terms(const RingPtr& ring, TermMap raw) {
  ClassExpr out(ring);
  for (const auto& [mono, c] : raw) {
    if (mono.size() != ring->width()) {
      throw std::invalid_argument("monomial width does not match ring");
    }
    detail::reduce_monomial(*ring, mono, c, out.terms_);
  }
  return out;
}

// Reduction entry point for unreduced term data.
inline ClassExpr normal_form_terms(const RingPtr& ring, const TermMap& raw) {
  return ClassExpr::from_terms(ring, raw);
}

// Idempotent by construction: ClassExpr values are already reduced.
inline ClassExpr normal_form(const ClassExpr& a) {
  return ClassExpr::from_terms(a.ring(), a.terms());
}

inline ClassExpr add(const ClassExpr& a, const ClassExpr& b) {
  detail::require_same_ring(a, b);
  TermMap sum = a.terms();
  for (const auto& [mono, c] : b.terms()) detail::accumulate(sum, mono, c);
  return ClassExpr::from_terms(a.ring(), std::move(sum));
}

inline ClassExpr scale(const ClassExpr& a, const Rational& s) {
  TermMap out;
  if (!s.is_zero()) {
    for (const auto& [mono, c] : a.terms()) out.emplace(mono, c * s);
  }
  return ClassExpr::from_terms(a.ring(), std::move(out));
}

inline ClassExpr negate(const ClassExpr& a) { return scale(a, Rational(-1)); }

inline ClassExpr sub(const ClassExpr& a, const ClassExpr& b) {
  return add(a, negate(b));
}

inline ClassExpr mul(const ClassExpr& a, const ClassExpr& b) {
  detail::require_same_ring(a, b);
  TermMap raw;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial mono(ma.size());
      for (std::size_t i = 0; i < ma.size(); ++i) {
        mono[i] = static_cast<Exponent>(ma[i] + mb[i]);
      }
      detail::accumulate(raw, mono, ca * cb);
    }
  }
  return ClassExpr::from_terms(a.ring(), std::move(raw));
}

inline ClassExpr pow(const ClassExpr& a, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  ClassExpr acc = ClassExpr::constant(a.ring(), Rational(1));
  for (int i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

// Degree-d graded piece; the components of a value sum back to it.
inline ClassExpr component(const ClassExpr& a, int d) {
  TermMap out;
  for (const auto& [mono, c] : a.terms()) {
    if (a.ring()->total_degree(mono) == d) out.emplace(mono, c);
  }
  return ClassExpr::from_terms(a.ring(), std::move(out));
}

inline ClassExpr operator+(const ClassExpr& a, const ClassExpr& b) { return add(a, b); }
inline ClassExpr operator-(const ClassExpr& a, const ClassExpr& b) { return sub(a, b); }
inline ClassExpr operator*(const ClassExpr& a, const ClassExpr& b) { return mul(a, b); }
inline ClassExpr operator*(const Rational& s, const ClassExpr& a) { return scale(a, s); }
inline ClassExpr operator-(const ClassExpr& a) { return negate(a); }

inline std::string ClassExpr::str() const {
  if (terms_.empty()) return "0";
  // Deterministic order: ascending total degree, then monomial order.
  std::vector<std::pair<const Monomial*, const Rational*>> items;
  items.reserve(terms_.size());
  for (const auto& [mono, c] : terms_) items.emplace_back(&mono, &c);
  std::stable_sort(items.begin(), items.end(),
                   [this](const auto& a, const auto& b) {
                     return ring_->total_degree(*a.first) <
                            ring_->total_degree(*b.first);
                   });
  std::string out;
  bool first = true;
  for (const auto& [mono_ptr, coeff_ptr] : items) {
    const Monomial& mono = *mono_ptr;
    Rational c = *coeff_ptr;
    bool negative = c < Rational(0);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (negative) c = -c;
    first = false;
    std::string body;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += ring_->generators()[i].name;
      if (mono[i] > 1) body += "^" + std::to_string(mono[i]);
    }
    if (body.empty()) {
      out += c.str();
    } else if (c == Rational(1)) {
      out += body;
    } else {
      out += c.str() + "*" + body;
    }
  }
  return out;
}

// Convenience accessors for the named generators.
inline ClassExpr gen_L(const RingPtr& ring) {
  return ClassExpr::generator(ring, ring->l_index());
}

inline ClassExpr gen_F(const RingPtr& ring) {
  return ClassExpr::generator(ring, ring->f_index());
}

// e_i as a class; i = 0 gives 1 and i beyond the generator range gives 0.
inline ClassExpr gen_e(const RingPtr& ring, int i) {
  if (i == 0) return ClassExpr::constant(ring, Rational(1));
  if (i < 0 || i > ring->e_count()) return ClassExpr::zero(ring);
  return ClassExpr::generator(ring, ring->e_index(i));
}

inline ClassExpr gen_t(const RingPtr& ring, int j) {
  if (j == 0) return ClassExpr::constant(ring, Rational(1));
  if (j < 0 || j > ring->t_count()) return ClassExpr::zero(ring);
  return ClassExpr::generator(ring, ring->t_index(j));
}

}  // namespace jetchow
