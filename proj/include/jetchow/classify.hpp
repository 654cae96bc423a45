// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jetchow/jet_classes.hpp"

// Decision procedures for dual-variety defect and discriminant codegree.
// Every decided outcome carries at least one citation anchor so that the
// CLI reports are self-documenting; anchors are opaque labels attached to
// the rules, not statements this library verifies.

namespace jetchow::classify {

enum class Outcome {
  ProjectiveSpace,
  Impossible,
  ScrollOverCurve,
  GrassmannianG14,
  HyperplaneSectionOfG14,
  ExceptionalSegrePair,
  Zero,
  PositiveAtLeastOne,
  Undetermined,
};

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::ProjectiveSpace: return "ProjectiveSpace";
    case Outcome::Impossible: return "Impossible";
    case Outcome::ScrollOverCurve: return "ScrollOverCurve";
    case Outcome::GrassmannianG14: return "GrassmannianG14";
    case Outcome::HyperplaneSectionOfG14: return "HyperplaneSectionOfG14";
    case Outcome::ExceptionalSegrePair: return "ExceptionalSegrePair";
    case Outcome::Zero: return "Zero";
    case Outcome::PositiveAtLeastOne: return "PositiveAtLeastOne";
    case Outcome::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

// Tagged decision result. A list of outcomes expresses a disjunction
// ("one of these"); defect is set when its exact value is known.
struct Classification {
  std::vector<Outcome> outcomes;
  std::optional<long long> defect;
  std::vector<std::string> citations;
  std::string notes;
};

namespace detail_classify {

inline Classification make(std::vector<Outcome> outcomes,
                           std::optional<long long> defect,
                           std::vector<std::string> citations,
                           std::string notes) {
  for (Outcome o : outcomes) {
    if (o != Outcome::Undetermined && citations.empty()) {
      throw std::logic_error("decided outcome without citation");
    }
  }
  return Classification{std::move(outcomes), defect, std::move(citations),
                        std::move(notes)};
}

}  // namespace detail_classify

// Defect of a scroll X = P_Y(E), n = m + r - 1:
//   n - 2m >= 0  ->  defect exactly n - 2m;
//   r = m        ->  defect 0, except for the preset pair (P^m, O(1)
//                    summands), where the defect is positive;
//   r <= m - 1   ->  no equality is available, only the trivial bound.
inline Classification scroll_defect(int m, int r,
                                    std::optional<jets::BasePreset> preset = {}) {
  if (m < 1) throw std::invalid_argument("base dimension m must be positive");
  if (r < 2) throw std::invalid_argument("rank r must be at least 2 for a scroll");
  if (preset && r != m) {
    throw std::invalid_argument("preset (P^m, O(1) summands) requires rank r = m");
  }
  long long n = static_cast<long long>(m) + r - 1;
  long long gap = n - 2 * m;
  if (gap >= 0) {
    Outcome tag = gap == 0 ? Outcome::Zero : Outcome::PositiveAtLeastOne;
    return detail_classify::make(
        {tag}, gap, {"Prop 2.1 (2.1.1)", "Rmk 2.2"},
        "discriminant locus is irreducible");
  }
  if (r == m) {
    std::vector<std::string> citations = {"Prop 2.1 (2.1.2)"};
    if (m <= 2) citations.push_back("Rmk 3.1.6");
    if (preset) {
      citations.push_back("(0.4)");
      return detail_classify::make(
          {Outcome::PositiveAtLeastOne, Outcome::ExceptionalSegrePair},
          std::nullopt, std::move(citations),
          "(P^m x P^{m-1}, O(1,1)): top jet class vanishes, defect >= 1");
    }
    return detail_classify::make({Outcome::Zero}, 0, std::move(citations), "");
  }
  return detail_classify::make(
      {Outcome::Undetermined}, std::nullopt, {},
      "defect >= n - 2m holds trivially; no equality is available in this range");
}

// Decision table for positive defect k = def(X, L) with L ample and spanned:
//   k = n            (P^n, O(1))
//   k = n-1          impossible
//   k = n-2 (n >= 3) scroll over a smooth curve
//   k = n-3 (k > 0)  impossible
//   k = n-4 (k > 0)  G(1,4) or one of its smooth hyperplane sections,
//                    under Picard rank one
// Everything else is out of the table's reach.
inline Classification classify_by_defect(long long n, long long k,
                                         bool picard_rank_one) {
  if (n < 1) throw std::invalid_argument("dimension n must be positive");
  if (k < 0 || k > n) throw std::invalid_argument("defect k must satisfy 0 <= k <= n");
  if (k == n) {
    return detail_classify::make({Outcome::ProjectiveSpace}, k,
                                 {"LPS1 Thm 2.8"}, "(P^n, O(1))");
  }
  if (k == n - 1 && k > 0) {
    return detail_classify::make({Outcome::Impossible}, k, {"LPS1 Thm 2.8"},
                                 "this defect value cannot occur");
  }
  if (k == n - 2 && n >= 3) {
    return detail_classify::make({Outcome::ScrollOverCurve}, k, {"Thm 3.1"},
                                 "scroll over a smooth curve");
  }
  if (k == n - 3 && k > 0) {
    return detail_classify::make({Outcome::Impossible}, k, {"Thm 3.2"},
                                 "this defect value cannot occur");
  }
  if (k == n - 4 && k > 0 && picard_rank_one) {
    return detail_classify::make(
        {Outcome::GrassmannianG14, Outcome::HyperplaneSectionOfG14}, k,
        {"Prop 3.3"},
        "Plucker-embedded G(1,4) in P^9, or a smooth hyperplane section of it");
  }
  return detail_classify::make({Outcome::Undetermined}, k, {},
                               "no decision rule applies");
}

struct RankValidation {
  bool accepted = false;
  std::string reason;
  std::vector<std::string> citations;
};

// An ample and spanned rank-r bundle on an m-fold with c_m(E) = 1 must have
// r = m: lower rank kills c_m, higher rank would produce a codegree-one
// pair, which cannot exist.
inline RankValidation rank_from_top_chern_one(int m, int r) {
  if (m < 1 || r < 1) throw std::invalid_argument("m and r must be positive");
  if (r == m) return {true, "rank matches base dimension", {"Rmk 2.0"}};
  if (r < m) return {false, "c_m(E)=0", {"Rmk 2.0"}};
  return {false, "codegree 1 impossible", {"Rmk 2.0"}};
}

struct ConormalReport {
  long long ambient_dim = 0;  // N, for Y embedded in P^N
  long long base_dim = 0;     // m = dim Y
  long long n = 0;            // N - 1, dimension of the conormal total space
  long long def0 = 0;         // n - m, defect of the dual-variety stratum
  std::optional<long long> defect;
  bool dual_strictly_contained = false;
  std::string notes;
  std::vector<std::string> citations;
};

// Invariants of the conormal setup for Y in P^N polarized by hyperplanes:
// def0 = n - m always; once N - 1 >= 2m the full defect is n - 2m and the
// discriminant strictly contains the dual variety, the residual component
// being the tangent developable of Y.
inline ConormalReport conormal_invariants(long long N, long long m) {
  if (m < 1) throw std::invalid_argument("base dimension m must be positive");
  if (N <= m) throw std::invalid_argument("degenerate embedding: need N >= m + 1");
  ConormalReport out;
  out.ambient_dim = N;
  out.base_dim = m;
  out.n = N - 1;
  out.def0 = out.n - m;
  out.citations = {"Rmk 2.4.1"};
  if (N - 1 >= 2 * m) {
    out.defect = out.n - 2 * m;
    out.dual_strictly_contained = true;
    out.notes =
        "dual variety strictly contained in the discriminant locus; "
        "residual component is the tangent developable";
    out.citations.push_back("Prop 2.1 (2.1.1)");
    out.citations.push_back("Prop 2.4.4");
  }
  return out;
}

struct CodegreeReport {
  long long cn = 0;
  std::string status;  // "defect-positive" | "codegree" | "inconsistent"
  std::string message;
  std::vector<std::string> citations;
};

// Reading of a computed top jet class value: zero forces positive defect;
// a positive value is the discriminant degree under tame codegree; a
// negative value signals an upstream transcription error.
inline CodegreeReport codegree_report(long long cn) {
  CodegreeReport out;
  out.cn = cn;
  out.citations = {"(0.4)"};
  if (cn == 0) {
    out.status = "defect-positive";
    out.message = "defect >= 1";
  } else if (cn > 0) {
    out.status = "codegree";
    out.message = "not defective; under tame codegree, codeg = " + std::to_string(cn);
  } else {
    out.status = "inconsistent";
    out.message = "negative value inconsistent with ample-and-spanned positivity";
  }
  return out;
}

}  // namespace jetchow::classify
