#pragma once

#include "dyntwist/elements.hpp"
#include "dyntwist/series.hpp"

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace dyntwist {

/// Blockwise substitution x -> x q^{mu}, where mu is the combined weight of
/// the listed legs. Well-defined only when op preserves that weight; throws
/// std::domain_error otherwise.
Operator shift(const Operator& op, const std::vector<int>& shifting_legs);

/// Agreement of two operators as Laurent matrices: exact iff equal entrywise,
/// otherwise the minimum entrywise agreement order at the anchor, capped.
AgreementOrder operator_agreement(const Operator& a, const Operator& b, Anchor anchor,
                                  int cap);

struct Witness {
  int row = 0;
  int col = 0;
  std::string lhs;
  std::string rhs;

  bool operator==(const Witness&) const = default;
};

struct IdentityReport {
  std::string suite;
  std::string identity;
  std::vector<int> legs;
  std::optional<int> truncation;
  std::string verdict;  // "exact" | "order" | "fail"
  std::optional<int> order;
  std::optional<Witness> witness;
  long runtime_ms = 0;

  /// Pass means exact, or a measured order >= min_order for truncated forms.
  bool ok(int min_order = 1) const;
  nlohmann::json to_json() const;
};

/// Compares lhs against rhs: "exact" on equality, else a measured agreement
/// order at the anchor ("order" when positive, "fail" with the first
/// offending entry otherwise).
IdentityReport compare(std::string suite, std::string identity, const Operator& lhs,
                       const Operator& rhs, std::optional<int> truncation = std::nullopt,
                       Anchor anchor = Anchor::YInfinity, int cap = 40);

/// Pointwise product recipe (a b)(x) = a(x) b(x); arities must match.
Recipe recipe_product(const std::string& name, const Recipe& a, const Recipe& b);

/// delta Q = Delta(Q) Q_2^{-1} Q_1(x q^{h_2})^{-1} on the pair (g1, g2).
Operator delta(const Recipe& Q, const GeneratorSet& g1, const GeneratorSet& g2);

/// Dynamical R-matrix R(x) = F_21(x)^{-1} R F_12(x).
Operator dynamical_r(const Recipe& F, const GeneratorSet& g1, const GeneratorSet& g2);

// Identity checkers. Anchor/cap only matter for truncated recipes.
IdentityReport check_cocycle(const Recipe& F, const GeneratorSet& g1,
                             const GeneratorSet& g2, const GeneratorSet& g3,
                             Anchor anchor = Anchor::YInfinity, int cap = 40);
IdentityReport check_dybe(const Recipe& F, const GeneratorSet& g1, const GeneratorSet& g2,
                          const GeneratorSet& g3, Anchor anchor = Anchor::YInfinity,
                          int cap = 40);
IdentityReport check_abrr(const Recipe& F, const GeneratorSet& g1, const GeneratorSet& g2,
                          Anchor anchor = Anchor::YInfinity, int cap = 40);
/// F M_1(x q^{h_2}) M_2 = Delta(M), checked in this form.
IdentityReport check_coboundary(const Recipe& M, const Recipe& F, const GeneratorSet& g1,
                                const GeneratorSet& g2, Anchor anchor = Anchor::YInfinity,
                                int cap = 40);
/// R(x) M_1(x q^{h_2}) M_2 = M_2(x q^{h_1}) M_1 R, with R(x) built from F_series.
IdentityReport check_vertex_irf(const Recipe& M, const GeneratorSet& g1,
                                const GeneratorSet& g2);

/// The recursion tower at the instance v(x) = b^{-1} v b, u(x) = x^{h/2} u x^{-h/2},
/// J = 1: M^(p) as a recipe, so Delta comes from coproduct evaluation.
Recipe lemma_M(int p);

/// Runs the tower up to p_max on (g1, g2): F^(0) = 1, F^(1) = rhat^{-1} = G,
/// both commutation brackets, the three asymptotic statements, and the
/// agreement of F^(p) with F_series per p.
std::vector<IdentityReport> lemma_recursion(int p_max, const GeneratorSet& g1,
                                            const GeneratorSet& g2, int cap = 40);

/// Quantum Weyl group relations on a single representation.
std::vector<IdentityReport> check_weyl_single(const GeneratorSet& g);
/// Coproduct relations for u, v, w and the pentagon relation on a pair.
std::vector<IdentityReport> check_weyl_pair(const GeneratorSet& g1,
                                            const GeneratorSet& g2);

/// Weight-r component of the reordering of the double-sum coboundary element
/// on V_p: both displayed summations assembled literally and compared exactly.
IdentityReport weight_component_identity(int r, int p);

}  // namespace dyntwist
