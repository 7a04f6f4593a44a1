#pragma once

#include "dyntwist/qscalar.hpp"

#include <Eigen/Core>

#include <functional>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<dyntwist::QScalar> {
  typedef dyntwist::QScalar Real;
  typedef dyntwist::QScalar NonInteger;
  typedef dyntwist::QScalar Nested;
  typedef dyntwist::QScalar Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 64
  };
  static inline Real epsilon() { return dyntwist::QScalar(); }
  static inline Real dummy_precision() { return dyntwist::QScalar(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace dyntwist {

using Matrix = Eigen::Matrix<QScalar, Eigen::Dynamic, Eigen::Dynamic>;

struct IrrepSpec {
  int p = 0;  // module dimension p + 1
  friend bool operator==(const IrrepSpec&, const IrrepSpec&) = default;
};

/// Ordered tensor product of irreps V_{p_1} ⊗ ... ⊗ V_{p_n}. Basis vectors
/// are multi-indices (k_1,...,k_n), k_i in 0..p_i, with the first leg slowest
/// (Kronecker-product order). Leg i contributes weight p_i - 2 k_i.
class RepSpace {
 public:
  RepSpace() = default;
  explicit RepSpace(std::vector<int> legs);

  int dim() const { return dim_; }
  int num_legs() const { return static_cast<int>(legs_.size()); }
  const std::vector<int>& legs() const { return legs_; }

  std::vector<int> multi_index(int idx) const;
  int index_of(const std::vector<int>& multi) const;
  int leg_weight(int idx, int leg) const;
  int total_weight(int idx) const;

  friend bool operator==(const RepSpace&, const RepSpace&) = default;

 private:
  std::vector<int> legs_;
  std::vector<int> strides_;
  int dim_ = 1;
};

/// Square matrix over QScalar tied to the space it acts on. Products are
/// written left-to-right as in the formulas and applied right-to-left.
struct Operator {
  RepSpace space;
  Matrix mat;

  static Operator zero(const RepSpace& s);
  static Operator identity(const RepSpace& s);

  bool is_zero() const;
};

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator-(const Operator& a);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(const QScalar& c, const Operator& a);
bool operator==(const Operator& a, const Operator& b);
inline bool operator!=(const Operator& a, const Operator& b) { return !(a == b); }

/// The generators on one RepSpace, related by E_+ = q^{-h/2} e and
/// E_- = f q^{h/2}.
struct GeneratorSet {
  Operator h, Eplus, Eminus, e, f;

  const RepSpace& space() const { return h.space; }
};

/// The simple p+1 dimensional module: h v_k = (p-2k) v_k,
/// e v_k = [p-k+1] v_{k-1}, f v_k = [k+1] v_{k+1}.
GeneratorSet build_irrep(int p);

/// Tensor generators via Δ(E_±) = E_± ⊗ q^{h/2} + q^{-h/2} ⊗ E_±,
/// Δ(h) = h ⊗ 1 + 1 ⊗ h; e, f again recovered through the E_± relations.
/// Iterate for n-fold tensors.
GeneratorSet coproduct_generators(const GeneratorSet& g1, const GeneratorSet& g2);

/// Diagonal operator fn(total weight).
Operator h_diagonal(const RepSpace& s, const std::function<QScalar(int)>& fn);

/// Diagonal operator fn(per-leg weights); generalizes h_diagonal to scalar
/// functions of the individual h_i.
Operator multi_diagonal(const RepSpace& s, const std::function<QScalar(const std::vector<int>&)>& fn);

/// Kronecker product on the concatenated legs.
Operator tensor(const Operator& a, const Operator& b);

/// Conjugation by the basis bijection sending leg i of the result to leg
/// perm[i] of the input; involutive for transpositions.
Operator permute_legs(const Operator& op, const std::vector<int>& perm);

/// Exact inverse by Gauss-Jordan elimination over the fraction field; throws
/// std::domain_error naming the vanishing pivot column when singular.
Operator invert(const Operator& op);

/// exp_variant(A) = Σ A^n/(n)_variant! for nilpotent A; throws
/// std::domain_error when A^dim != 0.
Operator qexp_nilpotent(const Operator& a, QBase variant);

/// Entry-wise substitution x -> x q^m.
Operator subst_x_shift(const Operator& op, int m);

}  // namespace dyntwist
