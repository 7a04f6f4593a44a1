#pragma once

#include "dyntwist/repr.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dyntwist {

/// Representation-functorial constructor for a named algebra element: a pure
/// closure from one GeneratorSet per abstract leg to the Operator on the
/// joint space. Passing coproduct generators as a leg evaluates the coproduct
/// of the element on that leg (the core contract), so Δ(Q), Q ⊗ 1, (Δ⊗id)F
/// etc. all come from the same recipe.
struct Recipe {
  std::string name;
  int arity = 1;
  std::optional<int> truncation;  // K for truncated infinite products
  std::function<Operator(const std::vector<GeneratorSet>&)> eval;

  Operator operator()(const std::vector<GeneratorSet>& legs) const;
  Operator operator()(const GeneratorSet& g) const;
  Operator operator()(const GeneratorSet& g1, const GeneratorSet& g2) const;
};

/// Diagonal operator fn(total weight of abstract leg 1, of leg 2) on the
/// joint space of two leg spaces.
Operator diag2(const RepSpace& s1, const RepSpace& s2,
               const std::function<QScalar(int, int)>& fn);

// Catalog. Truncated entries take the number K of retained factors.
Recipe rhat();                     // exp_{q^{-1}}((q - q^{-1}) e x f)
Recipe rmat();                     // q^{h x h / 2} rhat
Recipe bigB();                     // x^h q^{h^2/2}
Recipe smallb();                   // q^{h^2/4} x^{h/2}
Recipe u_elem();                   // exp_q(e)
Recipe v_elem();                   // exp_{q^{-1}}(f)
Recipe w_elem();                   // v q^{-h^2/4} u^{-1} q^{-h^2/4} v
Recipe w_elem_alt();               // u^{-1} q^{-h^2/4} v q^{-h^2/4} u^{-1}
Recipe v_from_w();                 // q^{-h^2/4} w u^{-1} w^{-1} q^{h^2/4}
Recipe F_series();
Recipe F_product_large(int K);     // prod_{k=0..K} B_2^k rhat^{-1} B_2^{-k}
Recipe F_product_small(int K);     // prod_{k=0..K} B_2^{-k-1} rhat B_2^{k+1}
Recipe M_babelon();
Recipe N_plus();                   // exp_{q^{-1}}(-x e)
Recipe N_minus(int K);             // prod_{k=K..0} exp_{q^{-1}}(q^{-(2k+1)(h+1)} x^{-2k-1} f)
Recipe tildeN_minus();
Recipe N_full(int K);              // N_minus(K) N_plus
Recipe grouplike_pochh();          // (x; q)_h

/// Stable CLI identifiers.
std::vector<std::string> catalog_names();

/// Looks an element up by CLI name; K feeds the truncated entries and is
/// ignored otherwise. Throws std::invalid_argument on an unknown name.
Recipe catalog_lookup(const std::string& name, int K);

}  // namespace dyntwist
