#include "dyntwist/elements.hpp"

#include <stdexcept>

namespace dyntwist {

Operator Recipe::operator()(const std::vector<GeneratorSet>& legs) const {
  if (static_cast<int>(legs.size()) != arity)
    throw std::domain_error("Recipe " + name + ": expected " + std::to_string(arity) +
                            " legs, got " + std::to_string(legs.size()));
  return eval(legs);
}

Operator Recipe::operator()(const GeneratorSet& g) const {
  return (*this)(std::vector<GeneratorSet>{g});
}

Operator Recipe::operator()(const GeneratorSet& g1, const GeneratorSet& g2) const {
  return (*this)(std::vector<GeneratorSet>{g1, g2});
}

Operator diag2(const RepSpace& s1, const RepSpace& s2,
               const std::function<QScalar(int, int)>& fn) {
  std::vector<int> legs = s1.legs();
  legs.insert(legs.end(), s2.legs().begin(), s2.legs().end());
  RepSpace s(std::move(legs));
  Operator op = Operator::zero(s);
  int d2 = s2.dim();
  for (int i1 = 0; i1 < s1.dim(); ++i1) {
    int mu1 = s1.total_weight(i1);
    for (int i2 = 0; i2 < d2; ++i2)
      op.mat(i1 * d2 + i2, i1 * d2 + i2) = fn(mu1, s2.total_weight(i2));
  }
  return op;
}

namespace {

QScalar qpow(int k) { return QScalar::q_power(k); }

Operator qh_sq_diag(const RepSpace& s, int quarter_sign) {
  // q^{sign h^2/4} = diag t^{sign mu^2}
  return h_diagonal(s, [quarter_sign](int mu) { return QScalar::t_power(quarter_sign * mu * mu); });
}

// B(x)^k on one leg as a weight function.
QScalar bigB_weight(int mu, int k) {
  return QScalar::monomial(1, 2 * k * mu * mu, 2 * k * mu);
}

Operator rhat_on(const GeneratorSet& g1, const GeneratorSet& g2) {
  Operator arg = (qpow(1) - qpow(-1)) * tensor(g1.e, g2.f);
  return qexp_nilpotent(arg, QBase::QInverse);
}

}  // namespace

Recipe rhat() {
  return {"rhat", 2, std::nullopt, [](const std::vector<GeneratorSet>& legs) {
            return rhat_on(legs[0], legs[1]);
          }};
}

Recipe rmat() {
  return {"r", 2, std::nullopt, [](const std::vector<GeneratorSet>& legs) {
            Operator cartan = diag2(legs[0].space(), legs[1].space(), [](int mu1, int mu2) {
              return QScalar::t_power(2 * mu1 * mu2);  // q^{mu1 mu2 / 2}
            });
            return cartan * rhat_on(legs[0], legs[1]);
          }};
}

Recipe bigB() {
  return {"B", 1, std::nullopt, [](const std::vector<GeneratorSet>& legs) {
            return h_diagonal(legs[0].space(), [](int mu) { return bigB_weight(mu, 1); });
          }};
}

Recipe smallb() {
  return {"b", 1, std::nullopt, [](const std::vector<GeneratorSet>& legs) {
            return h_diagonal(legs[0].space(),
                              [](int mu) { return QScalar::monomial(1, mu * mu, mu); });
          }};
}

Recipe u_elem() {
  return {"u", 1, std::nullopt, [](const std::vector<GeneratorSet>& legs) {
            return qexp_nilpotent(legs[0].e, QBase::Q);
          }};
}

Recipe v_elem() {
  return {"v", 1, std::nullopt, [](const std::vector<GeneratorSet>& legs) {
            return qexp_nilpotent(legs[0].f, QBase::QInverse);
          }};
}

Recipe w_elem() {
  return {"w", 1, std::nullopt, [](const std::vector<GeneratorSet>& legs) {
            const GeneratorSet& g = legs[0];
            Operator u = qexp_nilpotent(g.e, QBase::Q);
            Operator v = qexp_nilpotent(g.f, QBase::QInverse);
            Operator d = qh_sq_diag(g.space(), -1);
            return v * d * invert(u) * d * v;
          }};
}

Recipe w_elem_alt() {
  return {"w_alt", 1, std::nullopt, [](const std::vector<GeneratorSet>& legs) {
            const GeneratorSet& g = legs[0];
            Operator ui = invert(qexp_nilpotent(g.e, QBase::Q));
            Operator v = qexp_nilpotent(g.f, QBase::QInverse);
            Operator d = qh_sq_diag(g.space(), -1);
            return ui * d * v * d * ui;
          }};
}

Recipe v_from_w() {
  return {"v_from_w", 1, std::nullopt, [](const std::vector<GeneratorSet>& legs) {
            const GeneratorSet& g = legs[0];
            Operator u = qexp_nilpotent(g.e, QBase::Q);
            Operator v = qexp_nilpotent(g.f, QBase::QInverse);
            Operator dm = qh_sq_diag(g.space(), -1);
            Operator dp = qh_sq_diag(g.space(), 1);
            Operator w = v * dm * invert(u) * dm * v;
            return dm * w * invert(u) * invert(w) * dp;
          }};
}

Recipe F_series() {
  return {"F_series", 2, std::nullopt, [](const std::vector<GeneratorSet>& legs) {
            const RepSpace& s1 = legs[0].space();
            const RepSpace& s2 = legs[1].space();
            Operator ek = Operator::identity(s1);
            Operator fk = Operator::identity(s2);
            Operator sum = Operator::zero(tensor(ek, fk).space);
            QScalar coeff = QScalar::one();
            QScalar qdiff = qpow(1) - qpow(-1);
            for (int k = 0;; ++k) {
              if (k > 0) {
                ek = ek * legs[0].e;
                fk = fk * legs[1].f;
                if (ek.is_zero() || fk.is_zero()) break;
                coeff = -coeff * qdiff / qround(k, QBase::QInverse);
              }
              // The h2-dependent denominator sits left of e^k x f^k: the j-th
              // factor tracks the running leg-2 weight, which at the image
              // amounts to indices j = k .. 2k-1.
              Operator dk = diag2(s1, s2, [k](int, int mu2) {
                QScalar d = QScalar::one();
                for (int j = k; j < 2 * k; ++j)
                  d *= QScalar::one() - QScalar::x_power(-2) * qpow(-2 * j - 2 * mu2);
                return d.inverse();
              });
              sum = sum + (coeff * qpow(k * (1 - k))) * (dk * tensor(ek, fk));
            }
            return sum;
          }};
}

namespace {

Recipe F_product(const char* name, int K, bool large_x) {
  return {name, 2, K, [K, large_x](const std::vector<GeneratorSet>& legs) {
            const RepSpace& s1 = legs[0].space();
            const RepSpace& s2 = legs[1].space();
            Operator r = rhat_on(legs[0], legs[1]);
            if (large_x) r = invert(r);
            auto b2k = [&](int k) {
              return diag2(s1, s2, [k](int, int mu2) { return bigB_weight(mu2, k); });
            };
            Operator prod = Operator::identity(r.space);
            for (int k = 0; k <= K; ++k) {
              int m = large_x ? k : -k - 1;
              prod = prod * (b2k(m) * r * b2k(-m));
            }
            return prod;
          }};
}

}  // namespace

Recipe F_product_large(int K) { return F_product("F_prod_large", K, true); }

Recipe F_product_small(int K) { return F_product("F_prod_small", K, false); }

Recipe M_babelon() {
  return {"M", 1, std::nullopt, [](const std::vector<GeneratorSet>& legs) {
            const GeneratorSet& g = legs[0];
            const RepSpace& s = g.space();
            Operator sum = Operator::zero(s);
            QScalar x = QScalar::x_power(1);
            Operator en = Operator::identity(s);
            QScalar n_denom = QScalar::one();  // [n]! prod_j (x q^j - x^{-1} q^{-j})
            for (int n = 0;; ++n) {
              if (n > 0) {
                en = en * g.Eplus;
                if (en.is_zero()) break;
                n_denom *= qnum(n) * (x * qpow(n) - x.inverse() * qpow(-n));
              }
              Operator em = en;
              QScalar m_coeff = QScalar::one();  // (-x)^m / [m]!
              for (int m = 0;; ++m) {
                if (m > 0) {
                  em = em * g.Eminus;
                  if (em.is_zero()) break;
                  m_coeff *= -x / qnum(m);
                }
                QScalar c = m_coeff * qpow(n * (n - 1) / 2 + m * (n - m)) / n_denom;
                Operator tail = h_diagonal(s, [n, m](int mu) {
                  return QScalar::t_power(2 * (n + m) * mu);  // q^{(n+m)h/2}
                });
                sum = sum + c * (em * tail);
              }
            }
            return sum;
          }};
}

Recipe N_plus() {
  return {"N_plus", 1, std::nullopt, [](const std::vector<GeneratorSet>& legs) {
            Operator arg = QScalar::x_power(1) * legs[0].e;  // x e
            return qexp_nilpotent(-arg, QBase::QInverse);
          }};
}

Recipe N_minus(int K) {
  return {"N_minus", 1, K, [K](const std::vector<GeneratorSet>& legs) {
            const GeneratorSet& g = legs[0];
            const RepSpace& s = g.space();
            Operator prod = Operator::identity(s);
            for (int k = K; k >= 0; --k) {
              Operator d = h_diagonal(
                  s, [k](int mu) { return qpow(-(2 * k + 1) * (mu + 1)); });
              Operator arg = QScalar::y_power(-(4 * k + 2)) * (d * g.f);  // x^{-2k-1}
              prod = prod * qexp_nilpotent(arg, QBase::QInverse);
            }
            return prod;
          }};
}

Recipe tildeN_minus() {
  return {"tildeN_minus", 1, std::nullopt, [](const std::vector<GeneratorSet>& legs) {
            const GeneratorSet& g = legs[0];
            const RepSpace& s = g.space();
            QScalar q2x2 = qpow(2) * QScalar::x_power(2);
            Operator sum = Operator::zero(s);
            Operator fk = Operator::identity(s);
            for (int k = 0;; ++k) {
              if (k > 0) {
                fk = fk * g.f;
                if (fk.is_zero()) break;
              }
              Operator d = h_diagonal(s, [&, k](int mu) {
                QScalar num = qpow(k * (k + 1) / 2) *
                              QScalar::monomial(k % 2 == 0 ? 1 : -1, 0, 2 * k) *  // (-x)^k
                              qpow(k * mu);
                return num / (qpochhammer(q2x2, qpow(2), mu + k) * qnum_factorial(k));
              });
              sum = sum + d * fk;
            }
            return sum;
          }};
}

Recipe N_full(int K) {
  return {"N", 1, K, [K](const std::vector<GeneratorSet>& legs) {
            return N_minus(K)(legs) * N_plus()(legs);
          }};
}

Recipe grouplike_pochh() {
  return {"pochh_h", 1, std::nullopt, [](const std::vector<GeneratorSet>& legs) {
            return h_diagonal(legs[0].space(), [](int mu) {
              return qpochhammer(QScalar::x_power(1), qpow(1), mu);
            });
          }};
}

std::vector<std::string> catalog_names() {
  return {"rhat", "r",      "B",           "b",           "u",       "v",
          "w",    "F_series", "F_prod_large", "F_prod_small", "M",       "N_plus",
          "N_minus", "tildeN_minus", "N",   "pochh_h"};
}

Recipe catalog_lookup(const std::string& name, int K) {
  if (name == "rhat") return rhat();
  if (name == "r") return rmat();
  if (name == "B") return bigB();
  if (name == "b") return smallb();
  if (name == "u") return u_elem();
  if (name == "v") return v_elem();
  if (name == "w") return w_elem();
  if (name == "F_series") return F_series();
  if (name == "F_prod_large") return F_product_large(K);
  if (name == "F_prod_small") return F_product_small(K);
  if (name == "M") return M_babelon();
  if (name == "N_plus") return N_plus();
  if (name == "N_minus") return N_minus(K);
  if (name == "tildeN_minus") return tildeN_minus();
  if (name == "N") return N_full(K);
  if (name == "pochh_h") return grouplike_pochh();
  throw std::invalid_argument("unknown element: " + name);
}

}  // namespace dyntwist
