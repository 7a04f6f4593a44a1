#include "dyntwist/dyncalc.hpp"

#include <chrono>
#include <stdexcept>

namespace dyntwist {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

QScalar qpow(int k) { return QScalar::q_power(k); }

int block_weight(const RepSpace& s, const std::vector<int>& legs, int idx) {
  int mu = 0;
  for (int l : legs) mu += s.leg_weight(idx, l);
  return mu;
}

std::vector<int> leg_range(int first, int count) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

Operator power(const Operator& a, int k) {
  Operator out = Operator::identity(a.space);
  Operator base = k >= 0 ? a : invert(a);
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) out = out * base;
  return out;
}

}  // namespace

Operator shift(const Operator& op, const std::vector<int>& shifting_legs) {
  const RepSpace& s = op.space;
  for (int l : shifting_legs)
    if (l < 0 || l >= s.num_legs()) throw std::domain_error("shift: leg out of range");
  Operator out = Operator::zero(s);
  int d = s.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (op.mat(i, j).is_zero()) continue;
      int mu = block_weight(s, shifting_legs, j);
      if (mu != block_weight(s, shifting_legs, i))
        throw std::domain_error("shift: operator does not preserve the shifting weight");
      out.mat(i, j) = op.mat(i, j).subst_x_shift(mu);
    }
  return out;
}

AgreementOrder operator_agreement(const Operator& a, const Operator& b, Anchor anchor,
                                  int cap) {
  if (a.space != b.space)
    throw std::domain_error("operator_agreement: space mismatch");
  AgreementOrder best{true, cap};
  int d = a.space.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (a.mat(i, j) == b.mat(i, j)) continue;
      AgreementOrder ao = agreement_order(a.mat(i, j), b.mat(i, j), anchor, cap);
      if (ao.exact) continue;  // differ as rationals but agree to the cap
      if (best.exact || ao.order < best.order) best = ao;
    }
  return best;
}

bool IdentityReport::ok(int min_order) const {
  if (verdict == "exact") return true;
  return verdict == "order" && order && *order >= min_order;
}

nlohmann::json IdentityReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["identity"] = identity;
  j["legs"] = legs;
  j["truncation"] = truncation ? nlohmann::json(*truncation) : nlohmann::json();
  j["verdict"] = verdict;
  j["order"] = order ? nlohmann::json(*order) : nlohmann::json();
  if (witness) {
    j["witness"] = {{"row", witness->row},
                    {"col", witness->col},
                    {"lhs", witness->lhs},
                    {"rhs", witness->rhs}};
  } else {
    j["witness"] = nlohmann::json();
  }
  j["runtime_ms"] = runtime_ms;
  return j;
}

IdentityReport compare(std::string suite, std::string identity, const Operator& lhs,
                       const Operator& rhs, std::optional<int> truncation, Anchor anchor,
                       int cap) {
  Clock::time_point start = Clock::now();
  IdentityReport rep{std::move(suite), std::move(identity), lhs.space.legs(), truncation,
                     "",              std::nullopt,         std::nullopt,    0};
  if (lhs == rhs) {
    rep.verdict = "exact";
  } else {
    AgreementOrder ao = operator_agreement(lhs, rhs, anchor, cap);
    if (!ao.exact && ao.order > 0) {
      rep.verdict = "order";
      rep.order = ao.order;
    } else {
      rep.verdict = "fail";
      rep.order = ao.exact ? cap : ao.order;
      int d = lhs.space.dim();
      for (int i = 0; i < d && !rep.witness; ++i)
        for (int j = 0; j < d; ++j)
          if (lhs.mat(i, j) != rhs.mat(i, j)) {
            rep.witness = Witness{i, j, lhs.mat(i, j).canonical_string(),
                                  rhs.mat(i, j).canonical_string()};
            break;
          }
    }
  }
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

Recipe recipe_product(const std::string& name, const Recipe& a, const Recipe& b) {
  if (a.arity != b.arity)
    throw std::domain_error("recipe_product: arity mismatch");
  std::optional<int> trunc = a.truncation ? a.truncation : b.truncation;
  return {name, a.arity, trunc, [a, b](const std::vector<GeneratorSet>& legs) {
            return a.eval(legs) * b.eval(legs);
          }};
}

Operator delta(const Recipe& Q, const GeneratorSet& g1, const GeneratorSet& g2) {
  Operator dq = Q(coproduct_generators(g1, g2));
  Operator q2 = tensor(Operator::identity(g1.space()), Q(g2));
  Operator q1 = tensor(Q(g1), Operator::identity(g2.space()));
  std::vector<int> tail = leg_range(g1.space().num_legs(), g2.space().num_legs());
  return dq * invert(q2) * invert(shift(q1, tail));
}

Operator dynamical_r(const Recipe& F, const GeneratorSet& g1, const GeneratorSet& g2) {
  Operator f21 = permute_legs(F(g2, g1), {1, 0});
  return invert(f21) * rmat()(g1, g2) * F(g1, g2);
}

IdentityReport check_cocycle(const Recipe& F, const GeneratorSet& g1,
                             const GeneratorSet& g2, const GeneratorSet& g3,
                             Anchor anchor, int cap) {
  int n12 = g1.space().num_legs() + g2.space().num_legs();
  std::vector<int> leg3 = leg_range(n12, g3.space().num_legs());
  Operator f12_3 = F(coproduct_generators(g1, g2), g3);
  Operator f12 = tensor(F(g1, g2), Operator::identity(g3.space()));
  Operator f1_23 = F(g1, coproduct_generators(g2, g3));
  Operator f23 = tensor(Operator::identity(g1.space()), F(g2, g3));
  return compare("twist", "cocycle", f12_3 * shift(f12, leg3), f1_23 * f23,
                 F.truncation, anchor, cap);
}

IdentityReport check_dybe(const Recipe& F, const GeneratorSet& g1, const GeneratorSet& g2,
                          const GeneratorSet& g3, Anchor anchor, int cap) {
  Operator id1 = Operator::identity(g1.space());
  Operator id2 = Operator::identity(g2.space());
  Operator id3 = Operator::identity(g3.space());
  Operator r12 = tensor(dynamical_r(F, g1, g2), id3);
  Operator r23 = tensor(id1, dynamical_r(F, g2, g3));
  Operator r13 = permute_legs(tensor(dynamical_r(F, g1, g3), id2), {0, 2, 1});
  Operator lhs = r12 * shift(r13, {1}) * r23;
  Operator rhs = shift(r23, {0}) * r13 * shift(r12, {2});
  return compare("twist", "dybe", lhs, rhs, F.truncation, anchor, cap);
}

IdentityReport check_abrr(const Recipe& F, const GeneratorSet& g1, const GeneratorSet& g2,
                          Anchor anchor, int cap) {
  Operator f = F(g1, g2);
  Operator b2 = tensor(Operator::identity(g1.space()), bigB()(g2));
  Operator ri = invert(rhat()(g1, g2));
  return compare("twist", "abrr", f * b2, ri * b2 * f, F.truncation, anchor, cap);
}

IdentityReport check_coboundary(const Recipe& M, const Recipe& F, const GeneratorSet& g1,
                                const GeneratorSet& g2, Anchor anchor, int cap) {
  Operator f = F(g1, g2);
  Operator m1 = tensor(M(g1), Operator::identity(g2.space()));
  Operator m2 = tensor(Operator::identity(g1.space()), M(g2));
  std::vector<int> tail = leg_range(g1.space().num_legs(), g2.space().num_legs());
  Operator dm = M(coproduct_generators(g1, g2));
  std::optional<int> trunc = M.truncation ? M.truncation : F.truncation;
  return compare("coboundary", "coboundary[" + M.name + "]", f * shift(m1, tail) * m2,
                 dm, trunc, anchor, cap);
}

IdentityReport check_vertex_irf(const Recipe& M, const GeneratorSet& g1,
                                const GeneratorSet& g2) {
  Operator rx = dynamical_r(F_series(), g1, g2);
  Operator m1 = tensor(M(g1), Operator::identity(g2.space()));
  Operator m2 = tensor(Operator::identity(g1.space()), M(g2));
  std::vector<int> head = leg_range(0, g1.space().num_legs());
  std::vector<int> tail = leg_range(g1.space().num_legs(), g2.space().num_legs());
  Operator lhs = rx * shift(m1, tail) * m2;
  Operator rhs = shift(m2, head) * m1 * rmat()(g1, g2);
  return compare("vertex-irf", "vertex_irf[" + M.name + "]", lhs, rhs, M.truncation);
}

namespace {

// Single-leg ingredients of the recursion tower.
Operator lemma_vx(const GeneratorSet& g) {
  Operator b = smallb()(g);
  return invert(b) * v_elem()(g) * b;
}

Operator lemma_M0(const GeneratorSet& g) {
  Operator yh = h_diagonal(g.space(), [](int mu) { return QScalar::y_power(mu); });
  return invert(yh * u_elem()(g) * invert(yh));
}

}  // namespace

Recipe lemma_M(int p) {
  return {"lemma_M", 1, p, [p](const std::vector<GeneratorSet>& legs) {
            const GeneratorSet& g = legs[0];
            Operator B = bigB()(g);
            Operator vx = lemma_vx(g);
            Operator V = Operator::identity(g.space());
            for (int k = p; k >= 1; --k) V = V * (power(B, k) * vx * power(B, -k));
            return V * lemma_M0(g);
          }};
}

std::vector<IdentityReport> lemma_recursion(int p_max, const GeneratorSet& g1,
                                            const GeneratorSet& g2, int cap) {
  std::vector<IdentityReport> out;
  GeneratorSet pair = coproduct_generators(g1, g2);
  Operator id = Operator::identity(pair.space());
  std::vector<int> tail = leg_range(g1.space().num_legs(), g2.space().num_legs());

  Operator f0 = delta(lemma_M(0), g1, g2);
  Operator f1 = delta(lemma_M(1), g1, g2);
  Operator dB = bigB()(pair);
  Operator G = invert(f0) * invert(dB) * f1 * dB;
  Operator ri = invert(rhat()(g1, g2));
  out.push_back(compare("lemma", "F0_is_identity", f0, id));
  out.push_back(compare("lemma", "F1_is_rhat_inverse", f1, ri));
  out.push_back(compare("lemma", "G_equals_F1", G, f1));

  // both commutation brackets, with all leg-1 factors shifted by leg 2
  Operator id2 = Operator::identity(g2.space());
  auto on1 = [&](const Operator& a) {
    return shift(tensor(a, id2), tail);
  };
  auto on2 = [&](const Operator& a) {
    return tensor(Operator::identity(g1.space()), a);
  };
  Operator X = G * on1(lemma_vx(g1)) * invert(on1(bigB()(g1)));
  Operator m01 = on1(lemma_M0(g1));
  Operator c1 = m01 * on2(lemma_vx(g2)) * invert(on2(bigB()(g2))) * invert(m01);
  Operator cg = m01 * on2(bigB()(g2)) * invert(on2(lemma_vx(g2))) * invert(m01);
  out.push_back(compare("lemma", "commutation_hypothesis", X * c1, c1 * X));
  out.push_back(compare("lemma", "commutation_derived", X * cg, cg * X));

  // asymptotics: the conjugates of v(x)^{-1} converge as Laurent series, the
  // other two sequences are constant
  Operator B1 = bigB()(g1);
  Operator vxi = invert(lemma_vx(g1));
  for (int k = 1; k <= 3; ++k) {
    IdentityReport rep =
        compare("lemma", "asymptotic_v_k=" + std::to_string(k),
                power(B1, k) * vxi * power(B1, -k), Operator::identity(g1.space()), k,
                Anchor::YInfinity, cap);
    out.push_back(std::move(rep));
  }
  out.push_back(compare("lemma", "asymptotic_F0_constant", dB * f0 * invert(dB), f0));
  out.push_back(compare("lemma", "asymptotic_G_constant", dB * G * invert(dB), G));
  out.push_back(compare("lemma", "asymptotic_G_is_rhat_inverse", G, ri));

  Operator f = F_series()(g1, g2);
  for (int p = 1; p <= p_max; ++p) {
    Operator fp = delta(lemma_M(p), g1, g2);
    out.push_back(compare("lemma", "tower_agreement_p=" + std::to_string(p), fp, f, p,
                          Anchor::YInfinity, cap));
  }
  return out;
}

std::vector<IdentityReport> check_weyl_single(const GeneratorSet& g) {
  std::vector<IdentityReport> out;
  const RepSpace& s = g.space();
  Operator w = w_elem()(g);
  Operator wi = invert(w);
  Operator u = u_elem()(g);
  Operator ui = invert(u);
  out.push_back(compare("weyl", "w_on_h", w * g.h * wi, QScalar(-1L) * g.h));
  Operator qmh = h_diagonal(s, [](int mu) { return qpow(-mu - 1); });
  out.push_back(compare("weyl", "w_on_e", w * g.e * wi, QScalar(-1L) * (qmh * g.f)));
  Operator qph = h_diagonal(s, [](int mu) { return qpow(mu + 1); });
  out.push_back(compare("weyl", "w_on_f", w * g.f * wi, QScalar(-1L) * (g.e * qph)));
  out.push_back(compare("weyl", "w_two_expressions", w, w_elem_alt()(g)));
  Operator qhsq = h_diagonal(s, [](int mu) { return QScalar::t_power(-2 * mu * mu); });
  out.push_back(compare("weyl", "wuw", w * u * w, ui * qhsq * w * ui));
  out.push_back(compare("weyl", "v_reconstruction", v_from_w()(g), v_elem()(g)));
  return out;
}

std::vector<IdentityReport> check_weyl_pair(const GeneratorSet& g1,
                                            const GeneratorSet& g2) {
  std::vector<IdentityReport> out;
  GeneratorSet pair = coproduct_generators(g1, g2);
  Operator id1 = Operator::identity(g1.space());
  Operator id2 = Operator::identity(g2.space());
  Operator c = diag2(g1.space(), g2.space(), [](int mu1, int mu2) {
    return QScalar::t_power(2 * mu1 * mu2);  // q^{h1 h2 / 2}
  });
  Operator ci = invert(c);
  Operator u1 = tensor(u_elem()(g1), id2);
  Operator u2 = tensor(id1, u_elem()(g2));
  Operator v1 = tensor(v_elem()(g1), id2);
  Operator v2 = tensor(id1, v_elem()(g2));
  out.push_back(compare("weyl", "delta_u", u_elem()(pair), u2 * c * u1 * ci));
  out.push_back(compare("weyl", "delta_v", v_elem()(pair), c * v2 * ci * v1));
  Operator d1 = diag2(g1.space(), g2.space(), [](int mu1, int) {
    return QScalar::t_power(mu1 * mu1);  // q^{h1^2 / 4}
  });
  Operator lhs = u1 * d1 * invert(rmat()(g1, g2)) * invert(d1) * invert(v2);
  Operator rhs = ci * invert(v2) * c * u1 * ci;
  out.push_back(compare("weyl", "pentagon", lhs, rhs));
  Operator w1 = tensor(w_elem()(g1), id2);
  Operator w2 = tensor(id1, w_elem()(g2));
  out.push_back(compare("weyl", "delta_w", w_elem()(pair),
                        invert(rhat()(g1, g2)) * w1 * w2));
  return out;
}

IdentityReport weight_component_identity(int r, int p) {
  GeneratorSet g = build_irrep(p);
  const RepSpace& s = g.space();
  QScalar x = QScalar::x_power(1);

  Operator lhs = Operator::zero(s);
  for (int n = 0; n <= p; ++n) {
    int m = n - r;
    if (m < 0 || m > p) continue;
    QScalar denom = qnum_factorial(m) * qnum_factorial(n);
    for (int j = 1; j <= n; ++j)
      denom *= x * qpow(j) - x.inverse() * qpow(-j);
    QScalar c = QScalar::monomial(m % 2 == 0 ? 1 : -1, 0, 2 * m) *  // (-x)^m
                qpow(-n + m * (m + 1) / 2) / denom;
    Operator d = h_diagonal(s, [m](int mu) { return qpow(m * mu); });
    Operator op = d;
    for (int j = 0; j < n; ++j) op = op * g.e;
    for (int j = 0; j < m; ++j) op = op * g.f;
    lhs = lhs + c * op;
  }

  Operator rhs = Operator::zero(s);
  QScalar q2x2 = qpow(2) * QScalar::x_power(2);
  for (int k = 0; k <= p; ++k) {
    int l = k + r;
    if (l < 0 || l > p) continue;
    QScalar cl = QScalar::monomial(l % 2 == 0 ? 1 : -1, 0, 2 * l) /  // (-x)^l
                 qround_factorial(l, QBase::QInverse);
    Operator d = h_diagonal(s, [&, k](int mu) {
      QScalar num = qpow(k * (k + 1) / 2) *
                    QScalar::monomial(k % 2 == 0 ? 1 : -1, 0, 2 * k) *  // (-x)^k
                    qpow(k * mu);
      return num / (qpochhammer(q2x2, qpow(2), mu + k) * qnum_factorial(k));
    });
    Operator op = d;
    for (int j = 0; j < k; ++j) op = op * g.f;
    for (int j = 0; j < l; ++j) op = op * g.e;
    rhs = rhs + cl * op;
  }

  IdentityReport rep = compare("prop2", "weight_component_r=" + std::to_string(r), lhs,
                               rhs);
  return rep;
}

}  // namespace dyntwist
