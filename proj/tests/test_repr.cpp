#include "dyntwist/repr.hpp"

#include <doctest.h>

using namespace dyntwist;

namespace {

QScalar qpow(int k) { return QScalar::q_power(k); }

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator qnum_of_h(const RepSpace& s) {
  return h_diagonal(s, [](int mu) { return qnum(mu); });
}

void check_relations(const GeneratorSet& g) {
  const RepSpace& s = g.space();
  CHECK(commutator(g.h, g.Eplus) == QScalar(2L) * g.Eplus);
  CHECK(commutator(g.h, g.Eminus) == QScalar(-2L) * g.Eminus);
  CHECK(commutator(g.Eplus, g.Eminus) == qnum_of_h(s));
  // e, f recover E_pm
  Operator qh_plus = h_diagonal(s, [](int mu) { return QScalar::t_power(2 * mu); });
  Operator qh_minus = h_diagonal(s, [](int mu) { return QScalar::t_power(-2 * mu); });
  CHECK(g.e == qh_plus * g.Eplus);
  CHECK(g.f == g.Eminus * qh_minus);
  CHECK(g.Eplus == qh_minus * g.e);
  CHECK(g.Eminus == g.f * qh_plus);
}

// X = e ⊗ q^{h/2}, Y = q^{-h/2} ⊗ e satisfy XY = q^2 YX and are nilpotent.
std::pair<Operator, Operator> q2_pair(int p) {
  GeneratorSet g = build_irrep(p);
  const RepSpace& s = g.space();
  Operator qh_plus = h_diagonal(s, [](int mu) { return QScalar::t_power(2 * mu); });
  Operator qh_minus = h_diagonal(s, [](int mu) { return QScalar::t_power(-2 * mu); });
  return {tensor(g.e, qh_plus), tensor(qh_minus, g.e)};
}

}  // namespace

TEST_CASE("build_irrep: small cases") {
  SUBCASE("p=0") {
    GeneratorSet g = build_irrep(0);
    CHECK(g.space().dim() == 1);
    CHECK(g.h.is_zero());
    CHECK(g.e.is_zero());
    CHECK(g.f.is_zero());
  }
  SUBCASE("p=1") {
    GeneratorSet g = build_irrep(1);
    CHECK(g.h.mat(0, 0) == QScalar(1L));
    CHECK(g.h.mat(1, 1) == QScalar(-1L));
    CHECK(g.e.mat(0, 1) == QScalar::one());  // e v_1 = [1] v_0
    CHECK(g.f.mat(1, 0) == QScalar::one());  // f v_0 = v_1
  }
  SUBCASE("p=2") {
    GeneratorSet g = build_irrep(2);
    CHECK(g.f.mat(2, 1) == qpow(1) + qpow(-1));  // f v_1 = [2] v_2
  }
}

TEST_CASE("build_irrep: algebra relations for p <= 6") {
  for (int p = 0; p <= 6; ++p) check_relations(build_irrep(p));
}

TEST_CASE("coproduct_generators") {
  SUBCASE("trivial first leg gives an isomorphic copy") {
    GeneratorSet g = coproduct_generators(build_irrep(0), build_irrep(3));
    GeneratorSet base = build_irrep(3);
    CHECK(g.space().dim() == 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        CHECK(g.e.mat(i, j) == base.e.mat(i, j));
        CHECK(g.f.mat(i, j) == base.f.mat(i, j));
        CHECK(g.h.mat(i, j) == base.h.mat(i, j));
      }
  }
  SUBCASE("Delta(h) on V1 x V1") {
    GeneratorSet g = coproduct_generators(build_irrep(1), build_irrep(1));
    std::vector<long> want{2, 0, 0, -2};
    for (int i = 0; i < 4; ++i) CHECK(g.h.mat(i, i) == QScalar(want[i]));
  }
  SUBCASE("algebra relations on all leg pairs p_i <= 4") {
    for (int p1 = 0; p1 <= 4; ++p1)
      for (int p2 = 0; p2 <= 4; ++p2)
        check_relations(coproduct_generators(build_irrep(p1), build_irrep(p2)));
  }
  SUBCASE("coassociativity on (1,1,1)") {
    GeneratorSet g1 = build_irrep(1);
    GeneratorSet left = coproduct_generators(coproduct_generators(g1, g1), g1);
    GeneratorSet right = coproduct_generators(g1, coproduct_generators(g1, g1));
    CHECK(left.e == right.e);
    CHECK(left.f == right.f);
    CHECK(left.h == right.h);
    check_relations(left);
  }
}

TEST_CASE("h_diagonal") {
  RepSpace v1({1}), v2({2});
  SUBCASE("constant one is the identity") {
    CHECK(h_diagonal(v2, [](int) { return QScalar::one(); }) == Operator::identity(v2));
  }
  SUBCASE("B(x) = x^h q^{h^2/2} on V1") {
    Operator b = h_diagonal(v1, [](int mu) {
      return QScalar::x_power(mu) * QScalar::t_power(2 * mu * mu);
    });
    CHECK(b.mat(0, 0) == QScalar::monomial(1, 2, 2));   // y^2 t^2
    CHECK(b.mat(1, 1) == QScalar::monomial(1, 2, -2));  // y^-2 t^2
  }
  SUBCASE("(x;q)_h on V2") {
    QScalar x = QScalar::x_power(1), q = qpow(1), one = QScalar::one();
    Operator d = h_diagonal(v2, [&](int mu) { return qpochhammer(x, q, mu); });
    CHECK(d.mat(0, 0) == (one - x) * (one - x * q));
    CHECK(d.mat(1, 1) == one);
    CHECK(d.mat(2, 2) == ((one - x / q) * (one - x / (q * q))).inverse());
  }
}

TEST_CASE("permute_legs") {
  GeneratorSet g = coproduct_generators(build_irrep(1), build_irrep(2));
  SUBCASE("identity permutation") { CHECK(permute_legs(g.e, {0, 1}) == g.e); }
  SUBCASE("swap fixes the symmetric Delta(h)") {
    Operator swapped = permute_legs(g.h, {1, 0});
    GeneratorSet rev = coproduct_generators(build_irrep(2), build_irrep(1));
    CHECK(swapped == rev.h);
  }
  SUBCASE("transposition is involutive") {
    GeneratorSet a = build_irrep(1), b = build_irrep(2);
    Operator ef = tensor(a.e, b.f);
    CHECK(permute_legs(permute_legs(ef, {1, 0}), {1, 0}) == ef);
  }
  SUBCASE("arity mismatch throws") {
    CHECK_THROWS_AS(permute_legs(g.e, {0}), std::domain_error);
  }
}

TEST_CASE("invert") {
  RepSpace v1v1({1, 1});
  SUBCASE("identity and diagonal") {
    Operator id = Operator::identity(v1v1);
    CHECK(invert(id) == id);
    Operator d = h_diagonal(v1v1, [](int mu) { return qpow(mu) + QScalar(2L); });
    Operator di = invert(d);
    for (int i = 0; i < 4; ++i) CHECK(di.mat(i, i) == d.mat(i, i).inverse());
  }
  SUBCASE("1 + c e x f inverts to 1 - c e x f") {
    GeneratorSet a = build_irrep(1);
    QScalar c = QScalar::x_power(1) + qpow(2);
    Operator n = c * tensor(a.e, a.f);
    Operator m = Operator::identity(v1v1) + n;
    CHECK(invert(m) == Operator::identity(v1v1) - n);
  }
  SUBCASE("two-sided inverse on a dense operator") {
    GeneratorSet g = coproduct_generators(build_irrep(1), build_irrep(2));
    Operator a = Operator::identity(g.space()) + g.e + g.f +
                 h_diagonal(g.space(), [](int mu) { return QScalar::x_power(mu); });
    Operator ai = invert(a);
    CHECK(a * ai == Operator::identity(g.space()));
    CHECK(ai * a == Operator::identity(g.space()));
  }
  SUBCASE("singular matrix names a pivot") {
    Operator z = Operator::zero(v1v1);
    CHECK_THROWS_WITH_AS(invert(z), doctest::Contains("column 0"), std::domain_error);
  }
}

TEST_CASE("qexp_nilpotent: basics") {
  RepSpace v1({1});
  GeneratorSet g = build_irrep(1);
  SUBCASE("zero maps to identity") {
    CHECK(qexp_nilpotent(Operator::zero(v1), QBase::Q) == Operator::identity(v1));
  }
  SUBCASE("square-zero truncates to 1 + A") {
    CHECK(qexp_nilpotent(g.e, QBase::Q) == Operator::identity(v1) + g.e);
    CHECK(qexp_nilpotent(g.e, QBase::QInverse) == Operator::identity(v1) + g.e);
  }
  SUBCASE("non-nilpotent input throws") {
    CHECK_THROWS_AS(qexp_nilpotent(Operator::identity(v1), QBase::Q), std::domain_error);
  }
}

TEST_CASE("qexp identities on q^2-commuting nilpotent pairs") {
  for (int p = 1; p <= 3; ++p) {
    auto [x, y] = q2_pair(p);
    const RepSpace& s = x.space;
    REQUIRE(x * y == qpow(2) * (y * x));
    Operator id = Operator::identity(s);

    // exp_q(x) exp_{q^{-1}}(-x) = 1
    CHECK(qexp_nilpotent(x, QBase::Q) * qexp_nilpotent(-x, QBase::QInverse) == id);

    // exp_q(x+y) = exp_q(y) exp_q(x)
    CHECK(qexp_nilpotent(x + y, QBase::Q) ==
          qexp_nilpotent(y, QBase::Q) * qexp_nilpotent(x, QBase::Q));

    // exp_q(x) exp_q(y) = exp_q(y) exp_q((1-q^{-2})xy) exp_q(x)
    Operator mid = (QScalar::one() - qpow(-2)) * (x * y);
    CHECK(qexp_nilpotent(x, QBase::Q) * qexp_nilpotent(y, QBase::Q) ==
          qexp_nilpotent(y, QBase::Q) * qexp_nilpotent(mid, QBase::Q) *
              qexp_nilpotent(x, QBase::Q));

    // the literal printed variant ending in exp_q(y) does not hold
    CHECK_FALSE(qexp_nilpotent(x, QBase::Q) * qexp_nilpotent(y, QBase::Q) ==
                qexp_nilpotent(y, QBase::Q) * qexp_nilpotent(mid, QBase::Q) *
                    qexp_nilpotent(y, QBase::Q));
  }
}

TEST_CASE("subst_x_shift on operators") {
  RepSpace v2({2});
  Operator d = h_diagonal(v2, [](int mu) { return QScalar::x_power(mu); });
  Operator shifted = subst_x_shift(d, 3);
  for (int i = 0; i < 3; ++i) {
    int mu = v2.total_weight(i);
    CHECK(shifted.mat(i, i) == QScalar::x_power(mu) * qpow(3 * mu));
  }
}
