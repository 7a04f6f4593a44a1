#include "dyntwist/qhyper.hpp"

#include <stdexcept>

namespace dyntwist {

BigReal BigReal::rootn(const BigReal& a, unsigned long n) {
  BigReal r;
  mpfr_rootn_ui(r.v_, a.v_, n, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow10(int e) {
  BigReal ten(10L);
  return ten.pow_int(e);
}

BigReal BigReal::operator-() const {
  BigReal r;
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::abs() const {
  BigReal r;
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow_int(long e) const {
  BigReal r;
  mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

std::string BigReal::str(int digits) const {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
  return buf;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r;
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r;
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r;
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r;
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal relative_diff(const BigReal& a, const BigReal& b) {
  BigReal scale(1L);
  if (a.abs() > scale) scale = a.abs();
  if (b.abs() > scale) scale = b.abs();
  return (a - b).abs() / scale;
}

BigReal pochhammer_inf(const BigReal& a, const BigReal& q, const BigReal& tol) {
  if (!(q.abs() < BigReal(1L)))
    throw std::domain_error("pochhammer_inf: |q| must be < 1");
  BigReal one(1L), prod(1L), aq = a;
  BigReal cutoff = tol * (one - q.abs());
  // tail bound: once |a q^j| < tol (1 - |q|), the remaining factors multiply
  // to 1 + O(tol)
  for (int j = 0; j < 100000; ++j) {
    if (aq.abs() < cutoff) return prod;
    prod = prod * (one - aq);
    aq = aq * q;
  }
  throw std::domain_error("pochhammer_inf: no convergence");
}

BigReal pochhammer(const BigReal& a, const BigReal& q, int n) {
  BigReal one(1L), prod(1L);
  if (n >= 0) {
    BigReal aq = a;
    for (int j = 0; j < n; ++j) {
      prod = prod * (one - aq);
      aq = aq * q;
    }
  } else {
    BigReal aq = a;
    for (int j = 1; j <= -n; ++j) {
      aq = aq / q;
      BigReal f = one - aq;
      if (f.is_zero()) throw std::domain_error("pochhammer: vanishing factor");
      prod = prod / f;
    }
  }
  return prod;
}

BigReal phi22(const Phi22Params& p, const BigReal& tol, Phi22Convention conv) {
  BigReal one(1L), sum(1L), term(1L);
  BigReal qa = p.a, qb = p.b, qc = p.c, qd = p.d, qn = p.q;
  int small_run = 0;
  for (int n = 1; n < 100000; ++n) {
    // term_n / term_{n-1}, with the (-1)^n q^{n(n-1)/2} ratio folded in for
    // the Gasper-Rahman convention
    BigReal den = (one - qn) * (one - qc) * (one - qd);
    if (den.is_zero()) throw std::domain_error("phi22: vanishing denominator factor");
    BigReal ratio = (one - qa) * (one - qb) / den * p.z;
    if (conv == Phi22Convention::GasperRahman) ratio = -(ratio * qn / p.q);
    term = term * ratio;
    if (term.is_zero()) return sum;
    sum = sum + term;
    if (term.abs() < tol * (sum.abs() + one)) {
      if (++small_run >= 3) return sum;
    } else {
      small_run = 0;
    }
    qa = qa * p.q;
    qb = qb * p.q;
    qc = qc * p.q;
    qd = qd * p.q;
    qn = qn * p.q;
  }
  throw std::domain_error("phi22: no convergence");
}

IdentityReport check_transform(const BigReal& a, const BigReal& b, const BigReal& c,
                               const BigReal& d, const BigReal& q, const BigReal& tol) {
  BigReal z = c * d / (a * b);
  BigReal tail = tol * BigReal::pow10(-8);
  BigReal lhs = phi22({a, b, c, d, q, z}, tail);
  BigReal pre = pochhammer_inf(z, q, tail) / pochhammer_inf(d, q, tail);
  BigReal rhs = pre * phi22({c / a, c / b, c, z, q, d}, tail);
  BigReal diff = relative_diff(lhs, rhs);
  IdentityReport rep{"hyper", "transform", {}, std::nullopt, "", std::nullopt,
                     std::nullopt, 0};
  if (diff < tol) {
    rep.verdict = "exact";
  } else {
    rep.verdict = "fail";
    rep.witness = Witness{0, 0, lhs.str(), rhs.str()};
  }
  return rep;
}

BigReal eval_numeric(const QScalar& s, const Rational& x_val, const Rational& q_val) {
  BigReal t = BigReal::rootn(BigReal(q_val), 4);
  BigReal y = BigReal::rootn(BigReal(x_val), 2);
  auto eval_poly = [&](const LaurentPoly& p) {
    BigReal acc(0L);
    for (const auto& [key, c] : p.terms())
      acc = acc + BigReal(c) * t.pow_int(key.first) * y.pow_int(key.second);
    return acc;
  };
  return eval_poly(s.num()) / eval_poly(s.den());
}

namespace {

BigReal qint(int n, const BigReal& q) {
  return (q.pow_int(n) - q.pow_int(-n)) / (q - q.pow_int(-1));
}

BigReal qint_factorial(int n, const BigReal& q) {
  BigReal r(1L);
  for (int j = 2; j <= n; ++j) r = r * qint(j, q);
  return r;
}

struct ActionCoeffs {
  BigReal lhs, rhs;
};

ActionCoeffs displayed_coeffs(int p, int k, int r, const BigReal& x, const BigReal& q,
                              const BigReal& tol, Phi22Convention conv) {
  BigReal q2 = q * q, x2 = x * x;
  BigReal common =
      qint_factorial(p - k + r, q) / (qint_factorial(p - k, q) * qint_factorial(r, q));

  BigReal lprod(1L);
  for (int j = 1; j <= r; ++j)
    lprod = lprod * (x * q.pow_int(j) - q.pow_int(-j) / x);
  BigReal lhs = common * q.pow_int(-r) / lprod *
                phi22({q2.pow_int(k + 1), q2.pow_int(k - p), q2.pow_int(r + 1),
                       x2 * q2.pow_int(r + 1), q2, x2 * q2.pow_int(p - 2 * k + 2 * r + 1)},
                      tol, conv);

  BigReal sign = r % 2 == 0 ? BigReal(1L) : BigReal(-1L);
  BigReal rhs = common * sign * x.pow_int(r) * q.pow_int(r * (r - 1) / 2) /
                pochhammer(q2 * x2, q2, p - 2 * k + 2 * r) *
                phi22({q2.pow_int(p + r - k + 1), q2.pow_int(r - k), q2.pow_int(r + 1),
                       x2 * q2.pow_int(p - 2 * k + 2 * r + 1), q2, x2 * q2.pow_int(r + 1)},
                      tol, conv);
  return {lhs, rhs};
}

}  // namespace

IdentityReport cross_check_action(int p, int k, int r, const Rational& x_val,
                                  const Rational& q_val, const BigReal& tol) {
  if (r < 0 || r > k || k > p)
    throw std::domain_error("cross_check_action: need 0 <= r <= k <= p");
  BigReal x(x_val), q(q_val);
  BigReal tail = tol * BigReal::pow10(-8);
  BigReal exact =
      eval_numeric(M_babelon()(build_irrep(p)).mat(k - r, k), x_val, q_val);

  IdentityReport rep{"hyper", "", {p}, std::nullopt, "", std::nullopt, std::nullopt, 0};
  for (Phi22Convention conv :
       {Phi22Convention::GasperRahman, Phi22Convention::Plain}) {
    ActionCoeffs ac = displayed_coeffs(p, k, r, x, q, tail, conv);
    if (relative_diff(ac.lhs, exact) < tol && relative_diff(ac.rhs, exact) < tol) {
      rep.identity = conv == Phi22Convention::GasperRahman
                         ? "cross_check[gasper-rahman]"
                         : "cross_check[plain]";
      rep.verdict = "exact";
      return rep;
    }
  }
  ActionCoeffs ac =
      displayed_coeffs(p, k, r, x, q, tail, Phi22Convention::GasperRahman);
  rep.identity = "cross_check";
  rep.verdict = "fail";
  rep.witness = Witness{k - r, k, ac.lhs.str() + " / " + ac.rhs.str(), exact.str()};
  return rep;
}

}  // namespace dyntwist
