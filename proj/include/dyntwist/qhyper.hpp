#pragma once

#include "dyntwist/dyncalc.hpp"

#include <mpfr.h>
#include <string>

namespace dyntwist {

/// Arbitrary-precision real, fixed working precision of 200 bits
/// (about 60 decimal digits).
class BigReal {
 public:
  static constexpr mpfr_prec_t kPrecision = 200;

  BigReal() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }
  BigReal(long v) : BigReal() { mpfr_set_si(v_, v, MPFR_RNDN); }
  BigReal(const Rational& v) : BigReal() {
    mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
  }
  BigReal(const BigReal& o) : BigReal() { mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigReal& operator=(const BigReal& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  static BigReal rootn(const BigReal& a, unsigned long n);
  static BigReal pow10(int e);

  BigReal operator-() const;
  BigReal abs() const;
  BigReal pow_int(long e) const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  std::string str(int digits = 30) const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend bool operator<(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.v_, b.v_) == 0;
  }

 private:
  mpfr_t v_;
};

/// Relative difference |a - b| / max(1, |a|, |b|).
BigReal relative_diff(const BigReal& a, const BigReal& b);

/// (a; q)_inf, truncated once |a q^j| < tol (1 - |q|). Requires |q| < 1.
BigReal pochhammer_inf(const BigReal& a, const BigReal& q, const BigReal& tol);

/// Finite (a; q)_n, with the standard extension to negative n.
BigReal pochhammer(const BigReal& a, const BigReal& q, int n);

/// Series convention for 2phi2: the Gasper-Rahman unilateral form carries the
/// extra (-1)^n q^{n(n-1)/2} factor per term; Plain omits it.
enum class Phi22Convention { GasperRahman, Plain };

struct Phi22Params {
  BigReal a, b, c, d, q, z;
};

BigReal phi22(const Phi22Params& p, const BigReal& tol,
              Phi22Convention conv = Phi22Convention::GasperRahman);

/// 2phi2(a,b;c,d;q)(cd/ab) = (cd/ab;q)_inf / (d;q)_inf
///                           * 2phi2(c/a,c/b;c,cd/ab;q)(d).
IdentityReport check_transform(const BigReal& a, const BigReal& b, const BigReal& c,
                               const BigReal& d, const BigReal& q, const BigReal& tol);

/// Evaluates an exact scalar at numeric x, q > 0 via t = q^{1/4}, y = x^{1/2}.
BigReal eval_numeric(const QScalar& s, const Rational& x_val, const Rational& q_val);

/// Three-way comparison of the weight-r action on v_k of the double-sum
/// coboundary element: the two displayed hypergeometric coefficients against
/// the exact matrix element. The convention that validates is recorded in the
/// identity name.
IdentityReport cross_check_action(int p, int k, int r, const Rational& x_val,
                                  const Rational& q_val, const BigReal& tol);

}  // namespace dyntwist
