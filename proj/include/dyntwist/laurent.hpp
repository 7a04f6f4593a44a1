#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace dyntwist {

using Rational = mpq_class;

/// Exponent pair of a monomial c * t^t_exp * y^y_exp.
struct Exponents {
  int t = 0;
  int y = 0;
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Laurent polynomial in t = q^{1/4} and y = x^{1/2} with exact rational
/// coefficients. Exponents may be negative; zero coefficients are never stored.
class LaurentPoly {
 public:
  // Terms keyed by (t-exponent, y-exponent), descending — the print order.
  using TermMap = std::map<std::pair<int, int>, Rational, std::greater<std::pair<int, int>>>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c) {
    if (c != 0) terms_[{0, 0}] = c;
  }
  explicit LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

  static LaurentPoly monomial(const Rational& c, int t_exp, int y_exp) {
    LaurentPoly p;
    if (c != 0) p.terms_[{t_exp, y_exp}] = c;
    return p;
  }
  static LaurentPoly one() { return LaurentPoly(Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when the polynomial has exactly one term.
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// The single term of a monomial; throws on anything else.
  std::pair<Exponents, Rational> sole_term() const;

  Rational coeff(int t_exp, int y_exp) const;
  void set_coeff(int t_exp, int y_exp, const Rational& c);

  int min_t_exp() const;
  int min_y_exp() const;
  int max_y_exp() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  LaurentPoly scaled(const Rational& c) const;
  /// Multiply by the monomial t^dt * y^dy.
  LaurentPoly shifted(int dt, int dy) const;

  /// The substitution x -> x q^m, i.e. y -> y t^{2m} on every term.
  LaurentPoly subst_x_shift(int m) const;

  /// Restriction to terms with the given y-exponent, as a polynomial in t only.
  LaurentPoly y_slice(int y_exp) const;

 private:
  TermMap terms_;
};

/// A common factor of a and b containing their full polynomial gcd up to a
/// monomial unit; exact and deterministic.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace dyntwist
