#pragma once

#include "dyntwist/laurent.hpp"

#include <iosfwd>
#include <string>

namespace dyntwist {

/// Exact rational function in t = q^{1/4}, y = x^{1/2}: the ground field of
/// every matrix in the library.
///
/// Canonical form: num/den in lowest terms, den a polynomial with minimal t-
/// and y-exponent zero, num and den integer with joint content 1, and the
/// lexicographically greatest term of den positive. This makes equality a
/// term-by-term comparison and canonical_string() bit-stable.
class QScalar {
 public:
  QScalar() : num_(), den_(LaurentPoly::one()) {}
  explicit QScalar(const Rational& c) : num_(c), den_(LaurentPoly::one()) {}
  explicit QScalar(long c) : num_(Rational(c)), den_(LaurentPoly::one()) {}
  explicit QScalar(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {}
  QScalar(LaurentPoly num, LaurentPoly den);

  static QScalar zero() { return QScalar(); }
  static QScalar one() { return QScalar(1); }
  /// c * t^a * y^b
  static QScalar monomial(const Rational& c, int t_exp, int y_exp) {
    return QScalar(LaurentPoly::monomial(c, t_exp, y_exp));
  }
  static QScalar q_power(int k) { return monomial(1, 4 * k, 0); }
  static QScalar t_power(int k) { return monomial(1, k, 0); }
  static QScalar x_power(int k) { return monomial(1, 0, 2 * k); }
  static QScalar y_power(int k) { return monomial(1, 0, k); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  QScalar operator-() const;
  friend QScalar operator+(const QScalar& a, const QScalar& b);
  friend QScalar operator-(const QScalar& a, const QScalar& b);
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend QScalar operator/(const QScalar& a, const QScalar& b);
  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
  QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

  /// Throws std::domain_error on zero.
  QScalar inverse() const;

  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

  /// The substitution x -> x q^m (exact, closed under the field).
  QScalar subst_x_shift(int m) const;

  std::string canonical_string() const;

 private:
  void reduce();
  void normalize_units();

  LaurentPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const QScalar& s);

/// Parses the canonical_string format; throws std::invalid_argument on
/// malformed input.
QScalar parse_qscalar(const std::string& s);

// --- q-combinatorics -------------------------------------------------------

/// [z]_q = (q^z - q^{-z}) / (q - q^{-1}), as a closed Laurent polynomial.
QScalar qnum(int z);

/// [n]_q! for n >= 0; throws on negative n.
QScalar qnum_factorial(int n);

enum class QBase { Q, QInverse };

/// (z)_q = q^{z-1}[z]_q, or its q -> q^{-1} counterpart.
QScalar qround(int z, QBase base = QBase::Q);

/// (n)_q! = (n)_q (n-1)_q ... (1)_q for n >= 0; throws on negative n.
QScalar qround_factorial(int n, QBase base = QBase::Q);

/// (a; base)_n with the q-Pochhammer extension to negative n.
/// base must be a monomial pure power of t (a power of q); throws
/// std::domain_error on a vanishing factor in the n < 0 denominator.
QScalar qpochhammer(const QScalar& a, const QScalar& base, int n);

}  // namespace dyntwist
