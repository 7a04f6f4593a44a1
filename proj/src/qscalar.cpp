#include "dyntwist/qscalar.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <vector>

namespace dyntwist {

QScalar::QScalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QScalar: zero denominator");
  reduce();
}

void QScalar::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  if (!den_.is_monomial() && !num_.is_monomial()) {
    LaurentPoly g = laurent_gcd(num_, den_);
    if (!g.is_one() && !g.is_monomial()) {
      num_ = laurent_divexact(num_, g);
      den_ = laurent_divexact(den_, g);
    }
  }
  normalize_units();
}

void QScalar::normalize_units() {
  // Pin the monomial unit: den gets minimal t- and y-exponent zero.
  int dt = den_.min_t_exp(), dy = den_.min_y_exp();
  if (dt != 0 || dy != 0) {
    den_ = den_.shifted(-dt, -dy);
    num_ = num_.shifted(-dt, -dy);
  }
  // Pin the scalar unit: joint integer content 1, den's greatest term positive.
  mpz_class lcm_den(1), gcd_num(0);
  for (const auto* p : {&num_, &den_})
    for (const auto& [key, c] : p->terms()) lcm_den = lcm(lcm_den, c.get_den());
  for (const auto* p : {&num_, &den_})
    for (const auto& [key, c] : p->terms()) {
      mpz_class n = c.get_num() * (lcm_den / c.get_den());
      gcd_num = gcd(gcd_num, n);
    }
  Rational scale(lcm_den, gcd_num == 0 ? mpz_class(1) : gcd_num);
  scale.canonicalize();
  if (!den_.terms().empty() && den_.terms().begin()->second * scale < 0) scale = -scale;
  if (scale != 1) {
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
  }
}

QScalar QScalar::operator-() const {
  QScalar r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

QScalar operator+(const QScalar& a, const QScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  QScalar r;
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
    r.reduce();
    return r;
  }
  // With reduced inputs, any common factor of the sum and its denominator
  // divides g = gcd(den_a, den_b); gcd against g is far cheaper than against
  // the full denominator product.
  LaurentPoly g = a.den_.is_monomial() || b.den_.is_monomial()
                      ? LaurentPoly::one()
                      : laurent_gcd(a.den_, b.den_);
  if (g.is_one() || g.is_monomial()) {
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    if (r.num_.is_zero()) return QScalar();
    r.normalize_units();
    return r;
  }
  LaurentPoly u = laurent_divexact(a.den_, g);
  LaurentPoly v = laurent_divexact(b.den_, g);
  r.num_ = a.num_ * v + b.num_ * u;
  if (r.num_.is_zero()) return QScalar();
  LaurentPoly h = r.num_.is_monomial() ? LaurentPoly::one() : laurent_gcd(r.num_, g);
  if (!h.is_one() && !h.is_monomial()) {
    r.num_ = laurent_divexact(r.num_, h);
    g = laurent_divexact(g, h);
  }
  r.den_ = u * g * v;
  r.normalize_units();
  return r;
}

QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }

QScalar operator*(const QScalar& a, const QScalar& b) {
  if (a.is_zero() || b.is_zero()) return QScalar();
  QScalar r;
  // Cross-cancel so the result of a product of reduced fractions is reduced.
  LaurentPoly n1 = a.num_, d2 = b.den_;
  LaurentPoly g1 = laurent_gcd(n1, d2);
  if (!g1.is_one() && !g1.is_monomial()) {
    n1 = laurent_divexact(n1, g1);
    d2 = laurent_divexact(d2, g1);
  }
  LaurentPoly n2 = b.num_, d1 = a.den_;
  LaurentPoly g2 = laurent_gcd(n2, d1);
  if (!g2.is_one() && !g2.is_monomial()) {
    n2 = laurent_divexact(n2, g2);
    d1 = laurent_divexact(d1, g2);
  }
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  r.normalize_units();
  return r;
}

QScalar operator/(const QScalar& a, const QScalar& b) { return a * b.inverse(); }

QScalar QScalar::inverse() const {
  if (is_zero()) throw std::domain_error("QScalar: inverse of zero");
  QScalar r;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize_units();
  return r;
}

QScalar QScalar::subst_x_shift(int m) const {
  QScalar r;
  r.num_ = num_.subst_x_shift(m);
  r.den_ = den_.subst_x_shift(m);
  r.normalize_units();
  return r;
}

// --- printing / parsing ----------------------------------------------------

namespace {

std::string poly_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    std::string factors;
    if (key.first != 0) factors += "t^" + std::to_string(key.first);
    if (key.second != 0) {
      if (!factors.empty()) factors += "*";
      factors += "y^" + std::to_string(key.second);
    }
    if (factors.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += factors;
    } else if (c == -1) {
      out += "-" + factors;
    } else {
      out += c.get_str() + "*" + factors;
    }
  }
  return out;
}

LaurentPoly parse_poly(const std::string& s) {
  LaurentPoly p;
  if (s == "0") return p;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(" + ", pos);
    std::string term = s.substr(pos, end == std::string::npos ? end : end - pos);
    pos = end == std::string::npos ? s.size() : end + 3;
    Rational c(1);
    int te = 0, ye = 0;
    std::size_t fpos = 0;
    bool coeff_seen = false;
    while (fpos < term.size()) {
      std::size_t fend = term.find('*', fpos);
      std::string f = term.substr(fpos, fend == std::string::npos ? fend : fend - fpos);
      fpos = fend == std::string::npos ? term.size() : fend + 1;
      if (f.empty()) throw std::invalid_argument("parse_qscalar: empty factor");
      if (f[0] == 't' || f[0] == 'y') {
        if (f.size() < 3 || f[1] != '^') throw std::invalid_argument("parse_qscalar: bad power");
        int e = std::atoi(f.c_str() + 2);
        (f[0] == 't' ? te : ye) = e;
      } else if (f == "-t" || f == "-y") {
        throw std::invalid_argument("parse_qscalar: bad power");
      } else if (f[0] == '-' && f.size() > 1 && (f[1] == 't' || f[1] == 'y')) {
        c = -1;
        if (f.size() < 4 || f[2] != '^') throw std::invalid_argument("parse_qscalar: bad power");
        int e = std::atoi(f.c_str() + 3);
        (f[1] == 't' ? te : ye) = e;
      } else {
        if (coeff_seen) throw std::invalid_argument("parse_qscalar: repeated coefficient");
        coeff_seen = true;
        c = Rational(f);
        c.canonicalize();
      }
    }
    p.set_coeff(te, ye, p.coeff(te, ye) + c);
  }
  return p;
}

}  // namespace

std::string QScalar::canonical_string() const {
  return poly_string(num_) + " / " + poly_string(den_);
}

std::ostream& operator<<(std::ostream& os, const QScalar& s) {
  return os << s.canonical_string();
}

QScalar parse_qscalar(const std::string& s) {
  std::size_t sep = s.find(" / ");
  if (sep == std::string::npos) throw std::invalid_argument("parse_qscalar: missing ' / '");
  LaurentPoly num = parse_poly(s.substr(0, sep));
  LaurentPoly den = parse_poly(s.substr(sep + 3));
  return QScalar(std::move(num), std::move(den));
}

// --- q-combinatorics -------------------------------------------------------

QScalar qnum(int z) {
  // [z]_q = sign(z) * sum_{j=0}^{|z|-1} q^{|z|-1-2j}
  LaurentPoly p;
  int a = std::abs(z);
  for (int j = 0; j < a; ++j) p.set_coeff(4 * (a - 1 - 2 * j), 0, z > 0 ? 1 : -1);
  return QScalar(std::move(p));
}

QScalar qnum_factorial(int n) {
  if (n < 0) throw std::domain_error("qnum_factorial: negative argument");
  QScalar r = QScalar::one();
  for (int j = 1; j <= n; ++j) r *= qnum(j);
  return r;
}

QScalar qround(int z, QBase base) {
  int sgn = base == QBase::Q ? 1 : -1;
  return QScalar::q_power(sgn * (z - 1)) * qnum(z);
}

QScalar qround_factorial(int n, QBase base) {
  if (n < 0) throw std::domain_error("qround_factorial: negative argument");
  QScalar r = QScalar::one();
  for (int j = 1; j <= n; ++j) r *= qround(j, base);
  return r;
}

QScalar qpochhammer(const QScalar& a, const QScalar& base, int n) {
  if (!base.den().is_one() || !base.num().is_monomial())
    throw std::domain_error("qpochhammer: base must be a monomial power of q");
  auto [e, c] = base.num().sole_term();
  if (e.y != 0 || c != 1) throw std::domain_error("qpochhammer: base must be a power of q");
  QScalar r = QScalar::one();
  if (n >= 0) {
    QScalar bp = QScalar::one();
    for (int j = 0; j < n; ++j) {
      r *= QScalar::one() - a * bp;
      bp *= base;
    }
    return r;
  }
  QScalar bp = QScalar::one();
  for (int j = 1; j <= -n; ++j) {
    bp /= base;
    QScalar factor = QScalar::one() - a * bp;
    if (factor.is_zero()) throw std::domain_error("qpochhammer: pole (vanishing factor)");
    r *= factor;
  }
  return r.inverse();
}

}  // namespace dyntwist
