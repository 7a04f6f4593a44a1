#include "dyntwist/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace dyntwist {

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == std::pair<int, int>{0, 0} &&
         terms_.begin()->second == 1;
}

std::pair<Exponents, Rational> LaurentPoly::sole_term() const {
  if (terms_.size() != 1) throw std::domain_error("LaurentPoly: not a monomial");
  const auto& [key, c] = *terms_.begin();
  return {Exponents{key.first, key.second}, c};
}

Rational LaurentPoly::coeff(int t_exp, int y_exp) const {
  auto it = terms_.find({t_exp, y_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(int t_exp, int y_exp, const Rational& c) {
  if (c == 0)
    terms_.erase({t_exp, y_exp});
  else
    terms_[{t_exp, y_exp}] = c;
}

int LaurentPoly::min_t_exp() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [key, c] : terms_) m = std::min(m, key.first);
  return terms_.empty() ? 0 : m;
}

int LaurentPoly::min_y_exp() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [key, c] : terms_) m = std::min(m, key.second);
  return terms_.empty() ? 0 : m;
}

int LaurentPoly::max_y_exp() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [key, c] : terms_) m = std::max(m, key.second);
  return terms_.empty() ? 0 : m;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [key, c] : terms_) r.terms_[key] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [key, c] : o.terms_) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [key, c] : o.terms_) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      std::pair<int, int> key{ka.first + kb.first, ka.second + kb.second};
      auto it = r.terms_.find(key);
      if (it == r.terms_.end()) {
        r.terms_.emplace(key, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [key, v] : terms_) r.terms_[key] = v * c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int dt, int dy) const {
  LaurentPoly r;
  for (const auto& [key, v] : terms_) r.terms_[{key.first + dt, key.second + dy}] = v;
  return r;
}

LaurentPoly LaurentPoly::subst_x_shift(int m) const {
  LaurentPoly r;
  for (const auto& [key, v] : terms_) {
    auto it = r.terms_.find({key.first + 2 * m * key.second, key.second});
    if (it == r.terms_.end())
      r.terms_.emplace(std::pair<int, int>{key.first + 2 * m * key.second, key.second}, v);
    else
      it->second += v;  // distinct (t,y) keys stay distinct under the shear, but be safe
  }
  return r;
}

LaurentPoly LaurentPoly::y_slice(int y_exp) const {
  LaurentPoly r;
  for (const auto& [key, v] : terms_)
    if (key.second == y_exp) r.terms_[{key.first, 0}] = v;
  return r;
}

// ---------------------------------------------------------------------------
// gcd machinery. Inputs are cleared to integer coefficients; the heavy path
// is a subresultant pseudo-remainder sequence in y over Z[t], which keeps
// intermediate coefficients at subresultant size with exact divisions only.
// A mod-p evaluation certifies trivial gcds cheaply before any of that runs.

namespace {

// Coefficients indexed by degree; no trailing zeros.
using UniPoly = std::vector<Rational>;

void uni_trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool uni_zero(const UniPoly& p) { return p.empty(); }
int uni_deg(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (uni_zero(a) || uni_zero(b)) return {};
  UniPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  uni_trim(r);
  return r;
}

UniPoly uni_sub(UniPoly a, const UniPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  uni_trim(a);
  return a;
}

// Exact quotient a / b; throws when the division leaves a remainder.
UniPoly uni_divexact(UniPoly a, const UniPoly& b) {
  if (uni_zero(b)) throw std::domain_error("uni_divexact: division by zero");
  if (uni_zero(a)) return {};
  if (uni_deg(a) < uni_deg(b)) throw std::domain_error("uni_divexact: not divisible");
  UniPoly q(a.size() - b.size() + 1, Rational(0));
  while (!uni_zero(a) && uni_deg(a) >= uni_deg(b)) {
    Rational c = a.back() / b.back();
    int shift = uni_deg(a) - uni_deg(b);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    uni_trim(a);
  }
  if (!uni_zero(a)) throw std::domain_error("uni_divexact: not divisible");
  return q;
}

// Polynomial in y with UniPoly (Q[t]) coefficients, indexed by y-degree.
using BiPoly = std::vector<UniPoly>;

void bi_trim(BiPoly& p) {
  while (!p.empty() && uni_zero(p.back())) p.pop_back();
}

bool bi_zero(const BiPoly& p) { return p.empty(); }
int bi_deg(const BiPoly& p) { return static_cast<int>(p.size()) - 1; }

// --- integer layer, used only by the gcd ---

using ZPoly = std::vector<mpz_class>;  // t, dense by degree
using ZBi = std::vector<ZPoly>;        // y-degree -> ZPoly

void z_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool z_zero(const ZPoly& p) { return p.empty(); }
int z_deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

mpz_class z_content(const ZPoly& p) {
  mpz_class g(0);
  for (const auto& v : p) g = gcd(g, v);
  return g;
}

void z_divexact_scalar(ZPoly& p, const mpz_class& d) {
  if (d == 1) return;
  for (auto& v : p) {
    if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()))
      throw std::domain_error("laurent_gcd: inexact scalar division");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  }
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (z_zero(a) || z_zero(b)) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  z_trim(r);
  return r;
}

ZPoly z_sub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  z_trim(a);
  return a;
}

// Exact quotient over Z[t]; valid because an exact divisor makes every
// leading-coefficient division in classical long division exact too.
ZPoly z_divexact(ZPoly a, const ZPoly& b) {
  if (z_zero(b)) throw std::domain_error("laurent_gcd: division by zero");
  if (z_zero(a)) return {};
  if (z_deg(a) < z_deg(b)) throw std::domain_error("laurent_gcd: inexact division");
  ZPoly q(a.size() - b.size() + 1, mpz_class(0));
  while (!z_zero(a) && z_deg(a) >= z_deg(b)) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t()))
      throw std::domain_error("laurent_gcd: inexact division");
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    int shift = z_deg(a) - z_deg(b);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    z_trim(a);
  }
  if (!z_zero(a)) throw std::domain_error("laurent_gcd: inexact division");
  return q;
}

bool z_divides(const ZPoly& a, const ZPoly& b) {
  try {
    z_divexact(a, b);
  } catch (const std::domain_error&) {
    return false;
  }
  return true;
}

// --- modular coprimality certificates ---
//
// If both operands keep their degree mod p and their images are coprime in
// F_p[..], the resultant is nonzero mod p, hence nonzero, hence the gcd is
// trivial. One-sided: a failed certificate just falls through to the exact
// path.

constexpr std::uint64_t kPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL};

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

using ModPoly = std::vector<std::uint64_t>;

void mod_trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Monic gcd in F_p[..] by Euclid.
ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  while (!b.empty()) {
    // a mod b
    std::uint64_t inv = mod_pow(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      std::uint64_t c = a.back() * inv % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] = (a[i + shift] + p - c * b[i] % p) % p;
      a.pop_back();  // leading term cancelled exactly
      mod_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty() && a.back() != 1) {
    std::uint64_t inv = mod_pow(a.back(), p - 2, p);
    for (auto& v : a) v = v * inv % p;
  }
  return a;
}

int mod_gcd_deg(ModPoly a, ModPoly b, std::uint64_t p) {
  return static_cast<int>(mod_gcd(std::move(a), std::move(b), p).size()) - 1;
}

ModPoly z_reduce(const ZPoly& a, std::uint64_t p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), static_cast<unsigned long>(p));
  mod_trim(r);
  return r;
}

bool z_coprime_certificate(const ZPoly& a, const ZPoly& b) {
  for (std::uint64_t p : kPrimes) {
    ModPoly ra = z_reduce(a, p), rb = z_reduce(b, p);
    if (static_cast<int>(ra.size()) - 1 != z_deg(a)) continue;
    if (static_cast<int>(rb.size()) - 1 != z_deg(b)) continue;
    if (mod_gcd_deg(std::move(ra), std::move(rb), p) == 0) return true;
  }
  return false;
}

// Evaluates the ZPoly coefficients at t = t0 mod p, giving a ModPoly in y.
ModPoly zbi_eval_t(const ZBi& a, std::uint64_t t0, std::uint64_t p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t acc = 0;
    for (auto it = a[i].rbegin(); it != a[i].rend(); ++it)
      acc = (acc * t0 + mpz_fdiv_ui(it->get_mpz_t(), static_cast<unsigned long>(p))) % p;
    r[i] = acc;
  }
  mod_trim(r);
  return r;
}

bool zbi_coprime_y_certificate(const ZBi& a, const ZBi& b) {
  for (std::uint64_t p : kPrimes)
    for (std::uint64_t t0 : {2ULL, 3ULL, 65537ULL, 1000003ULL}) {
      ModPoly ra = zbi_eval_t(a, t0, p), rb = zbi_eval_t(b, t0, p);
      if (ra.size() != a.size()) continue;
      if (rb.size() != b.size()) continue;
      if (mod_gcd_deg(std::move(ra), std::move(rb), p) == 0) return true;
    }
  return false;
}

// --- modular univariate gcd over Z[t] ---

// Symmetric representative of a residue in (-p/2, p/2].
mpz_class sym_rep(std::uint64_t v, std::uint64_t p) {
  return 2 * v > p ? mpz_class(static_cast<unsigned long>(v)) - mpz_class(static_cast<unsigned long>(p))
                   : mpz_class(static_cast<unsigned long>(v));
}

// Both inputs primitive with positive lead; returns the primitive gcd.
// Modular: combine monic gcd images over growing moduli by CRT, then verify
// the stabilized candidate by exact trial division, so the result is exact.
ZPoly z_gcd_primitive(ZPoly a, ZPoly b) {
  if (z_deg(a) == 0 || z_deg(b) == 0) return {mpz_class(1)};
  if (z_coprime_certificate(a, b)) return {mpz_class(1)};
  mpz_class gamma = gcd(a.back(), b.back());
  mpz_class modulus(0);
  std::vector<mpz_class> crt;
  int dmin = std::numeric_limits<int>::max();
  mpz_class pz = mpz_class(1) << 30;
  while (true) {
    mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
    std::uint64_t p = pz.get_ui();
    ModPoly ra = z_reduce(a, p), rb = z_reduce(b, p);
    if (static_cast<int>(ra.size()) - 1 != z_deg(a)) continue;
    if (static_cast<int>(rb.size()) - 1 != z_deg(b)) continue;
    ModPoly g = mod_gcd(std::move(ra), std::move(rb), p);
    int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return {mpz_class(1)};
    if (dg > dmin) continue;  // unlucky prime
    if (dg < dmin) {
      dmin = dg;
      modulus = 0;
      crt.assign(static_cast<std::size_t>(dg) + 1, mpz_class(0));
    }
    std::uint64_t gm = mpz_fdiv_ui(gamma.get_mpz_t(), static_cast<unsigned long>(p));
    bool changed = false;
    if (modulus == 0) {
      for (int i = 0; i <= dg; ++i) crt[i] = sym_rep(g[i] * gm % p, p);
      modulus = pz;
      changed = true;
    } else {
      std::uint64_t mres = mpz_fdiv_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p));
      std::uint64_t minv = mod_pow(mres, p - 2, p);
      mpz_class newmod = modulus * pz;
      for (int i = 0; i <= dg; ++i) {
        std::uint64_t want = g[i] * gm % p;
        std::uint64_t have = mpz_fdiv_ui(crt[i].get_mpz_t(), static_cast<unsigned long>(p));
        std::uint64_t delta = (want + p - have) % p * minv % p;
        mpz_class c2 = crt[i] + modulus * mpz_class(static_cast<unsigned long>(delta));
        if (2 * c2 > newmod) c2 -= newmod;
        if (c2 != crt[i]) {
          crt[i] = c2;
          changed = true;
        }
      }
      modulus = newmod;
    }
    if (!changed) {
      ZPoly cand = crt;
      z_trim(cand);
      if (z_deg(cand) == dmin) {
        z_divexact_scalar(cand, z_content(cand));
        if (cand.back() < 0)
          for (auto& v : cand) v = -v;
        if (z_divides(a, cand) && z_divides(b, cand)) return cand;
      }
    }
  }
}

ZPoly z_gcd(ZPoly a, ZPoly b) {
  mpz_class ca = z_content(a), cb = z_content(b);
  z_divexact_scalar(a, ca);
  z_divexact_scalar(b, cb);
  if (a.back() < 0)
    for (auto& v : a) v = -v;
  if (b.back() < 0)
    for (auto& v : b) v = -v;
  ZPoly g = z_gcd_primitive(std::move(a), std::move(b));
  mpz_class cg = gcd(ca, cb);
  if (cg != 1)
    for (auto& v : g) v *= cg;
  return g;
}

void zbi_trim(ZBi& p) {
  while (!p.empty() && z_zero(p.back())) p.pop_back();
}

int zbi_deg(const ZBi& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zbi_content(const ZBi& p) {
  ZPoly c;
  for (const auto& coeff : p) {
    if (z_zero(coeff)) continue;
    if (z_zero(c)) {
      c = coeff;
      if (c.back() < 0)
        for (auto& v : c) v = -v;
    } else {
      c = z_gcd(c, coeff);
    }
    if (z_deg(c) == 0 && c[0] == 1) break;
  }
  return c;
}

ZBi zbi_divexact_uni(const ZBi& p, const ZPoly& d) {
  ZBi r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!z_zero(p[i])) r[i] = z_deg(d) == 0 ? [&] {
      ZPoly c = p[i];
      z_divexact_scalar(c, d[0]);
      return c;
    }()
                                            : z_divexact(p[i], d);
  return r;
}

// Trial division over Z[t][y]; coefficient divisions go through z_divexact,
// so an inexact divisor surfaces as a domain_error at some step.
bool zbi_divides(const ZBi& a, const ZBi& b) {
  ZBi rem = a;
  try {
    while (!rem.empty() && zbi_deg(rem) >= zbi_deg(b)) {
      ZPoly q = z_divexact(rem.back(), b.back());
      int shift = zbi_deg(rem) - zbi_deg(b);
      for (std::size_t i = 0; i < b.size(); ++i)
        rem[i + shift] = z_sub(std::move(rem[i + shift]), z_mul(q, b[i]));
      zbi_trim(rem);
    }
  } catch (const std::domain_error&) {
    return false;
  }
  return rem.empty();
}

int zbi_t_deg(const ZBi& p) {
  int d = -1;
  for (const auto& coeff : p) d = std::max(d, z_deg(coeff));
  return d;
}

std::uint64_t mod_eval(const ModPoly& c, std::uint64_t t0, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * t0 + *it) % p;
  return acc;
}

// y-indexed t-polynomials over F_p.
using ModBi = std::vector<ModPoly>;

ModBi zbi_reduce(const ZBi& a, std::uint64_t p) {
  ModBi r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = z_reduce(a[i], p);
  return r;
}

// gcd of A and B in F_p[t][y] normalized to leading y-coefficient gammap,
// computed by evaluating t, taking gcds in F_p[y], and interpolating.
// Returns the image, an empty poly when the inputs are coprime in y, or
// nullopt when the prime is unusable.
std::optional<ModBi> zbi_gcd_mod_p(const ModBi& A, const ModBi& B, const ModPoly& gammap,
                                   std::uint64_t p, int nt, int extra) {
  std::vector<std::uint64_t> points;
  std::vector<ModPoly> images;  // y-polynomials, one per point
  int dy_min = std::numeric_limits<int>::max();
  // Sample more admissible points than needed and keep the minimal-degree
  // ones: a fixed point can be systematically unlucky (t = 1 in particular
  // collapses the whole q-structure), so the excess is what detects it.
  int admissible = 0;
  for (std::uint64_t t0 = 2; t0 < p && admissible < nt + extra; ++t0) {
    if (mod_eval(A.back(), t0, p) == 0 || mod_eval(B.back(), t0, p) == 0) continue;
    std::uint64_t gv = mod_eval(gammap, t0, p);
    if (gv == 0) continue;
    ++admissible;
    ModPoly ea(A.size()), eb(B.size());
    for (std::size_t i = 0; i < A.size(); ++i) ea[i] = mod_eval(A[i], t0, p);
    for (std::size_t i = 0; i < B.size(); ++i) eb[i] = mod_eval(B[i], t0, p);
    ModPoly g = mod_gcd(std::move(ea), std::move(eb), p);
    int dy = static_cast<int>(g.size()) - 1;
    if (dy == 0) return ModBi{};  // coprime in y
    if (dy > dy_min) continue;    // unlucky evaluation point
    if (dy < dy_min) {
      dy_min = dy;
      points.clear();
      images.clear();
    }
    for (auto& v : g) v = v * gv % p;
    points.push_back(t0);
    images.push_back(std::move(g));
  }
  if (static_cast<int>(points.size()) < nt) return std::nullopt;
  points.resize(static_cast<std::size_t>(nt));
  images.resize(static_cast<std::size_t>(nt));
  // Lagrange interpolation in t for each y-coefficient: one shared
  // full = prod_k (t - t_k), basis_j = full / (t - t_j) by synthetic
  // division, so the whole pass is quadratic in the point count.
  ModBi out(static_cast<std::size_t>(dy_min) + 1);
  std::size_t n = points.size();
  ModPoly full{1};
  for (std::size_t k = 0; k < n; ++k) {
    ModPoly next(full.size() + 1, 0);
    std::uint64_t neg = p - points[k];
    for (std::size_t i = 0; i < full.size(); ++i) {
      next[i + 1] = (next[i + 1] + full[i]) % p;
      next[i] = (next[i] + full[i] * neg) % p;
    }
    full = std::move(next);
  }
  ModPoly basis(n);
  for (std::size_t j = 0; j < n; ++j) {
    // synthetic division of full by (t - t_j); the remainder is zero
    std::uint64_t tj = points[j];
    std::uint64_t carry = full[n];
    for (std::size_t i = n; i-- > 0;) {
      basis[i] = carry;
      carry = (full[i] + carry * tj) % p;
    }
    std::uint64_t denom = 0;
    {
      // denom = prod_{k != j} (t_j - t_k) = basis evaluated at t_j
      std::uint64_t acc = 0;
      for (std::size_t i = n; i-- > 0;) acc = (acc * tj + basis[i]) % p;
      denom = acc;
    }
    std::uint64_t scale = mod_pow(denom, p - 2, p);
    for (std::size_t yd = 0; yd <= static_cast<std::size_t>(dy_min); ++yd) {
      std::uint64_t v = images[j][yd] * scale % p;
      if (v == 0) continue;
      auto& coeff = out[yd];
      if (coeff.size() < n) coeff.resize(n, 0);
      for (std::size_t i = 0; i < n; ++i) coeff[i] = (coeff[i] + basis[i] * v) % p;
    }
  }
  for (auto& coeff : out) mod_trim(coeff);
  return out;
}

// Both inputs primitive over Z[t] (content removed); returns the primitive gcd
// in y. Modular: per-prime images from zbi_gcd_mod_p are CRT-combined until
// they stabilize, and the candidate is verified by exact trial division.
ZBi zbi_gcd_primitive(ZBi a, ZBi b) {
  if (zbi_deg(a) == 0 || zbi_deg(b) == 0) return {ZPoly{mpz_class(1)}};
  // divisibility fast paths: denominators in this workload frequently nest,
  // and exact trial division is far cheaper than the modular machinery
  if (zbi_deg(b) <= zbi_deg(a) && zbi_divides(a, b)) return b;
  if (zbi_deg(a) <= zbi_deg(b) && zbi_divides(b, a)) return a;
  if (zbi_coprime_y_certificate(a, b)) return {ZPoly{mpz_class(1)}};
  ZPoly gamma = z_gcd(a.back(), b.back());
  int nt = z_deg(gamma) + std::min(zbi_t_deg(a), zbi_t_deg(b)) + 1;
  mpz_class modulus(0);
  std::vector<std::vector<mpz_class>> crt;
  int dy_min = std::numeric_limits<int>::max();
  int fails = 0;
  mpz_class pz = mpz_class(1) << 30;
  while (true) {
    mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
    std::uint64_t p = pz.get_ui();
    ModBi ra = zbi_reduce(a, p), rb = zbi_reduce(b, p);
    if (ra.size() != a.size() || rb.size() != b.size()) continue;
    ModPoly gp = z_reduce(gamma, p);
    if (static_cast<int>(gp.size()) - 1 != z_deg(gamma)) continue;
    auto img = zbi_gcd_mod_p(ra, rb, gp, p, nt, 2 + 2 * fails);
    if (!img) continue;
    if (img->empty()) return {ZPoly{mpz_class(1)}};
    int dy = static_cast<int>(img->size()) - 1;
    if (dy > dy_min) continue;  // unlucky prime
    if (dy < dy_min) {
      dy_min = dy;
      modulus = 0;
      crt.assign(static_cast<std::size_t>(dy) + 1,
                 std::vector<mpz_class>(static_cast<std::size_t>(nt), mpz_class(0)));
    }
    bool changed = false;
    if (modulus == 0) {
      for (int yd = 0; yd <= dy; ++yd)
        for (std::size_t i = 0; i < (*img)[yd].size(); ++i)
          crt[yd][i] = sym_rep((*img)[yd][i], p);
      modulus = pz;
      changed = true;
    } else {
      std::uint64_t mres = mpz_fdiv_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p));
      std::uint64_t minv = mod_pow(mres, p - 2, p);
      mpz_class newmod = modulus * pz;
      for (int yd = 0; yd <= dy; ++yd)
        for (std::size_t i = 0; i < crt[yd].size(); ++i) {
          std::uint64_t want = i < (*img)[yd].size() ? (*img)[yd][i] : 0;
          std::uint64_t have = mpz_fdiv_ui(crt[yd][i].get_mpz_t(), static_cast<unsigned long>(p));
          std::uint64_t delta = (want + p - have) % p * minv % p;
          mpz_class c2 = crt[yd][i] + modulus * mpz_class(static_cast<unsigned long>(delta));
          if (2 * c2 > newmod) c2 -= newmod;
          if (c2 != crt[yd][i]) {
            crt[yd][i] = c2;
            changed = true;
          }
        }
      modulus = newmod;
    }
    if (!changed) {
      ZBi cand(crt.size());
      for (std::size_t yd = 0; yd < crt.size(); ++yd) {
        cand[yd] = crt[yd];
        z_trim(cand[yd]);
      }
      zbi_trim(cand);
      if (zbi_deg(cand) == dy_min) {
        ZPoly cont = zbi_content(cand);
        cand = zbi_divexact_uni(cand, cont);
        if (cand.back().back() < 0)
          for (auto& coeff : cand)
            for (auto& v : coeff) v = -v;
        if (zbi_divides(a, cand) && zbi_divides(b, cand)) return cand;
      }
      // Stabilized on a wrong candidate: the sampled evaluations were
      // unlucky. Restart with a wider sample.
      ++fails;
      modulus = 0;
      dy_min = std::numeric_limits<int>::max();
      crt.clear();
    }
  }
}

struct Packed {
  BiPoly poly;
  int t_off = 0;
  int y_off = 0;
};

Packed pack(const LaurentPoly& p) {
  Packed out;
  out.t_off = p.min_t_exp();
  out.y_off = p.min_y_exp();
  int ydeg = p.max_y_exp() - out.y_off;
  out.poly.assign(static_cast<std::size_t>(ydeg) + 1, UniPoly{});
  for (const auto& [key, c] : p.terms()) {
    auto& coeff = out.poly[static_cast<std::size_t>(key.second - out.y_off)];
    std::size_t d = static_cast<std::size_t>(key.first - out.t_off);
    if (coeff.size() <= d) coeff.resize(d + 1, Rational(0));
    coeff[d] = c;
  }
  for (auto& coeff : out.poly) uni_trim(coeff);
  bi_trim(out.poly);
  return out;
}

LaurentPoly unpack(const BiPoly& p, int t_off, int y_off) {
  LaurentPoly out;
  for (std::size_t yd = 0; yd < p.size(); ++yd)
    for (std::size_t td = 0; td < p[yd].size(); ++td)
      if (p[yd][td] != 0)
        out.set_coeff(static_cast<int>(td) + t_off, static_cast<int>(yd) + y_off, p[yd][td]);
  return out;
}

}  // namespace

namespace {

// Clears a LaurentPoly to integer coefficients anchored at exponent 0; the
// dropped monomial and rational scale are units here.
ZBi pack_int(const LaurentPoly& p) {
  int t_off = p.min_t_exp(), y_off = p.min_y_exp();
  mpz_class l(1);
  for (const auto& [key, c] : p.terms()) l = lcm(l, c.get_den());
  ZBi out(static_cast<std::size_t>(p.max_y_exp() - y_off) + 1);
  for (const auto& [key, c] : p.terms()) {
    auto& coeff = out[static_cast<std::size_t>(key.second - y_off)];
    std::size_t d = static_cast<std::size_t>(key.first - t_off);
    if (coeff.size() <= d) coeff.resize(d + 1, mpz_class(0));
    coeff[d] = c.get_num() * (l / c.get_den());
  }
  for (auto& coeff : out) z_trim(coeff);
  zbi_trim(out);
  return out;
}

LaurentPoly unpack_int(const ZBi& p) {
  LaurentPoly out;
  for (std::size_t yd = 0; yd < p.size(); ++yd)
    for (std::size_t td = 0; td < p[yd].size(); ++td)
      if (p[yd][td] != 0)
        out.set_coeff(static_cast<int>(td), static_cast<int>(yd), Rational(p[yd][td]));
  return out;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_monomial() || b.is_monomial()) return LaurentPoly::one();
  ZBi za = pack_int(a), zb = pack_int(b);
  ZPoly ca = zbi_content(za), cb = zbi_content(zb);
  ZPoly cont = z_gcd(ca, cb);
  ZBi prim = zbi_gcd_primitive(zbi_divexact_uni(za, ca), zbi_divexact_uni(zb, cb));
  ZBi g(prim.size());
  for (std::size_t i = 0; i < prim.size(); ++i)
    if (!z_zero(prim[i])) g[i] = z_mul(prim[i], cont);
  return unpack_int(g);
}

LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("laurent_divexact: division by zero");
  if (a.is_zero()) return LaurentPoly();
  if (b.is_monomial()) {
    auto [e, c] = b.sole_term();
    return a.scaled(1 / c).shifted(-e.t, -e.y);
  }
  Packed pa = pack(a), pb = pack(b);
  // Long division in y; coefficient divisions must all be exact.
  BiPoly q(pa.poly.size(), UniPoly{});
  BiPoly rem = pa.poly;
  const UniPoly& lead = pb.poly.back();
  while (!bi_zero(rem) && bi_deg(rem) >= bi_deg(pb.poly)) {
    int shift = bi_deg(rem) - bi_deg(pb.poly);
    UniPoly qc = uni_divexact(rem.back(), lead);
    q[static_cast<std::size_t>(shift)] = qc;
    for (std::size_t i = 0; i < pb.poly.size(); ++i)
      rem[i + shift] = uni_sub(std::move(rem[i + shift]), uni_mul(qc, pb.poly[i]));
    bi_trim(rem);
  }
  if (!bi_zero(rem)) throw std::domain_error("laurent_divexact: not divisible");
  return unpack(q, pa.t_off - pb.t_off, pa.y_off - pb.y_off);
}

}  // namespace dyntwist
