#include "dyntwist/series.hpp"

#include <algorithm>
#include <cstdlib>

namespace dyntwist {

namespace {

int extremal_y(const LaurentPoly& p, Anchor anchor) {
  return anchor == Anchor::YInfinity ? p.max_y_exp() : p.min_y_exp();
}

}  // namespace

LaurentSeries expand(const QScalar& r, Anchor anchor, int order) {
  LaurentSeries out;
  out.anchor = anchor;
  out.order = order;
  if (r.is_zero()) return out;

  const LaurentPoly& den = r.den();
  int d_ext = extremal_y(den, anchor);
  LaurentPoly lead = den.y_slice(d_ext);
  if (!lead.is_monomial())
    throw std::domain_error("expand: extremal denominator coefficient is not a t-monomial");
  auto [le, lc] = lead.sole_term();

  LaurentPoly rem = r.num();
  const int dir = anchor == Anchor::YInfinity ? 1 : -1;
  while (!rem.is_zero()) {
    int r_ext = extremal_y(rem, anchor);
    int e = r_ext - d_ext;
    if (dir * e < -order) break;
    // coefficient = rem's extremal slice divided by the monomial lead
    LaurentPoly c = rem.y_slice(r_ext).scaled(1 / lc).shifted(-le.t, 0);
    out.coeffs[e] = c;
    rem -= c.shifted(0, e) * den;
  }
  return out;
}

AgreementOrder agreement_order(const QScalar& a, const QScalar& b, Anchor anchor, int cap) {
  if (a == b) return {true, cap};
  LaurentSeries d = expand(a - b, anchor, cap);
  int best = cap;
  for (const auto& [e, c] : d.coeffs)
    if (!c.is_zero()) best = std::min(best, std::abs(e));
  return {false, best};
}

}  // namespace dyntwist
