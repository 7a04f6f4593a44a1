#pragma once

#include "dyntwist/qscalar.hpp"

#include <map>
#include <optional>

namespace dyntwist {

/// Expansion anchor for Laurent series in y.
enum class Anchor { YInfinity, YZero };

/// Truncated Laurent series in y whose coefficients are Laurent polynomials in
/// t; valid modulo terms of absolute y-exponent > order.
struct LaurentSeries {
  Anchor anchor = Anchor::YInfinity;
  std::map<int, LaurentPoly> coeffs;  // y-exponent -> polynomial in t
  int order = 0;

  bool operator==(const LaurentSeries&) const = default;
};

/// Expands r at the anchor to the given order by exact long division.
/// Requires the extremal y-coefficient of den(r) at the anchor to be a
/// t-monomial (true for all denominators arising in this library); throws
/// std::domain_error otherwise.
LaurentSeries expand(const QScalar& r, Anchor anchor, int order);

/// Result of comparing two rational functions at an anchor: either exact
/// equality or the smallest absolute y-exponent at which they differ, capped
/// at the requested order.
struct AgreementOrder {
  bool exact = false;
  int order = 0;

  friend bool operator==(const AgreementOrder&, const AgreementOrder&) = default;
};

AgreementOrder agreement_order(const QScalar& a, const QScalar& b, Anchor anchor, int cap);

}  // namespace dyntwist
