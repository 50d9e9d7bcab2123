#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skewpbw/elements.hpp"
#include "skewpbw/valuation.hpp"

namespace skewpbw {

/// Truncation of a Hahn series over Z^n: the stored terms are exact on every
/// exponent below the bound and nothing is known at or above it. A missing
/// bound means the series is a finite sum known exactly.
class HahnSeries {
 public:
  using Terms = Element::Terms;

  HahnSeries(PresentationPtr p, MonomialOrder order, std::optional<ExponentVector> bound = std::nullopt);
  /// Keeps the terms of f below the bound.
  static HahnSeries from_element(const Element& f, MonomialOrder order,
                                 std::optional<ExponentVector> bound = std::nullopt);

  const PresentationPtr& presentation() const { return pres_; }
  const MonomialOrder& order() const { return order_; }
  const Terms& terms() const { return trunc_.terms(); }
  const std::optional<ExponentVector>& bound() const { return bound_; }

  /// True when u lies below the bound.
  bool known(const ExponentVector& u) const;
  /// Throws UnknownCoefficient at or above the bound.
  FieldElement coefficient(const ExponentVector& u) const;
  /// inf for the exact zero series; throws UnknownLeadingTerm when nothing
  /// below the bound is nonzero.
  Value valuation() const;
  /// Stored terms as a finite element.
  const Element& truncation() const { return trunc_; }

  /// Throws BeyondBound for u at or above the bound.
  void add_term(const ExponentVector& u, const FieldElement& c);
  /// Drops everything at or above the new bound (if it is lower).
  HahnSeries truncated(const ExponentVector& bound) const;

  friend bool operator==(const HahnSeries& a, const HahnSeries& b);

 private:
  PresentationPtr pres_;
  MonomialOrder order_;
  std::optional<ExponentVector> bound_;
  Element trunc_;
};

HahnSeries series_add(const HahnSeries& f, const HahnSeries& g);
HahnSeries series_sub(const HahnSeries& f, const HahnSeries& g);
/// Convolution; result exact below min(v(f) + B(g), v(g) + B(f)).
HahnSeries series_mul(const HahnSeries& f, const HahnSeries& g);

/// f = c x^m (1 + h) and f^{-1} = sum_k (-h)^k (c x^m)^{-1}, with the number of
/// terms chosen so that f f^{-1} = 1 below target. When v(h) never reaches the
/// target (its first key vanishes), at most max_terms terms are summed and the
/// returned bound records how far the result is exact.
/// Errors: ZeroSeries, UnknownLeadingTerm.
HahnSeries series_invert(const HahnSeries& f, const ExponentVector& target, std::size_t max_terms = 64);

/// f in m^i, decided on v(f) through cone powers.
bool m_power_membership(const HahnSeries& f, std::size_t i);

struct PowerFactorization {
  std::size_t power = 0;
  std::vector<ExponentVector> exponents;
  /// Product of the monomials x^{e_1}...x^{e_i} equals unit * x^{target}.
  FieldElement unit;
  bool verified = false;
};

/// i positive monomials whose product is a unit times x^g, multiplied back
/// and checked. Throws NotInCone, NoMinimalElement.
PowerFactorization factor_power(const ExponentVector& g, std::size_t i, const PresentationPtr& p,
                                const MonomialOrder& order);

enum class ConjectureVerdictKind { IntersectionTrivial, Witness, DenseRegime };
std::string to_string(ConjectureVerdictKind k);

struct ConjectureVerdict {
  ConjectureVerdictKind kind = ConjectureVerdictKind::IntersectionTrivial;
  std::optional<ExponentVector> min_positive;
  /// Least element i m0 of the i-th cone power, i = 1..depth.
  std::vector<ExponentVector> cone_minima;
  std::optional<ExponentVector> witness;
  std::vector<PowerFactorization> factorizations;
  bool all_verified = false;
  std::string note;
};

/// For n >= 2 with a least positive element, exhibits a monomial lying in
/// m^i for every i <= depth (so both intersections over i >= 1 and i > 1 are
/// nonzero). For n = 1 the intersection is trivial: v >= i m0 on m^i.
ConjectureVerdict conjecture_check(const MonomialOrder& order, std::size_t depth, const PresentationPtr& p);

}  // namespace skewpbw
