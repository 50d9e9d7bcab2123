#include "skewpbw/completion.hpp"

#include <stdexcept>

#include "skewpbw/error.hpp"

namespace skewpbw {

namespace {

/// Least stored exponent, else the bound, else inf (exact zero).
Value lower_estimate(const HahnSeries& f) {
  const Value v = val(f.truncation(), f.order());
  if (!v.is_infinite()) return v;
  return f.bound() ? Value(*f.bound()) : Value::infinity();
}

Value as_value(const std::optional<ExponentVector>& b) { return b ? Value(*b) : Value::infinity(); }

std::optional<ExponentVector> as_bound(const Value& v) {
  if (v.is_infinite()) return std::nullopt;
  return v.exponent();
}

void check_compatible(const HahnSeries& f, const HahnSeries& g) {
  if (!(f.order() == g.order())) throw Error("OrderMismatch", "series under different orders");
  if (!(*f.presentation() == *g.presentation())) throw Error("PresentationMismatch", "series of different rings");
}

HahnSeries restrict_to(const Element& e, const MonomialOrder& order, const Value& bound) {
  return HahnSeries::from_element(e, order, as_bound(bound));
}

}  // namespace

HahnSeries::HahnSeries(PresentationPtr p, MonomialOrder order, std::optional<ExponentVector> bound)
    : pres_(p), order_(std::move(order)), bound_(std::move(bound)), trunc_(p) {
  if (order_.dimension() != pres_->n) {
    throw Error("DimensionMismatch", "order on Z^" + std::to_string(order_.dimension()) + " for a ring with n = " +
                                         std::to_string(pres_->n));
  }
  if (!pres_->flags.quasi_commutative) {
    throw Error("NotQuasiCommutative", "series live in the completion of a quasi-commutative ring");
  }
  if (bound_ && bound_->size() != pres_->n) throw Error("DimensionMismatch", "bound " + bound_->to_string());
}

HahnSeries HahnSeries::from_element(const Element& f, MonomialOrder order, std::optional<ExponentVector> bound) {
  HahnSeries s(f.presentation(), std::move(order), std::move(bound));
  for (const auto& [u, c] : f.terms()) {
    if (s.known(u)) s.trunc_.add_term(u, c);
  }
  return s;
}

bool HahnSeries::known(const ExponentVector& u) const { return !bound_ || order_.less(u, *bound_); }

FieldElement HahnSeries::coefficient(const ExponentVector& u) const {
  if (!known(u)) {
    throw Error("UnknownCoefficient", "coefficient at " + u.to_string() + " lies beyond the bound " + bound_->to_string());
  }
  return trunc_.coefficient(u);
}

Value HahnSeries::valuation() const {
  const Value v = val(trunc_, order_);
  if (v.is_infinite() && bound_) {
    throw Error("UnknownLeadingTerm", "no nonzero coefficient below the bound " + bound_->to_string());
  }
  return v;
}

void HahnSeries::add_term(const ExponentVector& u, const FieldElement& c) {
  if (!known(u)) throw Error("BeyondBound", u.to_string() + " is not below the bound " + bound_->to_string());
  trunc_.add_term(u, c);
}

HahnSeries HahnSeries::truncated(const ExponentVector& bound) const {
  const Value b = min(as_value(bound_), Value(bound), order_);
  return restrict_to(trunc_, order_, b);
}

bool operator==(const HahnSeries& a, const HahnSeries& b) {
  return a.order_ == b.order_ && a.bound_ == b.bound_ && a.trunc_ == b.trunc_;
}

HahnSeries series_add(const HahnSeries& f, const HahnSeries& g) {
  check_compatible(f, g);
  const Value b = min(as_value(f.bound()), as_value(g.bound()), f.order());
  return restrict_to(f.truncation() + g.truncation(), f.order(), b);
}

HahnSeries series_sub(const HahnSeries& f, const HahnSeries& g) {
  check_compatible(f, g);
  const Value b = min(as_value(f.bound()), as_value(g.bound()), f.order());
  return restrict_to(f.truncation() - g.truncation(), f.order(), b);
}

HahnSeries series_mul(const HahnSeries& f, const HahnSeries& g) {
  check_compatible(f, g);
  const MonomialOrder& order = f.order();
  const Value lf = lower_estimate(f);
  const Value lg = lower_estimate(g);
  Value b = min(lf + as_value(g.bound()), lg + as_value(f.bound()), order);
  if (lf.is_infinite() || lg.is_infinite()) b = Value::infinity();
  return restrict_to(f.truncation() * g.truncation(), order, b);
}

HahnSeries series_invert(const HahnSeries& f, const ExponentVector& target, std::size_t max_terms) {
  const MonomialOrder& order = f.order();
  const PresentationPtr& p = f.presentation();
  if (f.terms().empty()) {
    if (!f.bound()) throw Error("ZeroSeries", "0 has no inverse");
    throw Error("UnknownLeadingTerm", "no nonzero coefficient below the bound " + f.bound()->to_string());
  }
  if (max_terms == 0) throw Error("InvalidArgument", "max_terms must be positive");
  const ExponentVector m = f.valuation().exponent();
  const Element lead = Element::monomial(p, f.coefficient(m), m);
  const HahnSeries lead_inv = HahnSeries::from_element(invert_monomial(lead), order);

  // f = lead (1 + h)
  const HahnSeries rest = series_sub(f, HahnSeries::from_element(lead, order));
  const HahnSeries h = series_mul(lead_inv, rest);
  const Value vh = lower_estimate(h);

  std::size_t terms = 1;
  if (!vh.is_infinite()) {
    while (terms < max_terms && order.less(Integer(static_cast<unsigned long>(terms)) * vh.exponent(), target)) {
      ++terms;
    }
  }
  Value reliable = as_value(h.bound());
  if (!vh.is_infinite()) {
    reliable = min(reliable, Value(Integer(static_cast<unsigned long>(terms)) * vh.exponent()), order);
  }

  // S = sum_{k < terms} (-h)^k, exact below `reliable`.
  const Element one = Element::constant(p, p->field.one());
  HahnSeries neg_h = restrict_to(-h.truncation(), order, as_value(h.bound()));
  HahnSeries term = restrict_to(one, order, reliable);
  HahnSeries sum = term;
  for (std::size_t k = 1; k < terms; ++k) {
    term = series_mul(term, neg_h);
    term = restrict_to(term.truncation(), order, min(as_value(term.bound()), reliable, order));
    sum = series_add(sum, term);
  }
  sum = restrict_to(sum.truncation(), order, reliable);
  const HahnSeries inverse = series_mul(sum, lead_inv);

  const HahnSeries check = series_mul(f, inverse);
  const Value region = min(Value(target), as_value(check.bound()), order);
  for (const auto& [u, c] : check.terms()) {
    if (compare(Value(u), region, order) >= 0) continue;
    if (!(c == (u.is_zero() ? p->field.one() : p->field.zero()))) {
      throw std::logic_error("series inverse: f f^{-1} has coefficient at " + u.to_string());
    }
  }
  if (compare(Value(ExponentVector(p->n)), region, order) < 0 && !check.coefficient(ExponentVector(p->n)).is_one()) {
    throw std::logic_error("series inverse: f f^{-1} misses the constant 1");
  }
  return inverse;
}

bool m_power_membership(const HahnSeries& f, std::size_t i) {
  const Value v = f.valuation();
  if (v.is_infinite()) return true;
  return cone_power_membership(v.exponent(), Integer(static_cast<unsigned long>(i)), f.order());
}

PowerFactorization factor_power(const ExponentVector& g, std::size_t i, const PresentationPtr& p,
                                const MonomialOrder& order) {
  PowerFactorization out;
  out.power = i;
  out.exponents = factor_into_positives(g, i, order);
  Element product = Element::constant(p, p->field.one());
  for (const auto& e : out.exponents) product = product * Element::monomial(p, p->field.one(), e);
  out.unit = product.coefficient(g);
  out.verified = product.terms().size() == 1 && !out.unit.is_zero();
  for (const auto& e : out.exponents) {
    if (!order.positive(e)) out.verified = false;
  }
  return out;
}

std::string to_string(ConjectureVerdictKind k) {
  switch (k) {
    case ConjectureVerdictKind::IntersectionTrivial:
      return "intersection_trivial";
    case ConjectureVerdictKind::Witness:
      return "witness";
    case ConjectureVerdictKind::DenseRegime:
      return "dense_regime";
  }
  return "?";
}

namespace {

/// Integer solution of M u = e_1 for an integer matrix of determinant +-1.
std::optional<ExponentVector> preimage_of_first_unit(const MonomialOrder& order) {
  const std::size_t n = order.dimension();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = order.matrix()[r][c];
    a[r][n] = r == 0 ? 1 : 0;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational factor = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  ExponentVector u(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Rational x = a[r][n] / a[r][r];
    if (x.get_den() != 1) return std::nullopt;
    u[r] = x.get_num();
  }
  return u;
}

bool dominates_first_key(const ExponentVector& g, const MonomialOrder& order) {
  return order.positive(g) && order.leading_row(g) < order.min_positive_row();
}

std::optional<ExponentVector> find_witness(const MonomialOrder& order) {
  const std::size_t n = order.dimension();
  if (order.kind() != OrderKind::General) {
    if (auto u = preimage_of_first_unit(order); u && dominates_first_key(*u, order)) return u;
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (long s : {1L, -1L}) {
      ExponentVector e = ExponentVector::unit(n, j);
      if (s < 0) e = -e;
      if (dominates_first_key(e, order)) return e;
    }
  }
  // The first row is nonzero, so some small vector has a positive first key.
  for (long radius = 2; radius <= 8; ++radius) {
    ExponentVector g(n);
    std::vector<long> digits(n, -radius);
    while (true) {
      for (std::size_t k = 0; k < n; ++k) g[k] = digits[k];
      if (dominates_first_key(g, order)) return g;
      std::size_t k = 0;
      while (k < n && digits[k] == radius) digits[k++] = -radius;
      if (k == n) break;
      ++digits[k];
    }
  }
  return std::nullopt;
}

}  // namespace

ConjectureVerdict conjecture_check(const MonomialOrder& order, std::size_t depth, const PresentationPtr& p) {
  if (depth == 0) throw Error("InvalidArgument", "depth must be at least 1");
  if (order.dimension() != p->n) {
    throw Error("DimensionMismatch", "order on Z^" + std::to_string(order.dimension()) + " for a ring with n = " +
                                         std::to_string(p->n));
  }
  ConjectureVerdict v;
  v.min_positive = order.min_positive();
  if (!v.min_positive) {
    v.kind = ConjectureVerdictKind::DenseRegime;
    v.note = "no least positive element: nA = A for every n, so the cone powers do not shrink";
    return v;
  }
  const ExponentVector& m0 = *v.min_positive;
  v.all_verified = true;
  for (std::size_t i = 1; i <= depth; ++i) {
    const ExponentVector least = Integer(static_cast<unsigned long>(i)) * m0;
    v.cone_minima.push_back(least);
    if (!cone_power_membership(least, Integer(static_cast<unsigned long>(i)), order)) v.all_verified = false;
    if (i > 1 && cone_power_membership(least - m0, Integer(static_cast<unsigned long>(i)), order)) {
      v.all_verified = false;
    }
  }
  if (order.dimension() == 1) {
    v.kind = ConjectureVerdictKind::IntersectionTrivial;
    v.note = "v >= i m0 on m^i, so every element of finite value leaves m^i once i m0 exceeds it";
    return v;
  }
  v.kind = ConjectureVerdictKind::Witness;
  v.witness = find_witness(order);
  if (!v.witness) throw std::logic_error("no monomial dominating the first key was found");
  for (std::size_t i = 1; i <= depth; ++i) {
    v.factorizations.push_back(factor_power(*v.witness, i, p, order));
    if (!v.factorizations.back().verified) v.all_verified = false;
  }
  v.note = "the witness lies in m^i for 1 <= i <= " + std::to_string(depth) +
           ", so it is a nonzero element of both the intersection over i >= 1 and over i > 1";
  return v;
}

}  // namespace skewpbw
