#include "skewpbw/valuation.hpp"

#include <set>

#include "skewpbw/error.hpp"
#include "skewpbw/lattice.hpp"

namespace skewpbw {

const ExponentVector& Value::exponent() const {
  if (!exponent_) throw Error("InvalidArgument", "inf has no exponent");
  return *exponent_;
}

std::string Value::to_string() const { return exponent_ ? exponent_->to_string() : "inf"; }

Value operator+(const Value& a, const Value& b) {
  if (a.is_infinite() || b.is_infinite()) return Value::infinity();
  return Value(*a.exponent_ + *b.exponent_);
}

std::strong_ordering compare(const Value& a, const Value& b, const MonomialOrder& order) {
  if (a.is_infinite()) return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  return order.compare(a.exponent(), b.exponent());
}

Value min(const Value& a, const Value& b, const MonomialOrder& order) {
  return compare(b, a, order) < 0 ? b : a;
}

Value val(const Element& f, const MonomialOrder& order) {
  if (order.dimension() != f.presentation()->n) {
    throw Error("DimensionMismatch", "order on Z^" + std::to_string(order.dimension()) + " for a ring with n = " +
                                         std::to_string(f.presentation()->n));
  }
  const ExponentVector* best = nullptr;
  for (const auto& [u, c] : f.terms()) {
    if (!best || order.less(u, *best)) best = &u;
  }
  return best ? Value(*best) : Value::infinity();
}

std::string to_string(ValuationClass c) {
  switch (c) {
    case ValuationClass::UnitRing:
      return "unit_ring";
    case ValuationClass::InW:
      return "in_W";
    case ValuationClass::InLambdaOnly:
      return "in_Lambda_only";
    case ValuationClass::OutsideLambda:
      return "outside_Lambda";
    case ValuationClass::Zero:
      return "zero";
  }
  return "?";
}

ValuationClass classify(const Element& f, const MonomialOrder& order) {
  const Value v = val(f, order);
  if (v.is_infinite()) return ValuationClass::Zero;
  if (v.exponent().is_zero()) return ValuationClass::UnitRing;
  return order.positive(v.exponent()) ? ValuationClass::InW : ValuationClass::OutsideLambda;
}

FieldElement residue(const Element& f, const MonomialOrder& order) {
  if (classify(f, order) == ValuationClass::OutsideLambda) {
    throw Error("NegativeValuation", "v(f) = " + val(f, order).to_string() + " < 0");
  }
  return f.coefficient(ExponentVector(f.presentation()->n));
}

namespace {

ExponentVector apply_tau(const IntegerMatrix& tau, const ExponentVector& u) {
  IntegerVector out(tau.size());
  for (std::size_t r = 0; r < tau.size(); ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < u.size(); ++c) s += tau[r][c] * u[c];
    out[r] = s;
  }
  return ExponentVector(std::move(out));
}

}  // namespace

ValuationComparison compare_valuations(const MonomialOrder& order1, const MonomialOrder& order2,
                                       const IntegerMatrix& tau, const std::vector<Element>& samples) {
  const std::size_t n = order1.dimension();
  const std::size_t k = order2.dimension();
  if (tau.size() != k) throw Error("DimensionMismatch", "tau needs one row per coordinate of the target group");
  for (const auto& row : tau) {
    if (row.size() != n) throw Error("DimensionMismatch", "tau needs one column per coordinate of the source group");
  }
  if (integer_lattice_rank(tau).rank < k) {
    throw Error("RankDeficient", "tau does not have full row rank " + std::to_string(k));
  }

  ValuationComparison report;
  std::set<ExponentVector> exponents;
  for (const auto& f : samples) {
    ++report.elements_checked;
    const Value v1 = val(f, order1);
    std::optional<ExponentVector> v2;
    for (const auto& [u, c] : f.terms()) {
      exponents.insert(u);
      ExponentVector image = apply_tau(tau, u);
      if (!v2 || order2.less(image, *v2)) v2 = std::move(image);
    }
    if (v1.is_infinite()) continue;
    const ExponentVector mapped = apply_tau(tau, v1.exponent());
    if (!(mapped == *v2) && !report.counterexample) {
      report.holds = false;
      report.counterexample = "tau(v1) = " + mapped.to_string() + " but v2 = " + v2->to_string() + " for v1 = " +
                              v1.to_string();
    }
  }
  const std::vector<ExponentVector> list(exponents.begin(), exponents.end());
  for (std::size_t a = 0; a < list.size(); ++a) {
    for (std::size_t b = 0; b < list.size(); ++b) {
      if (!order1.less(list[a], list[b])) continue;
      ++report.pairs_checked;
      const ExponentVector ta = apply_tau(tau, list[a]);
      const ExponentVector tb = apply_tau(tau, list[b]);
      if (order2.less(tb, ta) && !report.counterexample) {
        report.holds = false;
        report.counterexample = list[a].to_string() + " < " + list[b].to_string() + " but tau reverses them: " +
                                ta.to_string() + " > " + tb.to_string();
      }
    }
  }
  return report;
}

bool maximal_rank(const IntegerMatrix& tau) {
  const Integer d = determinant(tau);
  return d == 1 || d == -1;
}

PowerValueBound power_value_bound(const MonomialOrder& order, std::size_t max_power, std::size_t max_value) {
  PowerValueBound report;
  if (order.dimension() != 1) {
    report.regime = "rank " + std::to_string(order.dimension()) +
                    ": positive elements with vanishing first key exist, so inf v(W) on the first row is 0";
    return report;
  }
  if (!order.min_positive()) {
    report.regime = "dense value set: no least positive value";
    return report;
  }
  report.hypothesis_holds = true;
  report.regime = "rank 1, discrete";
  const ExponentVector m0 = *order.min_positive();
  report.lambda1 = m0;

  // Least sums of i positives, enumerated over a window of candidates.
  const long window = static_cast<long>(max_power + max_value + 1);
  std::vector<ExponentVector> positives;
  for (long g = -window; g <= window; ++g) {
    ExponentVector e{g};
    if (order.positive(e)) positives.push_back(e);
  }
  std::set<ExponentVector> sums(positives.begin(), positives.end());
  report.lower_bound_holds = true;
  for (std::size_t i = 1; i <= max_power; ++i) {
    if (i > 1) {
      std::set<ExponentVector> next;
      for (const auto& s : sums) {
        for (const auto& p : positives) next.insert(s + p);
      }
      sums = std::move(next);
    }
    ExponentVector least = *sums.begin();
    for (const auto& s : sums) {
      if (order.less(s, least)) least = s;
    }
    report.lambdas.push_back(least);
    if (order.less(least, Integer(static_cast<long>(i)) * m0)) report.lower_bound_holds = false;
  }

  report.exclusion_holds = true;
  for (std::size_t v = 0; v <= max_value; ++v) {
    const ExponentVector value = Integer(static_cast<long>(v)) * m0;
    std::size_t first = 0;
    for (std::size_t i = 1; i <= max_value + 2; ++i) {
      const bool member = cone_power_membership(value, Integer(static_cast<long>(i)), order);
      const bool beyond = order.less(value, Integer(static_cast<long>(i)) * m0);
      if (member && beyond) report.exclusion_holds = false;
      if (!member && first == 0) first = i;
    }
    report.exclusions.emplace_back(value, first);
    if (first != v + 1) report.exclusion_holds = false;
  }
  return report;
}

}  // namespace skewpbw
