#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skewpbw/elements.hpp"
#include "skewpbw/exponents.hpp"

namespace skewpbw {

/// Element of Gamma u {inf}, Gamma = Z^n.
class Value {
 public:
  static Value infinity() { return Value(); }
  Value(ExponentVector g) : exponent_(std::move(g)) {}

  bool is_infinite() const { return !exponent_; }
  /// Throws InvalidArgument on inf.
  const ExponentVector& exponent() const;
  /// "inf" or "(a,b,...)".
  std::string to_string() const;

  friend Value operator+(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b) = default;

 private:
  Value() = default;
  std::optional<ExponentVector> exponent_;
};

/// inf is the top element.
std::strong_ordering compare(const Value& a, const Value& b, const MonomialOrder& order);
Value min(const Value& a, const Value& b, const MonomialOrder& order);

/// Least exponent of supp f under the order; inf for f = 0.
Value val(const Element& f, const MonomialOrder& order);

enum class ValuationClass { UnitRing, InW, InLambdaOnly, OutsideLambda, Zero };
std::string to_string(ValuationClass c);

/// UnitRing (v = 0), InW (v > 0), OutsideLambda (v < 0) or Zero. InLambdaOnly
/// is never returned for a valuation: Lambda is the disjoint union of its
/// units and W.
ValuationClass classify(const Element& f, const MonomialOrder& order);

/// Image in the residue field: coefficient at 0. Throws NegativeValuation.
FieldElement residue(const Element& f, const MonomialOrder& order);

struct ValuationComparison {
  bool holds = true;
  std::size_t elements_checked = 0;
  std::size_t pairs_checked = 0;
  /// First failing sample or pair.
  std::optional<std::string> counterexample;
};

/// Checks tau(v1(f)) = v2(f) on the samples, where v2(f) is the least image
/// tau(u), u in supp f, under order2, and that u <1 v implies tau u <=2 tau v
/// for all pairs of support exponents. Throws RankDeficient.
ValuationComparison compare_valuations(const MonomialOrder& order1, const MonomialOrder& order2,
                                       const IntegerMatrix& tau, const std::vector<Element>& samples);

/// True iff tau is invertible over Z. Throws NotSquare.
bool maximal_rank(const IntegerMatrix& tau);

struct PowerValueBound {
  bool hypothesis_holds = false;
  std::string regime;
  /// Least positive value; lambdas[i-1] = least value of a product of i positives.
  std::optional<ExponentVector> lambda1;
  std::vector<ExponentVector> lambdas;
  bool lower_bound_holds = false;
  /// For each value v in [0, max_value] (in units of lambda1): first i with
  /// v not in W^i.
  std::vector<std::pair<ExponentVector, std::size_t>> exclusions;
  bool exclusion_holds = false;
};

/// Rank-one Archimedean check: lambda_i >= i lambda_1 for i <= max_power and
/// every value v <= max_value * lambda_1 is excluded from W^i once
/// i lambda_1 > v. Only rank-one value groups satisfy the hypothesis; other
/// orders are reported with hypothesis_holds = false.
PowerValueBound power_value_bound(const MonomialOrder& order, std::size_t max_power, std::size_t max_value);

}  // namespace skewpbw
