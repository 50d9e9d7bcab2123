#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewpbw/print.hpp"
#include "support.hpp"

using namespace skewpbw;
using namespace testing_support;

namespace {

PresentationPtr commutative_torus() { return validate(trivial_presentation(2, 2, Field::rationals())); }

Element x(const PresentationPtr& p, std::size_t i, long e = 1) { return Element::generator(p, i, e); }

Element one(const PresentationPtr& p) { return Element::constant(p, p->field.one()); }

HahnSeries series(const Element& f, std::optional<ExponentVector> bound = std::nullopt) {
  return HahnSeries::from_element(f, MonomialOrder::lex(f.presentation()->n), std::move(bound));
}

/// Coefficients agree at every exponent below `bound` that either side stores.
bool agree_below(const HahnSeries& a, const HahnSeries& b, const ExponentVector& bound) {
  const MonomialOrder& order = a.order();
  for (const auto* s : {&a, &b}) {
    for (const auto& [u, c] : s->terms()) {
      if (!order.less(u, bound)) continue;
      if (!(a.coefficient(u) == b.coefficient(u))) return false;
    }
  }
  return true;
}

const ExponentVector& lower(const MonomialOrder& order, const std::optional<ExponentVector>& a,
                            const std::optional<ExponentVector>& b, const ExponentVector& fallback) {
  if (a && b) return order.min(*a, *b);
  if (a) return *a;
  if (b) return *b;
  return fallback;
}

}  // namespace

TEST_CASE("series product examples") {
  const PresentationPtr p = commutative_torus();
  const HahnSeries prod = series_mul(series(one(p) + x(p, 0)), series(one(p) - x(p, 0)));
  CHECK(prod.truncation() == one(p) - x(p, 0, 2));
  CHECK_FALSE(prod.bound().has_value());

  const HahnSeries f = series(one(p) + x(p, 1), ExponentVector{2, 0});
  const HahnSeries g = series(one(p) - x(p, 0), ExponentVector{2, 0});
  const HahnSeries fg = series_mul(f, g);
  REQUIRE(fg.bound().has_value());
  CHECK(*fg.bound() == ExponentVector{2, 0});

  // A leading value (0,1) on one side shifts the other side's bound.
  const HahnSeries h = series(x(p, 1) + x(p, 0), ExponentVector{3, 0});
  CHECK(*series_mul(h, g).bound() == ExponentVector{2, 1});
}

TEST_CASE("series access and errors") {
  const PresentationPtr p = commutative_torus();
  HahnSeries f = series(one(p) + x(p, 0, 3), ExponentVector{2, 0});
  CHECK(f.terms().size() == 1);
  CHECK(f.known({1, 5}));
  CHECK_FALSE(f.known({2, 0}));
  CHECK(f.coefficient({1, 0}).is_zero());
  CHECK(error_kind([&] { (void)f.coefficient({2, 0}); }) == "UnknownCoefficient");
  CHECK(error_kind([&] { f.add_term({3, 0}, p->field.one()); }) == "BeyondBound");
  f.add_term({1, 0}, p->field.one());
  CHECK(f.coefficient({1, 0}).is_one());
  CHECK(f.truncated({1, 0}).terms().size() == 1);

  const HahnSeries unknown = series(x(p, 0, 3), ExponentVector{2, 0});
  CHECK(error_kind([&] { (void)unknown.valuation(); }) == "UnknownLeadingTerm");
  CHECK(error_kind([&] { (void)series_invert(unknown, {1, 0}); }) == "UnknownLeadingTerm");
  CHECK(error_kind([&] { (void)series_invert(series(Element(p)), {1, 0}); }) == "ZeroSeries");
  CHECK(series(Element(p)).valuation().is_infinite());

  const HahnSeries other = HahnSeries::from_element(one(p), MonomialOrder::from_matrix({{1, 1}, {0, 1}}));
  CHECK(error_kind([&] { (void)series_mul(f, other); }) == "OrderMismatch");
  CHECK(error_kind([&] { (void)series_add(f, series(one(quantum_torus_q().p))); }) == "PresentationMismatch");
}

TEST_CASE("series inversion examples") {
  const PresentationPtr p = commutative_torus();
  const HahnSeries geo = series_invert(series(one(p) - x(p, 0)), {3, 0});
  CHECK(geo.truncation() == one(p) + x(p, 0) + x(p, 0, 2));
  REQUIRE(geo.bound().has_value());
  CHECK(*geo.bound() == ExponentVector{3, 0});
  CHECK(format_series(geo) == "1 + x1 + x1^2 + O(>= (3,0))");

  const HahnSeries inv = series_invert(series(x(p, 0)), {3, 0});
  CHECK(inv.truncation() == x(p, 0, -1));
  CHECK_FALSE(inv.bound().has_value());

  // v(x2 + x1) = (0,1); h = x1 x2^-1 has first key 1.
  const HahnSeries f = series(x(p, 1) + x(p, 0));
  const HahnSeries g = series_invert(f, {3, 0});
  const HahnSeries check = series_mul(f, g);
  REQUIRE(check.bound().has_value());
  CHECK_FALSE(MonomialOrder::lex(2).less(*check.bound(), ExponentVector{3, 0}));
  CHECK(agree_below(check, series(one(p)), {3, 0}));
}

TEST_CASE("inversion with a vanishing first key reports how far it is exact") {
  const PresentationPtr p = commutative_torus();
  // h = x2 has first key 0: no number of terms reaches (1,0).
  const HahnSeries f = series(one(p) + x(p, 1));
  const HahnSeries g = series_invert(f, {1, 0}, 8);
  REQUIRE(g.bound().has_value());
  CHECK(*g.bound() == ExponentVector{0, 8});
  const HahnSeries check = series_mul(f, g);
  CHECK(agree_below(check, series(one(p)), *g.bound()));
}

TEST_CASE("inversion contract on random series") {
  for (const auto& fam : {skew_torus_qt(), quantum_torus_f7(), quantum_torus_q()}) {
    const std::size_t n = fam.p->n;
    const auto lex = MonomialOrder::lex(n);
    ExponentVector target(n);
    target[0] = 3;
    Random rnd(83);
    for (int k = 0; k < 40; ++k) {
      ExponentVector m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = rnd.uniform(-2, 2);
      Element f = Element::monomial(fam.p, rnd.nonzero_coefficient(fam.p->field), m);
      for (long t = rnd.uniform(1, 3); t > 0; --t) {
        ExponentVector d(n);
        d[0] = rnd.uniform(1, 2);
        for (std::size_t i = 1; i < n; ++i) d[i] = rnd.uniform(-3, 3);
        f.add_term(m + d, rnd.nonzero_coefficient(fam.p->field));
      }
      const HahnSeries fs = HahnSeries::from_element(f, lex);
      const HahnSeries check = series_mul(fs, series_invert(fs, target));
      CHECK_MESSAGE(agree_below(check, HahnSeries::from_element(one(fam.p), lex), target), format_element(f));
      if (check.bound()) CHECK_FALSE(lex.less(*check.bound(), target));
    }
  }
}

TEST_CASE("series arithmetic is associative and distributive where known") {
  const PresentationPtr p = skew_torus_qt().p;
  const auto lex = MonomialOrder::lex(2);
  Random rnd(89);
  const ExponentVector far{100, 0};
  for (int k = 0; k < 100; ++k) {
    std::vector<HahnSeries> s;
    for (int j = 0; j < 3; ++j) {
      std::optional<ExponentVector> bound;
      if (rnd.uniform(0, 1)) bound = ExponentVector{rnd.uniform(2, 5), rnd.uniform(-2, 2)};
      s.push_back(HahnSeries::from_element(rnd.element(p, 4), lex, bound));
    }
    const HahnSeries left = series_mul(series_mul(s[0], s[1]), s[2]);
    const HahnSeries right = series_mul(s[0], series_mul(s[1], s[2]));
    CHECK(agree_below(left, right, lower(lex, left.bound(), right.bound(), far)));
    const HahnSeries d1 = series_mul(s[0], series_add(s[1], s[2]));
    const HahnSeries d2 = series_add(series_mul(s[0], s[1]), series_mul(s[0], s[2]));
    CHECK(agree_below(d1, d2, lower(lex, d1.bound(), d2.bound(), far)));
    // Exact parts agree with element arithmetic.
    if (!s[0].bound() && !s[1].bound()) {
      CHECK(series_mul(s[0], s[1]).truncation() == s[0].truncation() * s[1].truncation());
    }
  }
}

TEST_CASE("m-power membership examples") {
  const PresentationPtr p = commutative_torus();
  for (std::size_t i = 1; i <= 30; ++i) CHECK(m_power_membership(series(x(p, 0)), i));
  CHECK_FALSE(m_power_membership(series(one(p) + x(p, 0)), 1));
  CHECK(m_power_membership(series(x(p, 1, 2)), 2));
  CHECK_FALSE(m_power_membership(series(x(p, 1, 2)), 3));
}

TEST_CASE("membership is monotone and witnessed by products") {
  const PresentationPtr p = skew_torus_qt().p;
  const std::vector<MonomialOrder> orders{MonomialOrder::lex(2), MonomialOrder::from_matrix({{1, 1}, {0, 1}}),
                                          MonomialOrder::from_matrix({{2, 3}, {0, 1}})};
  for (const auto& order : orders) {
    Random rnd(97);
    for (int k = 0; k < 100; ++k) {
      const Element f = rnd.nonzero_element(p, 5);
      const HahnSeries fs = HahnSeries::from_element(f, order);
      for (std::size_t i = 1; i <= 6; ++i) {
        const bool member = m_power_membership(fs, i + 1);
        if (member) CHECK(m_power_membership(fs, i));
        if (!m_power_membership(fs, i)) continue;
        const ExponentVector v = fs.valuation().exponent();
        const PowerFactorization fac = factor_power(v, i, p, order);
        CHECK(fac.verified);
        REQUIRE(fac.exponents.size() == i);
        Element prod = one(p);
        for (const auto& e : fac.exponents) {
          CHECK(order.positive(e));
          prod = prod * Element::monomial(p, p->field.one(), e);
        }
        CHECK(prod == Element::monomial(p, fac.unit, v));
      }
    }
  }
}

TEST_CASE("conjecture check examples") {
  const Field K = Field::rational_functions({"q"});
  Presentation torus = trivial_presentation(2, 2, K);
  torus = with_q(torus, 0, 1, K.parameter(0));
  const PresentationPtr p = validate(torus);

  const ConjectureVerdict lex = conjecture_check(MonomialOrder::lex(2), 100, p);
  CHECK(lex.kind == ConjectureVerdictKind::Witness);
  CHECK(*lex.witness == ExponentVector{1, 0});
  CHECK(lex.all_verified);
  REQUIRE(lex.factorizations.size() == 100);
  for (long i = 1; i <= 100; ++i) {
    const auto& fac = lex.factorizations[i - 1];
    CHECK(fac.exponents.front() == ExponentVector{1, -(i - 1)});
    for (std::size_t j = 1; j < fac.exponents.size(); ++j) CHECK(fac.exponents[j] == ExponentVector{0, 1});
    CHECK(lex.cone_minima[i - 1] == ExponentVector{0, i});
  }

  const PresentationPtr line = validate(trivial_presentation(1, 1, Field::rationals()));
  const ConjectureVerdict one_dim = conjecture_check(MonomialOrder::lex(1), 100, line);
  CHECK(one_dim.kind == ConjectureVerdictKind::IntersectionTrivial);
  CHECK_FALSE(one_dim.witness.has_value());

  const ConjectureVerdict shear = conjecture_check(MonomialOrder::from_matrix({{1, 1}, {0, 1}}), 50, p);
  CHECK(shear.kind == ConjectureVerdictKind::Witness);
  CHECK(*shear.witness == ExponentVector{1, 0});
  CHECK(shear.all_verified);

  const ConjectureVerdict weighted = conjecture_check(MonomialOrder::from_matrix({{2, 3}, {0, 1}}), 20, p);
  CHECK(weighted.kind == ConjectureVerdictKind::Witness);
  CHECK(weighted.all_verified);
  const MonomialOrder w = MonomialOrder::from_matrix({{2, 3}, {0, 1}});
  for (std::size_t i = 1; i <= 20; ++i) {
    CHECK(cone_power_membership(*weighted.witness, Integer(static_cast<unsigned long>(i)), w));
  }
}

TEST_CASE("the witness does not depend on the depth") {
  const PresentationPtr p = quantum_torus_q().p;
  std::optional<ExponentVector> first;
  for (std::size_t depth : {1, 5, 20, 60}) {
    const ConjectureVerdict v = conjecture_check(MonomialOrder::lex(2), depth, p);
    REQUIRE(v.witness.has_value());
    if (!first) first = v.witness;
    CHECK(*v.witness == *first);
    CHECK(v.factorizations.size() == depth);
  }
}
