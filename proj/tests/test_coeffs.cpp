#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace skewpbw;
using namespace testing_support;

namespace {

std::vector<Field> fields() {
  return {Field::rationals(), Field::prime(7), Field::prime(101), Field::rational_functions({"t1"}),
          Field::rational_functions({"t1", "t2"}), Field::integers()};
}

FieldElement monomial(const Field& K, const Rational& c, const std::vector<long>& e) {
  FieldElement m = K.from_rational(c);
  for (std::size_t k = 0; k < e.size(); ++k) m = m * K.parameter(k).pow(e[k]);
  return m;
}

std::vector<std::vector<FieldElement>> q_matrix(const Field& K, std::size_t n,
                                                const std::vector<FieldElement>& upper) {
  std::vector<std::vector<FieldElement>> q(n, std::vector<FieldElement>(n, K.one()));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++idx) {
      q[i][j] = upper[idx];
      q[j][i] = upper[idx].inverse();
    }
  }
  return q;
}

}  // namespace

TEST_CASE("field arithmetic examples") {
  const Field Q = Field::rationals();
  CHECK(Q.from_rational(Rational(1, 2)) + Q.from_rational(Rational(1, 3)) == Q.from_rational(Rational(5, 6)));
  const Field F7 = Field::prime(7);
  CHECK((F7.from_integer(3) * F7.from_integer(5)).is_one());
  CHECK(F7.from_integer(-1) == F7.from_integer(6));
  const Field K = Field::rational_functions({"t1"});
  const FieldElement t = K.parameter(0);
  CHECK((t / (t + K.one()) * ((t + K.one()) / t)).is_one());
  CHECK(Q.from_rational(Rational(-4, 2)) == Q.from_integer(-2));
}

TEST_CASE("field mode errors") {
  const Field Z = Field::integers();
  CHECK((Z.from_integer(5) / Z.from_integer(-1)) == Z.from_integer(-5));
  CHECK(error_kind([&] { (void)(Z.from_integer(5) / Z.from_integer(2)); }) == "NotInvertible");
  CHECK(error_kind([&] { (void)Z.from_rational(Rational(1, 2)); }) == "NotIntegral");
  CHECK(error_kind([] { (void)Field::prime(7).from_rational(Rational(1, 7)); }) == "DivisionByZero");
  CHECK(error_kind([] { (void)Field::prime(8); }) == "InvalidField");
  CHECK(error_kind([] { (void)Field::rationals().zero().inverse(); }) == "DivisionByZero");
  CHECK(error_kind([] { (void)(Field::rationals().one() + Field::prime(7).one()); }) == "MixedMode");
  CHECK(error_kind([] { (void)Field::rational_functions({"t", "t"}); }) == "InvalidField");
}

TEST_CASE("field axioms on random triples") {
  for (const auto& K : fields()) {
    Random rnd(7);
    for (int k = 0; k < 300; ++k) {
      const FieldElement a = rnd.coefficient(K), b = rnd.coefficient(K), c = rnd.coefficient(K);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == K.zero());
      CHECK(a * K.one() == a);
      if (a.is_unit()) {
        CHECK((a * a.inverse()).is_one());
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("automorphism examples") {
  const Field K = Field::rational_functions({"t1"});
  const FieldElement t = K.parameter(0);
  const Automorphism s({Rational(2)});
  CHECK(s.apply(t * t) == K.from_integer(4) * t * t);
  CHECK(s.apply(t * t, 0) == t * t);
  CHECK(s.apply(K.from_integer(3)) == K.from_integer(3));
  CHECK(s.apply(s.apply(t), -1) == t);
  CHECK(s.apply(t / (t + K.one()), 2) == (K.from_integer(4) * t) / (K.from_integer(4) * t + K.one()));
  // Automorphisms act trivially outside Q(t).
  CHECK(Automorphism().apply(Field::prime(7).from_integer(3)) == Field::prime(7).from_integer(3));
}

TEST_CASE("automorphism coboundary of monomials") {
  const Field K = Field::rational_functions({"t1", "t2"});
  Random rnd(11);
  for (int k = 0; k < 200; ++k) {
    const Automorphism s({Rational(rnd.uniform(1, 4), rnd.uniform(1, 3)), Rational(-rnd.uniform(1, 3))});
    const std::vector<long> e{rnd.uniform(-3, 3), rnd.uniform(-3, 3)};
    const FieldElement a = monomial(K, Rational(rnd.uniform(1, 5)), e);
    const long power = rnd.uniform(0, 4);
    Rational n = 1;
    for (std::size_t j = 0; j < 2; ++j) {
      for (long step = 0; step < power * std::abs(e[j]); ++step) n *= e[j] > 0 ? s.scales()[j] : 1 / s.scales()[j];
    }
    const auto cob = s.coboundary(a, power);
    REQUIRE(cob.has_value());
    CHECK(*cob == K.from_rational(n));
    CHECK(s.apply(a, power) == a * *cob);
  }
  CHECK_FALSE(Automorphism({Rational(2), Rational(1)}).coboundary(K.parameter(0) + K.one(), 1).has_value());
}

TEST_CASE("scaling automorphisms commute") {
  const Field K = Field::rational_functions({"t1", "t2"});
  Random rnd(13);
  for (int k = 0; k < 100; ++k) {
    const Automorphism a({Rational(rnd.uniform(1, 5)), Rational(rnd.uniform(-3, -1))});
    const Automorphism b({Rational(1, rnd.uniform(1, 5)), Rational(rnd.uniform(1, 3))});
    const FieldElement x = rnd.coefficient(K);
    CHECK(a.apply(b.apply(x)) == b.apply(a.apply(x)));
  }
}

TEST_CASE("derivation examples") {
  const Field K = Field::rational_functions({"t1"});
  const FieldElement t = K.parameter(0);
  const Derivation d({K.one()});
  CHECK(d.apply(t * t) == K.from_integer(2) * t);
  CHECK(d.apply(K.from_integer(5)).is_zero());
  CHECK(d.apply(t.inverse()) == -(t * t).inverse());
  CHECK(Derivation().apply(t).is_zero());
}

TEST_CASE("Leibniz rule") {
  const Field K = Field::rational_functions({"t1", "t2"});
  const Derivation d({K.one(), K.parameter(0) * K.parameter(1)});
  Random rnd(19);
  for (int k = 0; k < 300; ++k) {
    const FieldElement a = rnd.coefficient(K), b = rnd.coefficient(K);
    CHECK(d.apply(a * b) == d.apply(a) * b + a * d.apply(b));
    CHECK(d.apply(a + b) == d.apply(a) + d.apply(b));
  }
}

TEST_CASE("genericity examples") {
  {
    const Field K = Field::rational_functions({"t1", "t2"});
    const auto t1 = K.parameter(0), t2 = K.parameter(1);
    const auto rep = genericity_check(K, q_matrix(K, 3, {t1, t2, t1 * t2}), std::vector<Automorphism>(3));
    CHECK_FALSE(rep.generic);
    CHECK(rep.rank == 2);
    REQUIRE(rep.dependencies.size() == 1);
    CHECK(rep.dependencies[0] == IntegerVector{1, 1, -1});
  }
  {
    const Field K = Field::rational_functions({"t1", "t2", "t3"});
    const auto rep = genericity_check(K, q_matrix(K, 3, {K.parameter(0), K.parameter(1), K.parameter(2)}),
                                      std::vector<Automorphism>(3));
    CHECK(rep.generic);
    CHECK(rep.dependencies.empty());
  }
  {
    const Field K = Field::rational_functions({"t1"});
    const auto rep = genericity_check(K, q_matrix(K, 2, {K.one()}), std::vector<Automorphism>(2));
    CHECK_FALSE(rep.generic);
    REQUIRE(rep.dependencies.size() == 1);
    CHECK(rep.dependencies[0] == IntegerVector{1});
  }
  const Field F7 = Field::prime(7);
  CHECK(error_kind([&] {
          (void)genericity_check(F7, q_matrix(F7, 2, {F7.from_integer(2)}), std::vector<Automorphism>(2));
        }) == "Unsupported");
}

TEST_CASE("genericity agrees with a brute-force dependency search") {
  Random rnd(23);
  for (int k = 0; k < 150; ++k) {
    const std::size_t params = static_cast<std::size_t>(rnd.uniform(1, 3));
    std::vector<std::string> names;
    for (std::size_t j = 0; j < params; ++j) names.push_back("t" + std::to_string(j + 1));
    const Field K = Field::rational_functions(names);
    std::vector<std::vector<long>> exps(3, std::vector<long>(params));
    std::vector<FieldElement> upper;
    for (auto& e : exps) {
      for (auto& x : e) x = rnd.uniform(-2, 2);
      upper.push_back(monomial(K, 1, e));
    }
    const auto rep = genericity_check(K, q_matrix(K, 3, upper), std::vector<Automorphism>(3));
    bool found = false;
    for (const auto& d : box_points(3, 3)) {
      if (d.is_zero()) continue;
      bool zero = true;
      for (std::size_t j = 0; j < params && zero; ++j) {
        long s = 0;
        for (std::size_t m = 0; m < 3; ++m) s += d.at(m) * exps[m][j];
        zero = s == 0;
      }
      if (zero) {
        found = true;
        break;
      }
    }
    if (found) CHECK_FALSE(rep.generic);
    if (!rep.generic) {
      REQUIRE_FALSE(rep.dependencies.empty());
      // Each reported relation multiplies the q's to 1.
      for (const auto& d : rep.dependencies) {
        FieldElement prod = K.one();
        for (std::size_t m = 0; m < 3; ++m) prod = prod * upper[m].pow(d[m].get_si());
        CHECK(prod.is_one());
      }
      if (!found) {
        bool large = false;
        for (const auto& x : rep.dependencies[0]) large = large || abs(x) > 3;
        CHECK(large);
      }
    }
  }
}
