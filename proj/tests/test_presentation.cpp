#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace skewpbw;
using namespace testing_support;

namespace {

Presentation plane_qt() {
  const Field K = Field::rational_functions({"t1"});
  return with_q(trivial_presentation(2, 0, K), 0, 1, K.parameter(0));
}

}  // namespace

TEST_CASE("validate examples") {
  const PresentationPtr plane = validate(plane_qt());
  CHECK(plane->flags.quasi_commutative);
  CHECK(plane->flags.bijective);

  Presentation bad = plane_qt();
  bad.q[1][0] = bad.field.parameter(0);
  try {
    (void)validate(bad);
    FAIL("expected QMatrixInvalid");
  } catch (const Error& e) {
    CHECK(e.kind() == "QMatrixInvalid");
    CHECK(e.message().find("q[2][1]") != std::string::npos);
  }

  const PresentationPtr weyl = weyl_a1().p;
  CHECK_FALSE(weyl->flags.quasi_commutative);
}

TEST_CASE("validate rejects malformed data") {
  const Field K = Field::rational_functions({"t1"});
  {
    Presentation p = trivial_presentation(2, 0, K);
    p.q[0][0] = K.from_integer(2);
    CHECK(error_kind([&] { (void)validate(p); }) == "QMatrixInvalid");
  }
  {
    Presentation p = trivial_presentation(2, 0, K);
    p.r = 3;
    CHECK(error_kind([&] { (void)validate(p); }) == "DimensionMismatch");
  }
  {
    Presentation p = trivial_presentation(1, 1, K);
    p.delta[0] = Derivation({K.one()});
    CHECK(error_kind([&] { (void)validate(p); }) == "LaurentRequiresQuasiCommutative");
  }
  {
    Presentation p = trivial_presentation(1, 0, K);
    p.delta[0] = Derivation({K.one()});
    p.sigma[0] = Automorphism({Rational(2)});
    CHECK(error_kind([&] { (void)validate(p); }) == "DeltaWithNontrivialSigma");
  }
  {
    Presentation p = trivial_presentation(2, 0, K);
    LowerTerm lt;
    lt.constant = K.one();
    lt.linear.assign(2, K.zero());
    p.lower_terms[{0, 1}] = lt;
    CHECK(error_kind([&] { (void)validate(p); }) == "LowerTermInvalid");
  }
  {
    // x2 x1 = x1 x2 + x3 with x3 x1 = 2 x1 x3 fails on the overlap x3 x2 x1.
    const Field Q = Field::rationals();
    Presentation p = trivial_presentation(3, 0, Q);
    p = with_q(p, 0, 2, Rational(2));
    LowerTerm lt;
    lt.constant = Q.zero();
    lt.linear = {Q.zero(), Q.zero(), Q.one()};
    p.lower_terms[{1, 0}] = lt;
    CHECK(error_kind([&] { (void)validate(p); }) == "RelationsInconsistent");
  }
}

TEST_CASE("validate is idempotent") {
  for (const auto& fam : all_families()) {
    const PresentationPtr again = validate(*fam.p);
    CHECK(*again == *fam.p);
    CHECK(again->flags.quasi_commutative == fam.p->flags.quasi_commutative);
    CHECK(again->flags.bijective == fam.p->flags.bijective);
  }
}

TEST_CASE("iterated form examples") {
  const PresentationPtr plane = validate(plane_qt());
  const IteratedForm f = iterated_form(plane);
  REQUIRE(f.stages.size() == 2);
  REQUIRE(f.stages[1].generator_scalars.size() == 1);
  CHECK(f.stages[1].generator_scalars[0] == plane->field.parameter(0));

  const PresentationPtr line = validate(trivial_presentation(1, 0, Field::rational_functions({"t1"})));
  const IteratedForm g = iterated_form(line);
  REQUIRE(g.stages.size() == 1);
  CHECK(g.stages[0].coefficient_action == line->sigma[0]);

  const Family space = quantum_space_f7();
  const IteratedForm h = iterated_form(space.p);
  REQUIRE(h.stages.size() == 3);
  CHECK(h.stages[2].generator_scalars[0] == space.p->q[0][2]);
  CHECK(h.stages[2].generator_scalars[1] == space.p->q[1][2]);

  CHECK(error_kind([] { (void)iterated_form(quantum_weyl().p); }) == "NotQuasiCommutative");
}

TEST_CASE("associated graded examples") {
  const PresentationPtr weyl = weyl_a1().p;
  const PresentationPtr gr = associated_graded(weyl);
  CHECK(gr->flags.quasi_commutative);
  CHECK(gr->delta[0].is_zero());
  CHECK(gr->sigma[0].is_identity());

  const PresentationPtr qweyl = quantum_weyl().p;
  const PresentationPtr qgr = associated_graded(qweyl);
  CHECK(qgr->lower_terms.empty());
  CHECK(qgr->q[0][1] == qweyl->q[0][1]);

  for (const auto& fam : all_families()) {
    const PresentationPtr once = associated_graded(fam.p);
    CHECK(*associated_graded(once) == *once);
    if (fam.p->flags.quasi_commutative) CHECK(*once == *fam.p);
  }
}

TEST_CASE("extend scalars") {
  const Field Z = Field::integers();
  const PresentationPtr zp = validate(with_q(trivial_presentation(2, 0, Z), 0, 1, Z.from_integer(-1)));
  const PresentationPtr qp = extend_scalars(zp);
  CHECK(qp->field == Field::rationals());
  CHECK(qp->q[0][1] == Field::rationals().from_integer(-1));

  const PresentationPtr line = extend_scalars(validate(trivial_presentation(1, 0, Z)));
  CHECK(line->field == Field::rationals());
  CHECK(line->n == 1);

  const Element f =
      Element::generator(zp, 0).scaled(Z.from_integer(2)) + Element::generator(zp, 1).scaled(Z.from_integer(3));
  const Element img = extend_scalars(f, qp);
  CHECK(img.coefficient({1, 0}) == Field::rationals().from_integer(2));
  CHECK(img.coefficient({0, 1}) == Field::rationals().from_integer(3));

  Random rnd(3);
  for (int k = 0; k < 300; ++k) {
    const Element a = rnd.element(zp, 4), b = rnd.element(zp, 4);
    CHECK(extend_scalars(a * b, qp) == extend_scalars(a, qp) * extend_scalars(b, qp));
    CHECK(extend_scalars(a + b, qp) == extend_scalars(a, qp) + extend_scalars(b, qp));
    CHECK(extend_scalars(a, qp).terms().size() == a.terms().size());
  }
  CHECK(error_kind([] { (void)extend_scalars(quantum_plane_q().p); }) == "MixedMode");
}
