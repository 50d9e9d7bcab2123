#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "skewpbw/exponents.hpp"
#include "skewpbw/presentation.hpp"

namespace skewpbw {

/// Element of a skew PBW extension in normal form: a finite map from
/// standard monomials x^u = x_1^{u_1}...x_n^{u_n} to nonzero left
/// coefficients.
class Element {
 public:
  using Terms = std::map<ExponentVector, FieldElement>;

  explicit Element(PresentationPtr p);
  static Element constant(PresentationPtr p, const FieldElement& c);
  static Element monomial(PresentationPtr p, const FieldElement& c, const ExponentVector& u);
  static Element generator(PresentationPtr p, std::size_t i, long power = 1);

  const PresentationPtr& presentation() const { return pres_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Support is {0} or empty.
  bool is_scalar() const;
  FieldElement coefficient(const ExponentVector& u) const;

  /// Adds c x^u, pruning a zero result.
  void add_term(const ExponentVector& u, const FieldElement& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;
  /// Ring product.
  friend Element operator*(const Element& a, const Element& b);
  /// c * f with c on the left.
  Element scaled(const FieldElement& c) const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  void check_exponent(const ExponentVector& u) const;
  void check_same(const Element& o) const;

  PresentationPtr pres_;
  Terms terms_;
};

Element add(const Element& f, const Element& g);
Element mul(const Element& f, const Element& g);
Element power(const Element& f, long k);

/// (lambda x^u)(mu x^v) in a quasi-commutative presentation, in closed form:
/// lambda sigma^u(mu) Q(u,v) x^{u+v}, where Q(u,v) collects the twisted
/// q-powers met while moving each block of x^v left across x^u.
Element monomial_product(const FieldElement& lambda, const ExponentVector& u, const FieldElement& mu,
                         const ExponentVector& v, const PresentationPtr& p);

/// Two-sided inverse of an invertible monomial c x^u (c a unit, u supported
/// on Laurent indices). Throws NotInvertible for non-monomials and non-unit
/// coefficients, IllegalInverse for generators beyond r.
Element invert_monomial(const Element& m);

struct Generator {
  std::size_t index = 0;
  int sign = 1;
};

using Letter = std::variant<FieldElement, Generator>;
using Word = std::vector<Letter>;

/// Word c x^u written letter by letter.
Word word_of(const FieldElement& c, const ExponentVector& u);

/// Reduces a word by applying the defining relations one adjacent swap at a
/// time, rightmost inversion first. Ground truth for mul.
Element normalize_word(const Word& w, const PresentationPtr& p);

struct DegreeData {
  /// nullopt encodes deg 0 = -infinity.
  std::optional<Integer> degree;
  /// The support, in storage order.
  std::vector<ExponentVector> exponents;
};

/// deg f = max |u| with |u| = sum |u_i|.
DegreeData degree_data(const Element& f);

/// Homogeneous component of top degree (the principal symbol), viewed in the
/// given presentation.
Element top_symbol(const Element& f, const PresentationPtr& target);

/// Product computed stage by stage through the iterated Ore form:
/// (a z_k^e)(b z_k^f) = a theta_k^e(b) z_k^{e+f}.
Element iterated_mul(const IteratedForm& form, const Element& f, const Element& g);

/// Image of an element under the embedding Z -> Q of coefficients.
Element extend_scalars(const Element& f, const PresentationPtr& target);

/// Checks associativity on all triples of generators, inverse generators and
/// parameters; throws RelationsInconsistent with the offending triple.
void check_overlaps(const PresentationPtr& p);

}  // namespace skewpbw
