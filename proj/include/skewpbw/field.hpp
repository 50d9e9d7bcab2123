#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skewpbw/polynomial.hpp"

namespace skewpbw {

struct PrimeResidue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 2;
};

/// Fraction of polynomials over Q. Kept unreduced in general (monomial and
/// rational content are stripped, exact divisibility and the univariate gcd
/// are used when available); equality is decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// c * t^e with e possibly negative; nullopt if not a Laurent monomial.
  std::optional<std::pair<Rational, std::vector<long>>> as_laurent_monomial() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

enum class FieldKind { Rational, PrimeField, RationalFunction, Integer };

/// Exact coefficient. The alternative in use must agree between operands.
class FieldElement {
 public:
  using Value = std::variant<Rational, PrimeResidue, RationalFunction, Integer>;

  FieldElement() : value_(Rational(0)) {}
  FieldElement(Rational q) : value_(std::move(q)) { std::get<Rational>(value_).canonicalize(); }  // NOLINT
  FieldElement(PrimeResidue r) : value_(r) {}         // NOLINT
  FieldElement(RationalFunction f) : value_(std::move(f)) {}  // NOLINT
  FieldElement(Integer z) : value_(std::move(z)) {}   // NOLINT

  const Value& value() const { return value_; }
  FieldKind kind() const { return static_cast<FieldKind>(value_.index()); }

  bool is_zero() const;
  bool is_one() const;
  /// Units of the coefficient domain: nonzero in a field, +-1 in Z.
  bool is_unit() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  /// Field division; in Z only division by a unit is defined.
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  FieldElement pow(long k) const;

 private:
  Value value_;
};

/// The coefficient domain of a presentation: Q, F_p, Q(params) or Z.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rational, 0, {}); }
  static Field prime(std::uint64_t p);
  static Field rational_functions(std::vector<std::string> params);
  static Field integers() { return Field(FieldKind::Integer, 0, {}); }

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  const std::vector<std::string>& params() const { return params_; }
  std::size_t nparams() const { return params_.size(); }

  FieldElement zero() const { return from_integer(0); }
  FieldElement one() const { return from_integer(1); }
  FieldElement from_integer(const Integer& z) const;
  /// Throws NotIntegral in Z mode for non-integers, DivisionByZero in F_p
  /// when p divides the denominator.
  FieldElement from_rational(const Rational& q) const;
  FieldElement parameter(std::size_t k) const;
  FieldElement from_polynomial(const Polynomial& p) const;

  bool contains(const FieldElement& a) const;
  void require(const FieldElement& a, const std::string& where) const;

  /// Exact printing; rational functions as "num/den", parenthesized where the
  /// expression grammar needs it.
  std::string format(const FieldElement& a) const;
  /// True when the printed form must be parenthesized as a factor.
  bool needs_parens(const FieldElement& a) const;
  /// Printed form starts with a minus sign (so sums can print " - ").
  bool is_negative(const FieldElement& a) const;

  std::string kind_name() const;
  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.params_ == b.params_;
  }

 private:
  Field(FieldKind kind, std::uint64_t p, std::vector<std::string> params)
      : kind_(kind), p_(p), params_(std::move(params)) {}

  FieldKind kind_;
  std::uint64_t p_;
  std::vector<std::string> params_;
};

/// Automorphism of the coefficients acting by t_k -> c_k t_k on parameters
/// and trivially on constants.
class Automorphism {
 public:
  Automorphism() = default;
  explicit Automorphism(std::vector<Rational> scales);

  bool is_identity() const;
  const std::vector<Rational>& scales() const { return scales_; }

  /// sigma^k(a) for any integer k.
  FieldElement apply(const FieldElement& a, long k = 1) const;
  /// For a Laurent monomial a = c t^e, the element n = prod c_j^(k e_j) with
  /// sigma^k(a) = a n; nullopt when a is not a monomial.
  std::optional<FieldElement> coboundary(const FieldElement& a, long k) const;

  friend bool operator==(const Automorphism& a, const Automorphism& b);

 private:
  std::vector<Rational> scales_;
};

/// delta = sum_k a_k d/dt_k on Q(t); the zero map elsewhere.
class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(std::vector<FieldElement> coefficients);

  bool is_zero() const;
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  FieldElement apply(const FieldElement& a) const;

  friend bool operator==(const Derivation& a, const Derivation& b);

 private:
  std::vector<FieldElement> coeffs_;
};

struct GenericityReport {
  bool generic = false;
  std::size_t rank = 0;
  /// Index pairs (i, j), i < j, in the order used for the exponent list.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  IntegerMatrix exponents;
  /// Integral relations among the exponent vectors of the q_ij.
  IntegerMatrix dependencies;
};

/// Decides independence of the multiparameters q_ij (i < j) modulo the
/// coboundary subgroup. Supported case: every q_ij is a Laurent monomial with
/// scalar 1 and every sigma is trivial on parameters; otherwise Unsupported.
GenericityReport genericity_check(const Field& field, const std::vector<std::vector<FieldElement>>& q,
                                  const std::vector<Automorphism>& sigma);

}  // namespace skewpbw
