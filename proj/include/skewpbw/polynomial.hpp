#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewpbw/lattice.hpp"

namespace skewpbw {

/// Sparse multivariate polynomial over Q in a fixed number of parameters.
/// Monomials are exponent tuples; terms are kept with nonzero coefficients
/// only.
class Polynomial {
 public:
  using Monomial = std::vector<long>;
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, const Rational& c);

  static Polynomial variable(std::size_t nvars, std::size_t k);
  static Polynomial monomial(Monomial m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Lex-greatest term.
  const Terms::value_type& leading() const { return *terms_.rbegin(); }
  Rational constant_term() const;
  long degree_in(std::size_t k) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  /// Multiplies by t^m (m may have negative entries if every term stays
  /// nonnegative).
  Polynomial shifted(const Monomial& m) const;
  Polynomial pow(unsigned long k) const;

  /// Exact quotient a / b when b divides a, computed by lex leading-term
  /// division; nullopt otherwise.
  static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);
  /// Monic gcd of univariate polynomials (nvars == 1).
  static Polynomial univariate_gcd(Polynomial a, Polynomial b);

  /// Entrywise minimum exponent over all terms (empty polynomial -> zeros).
  Monomial min_exponents() const;

  /// t_k -> c_k t_k for every k.
  Polynomial substitute_scaling(const std::vector<Rational>& scales) const;
  Polynomial derivative(std::size_t k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// "2*t1^2 - t1 + 3/4", terms descending; "0" for zero.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  void check(const Polynomial& o) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace skewpbw
