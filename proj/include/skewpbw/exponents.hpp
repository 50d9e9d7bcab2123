#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "skewpbw/lattice.hpp"

namespace skewpbw {

/// A point of Z^n: the exponent u of a monomial x^u, or a value of the
/// leading-exponent valuation.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : entries_(n, 0) {}
  ExponentVector(std::initializer_list<long> entries);
  explicit ExponentVector(IntegerVector entries) : entries_(std::move(entries)) {}

  static ExponentVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  const IntegerVector& entries() const { return entries_; }

  /// Entry i as a machine integer; throws Overflow if it does not fit.
  long at(std::size_t i) const;

  bool is_zero() const;
  /// Sum of absolute values, the degree |u| of x^u.
  Integer total_degree() const;

  ExponentVector& operator+=(const ExponentVector& o);
  ExponentVector& operator-=(const ExponentVector& o);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  ExponentVector operator-() const;
  friend ExponentVector operator*(const Integer& k, const ExponentVector& v);

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.entries_ == b.entries_;
  }
  /// Entrywise lexicographic storage order. Monomial orders are separate
  /// objects; this one only keys containers.
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

  /// "(1,-2)"
  std::string to_string() const;

 private:
  IntegerVector entries_;
};

enum class OrderKind { Lex, Unimodular, General };

std::string to_string(OrderKind kind);

/// Total order on Z^n: g < h iff M g < M h lexicographically, for a rational
/// matrix M that is injective on Z^n.
class MonomialOrder {
 public:
  using RationalMatrix = std::vector<std::vector<Rational>>;

  static MonomialOrder lex(std::size_t n);
  /// Classifies the matrix and rejects it with a kernel witness when some
  /// nonzero lattice point would compare equal to 0.
  static MonomialOrder from_matrix(RationalMatrix m);

  std::size_t dimension() const { return dimension_; }
  OrderKind kind() const { return kind_; }
  const RationalMatrix& matrix() const { return matrix_; }

  std::strong_ordering compare(const ExponentVector& u, const ExponentVector& v) const;
  bool less(const ExponentVector& u, const ExponentVector& v) const { return compare(u, v) < 0; }
  bool positive(const ExponentVector& g) const;
  const ExponentVector& min(const ExponentVector& u, const ExponentVector& v) const {
    return less(v, u) ? v : u;
  }

  /// Least element of the positive cone, when one exists.
  const std::optional<ExponentVector>& min_positive() const { return min_positive_; }
  /// Index of the first key row on which the minimal positive element is
  /// nonzero; every positive g whose first nonzero key row comes earlier
  /// exceeds all multiples of the minimum.
  std::size_t min_positive_row() const { return min_positive_row_; }

  /// Row index of the first nonzero key of g (dimension_ rows max); rows()
  /// when g = 0.
  std::size_t leading_row(const ExponentVector& g) const;
  std::size_t rows() const { return int_rows_.size(); }
  /// Key of g under row k (integer-scaled).
  Integer key(const ExponentVector& g, std::size_t k) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.dimension_ == b.dimension_ && a.matrix_ == b.matrix_;
  }

  /// "lex" or "[[1,1],[0,1]]"
  std::string to_string() const;

 private:
  MonomialOrder() = default;
  void check_dimension(const ExponentVector& g) const;
  void compute_min_positive();

  std::size_t dimension_ = 0;
  OrderKind kind_ = OrderKind::Lex;
  RationalMatrix matrix_;
  IntegerMatrix int_rows_;
  std::optional<ExponentVector> min_positive_;
  std::size_t min_positive_row_ = 0;
};

/// g is a sum of i elements of the positive cone. With a minimal positive
/// element m0 this is g >= i*m0; for a dense cone it is g > 0.
bool cone_power_membership(const ExponentVector& g, const Integer& i, const MonomialOrder& order);

/// Witness for cone_power_membership: e_1 = g - (i-1) m0 and e_j = m0.
/// Throws NotInCone or NoMinimalElement.
std::vector<ExponentVector> factor_into_positives(const ExponentVector& g, std::size_t i,
                                                  const MonomialOrder& order);

}  // namespace skewpbw
