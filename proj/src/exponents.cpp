#include "skewpbw/exponents.hpp"

#include <sstream>

#include "skewpbw/error.hpp"

namespace skewpbw {

ExponentVector::ExponentVector(std::initializer_list<long> entries) {
  entries_.reserve(entries.size());
  for (long e : entries) entries_.emplace_back(e);
}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i) {
  ExponentVector v(n);
  v.entries_.at(i) = 1;
  return v;
}

long ExponentVector::at(std::size_t i) const {
  const Integer& e = entries_.at(i);
  if (!e.fits_slong_p()) throw Error("Overflow", "exponent " + e.get_str() + " exceeds machine range");
  return e.get_si();
}

bool ExponentVector::is_zero() const {
  for (const auto& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

Integer ExponentVector::total_degree() const {
  Integer d = 0;
  for (const auto& e : entries_) d += abs(e);
  return d;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
  if (o.size() != size()) throw Error("DimensionMismatch", "adding exponents of different lengths");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& o) {
  if (o.size() != size()) throw Error("DimensionMismatch", "subtracting exponents of different lengths");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

ExponentVector ExponentVector::operator-() const {
  ExponentVector r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

ExponentVector operator*(const Integer& k, const ExponentVector& v) {
  ExponentVector r = v;
  for (auto& e : r.entries_) e *= k;
  return r;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a.entries_[i], b.entries_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += entries_[i].get_str();
  }
  return s + ")";
}

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::Unimodular: return "unimodular";
    case OrderKind::General: return "general";
  }
  return "general";
}

MonomialOrder MonomialOrder::lex(std::size_t n) {
  if (n == 0) throw Error("DimensionMismatch", "order on Z^0");
  RationalMatrix id(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return from_matrix(std::move(id));
}

MonomialOrder MonomialOrder::from_matrix(RationalMatrix m) {
  if (m.empty() || m.front().empty()) throw Error("DimensionMismatch", "order matrix must be nonempty");
  const std::size_t n = m.front().size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error("DimensionMismatch", "order matrix rows have unequal lengths");
  }
  for (auto& row : m) {
    for (auto& x : row) x.canonicalize();
  }

  MonomialOrder order;
  order.dimension_ = n;
  order.matrix_ = std::move(m);
  order.int_rows_ = clear_denominators(order.matrix_);

  // Injective on Z^n iff the columns have no integral relation.
  const LatticeRank lr = integer_lattice_rank(transpose(order.int_rows_));
  if (!lr.kernel.empty()) {
    ExponentVector witness(lr.kernel.front());
    throw Error("NotInjective", "order matrix identifies " + witness.to_string() + " with 0");
  }

  bool identity = order.matrix_.size() == n;
  bool integral = order.matrix_.size() == n;
  for (std::size_t i = 0; i < order.matrix_.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = order.matrix_[i][j];
      if (x != (i == j ? 1 : 0)) identity = false;
      if (x.get_den() != 1) integral = false;
    }
  }
  if (identity) {
    order.kind_ = OrderKind::Lex;
  } else if (integral && abs(determinant(order.int_rows_)) == 1) {
    order.kind_ = OrderKind::Unimodular;
  } else {
    order.kind_ = OrderKind::General;
  }
  order.compute_min_positive();
  return order;
}

// Walks the flag Z^n = L_0 > L_1 > ... where L_{k+1} is the kernel of row k
// on L_k. Rational rows take discrete values on a lattice, so the last
// nontrivial L_k has rank one and its positive generator is the minimum.
void MonomialOrder::compute_min_positive() {
  std::vector<ExponentVector> basis;
  for (std::size_t i = 0; i < dimension_; ++i) basis.push_back(ExponentVector::unit(dimension_, i));

  for (std::size_t k = 0; k < int_rows_.size(); ++k) {
    IntegerMatrix values;
    bool all_zero = true;
    for (const auto& b : basis) {
      Integer v = key(b, k);
      if (v != 0) all_zero = false;
      values.push_back({v});
    }
    if (all_zero) continue;
    const LatticeRank lr = integer_lattice_rank(values);
    if (lr.kernel.empty()) {
      ExponentVector m0 = basis.front();
      if (key(m0, k) < 0) m0 = -m0;
      min_positive_ = std::move(m0);
      min_positive_row_ = k;
      return;
    }
    std::vector<ExponentVector> next;
    for (const auto& rel : lr.kernel) {
      ExponentVector v(dimension_);
      for (std::size_t i = 0; i < rel.size(); ++i) v += rel[i] * basis[i];
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  // Unreachable for injective rational matrices; a dense cone has no minimum.
  min_positive_.reset();
}

void MonomialOrder::check_dimension(const ExponentVector& g) const {
  if (g.size() != dimension_) {
    throw Error("DimensionMismatch", "exponent " + g.to_string() + " compared under an order on Z^" +
                                         std::to_string(dimension_));
  }
}

Integer MonomialOrder::key(const ExponentVector& g, std::size_t k) const {
  check_dimension(g);
  Integer s = 0;
  const auto& row = int_rows_.at(k);
  for (std::size_t j = 0; j < dimension_; ++j) {
    if (row[j] != 0 && g[j] != 0) s += row[j] * g[j];
  }
  return s;
}

std::size_t MonomialOrder::leading_row(const ExponentVector& g) const {
  for (std::size_t k = 0; k < int_rows_.size(); ++k) {
    if (key(g, k) != 0) return k;
  }
  return int_rows_.size();
}

std::strong_ordering MonomialOrder::compare(const ExponentVector& u, const ExponentVector& v) const {
  check_dimension(u);
  check_dimension(v);
  if (kind_ == OrderKind::Lex) {
    for (std::size_t i = 0; i < dimension_; ++i) {
      const int c = cmp(u[i], v[i]);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }
  const ExponentVector d = u - v;
  for (std::size_t k = 0; k < int_rows_.size(); ++k) {
    const int s = sgn(key(d, k));
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool MonomialOrder::positive(const ExponentVector& g) const {
  return compare(g, ExponentVector(dimension_)) > 0;
}

std::string MonomialOrder::to_string() const {
  if (kind_ == OrderKind::Lex) return "lex";
  std::string s = "[";
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < dimension_; ++j) {
      if (j) s += ",";
      s += matrix_[i][j].get_str();
    }
    s += "]";
  }
  return s + "]";
}

bool cone_power_membership(const ExponentVector& g, const Integer& i, const MonomialOrder& order) {
  if (i < 1) throw Error("InvalidArgument", "cone power index must be positive");
  const auto& m0 = order.min_positive();
  if (!m0) return order.positive(g);
  return order.compare(g, i * *m0) >= 0;
}

std::vector<ExponentVector> factor_into_positives(const ExponentVector& g, std::size_t i,
                                                  const MonomialOrder& order) {
  if (i == 0) throw Error("InvalidArgument", "cone power index must be positive");
  const auto& m0 = order.min_positive();
  if (!m0) throw Error("NoMinimalElement", "positive cone of " + order.to_string() + " has no least element");
  if (!cone_power_membership(g, Integer(static_cast<unsigned long>(i)), order)) {
    throw Error("NotInCone", g.to_string() + " is not a sum of " + std::to_string(i) + " positive elements");
  }
  std::vector<ExponentVector> parts;
  parts.reserve(i);
  parts.push_back(g - Integer(static_cast<unsigned long>(i - 1)) * *m0);
  for (std::size_t j = 1; j < i; ++j) parts.push_back(*m0);
  return parts;
}

}  // namespace skewpbw
