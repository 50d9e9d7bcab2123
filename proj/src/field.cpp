#include "skewpbw/field.hpp"

#include <algorithm>

#include "skewpbw/error.hpp"

namespace skewpbw {

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(num_.nvars(), 1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars()) throw Error("MixedMode", "fraction over different parameter sets");
  if (den_.is_zero()) throw Error("DivisionByZero", "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  const std::size_t m = num_.nvars();
  if (num_.is_zero()) {
    den_ = Polynomial(m, 1);
    return;
  }
  // Common monomial content.
  auto a = num_.min_exponents();
  auto b = den_.min_exponents();
  Polynomial::Monomial shift(m);
  bool any = false;
  for (std::size_t k = 0; k < m; ++k) {
    shift[k] = -std::min(a[k], b[k]);
    any = any || shift[k] != 0;
  }
  if (any) {
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
  }
  if (!den_.is_monomial()) {
    if (m == 1) {
      Polynomial g = Polynomial::univariate_gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = *Polynomial::divide_exact(num_, g);
        den_ = *Polynomial::divide_exact(den_, g);
      }
    } else if (auto q = Polynomial::divide_exact(num_, den_)) {
      num_ = std::move(*q);
      den_ = Polynomial(m, 1);
    } else if (auto r = Polynomial::divide_exact(den_, num_)) {
      den_ = std::move(*r);
      num_ = Polynomial(m, 1);
    }
  }
  // Monic denominator.
  const Rational lc = den_.leading().second;
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

std::optional<std::pair<Rational, std::vector<long>>> RationalFunction::as_laurent_monomial() const {
  if (!num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
  const auto& [nm, nc] = num_.leading();
  const auto& [dm, dc] = den_.leading();
  std::vector<long> e(nm.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = nm[k] - dm[k];
  return std::make_pair(Rational(nc / dc), e);
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

[[noreturn]] void mixed() { throw Error("MixedMode", "operands from different coefficient domains"); }

const PrimeResidue& same_modulus(const PrimeResidue& a, const PrimeResidue& b) {
  if (a.modulus != b.modulus) mixed();
  return a;
}

template <class Op>
FieldElement combine(const FieldElement& a, const FieldElement& b, Op op) {
  if (a.value().index() != b.value().index()) mixed();
  return std::visit(
      [&](const auto& x) -> FieldElement {
        using T = std::decay_t<decltype(x)>;
        return op(x, std::get<T>(b.value()));
      },
      a.value());
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b, bool subtract) {
  if (a.nvars() != b.nvars()) mixed();
  // Shared denominator when possible; otherwise cross-multiply.
  if (a.denominator() == b.denominator()) {
    return RationalFunction(subtract ? a.numerator() - b.numerator() : a.numerator() + b.numerator(),
                            a.denominator());
  }
  Polynomial l = a.numerator() * b.denominator();
  Polynomial r = b.numerator() * a.denominator();
  return RationalFunction(subtract ? l - r : l + r, a.denominator() * b.denominator());
}

}  // namespace

bool FieldElement::is_zero() const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PrimeResidue>) {
          return x.value == 0;
        } else if constexpr (std::is_same_v<T, RationalFunction>) {
          return x.is_zero();
        } else {
          return x == 0;
        }
      },
      value_);
}

bool FieldElement::is_one() const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PrimeResidue>) {
          return x.value == 1 % x.modulus;
        } else if constexpr (std::is_same_v<T, RationalFunction>) {
          return x.numerator() == x.denominator();
        } else {
          return x == 1;
        }
      },
      value_);
}

bool FieldElement::is_unit() const {
  if (const auto* z = std::get_if<Integer>(&value_)) return abs(*z) == 1;
  return !is_zero();
}

FieldElement FieldElement::operator-() const {
  return std::visit(
      [](const auto& x) -> FieldElement {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PrimeResidue>) {
          return PrimeResidue{x.value == 0 ? 0 : x.modulus - x.value, x.modulus};
        } else if constexpr (std::is_same_v<T, RationalFunction>) {
          return RationalFunction(-x.numerator(), x.denominator());
        } else {
          return T(-x);
        }
      },
      value_);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return combine(a, b, [](const auto& x, const auto& y) -> FieldElement {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, PrimeResidue>) {
      same_modulus(x, y);
      std::uint64_t s = x.value + y.value;
      if (s >= x.modulus) s -= x.modulus;
      return PrimeResidue{s, x.modulus};
    } else if constexpr (std::is_same_v<T, RationalFunction>) {
      return rf_add(x, y, false);
    } else {
      return T(x + y);
    }
  });
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return combine(a, b, [](const auto& x, const auto& y) -> FieldElement {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, PrimeResidue>) {
      same_modulus(x, y);
      return PrimeResidue{x.value >= y.value ? x.value - y.value : x.value + x.modulus - y.value, x.modulus};
    } else if constexpr (std::is_same_v<T, RationalFunction>) {
      return rf_add(x, y, true);
    } else {
      return T(x - y);
    }
  });
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return combine(a, b, [](const auto& x, const auto& y) -> FieldElement {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, PrimeResidue>) {
      same_modulus(x, y);
      return PrimeResidue{mulmod(x.value, y.value, x.modulus), x.modulus};
    } else if constexpr (std::is_same_v<T, RationalFunction>) {
      if (x.nvars() != y.nvars()) mixed();
      if (x.is_zero() || y.is_zero()) return RationalFunction(Polynomial(x.nvars()));
      return RationalFunction(x.numerator() * y.numerator(), x.denominator() * y.denominator());
    } else {
      return T(x * y);
    }
  });
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
  return std::visit(
      [](const auto& x) -> FieldElement {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PrimeResidue>) {
          return PrimeResidue{powmod(x.value, x.modulus - 2, x.modulus), x.modulus};
        } else if constexpr (std::is_same_v<T, RationalFunction>) {
          return RationalFunction(x.denominator(), x.numerator());
        } else if constexpr (std::is_same_v<T, Integer>) {
          if (abs(x) != 1) throw Error("NotInvertible", x.get_str() + " is not a unit of Z");
          return x;
        } else {
          return Rational(1 / x);
        }
      },
      value_);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (a.value().index() != b.value().index()) mixed();
  return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.value_.index() != b.value_.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.value_);
        if constexpr (std::is_same_v<T, PrimeResidue>) {
          return x.value == y.value && x.modulus == y.modulus;
        } else {
          return x == y;
        }
      },
      a.value_);
}

FieldElement FieldElement::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  const unsigned long e = static_cast<unsigned long>(k);
  return std::visit(
      [e](const auto& x) -> FieldElement {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PrimeResidue>) {
          return PrimeResidue{powmod(x.value, e, x.modulus), x.modulus};
        } else if constexpr (std::is_same_v<T, RationalFunction>) {
          return RationalFunction(x.numerator().pow(e), x.denominator().pow(e));
        } else if constexpr (std::is_same_v<T, Integer>) {
          Integer r;
          mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
          return r;
        } else {
          Rational r;
          mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), e);
          mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), e);
          return r;
        }
      },
      value_);
}

// ---------------------------------------------------------------------------
// Field

Field Field::prime(std::uint64_t p) {
  bool is_prime = p >= 2;
  for (std::uint64_t d = 2; is_prime && d * d <= p; ++d) {
    if (p % d == 0) is_prime = false;
  }
  if (!is_prime) throw Error("InvalidField", std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 62)) throw Error("InvalidField", "prime too large");
  return Field(FieldKind::PrimeField, p, {});
}

Field Field::rational_functions(std::vector<std::string> params) {
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (params[i] == params[j]) throw Error("InvalidField", "duplicate parameter " + params[i]);
    }
  }
  return Field(FieldKind::RationalFunction, 0, std::move(params));
}

FieldElement Field::from_integer(const Integer& z) const {
  switch (kind_) {
    case FieldKind::Rational: return Rational(z);
    case FieldKind::Integer: return z;
    case FieldKind::PrimeField: {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
      return PrimeResidue{r.get_ui(), p_};
    }
    case FieldKind::RationalFunction: return RationalFunction(Polynomial(params_.size(), Rational(z)));
  }
  throw Error("InvalidField", "unknown field kind");
}

FieldElement Field::from_rational(const Rational& q) const {
  if (q.get_den() == 1) return from_integer(q.get_num());
  switch (kind_) {
    case FieldKind::Rational: return q;
    case FieldKind::Integer: throw Error("NotIntegral", q.get_str() + " is not an integer");
    case FieldKind::PrimeField: return from_integer(q.get_num()) / from_integer(q.get_den());
    case FieldKind::RationalFunction: return RationalFunction(Polynomial(params_.size(), q));
  }
  throw Error("InvalidField", "unknown field kind");
}

FieldElement Field::parameter(std::size_t k) const {
  if (kind_ != FieldKind::RationalFunction || k >= params_.size()) {
    throw Error("UnknownParameter", "parameter index " + std::to_string(k) + " in " + kind_name());
  }
  return RationalFunction(Polynomial::variable(params_.size(), k));
}

FieldElement Field::from_polynomial(const Polynomial& p) const {
  if (kind_ != FieldKind::RationalFunction || p.nvars() != params_.size()) {
    throw Error("MixedMode", "polynomial coefficient outside Q(t)");
  }
  return RationalFunction(p);
}

bool Field::contains(const FieldElement& a) const {
  if (a.kind() != kind_) return false;
  if (const auto* r = std::get_if<PrimeResidue>(&a.value())) return r->modulus == p_;
  if (const auto* f = std::get_if<RationalFunction>(&a.value())) return f->nvars() == params_.size();
  return true;
}

void Field::require(const FieldElement& a, const std::string& where) const {
  if (!contains(a)) throw Error("MixedMode", where + ": coefficient outside " + kind_name());
}

std::string Field::kind_name() const {
  switch (kind_) {
    case FieldKind::Rational: return "Q";
    case FieldKind::Integer: return "Z";
    case FieldKind::PrimeField: return "F" + std::to_string(p_);
    case FieldKind::RationalFunction: {
      std::string s = "Q(";
      for (std::size_t i = 0; i < params_.size(); ++i) s += (i ? "," : "") + params_[i];
      return s + ")";
    }
  }
  return "?";
}

std::string Field::format(const FieldElement& a) const {
  require(a, "format");
  return std::visit(
      [this](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PrimeResidue>) {
          return std::to_string(x.value);
        } else if constexpr (std::is_same_v<T, RationalFunction>) {
          if (x.is_polynomial()) {
            return x.numerator().scaled(1 / x.denominator().leading().second).to_string(params_);
          }
          // Parentheses only where the expression grammar needs them.
          const Polynomial& num = x.numerator();
          const Polynomial& den = x.denominator();
          std::string top = num.to_string(params_);
          if (num.terms().size() > 1) top = "(" + top + ")";
          std::string bottom = den.to_string(params_);
          const bool bare_power = den.is_monomial() && den.leading().second == 1 &&
                                  std::count_if(den.leading().first.begin(), den.leading().first.end(),
                                                [](long e) { return e != 0; }) == 1;
          if (!bare_power) bottom = "(" + bottom + ")";
          return top + "/" + bottom;
        } else {
          return x.get_str();
        }
      },
      a.value());
}

bool Field::needs_parens(const FieldElement& a) const {
  const auto* f = std::get_if<RationalFunction>(&a.value());
  if (!f) return false;
  return f->is_polynomial() && f->numerator().terms().size() > 1;
}

bool Field::is_negative(const FieldElement& a) const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PrimeResidue>) {
          return false;
        } else if constexpr (std::is_same_v<T, RationalFunction>) {
          return !x.is_zero() && x.numerator().leading().second < 0;
        } else {
          return x < 0;
        }
      },
      a.value());
}

// ---------------------------------------------------------------------------
// Automorphism / Derivation

Automorphism::Automorphism(std::vector<Rational> scales) : scales_(std::move(scales)) {
  for (auto& c : scales_) {
    c.canonicalize();
    if (c == 0) throw Error("InvalidAutomorphism", "scaling constant must be nonzero");
  }
}

bool Automorphism::is_identity() const {
  return std::all_of(scales_.begin(), scales_.end(), [](const Rational& c) { return c == 1; });
}

FieldElement Automorphism::apply(const FieldElement& a, long k) const {
  if (k == 0 || is_identity()) return a;
  const auto* f = std::get_if<RationalFunction>(&a.value());
  if (!f) return a;
  if (f->nvars() != scales_.size()) throw Error("MixedMode", "automorphism over a different parameter set");
  std::vector<Rational> powered;
  powered.reserve(scales_.size());
  for (const auto& c : scales_) {
    Rational base = k > 0 ? c : Rational(1 / c);
    const unsigned long e = static_cast<unsigned long>(k > 0 ? k : -k);
    Rational p;
    mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), e);
    p.canonicalize();
    powered.push_back(p);
  }
  return RationalFunction(f->numerator().substitute_scaling(powered), f->denominator().substitute_scaling(powered));
}

std::optional<FieldElement> Automorphism::coboundary(const FieldElement& a, long k) const {
  const auto* f = std::get_if<RationalFunction>(&a.value());
  if (!f) {
    if (a.is_zero()) return std::nullopt;
    return FieldElement(a / a);
  }
  auto mono = f->as_laurent_monomial();
  if (!mono) return std::nullopt;
  Rational n = 1;
  for (std::size_t j = 0; j < mono->second.size(); ++j) {
    const Rational& c = j < scales_.size() ? scales_[j] : Rational(1);
    const long e = k * mono->second[j];
    Rational base = e >= 0 ? c : Rational(1 / c);
    Rational p;
    const unsigned long ue = static_cast<unsigned long>(e >= 0 ? e : -e);
    mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), ue);
    mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), ue);
    p.canonicalize();
    n *= p;
  }
  return FieldElement(RationalFunction(Polynomial(f->nvars(), n)));
}

bool operator==(const Automorphism& a, const Automorphism& b) {
  if (a.is_identity() && b.is_identity()) return true;
  return a.scales_ == b.scales_;
}

Derivation::Derivation(std::vector<FieldElement> coefficients) : coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (c.kind() != FieldKind::RationalFunction) {
      throw Error("InvalidDerivation", "derivation coefficients must lie in Q(t)");
    }
  }
}

bool Derivation::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

FieldElement Derivation::apply(const FieldElement& a) const {
  const auto* f = std::get_if<RationalFunction>(&a.value());
  if (!f) {
    if (!is_zero()) throw Error("MixedMode", "derivation applied outside Q(t)");
    return a - a;
  }
  if (is_zero()) return RationalFunction(Polynomial(f->nvars()));
  if (coeffs_.size() != f->nvars()) throw Error("MixedMode", "derivation over a different parameter set");
  const Polynomial& n = f->numerator();
  const Polynomial& d = f->denominator();
  FieldElement result = RationalFunction(Polynomial(f->nvars()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    // (n/d)' = (n' d - n d') / d^2
    Polynomial top = n.derivative(k) * d - n * d.derivative(k);
    result += coeffs_[k] * FieldElement(RationalFunction(std::move(top), d * d));
  }
  return result;
}

bool operator==(const Derivation& a, const Derivation& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------
// Genericity

GenericityReport genericity_check(const Field& field, const std::vector<std::vector<FieldElement>>& q,
                                  const std::vector<Automorphism>& sigma) {
  for (const auto& s : sigma) {
    if (!s.is_identity()) {
      throw Error("Unsupported", "genericity is decided only for automorphisms trivial on parameters");
    }
  }
  GenericityReport rep;
  const std::size_t n = q.size();
  const std::size_t m = field.kind() == FieldKind::RationalFunction ? field.nparams() : 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const FieldElement& c = q[i].at(j);
      IntegerVector e(m, 0);
      if (const auto* f = std::get_if<RationalFunction>(&c.value())) {
        auto mono = f->as_laurent_monomial();
        if (!mono || mono->first != 1) {
          throw Error("Unsupported", "q[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                                         "] is not a Laurent monomial with scalar 1");
        }
        for (std::size_t k = 0; k < m; ++k) e[k] = mono->second[k];
      } else if (!c.is_one()) {
        throw Error("Unsupported", "q[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                                       "] is a constant other than 1");
      }
      rep.pairs.emplace_back(i, j);
      rep.exponents.push_back(std::move(e));
    }
  }
  // Zero-length vectors still count as dependent.
  if (m == 0) {
    for (std::size_t k = 0; k < rep.pairs.size(); ++k) {
      IntegerVector rel(rep.pairs.size(), 0);
      rel[k] = 1;
      rep.dependencies.push_back(std::move(rel));
    }
  } else {
    LatticeRank lr = integer_lattice_rank(rep.exponents);
    rep.rank = lr.rank;
    rep.dependencies = std::move(lr.kernel);
  }
  rep.generic = rep.dependencies.empty();
  return rep;
}

}  // namespace skewpbw
