#include "skewpbw/polynomial.hpp"

#include <algorithm>

#include "skewpbw/error.hpp"

namespace skewpbw {

Polynomial::Polynomial(std::size_t nvars, const Rational& c) : nvars_(nvars) {
  if (c != 0) terms_.emplace(Monomial(nvars, 0), c);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t k) {
  Monomial m(nvars, 0);
  m.at(k) = 1;
  return monomial(std::move(m), 1);
}

Polynomial Polynomial::monomial(Monomial m, const Rational& c) {
  Polynomial p(m.size());
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](long e) { return e == 0; });
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

long Polynomial::degree_in(std::size_t k) const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[k]);
  return d;
}

void Polynomial::check(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw Error("MixedMode", "polynomials over different parameter sets");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c == 0) {
    terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check(b);
  Polynomial r(a.nvars_);
  Polynomial::Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t k = 0; k < a.nvars_; ++k) m[k] = ma[k] + mb[k];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(nvars_);
  Polynomial r = *this;
  for (auto& [m, x] : r.terms_) x *= c;
  return r;
}

Polynomial Polynomial::shifted(const Monomial& s) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    for (std::size_t k = 0; k < nvars_; ++k) {
      mm[k] += s[k];
      if (mm[k] < 0) throw Error("NegativeExponent", "polynomial shift leaves the polynomial ring");
    }
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial result(nvars_, 1);
  if (is_monomial()) {
    const auto& [m, c] = *terms_.begin();
    Monomial mm = m;
    for (auto& e : mm) e *= static_cast<long>(k);
    Rational cc;
    mpz_pow_ui(cc.get_num_mpz_t(), c.get_num_mpz_t(), k);
    mpz_pow_ui(cc.get_den_mpz_t(), c.get_den_mpz_t(), k);
    return monomial(std::move(mm), cc);
  }
  Polynomial base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
  a.check(b);
  if (b.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
  Polynomial rem = a;
  Polynomial quot(a.nvars_);
  const auto& [bm, bc] = b.leading();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    Monomial qm(a.nvars_);
    for (std::size_t k = 0; k < a.nvars_; ++k) {
      qm[k] = rm[k] - bm[k];
      if (qm[k] < 0) return std::nullopt;
    }
    Polynomial t = monomial(qm, rc / bc);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

Polynomial Polynomial::univariate_gcd(Polynomial a, Polynomial b) {
  if (a.nvars_ != 1 || b.nvars_ != 1) throw Error("Unsupported", "univariate gcd needs one parameter");
  while (!b.is_zero()) {
    // a mod b by leading-term elimination.
    const auto [bm, bc] = b.leading();
    while (!a.is_zero() && a.leading().first[0] >= bm[0]) {
      const auto [am, ac] = a.leading();
      a -= monomial({am[0] - bm[0]}, ac / bc) * b;
    }
    std::swap(a, b);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.leading().second);
}

Polynomial::Monomial Polynomial::min_exponents() const {
  Monomial m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t k = 0; k < nvars_; ++k) m[k] = first ? e[k] : std::min(m[k], e[k]);
    first = false;
  }
  return m;
}

Polynomial Polynomial::substitute_scaling(const std::vector<Rational>& scales) const {
  if (scales.size() != nvars_) throw Error("MixedMode", "scaling has wrong parameter count");
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    Rational f = c;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (m[k] == 0 || scales[k] == 1) continue;
      Rational p;
      const unsigned long e = static_cast<unsigned long>(m[k]);
      mpz_pow_ui(p.get_num_mpz_t(), scales[k].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), scales[k].get_den_mpz_t(), e);
      p.canonicalize();
      f *= p;
    }
    r.terms_.emplace(m, f);
  }
  return r;
}

Polynomial Polynomial::derivative(std::size_t k) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[k] == 0) continue;
    Monomial mm = m;
    --mm[k];
    r.add_term(mm, c * m[k]);
  }
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    std::string mono;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(k);
      if (m[k] != 1) mono += "^" + std::to_string(m[k]);
    }
    std::string term;
    if (mono.empty()) {
      term = mag.get_str();
    } else if (mag == 1) {
      term = mono;
    } else {
      term = mag.get_str() + "*" + mono;
    }
    if (first) {
      s = (c < 0 ? "-" : "") + term;
    } else {
      s += (c < 0 ? " - " : " + ") + term;
    }
    first = false;
  }
  return s;
}

}  // namespace skewpbw
