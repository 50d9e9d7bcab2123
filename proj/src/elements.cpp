#include "skewpbw/elements.hpp"

#include <stdexcept>
#include <string>

#include "skewpbw/error.hpp"

namespace skewpbw {

using Terms = Element::Terms;

namespace {

void accumulate(Terms& acc, const ExponentVector& u, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(u, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

/// acc += c * t (c on the left).
void accumulate(Terms& acc, const Terms& t, const FieldElement& c) {
  for (const auto& [u, a] : t) accumulate(acc, u, c * a);
}

void accumulate(Terms& acc, const Terms& t) {
  for (const auto& [u, a] : t) accumulate(acc, u, a);
}

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b) {
  return a == b || *a == *b;
}

bool all_sigma_identity(const Presentation& p) {
  for (const auto& s : p.sigma) {
    if (!s.is_identity()) return false;
  }
  return true;
}

/// sigma^u = sigma_1^{u_1} ... sigma_n^{u_n}; the scalings commute.
FieldElement sigma_power(const Presentation& p, const ExponentVector& u, FieldElement a) {
  for (std::size_t i = 0; i < p.n; ++i) {
    if (u[i] != 0 && !p.sigma[i].is_identity()) a = p.sigma[i].apply(a, u.at(i));
  }
  return a;
}

/// Scalar P with (kappa x)^b = P x^b when x c = sigma(c) x:
/// prod_{t=0}^{b-1} sigma^t(kappa) for b >= 0, prod_{t=b}^{-1} sigma^t(kappa)^{-1} for b < 0.
FieldElement twisted_power(const Automorphism& sigma, const FieldElement& kappa, long b) {
  if (sigma.is_identity()) return kappa.pow(b);
  FieldElement r = kappa / kappa;
  if (b >= 0) {
    for (long t = 0; t < b; ++t) r *= sigma.apply(kappa, t);
  } else {
    for (long t = b; t < 0; ++t) r *= sigma.apply(kappa, t).inverse();
  }
  return r;
}

/// F with x_j^a x_i^b = F x_i^b x_j^a, i < j.
FieldElement crossing_scalar(const Presentation& p, std::size_t i, std::size_t j, long a, long b) {
  const FieldElement& c = p.q[i][j];
  if (p.sigma[i].is_identity() && p.sigma[j].is_identity()) return c.pow(a * b);
  const FieldElement kappa = twisted_power(p.sigma[j], c, a);
  return twisted_power(p.sigma[i], kappa, b);
}

/// Q(u, v) with x^u x^v = Q(u, v) x^{u+v}.
FieldElement transport_scalar(const Presentation& p, const ExponentVector& u, const ExponentVector& v) {
  const std::size_t n = p.n;
  const bool untwisted = all_sigma_identity(p);
  FieldElement total = p.field.one();
  ExponentVector prefix(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    const long b = v.at(i);
    for (std::size_t j = n; j-- > i + 1;) {
      if (u[j] == 0) continue;
      FieldElement f = crossing_scalar(p, i, j, u.at(j), b);
      if (!untwisted) {
        // Word in front of x_j^{u_j}: merged blocks k < i, then x_i^{u_i}..x_{j-1}^{u_{j-1}}.
        for (std::size_t k = 0; k < n; ++k) {
          if (k < i) {
            prefix[k] = u[k] + v[k];
          } else if (k < j) {
            prefix[k] = u[k];
          } else {
            prefix[k] = 0;
          }
        }
        f = sigma_power(p, prefix, f);
      }
      total *= f;
    }
  }
  return total;
}

void check_leading(const Terms& t, const ExponentVector& top, const char* what) {
  const Integer deg = top.total_degree();
  bool found = false;
  for (const auto& [u, c] : t) {
    if (u == top) {
      found = true;
    } else if (u.total_degree() >= deg) {
      throw std::logic_error(std::string(what) + ": lower part reaches degree " + u.total_degree().get_str());
    }
  }
  if (!found) throw std::logic_error(std::string(what) + ": leading coefficient vanished");
}

/// Rewriting engine for extensions with derivations or lower terms:
///   x^u r   = sigma^u(r) x^u + p_{u,r},
///   x^u x^v = c_{u,v} x^{u+v} + p_{u,v},
/// both obtained by moving one generator at a time.
class GeneralEngine {
 public:
  explicit GeneralEngine(const Presentation& p) : p_(p) {}

  Terms times_scalar(const ExponentVector& w, const FieldElement& r) {
    Terms out;
    if (r.is_zero()) return out;
    if (!p_.has_derivations() || w.is_zero()) {
      out.emplace(w, sigma_power(p_, w, r));
      return out;
    }
    std::size_t j = p_.n;
    while (w[j - 1] == 0) --j;
    --j;
    const ExponentVector rest = w - ExponentVector::unit(p_.n, j);
    out = terms_times_gen(times_scalar(rest, p_.sigma[j].apply(r)), j);
    if (!p_.delta[j].is_zero()) accumulate(out, times_scalar(rest, p_.delta[j].apply(r)));
    auto it = out.find(w);
    if (it == out.end() || !(it->second == sigma_power(p_, w, r))) {
      throw std::logic_error("x^u r: leading coefficient differs from sigma^u(r)");
    }
    check_leading(out, w, "x^u r");
    return out;
  }

  Terms times_gen(const ExponentVector& u, std::size_t i) {
    auto key = std::make_pair(u, i);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::size_t j = p_.n;
    while (j > i + 1 && u[j - 1] == 0) --j;
    Terms out;
    if (j == i + 1) {
      out.emplace(u + ExponentVector::unit(p_.n, i), p_.field.one());
    } else {
      --j;  // last generator of x^u, j > i
      const ExponentVector w = u - ExponentVector::unit(p_.n, j);
      // x^w (x_j x_i) = x^w (q x_i x_j + d0 + sum_k d_k x_k)
      out = terms_times_gen(terms_times_gen(times_scalar(w, p_.q[i][j]), i), j);
      if (const LowerTerm* lt = p_.lower_term(j, i)) {
        accumulate(out, times_scalar(w, lt->constant));
        for (std::size_t k = 0; k < p_.n; ++k) {
          if (!lt->linear[k].is_zero()) accumulate(out, terms_times_gen(times_scalar(w, lt->linear[k]), k));
        }
      }
      check_leading(out, u + ExponentVector::unit(p_.n, i), "x^u x_i");
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

  Terms times_mono(const ExponentVector& u, const ExponentVector& v) {
    std::size_t i = 0;
    while (i < p_.n && v[i] == 0) ++i;
    if (i == p_.n) return Terms{{u, p_.field.one()}};
    bool standard = true;
    for (std::size_t k = i + 1; k < p_.n; ++k) {
      if (u[k] != 0) standard = false;
    }
    if (standard) return Terms{{u + v, p_.field.one()}};
    Terms out = terms_times_mono(times_gen(u, i), v - ExponentVector::unit(p_.n, i));
    check_leading(out, u + v, "x^u x^v");
    return out;
  }

  Terms terms_times_gen(const Terms& e, std::size_t i) {
    Terms out;
    for (const auto& [s, c] : e) accumulate(out, times_gen(s, i), c);
    return out;
  }

  Terms terms_times_mono(const Terms& e, const ExponentVector& v) {
    Terms out;
    for (const auto& [s, c] : e) accumulate(out, times_mono(s, v), c);
    return out;
  }

 private:
  const Presentation& p_;
  std::map<std::pair<ExponentVector, std::size_t>, Terms> memo_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Element

Element::Element(PresentationPtr p) : pres_(std::move(p)) {
  if (!pres_) throw Error("InvalidArgument", "element without a presentation");
}

Element Element::constant(PresentationPtr p, const FieldElement& c) {
  Element e(std::move(p));
  e.pres_->field.require(c, "constant");
  e.add_term(ExponentVector(e.pres_->n), c);
  return e;
}

Element Element::monomial(PresentationPtr p, const FieldElement& c, const ExponentVector& u) {
  Element e(std::move(p));
  e.pres_->field.require(c, "coefficient");
  e.add_term(u, c);
  return e;
}

Element Element::generator(PresentationPtr p, std::size_t i, long power) {
  if (i >= p->n) throw Error("UnknownGenerator", "x" + std::to_string(i + 1) + " in a ring with n = " + std::to_string(p->n));
  ExponentVector u(p->n);
  u[i] = power;
  return monomial(p, p->field.one(), u);
}

bool Element::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

FieldElement Element::coefficient(const ExponentVector& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? pres_->field.zero() : it->second;
}

void Element::check_exponent(const ExponentVector& u) const {
  if (u.size() != pres_->n) {
    throw Error("DimensionMismatch", "exponent " + u.to_string() + " in a ring with n = " + std::to_string(pres_->n));
  }
  for (std::size_t i = pres_->r; i < pres_->n; ++i) {
    if (u[i] < 0) throw Error("IllegalInverse", "x" + std::to_string(i + 1) + " is not invertible");
  }
}

void Element::check_same(const Element& o) const {
  if (!same_presentation(pres_, o.pres_)) throw Error("PresentationMismatch", "elements of different rings");
}

void Element::add_term(const ExponentVector& u, const FieldElement& c) {
  check_exponent(u);
  accumulate(terms_, u, c);
}

Element& Element::operator+=(const Element& o) {
  check_same(o);
  accumulate(terms_, o.terms_);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_same(o);
  for (const auto& [u, c] : o.terms_) accumulate(terms_, u, -c);
  return *this;
}

Element Element::operator-() const {
  Element r(pres_);
  for (const auto& [u, c] : terms_) r.terms_.emplace(u, -c);
  return r;
}

Element Element::scaled(const FieldElement& c) const {
  Element r(pres_);
  accumulate(r.terms_, terms_, c);
  return r;
}

bool operator==(const Element& a, const Element& b) {
  return same_presentation(a.pres_, b.pres_) && a.terms_ == b.terms_;
}

Element operator*(const Element& a, const Element& b) {
  a.check_same(b);
  const Presentation& p = *a.pres_;
  Element out(a.pres_);
  if (a.is_zero() || b.is_zero()) return out;
  if (p.flags.quasi_commutative) {
    for (const auto& [u, lambda] : a.terms_) {
      for (const auto& [v, mu] : b.terms_) {
        accumulate(out.terms_, u + v, lambda * sigma_power(p, u, mu) * transport_scalar(p, u, v));
      }
    }
    return out;
  }
  GeneralEngine engine(p);
  for (const auto& [u, lambda] : a.terms_) {
    for (const auto& [v, mu] : b.terms_) {
      accumulate(out.terms_, engine.terms_times_mono(engine.times_scalar(u, mu), v), lambda);
    }
  }
  return out;
}

Element add(const Element& f, const Element& g) { return f + g; }
Element mul(const Element& f, const Element& g) { return f * g; }

Element power(const Element& f, long k) {
  if (k < 0) return power(invert_monomial(f), -k);
  Element result = Element::constant(f.presentation(), f.presentation()->field.one());
  Element base = f;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Element monomial_product(const FieldElement& lambda, const ExponentVector& u, const FieldElement& mu,
                         const ExponentVector& v, const PresentationPtr& p) {
  if (!p->flags.quasi_commutative) {
    throw Error("NotQuasiCommutative", "closed-form monomial products need delta = 0 and no lower terms");
  }
  // Legality of both factors before combining them.
  Element::monomial(p, lambda, u);
  Element::monomial(p, mu, v);
  Element out(p);
  out.add_term(u + v, lambda * sigma_power(*p, u, mu) * transport_scalar(*p, u, v));
  return out;
}

Element invert_monomial(const Element& m) {
  const Presentation& p = *m.presentation();
  if (m.terms().size() != 1) throw Error("NotInvertible", "only monomials are inverted in normal form");
  const auto& [u, c] = *m.terms().begin();
  if (!c.is_unit()) throw Error("NotInvertible", "coefficient is not a unit");
  for (std::size_t i = p.r; i < p.n; ++i) {
    if (u[i] != 0) throw Error("IllegalInverse", "x" + std::to_string(i + 1) + " is not invertible");
  }
  if (!p.flags.quasi_commutative) {
    // r = 0 here, so m is a constant.
    return Element::constant(m.presentation(), c.inverse());
  }
  const ExponentVector neg = -u;
  // (c x^u)(d x^{-u}) = sigma^u(d) s with s = c Q(u, -u).
  const FieldElement s = c * transport_scalar(p, u, neg);
  const FieldElement d = sigma_power(p, neg, s.inverse());
  return Element::monomial(m.presentation(), d, neg);
}

// ---------------------------------------------------------------------------
// Word oracle

Word word_of(const FieldElement& c, const ExponentVector& u) {
  Word w;
  w.emplace_back(c);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const long e = u.at(i);
    for (long k = 0; k < (e >= 0 ? e : -e); ++k) w.emplace_back(Generator{i, e >= 0 ? 1 : -1});
  }
  return w;
}

namespace {

struct Pending {
  FieldElement coef;
  Word word;
};

/// S with x_j^dj x_i^di = S x_i^di x_j^dj (i < j, single letters).
FieldElement letter_swap_scalar(const Presentation& p, std::size_t i, int di, std::size_t j, int dj) {
  const FieldElement& c = p.q[i][j];
  if (dj > 0 && di > 0) return c;
  if (dj < 0 && di > 0) return p.sigma[j].apply(c, -1).inverse();
  if (dj > 0 && di < 0) return p.sigma[i].apply(c, -1).inverse();
  return p.sigma[i].apply(p.sigma[j].apply(c, -1), -1);
}

Word splice(const Word& w, std::size_t k, std::initializer_list<Letter> middle) {
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), middle);
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
  return out;
}

}  // namespace

Element normalize_word(const Word& w, const PresentationPtr& pp) {
  const Presentation& p = *pp;
  for (const auto& letter : w) {
    if (const auto* g = std::get_if<Generator>(&letter)) {
      if (g->index >= p.n) throw Error("UnknownGenerator", "x" + std::to_string(g->index + 1));
      if (g->sign < 0 && !p.is_laurent(g->index)) {
        throw Error("IllegalInverse", "x" + std::to_string(g->index + 1) + " is not invertible");
      }
    } else {
      p.field.require(std::get<FieldElement>(letter), "word letter");
    }
  }

  Element result(pp);
  std::vector<Pending> stack;
  stack.push_back({p.field.one(), w});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.coef.is_zero()) continue;
    Word& word = cur.word;

    if (!word.empty()) {
      if (const auto* c = std::get_if<FieldElement>(&word.front())) {
        cur.coef = cur.coef * *c;
        word.erase(word.begin());
        stack.push_back(std::move(cur));
        continue;
      }
    }

    // Rightmost adjacent pair that is out of normal form.
    std::size_t k = word.size();
    for (std::size_t pos = word.size(); pos-- > 1;) {
      const Letter& a = word[pos - 1];
      const Letter& b = word[pos];
      if (std::holds_alternative<FieldElement>(b)) {
        k = pos - 1;
        break;
      }
      if (const auto* ga = std::get_if<Generator>(&a)) {
        const auto& gb = std::get<Generator>(b);
        if (ga->index > gb.index || (ga->index == gb.index && ga->sign != gb.sign)) {
          k = pos - 1;
          break;
        }
      }
    }
    if (k == word.size()) {
      ExponentVector u(p.n);
      for (const auto& letter : word) {
        const auto& g = std::get<Generator>(letter);
        u[g.index] += g.sign;
      }
      result.add_term(u, cur.coef);
      continue;
    }

    const Letter a = word[k];
    const Letter b = word[k + 1];
    if (const auto* cb = std::get_if<FieldElement>(&b)) {
      if (const auto* ca = std::get_if<FieldElement>(&a)) {
        stack.push_back({cur.coef, splice(word, k, {FieldElement(*ca * *cb)})});
        continue;
      }
      const auto& g = std::get<Generator>(a);
      // x_i r = sigma_i(r) x_i + delta_i(r);  x_i^{-1} r = sigma_i^{-1}(r) x_i^{-1}
      stack.push_back({cur.coef, splice(word, k, {p.sigma[g.index].apply(*cb, g.sign), g})});
      if (g.sign > 0 && !p.delta[g.index].is_zero()) {
        stack.push_back({cur.coef, splice(word, k, {p.delta[g.index].apply(*cb)})});
      }
      continue;
    }
    const auto& gj = std::get<Generator>(a);
    const auto& gi = std::get<Generator>(b);
    if (gj.index == gi.index) {
      stack.push_back({cur.coef, splice(word, k, {})});
      continue;
    }
    // gj.index > gi.index
    const FieldElement s = letter_swap_scalar(p, gi.index, gi.sign, gj.index, gj.sign);
    stack.push_back({cur.coef, splice(word, k, {s, gi, gj})});
    if (const LowerTerm* lt = p.lower_term(gj.index, gi.index)) {
      if (!lt->constant.is_zero()) stack.push_back({cur.coef, splice(word, k, {lt->constant})});
      for (std::size_t m = 0; m < p.n; ++m) {
        if (!lt->linear[m].is_zero()) {
          stack.push_back({cur.coef, splice(word, k, {lt->linear[m], Generator{m, 1}})});
        }
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Degrees and symbols

DegreeData degree_data(const Element& f) {
  DegreeData d;
  for (const auto& [u, c] : f.terms()) {
    const Integer deg = u.total_degree();
    if (!d.degree || deg > *d.degree) d.degree = deg;
    d.exponents.push_back(u);
  }
  return d;
}

Element top_symbol(const Element& f, const PresentationPtr& target) {
  Element out(target);
  const DegreeData d = degree_data(f);
  if (!d.degree) return out;
  for (const auto& [u, c] : f.terms()) {
    if (u.total_degree() == *d.degree) out.add_term(u, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Iterated Ore form

namespace {

class IteratedEvaluator {
 public:
  explicit IteratedEvaluator(const IteratedForm& form) : form_(form), p_(*form.presentation) {}

  /// Product in R[z_1;theta_1]...[z_k;theta_k]; operands only involve z_1..z_k.
  Terms mul(std::size_t k, const Terms& f, const Terms& g) {
    Terms out;
    if (f.empty() || g.empty()) return out;
    if (k == 0) {
      const ExponentVector zero(p_.n);
      accumulate(out, zero, f.begin()->second * g.begin()->second);
      return out;
    }
    const std::size_t var = k - 1;
    const auto fs = split(f, var);
    const auto gs = split(g, var);
    for (const auto& [e, fe] : fs) {
      for (const auto& [e2, ge] : gs) {
        const Terms twisted = theta_power(var, e, ge);
        for (const auto& [u, c] : mul(var, fe, twisted)) {
          ExponentVector w = u;
          w[var] = e + e2;
          accumulate(out, w, c);
        }
      }
    }
    return out;
  }

 private:
  std::map<long, Terms> split(const Terms& f, std::size_t var) const {
    std::map<long, Terms> out;
    for (const auto& [u, c] : f) {
      ExponentVector w = u;
      w[var] = 0;
      out[u.at(var)].emplace(std::move(w), c);
    }
    return out;
  }

  Terms theta_power(std::size_t stage, long e, Terms h) {
    for (long t = 0; t < (e >= 0 ? e : -e); ++t) h = theta(stage, h, e < 0);
    return h;
  }

  /// theta_stage (or its inverse) applied to an element of the previous stage.
  Terms theta(std::size_t stage, const Terms& h, bool inverse) {
    const IteratedStage& st = form_.stages[stage];
    Terms out;
    for (const auto& [u, c] : h) {
      Terms acc{{ExponentVector(p_.n), st.coefficient_action.apply(c, inverse ? -1 : 1)}};
      for (std::size_t i = 0; i < stage; ++i) {
        const long e = u.at(i);
        if (e == 0) continue;
        FieldElement kappa = st.generator_scalars[i];
        if (inverse) kappa = st.coefficient_action.apply(kappa, -1).inverse();
        Terms base;
        if (e > 0) {
          ExponentVector zi = ExponentVector::unit(p_.n, i);
          base.emplace(zi, kappa);
        } else {
          // (kappa z_i)^{-1} = z_i^{-1} kappa^{-1}
          ExponentVector zi = -ExponentVector::unit(p_.n, i);
          base = mul(stage, Terms{{zi, p_.field.one()}}, Terms{{ExponentVector(p_.n), kappa.inverse()}});
        }
        for (long t = 0; t < (e > 0 ? e : -e); ++t) acc = mul(stage, acc, base);
      }
      accumulate(out, acc);
    }
    return out;
  }

  const IteratedForm& form_;
  const Presentation& p_;
};

}  // namespace

Element iterated_mul(const IteratedForm& form, const Element& f, const Element& g) {
  if (!same_presentation(form.presentation, f.presentation()) || !same_presentation(f.presentation(), g.presentation())) {
    throw Error("PresentationMismatch", "iterated product over a different ring");
  }
  IteratedEvaluator ev(form);
  Element out(f.presentation());
  for (const auto& [u, c] : ev.mul(form.presentation->n, f.terms(), g.terms())) out.add_term(u, c);
  return out;
}

Element extend_scalars(const Element& f, const PresentationPtr& target) {
  const Presentation& src = *f.presentation();
  if (src.field.kind() != FieldKind::Integer || target->field.kind() != FieldKind::Rational || src.n != target->n ||
      src.r != target->r) {
    throw Error("MixedMode", "extend_scalars maps a ring over Z into its counterpart over Q");
  }
  Element out(target);
  for (const auto& [u, c] : f.terms()) out.add_term(u, Rational(std::get<Integer>(c.value())));
  return out;
}

// ---------------------------------------------------------------------------
// Overlaps

void check_overlaps(const PresentationPtr& p) {
  std::vector<std::pair<std::string, Element>> items;
  for (std::size_t i = 0; i < p->n; ++i) {
    items.emplace_back("x" + std::to_string(i + 1), Element::generator(p, i));
    if (p->is_laurent(i)) items.emplace_back("x" + std::to_string(i + 1) + "^-1", Element::generator(p, i, -1));
  }
  for (std::size_t k = 0; k < p->field.nparams(); ++k) {
    items.emplace_back(p->field.params()[k], Element::constant(p, p->field.parameter(k)));
  }
  for (const auto& [na, a] : items) {
    for (const auto& [nb, b] : items) {
      const Element ab = a * b;
      for (const auto& [nc, c] : items) {
        if (!((ab * c) == (a * (b * c)))) {
          throw Error("RelationsInconsistent", "(" + na + "*" + nb + ")*" + nc + " != " + na + "*(" + nb + "*" + nc + ")");
        }
      }
    }
  }
  // Inverses must really be inverses.
  for (std::size_t i = 0; i < p->r; ++i) {
    const Element one = Element::constant(p, p->field.one());
    if (!(Element::generator(p, i) * Element::generator(p, i, -1) == one) ||
        !(Element::generator(p, i, -1) * Element::generator(p, i) == one)) {
      throw Error("RelationsInconsistent", "x" + std::to_string(i + 1) + " * x" + std::to_string(i + 1) + "^-1 != 1");
    }
  }
}

}  // namespace skewpbw
