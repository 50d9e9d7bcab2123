#include "skewpbw/presentation.hpp"

#include <string>

#include "skewpbw/elements.hpp"
#include "skewpbw/error.hpp"

namespace skewpbw {

namespace {

std::string entry(std::size_t i, std::size_t j) {
  return "q[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
}

FieldElement map_integer(const FieldElement& a) {
  if (const auto* z = std::get_if<Integer>(&a.value())) return Rational(*z);
  throw Error("MixedMode", "extend_scalars expects coefficients in Z");
}

}  // namespace

bool LowerTerm::is_zero() const {
  if (!constant.is_zero()) return false;
  for (const auto& d : linear) {
    if (!d.is_zero()) return false;
  }
  return true;
}

bool Presentation::has_derivations() const {
  for (const auto& d : delta) {
    if (!d.is_zero()) return true;
  }
  return false;
}

const LowerTerm* Presentation::lower_term(std::size_t j, std::size_t i) const {
  auto it = lower_terms.find({j, i});
  return it == lower_terms.end() ? nullptr : &it->second;
}

bool operator==(const Presentation& a, const Presentation& b) {
  return a.n == b.n && a.r == b.r && a.field == b.field && a.q == b.q && a.sigma == b.sigma &&
         a.delta == b.delta && a.lower_terms == b.lower_terms;
}

Presentation trivial_presentation(std::size_t n, std::size_t r, Field field) {
  Presentation p;
  p.n = n;
  p.r = r;
  p.q.assign(n, std::vector<FieldElement>(n, field.one()));
  p.sigma.assign(n, Automorphism{});
  p.delta.assign(n, Derivation{});
  p.field = std::move(field);
  return p;
}

PresentationPtr validate(Presentation p) {
  const std::size_t n = p.n;
  const Field& K = p.field;
  if (n == 0) throw Error("DimensionMismatch", "a presentation needs at least one generator");
  if (p.r > n) throw Error("DimensionMismatch", "r = " + std::to_string(p.r) + " exceeds n = " + std::to_string(n));

  // Multiparameters.
  if (p.q.empty()) p.q.assign(n, std::vector<FieldElement>(n, K.one()));
  if (p.q.size() != n) throw Error("DimensionMismatch", "q must be an n x n matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (p.q[i].size() != n) throw Error("DimensionMismatch", "q must be an n x n matrix");
    for (std::size_t j = 0; j < n; ++j) K.require(p.q[i][j], entry(i, j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.q[i][i].is_one()) {
      throw Error("QMatrixInvalid", entry(i, i) + " = " + K.format(p.q[i][i]) + " but diagonal entries must be 1");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.q[i][j].is_zero() || !(p.q[i][j] * p.q[j][i]).is_one()) {
        throw Error("QMatrixInvalid", entry(j, i) + " = " + K.format(p.q[j][i]) + " is not the inverse of " +
                                          entry(i, j) + " = " + K.format(p.q[i][j]));
      }
    }
  }

  // Automorphisms.
  if (p.sigma.empty()) p.sigma.assign(n, Automorphism{});
  if (p.sigma.size() != n) throw Error("DimensionMismatch", "sigma needs one entry per generator");
  for (std::size_t i = 0; i < n; ++i) {
    if (p.sigma[i].is_identity()) {
      p.sigma[i] = Automorphism{};
      continue;
    }
    if (K.kind() != FieldKind::RationalFunction || p.sigma[i].scales().size() != K.nparams()) {
      throw Error("DimensionMismatch", "sigma_" + std::to_string(i + 1) + " must scale each parameter of " +
                                           K.kind_name());
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < K.nparams(); ++k) {
        const FieldElement t = K.parameter(k);
        if (!(p.sigma[i].apply(p.sigma[j].apply(t)) == p.sigma[j].apply(p.sigma[i].apply(t)))) {
          throw Error("SigmaNoncommuting", "sigma_" + std::to_string(i + 1) + " and sigma_" + std::to_string(j + 1) +
                                               " disagree on " + K.params()[k]);
        }
      }
    }
  }

  // Derivations.
  if (p.delta.empty()) p.delta.assign(n, Derivation{});
  if (p.delta.size() != n) throw Error("DimensionMismatch", "delta needs one entry per generator");
  for (std::size_t i = 0; i < n; ++i) {
    if (p.delta[i].is_zero()) {
      p.delta[i] = Derivation{};
      continue;
    }
    if (K.kind() != FieldKind::RationalFunction || p.delta[i].coefficients().size() != K.nparams()) {
      throw Error("DimensionMismatch", "delta_" + std::to_string(i + 1) + " needs one coefficient per parameter");
    }
    for (const auto& c : p.delta[i].coefficients()) K.require(c, "delta_" + std::to_string(i + 1));
    if (!p.sigma[i].is_identity()) {
      throw Error("DeltaWithNontrivialSigma",
                  "delta_" + std::to_string(i + 1) + " is nonzero while sigma_" + std::to_string(i + 1) +
                      " is not the identity");
    }
  }

  // Lower terms.
  for (auto it = p.lower_terms.begin(); it != p.lower_terms.end();) {
    auto [j, i] = it->first;
    LowerTerm& lt = it->second;
    const std::string where = "lower_terms[" + std::to_string(j + 1) + "," + std::to_string(i + 1) + "]";
    if (j >= n || i >= j) throw Error("LowerTermInvalid", where + " must satisfy n >= j > i >= 1");
    if (lt.linear.empty()) lt.linear.assign(n, K.zero());
    if (lt.linear.size() != n) throw Error("LowerTermInvalid", where + " has a wrong number of linear coefficients");
    K.require(lt.constant, where);
    for (const auto& d : lt.linear) K.require(d, where);
    if (lt.is_zero()) {
      it = p.lower_terms.erase(it);
    } else {
      ++it;
    }
  }

  p.flags.quasi_commutative = !p.has_derivations() && p.lower_terms.empty();
  // Scalings are always invertible and every q_ij has an inverse q_ji.
  p.flags.bijective = true;
  if (p.r > 0 && !p.flags.quasi_commutative) {
    throw Error("LaurentRequiresQuasiCommutative", "invertible generators need delta = 0 and no lower terms");
  }
  if (p.r > 0 && !p.flags.bijective) {
    throw Error("LaurentRequiresBijective", "invertible generators need bijective sigma and unit q");
  }
  p.validated = true;

  auto ptr = std::make_shared<const Presentation>(std::move(p));
  check_overlaps(ptr);
  return ptr;
}

IteratedForm iterated_form(const PresentationPtr& p) {
  if (!p->flags.quasi_commutative) {
    throw Error("NotQuasiCommutative", "the iterated Ore form needs delta = 0 and no lower terms");
  }
  IteratedForm form;
  form.presentation = p;
  for (std::size_t k = 0; k < p->n; ++k) {
    IteratedStage stage;
    stage.index = k;
    stage.coefficient_action = p->sigma[k];
    for (std::size_t i = 0; i < k; ++i) stage.generator_scalars.push_back(p->q[i][k]);
    form.stages.push_back(std::move(stage));
  }
  return form;
}

PresentationPtr associated_graded(const PresentationPtr& p) {
  if (p->flags.quasi_commutative) return p;
  Presentation g = *p;
  g.delta.assign(g.n, Derivation{});
  g.lower_terms.clear();
  g.validated = false;
  return validate(std::move(g));
}

PresentationPtr extend_scalars(const PresentationPtr& p) {
  if (p->field.kind() != FieldKind::Integer) throw Error("MixedMode", "extend_scalars expects a presentation over Z");
  Presentation e;
  e.n = p->n;
  e.r = p->r;
  e.field = Field::rationals();
  e.q.assign(p->n, {});
  for (std::size_t i = 0; i < p->n; ++i) {
    for (const auto& c : p->q[i]) e.q[i].push_back(map_integer(c));
  }
  e.sigma.assign(p->n, Automorphism{});
  e.delta.assign(p->n, Derivation{});
  for (const auto& [key, lt] : p->lower_terms) {
    LowerTerm m;
    m.constant = map_integer(lt.constant);
    for (const auto& d : lt.linear) m.linear.push_back(map_integer(d));
    e.lower_terms.emplace(key, std::move(m));
  }
  return validate(std::move(e));
}

}  // namespace skewpbw
