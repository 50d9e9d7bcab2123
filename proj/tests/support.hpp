#pragma once

// Shared fixtures for the unit and acceptance tests: presentation families,
// seeded random generators and brute-force oracles.

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "skewpbw/completion.hpp"
#include "skewpbw/elements.hpp"
#include "skewpbw/error.hpp"
#include "skewpbw/presentation.hpp"

namespace testing_support {

using namespace skewpbw;

/// Kind tag of the Error thrown by f, or "" when nothing is thrown.
inline std::string error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

struct Family {
  std::string name;
  PresentationPtr p;
};

inline Presentation with_q(Presentation p, std::size_t i, std::size_t j, const FieldElement& c) {
  p.q[i][j] = c;
  p.q[j][i] = c.inverse();
  return p;
}

inline Family quantum_plane_q() {
  const Field K = Field::rationals();
  Presentation p = trivial_presentation(2, 0, K);
  p = with_q(p, 0, 1, Rational(3, 2));
  return {"quantum plane over Q", validate(p)};
}

inline Family quantum_torus_q() {
  const Field K = Field::rationals();
  Presentation p = trivial_presentation(2, 2, K);
  p = with_q(p, 0, 1, Rational(-2, 3));
  return {"quantum torus over Q", validate(p)};
}

inline Family quantum_plane_qt() {
  const Field K = Field::rational_functions({"q"});
  Presentation p = trivial_presentation(2, 0, K);
  p = with_q(p, 0, 1, K.parameter(0));
  return {"quantum plane over Q(q)", validate(p)};
}

inline Family quantum_space_f7() {
  const Field K = Field::prime(7);
  Presentation p = trivial_presentation(3, 0, K);
  p = with_q(p, 0, 1, K.from_integer(2));
  p = with_q(p, 0, 2, K.from_integer(3));
  p = with_q(p, 1, 2, K.from_integer(5));
  return {"quantum space over F7", validate(p)};
}

inline Family quantum_torus_f7() {
  const Field K = Field::prime(7);
  Presentation p = trivial_presentation(3, 3, K);
  p = with_q(p, 0, 1, K.from_integer(2));
  p = with_q(p, 0, 2, K.from_integer(3));
  p = with_q(p, 1, 2, K.from_integer(5));
  return {"quantum torus over F7", validate(p)};
}

/// q12 = t1 with sigma_1: t1 -> 2 t1, sigma_2: t1 -> -t1.
inline Family skew_torus_qt() {
  const Field K = Field::rational_functions({"t1"});
  Presentation p = trivial_presentation(2, 2, K);
  p = with_q(p, 0, 1, K.parameter(0));
  p.sigma[0] = Automorphism({Rational(2)});
  p.sigma[1] = Automorphism({Rational(-1)});
  return {"skew quantum torus over Q(t1)", validate(p)};
}

/// n = 3, r = 1 over Q(t1,t2); the q's live in t1, the sigmas scale t2.
inline Family skew_space_qt() {
  const Field K = Field::rational_functions({"t1", "t2"});
  const FieldElement t1 = K.parameter(0);
  Presentation p = trivial_presentation(3, 1, K);
  p = with_q(p, 0, 1, t1);
  p = with_q(p, 0, 2, t1 * t1);
  p = with_q(p, 1, 2, t1.inverse());
  p.sigma[0] = Automorphism({Rational(1), Rational(2)});
  p.sigma[1] = Automorphism({Rational(1), Rational(3)});
  p.sigma[2] = Automorphism({Rational(1), Rational(1, 2)});
  return {"mixed skew quantum space over Q(t1,t2)", validate(p)};
}

inline Family quantum_space4_q() {
  const Field K = Field::rationals();
  Presentation p = trivial_presentation(4, 2, K);
  p = with_q(p, 0, 1, Rational(2));
  p = with_q(p, 0, 2, Rational(-1));
  p = with_q(p, 0, 3, Rational(1, 3));
  p = with_q(p, 1, 2, Rational(5, 2));
  p = with_q(p, 1, 3, Rational(-3));
  p = with_q(p, 2, 3, Rational(7));
  return {"quantum space n=4, r=2 over Q", validate(p)};
}

/// x2 x1 = q x1 x2 + 1.
inline Family quantum_weyl() {
  const Field K = Field::rational_functions({"q"});
  Presentation p = trivial_presentation(2, 0, K);
  p = with_q(p, 0, 1, K.parameter(0));
  LowerTerm lt;
  lt.constant = K.one();
  p.lower_terms[{1, 0}] = lt;
  return {"quantum Weyl algebra", validate(p)};
}

/// x t = t x + 1.
inline Family weyl_a1() {
  const Field K = Field::rational_functions({"t"});
  Presentation p = trivial_presentation(1, 0, K);
  p.delta[0] = Derivation({K.one()});
  return {"Weyl algebra A1", validate(p)};
}

/// x2 x1 = x1 x2 + x3 with x3 central.
inline Family heisenberg() {
  const Field K = Field::rationals();
  Presentation p = trivial_presentation(3, 0, K);
  LowerTerm lt;
  lt.constant = K.zero();
  lt.linear = {K.zero(), K.zero(), K.one()};
  p.lower_terms[{1, 0}] = lt;
  return {"Heisenberg enveloping algebra", validate(p)};
}

inline std::vector<Family> quasi_families() {
  return {quantum_plane_q(), quantum_torus_q(), quantum_plane_qt(), quantum_space_f7(),
          quantum_torus_f7(), skew_torus_qt(), skew_space_qt(), quantum_space4_q()};
}

inline std::vector<Family> all_families() {
  auto out = quasi_families();
  out.push_back(quantum_weyl());
  out.push_back(weyl_a1());
  out.push_back(heisenberg());
  return out;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  FieldElement nonzero_coefficient(const Field& K) {
    while (true) {
      const FieldElement c = coefficient(K);
      if (!c.is_zero()) return c;
    }
  }

  FieldElement coefficient(const Field& K) {
    switch (K.kind()) {
      case FieldKind::Rational:
        return K.from_rational(Rational(uniform(-5, 5), uniform(1, 3)));
      case FieldKind::PrimeField:
      case FieldKind::Integer:
        return K.from_integer(uniform(-4, 4));
      case FieldKind::RationalFunction: {
        FieldElement c = K.from_integer(uniform(-3, 3));
        for (std::size_t k = 0; k < K.nparams(); ++k) {
          if (uniform(0, 2) == 0) c = c + K.from_integer(uniform(-2, 2)) * K.parameter(k).pow(uniform(1, 2));
        }
        if (uniform(0, 3) == 0) c = c / (K.parameter(uniform(0, static_cast<long>(K.nparams()) - 1)) + K.one());
        return c;
      }
    }
    return K.zero();
  }

  /// Exponent with total degree sum |u_i| <= max_degree.
  ExponentVector exponent(const Presentation& p, long max_degree) {
    ExponentVector u(p.n);
    long budget = uniform(0, max_degree);
    for (std::size_t k = 0; k < p.n && budget > 0; ++k) {
      const std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(p.n) - 1));
      const long e = uniform(0, std::min(budget, 3L));
      budget -= e;
      u[i] += p.is_laurent(i) && uniform(0, 1) ? -e : e;
    }
    // Repeated picks may mix signs; clamp to the degree budget.
    while (u.total_degree() > max_degree) {
      for (std::size_t i = 0; i < p.n; ++i) {
        if (u[i] > 0) {
          u[i] -= 1;
          break;
        }
        if (u[i] < 0) {
          u[i] += 1;
          break;
        }
      }
    }
    return u;
  }

  Element element(const PresentationPtr& p, long max_degree, long max_terms = 3) {
    Element f(p);
    const long terms = uniform(1, max_terms);
    for (long k = 0; k < terms; ++k) f.add_term(exponent(*p, max_degree), nonzero_coefficient(p->field));
    return f;
  }

  Element nonzero_element(const PresentationPtr& p, long max_degree, long max_terms = 3) {
    while (true) {
      Element f = element(p, max_degree, max_terms);
      if (!f.is_zero()) return f;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Product computed only by letter-by-letter rewriting of concatenated words.
inline Element oracle_mul(const Element& f, const Element& g) {
  const PresentationPtr& p = f.presentation();
  Element out(p);
  for (const auto& [u, a] : f.terms()) {
    for (const auto& [v, b] : g.terms()) {
      Word w = word_of(a, u);
      const Word w2 = word_of(b, v);
      w.insert(w.end(), w2.begin(), w2.end());
      out += normalize_word(w, p);
    }
  }
  return out;
}

/// All sums of i vectors from `positives` (entries bounded by summand_box)
/// that land in the box |entry| <= target_box. Partial sums that cannot
/// reach the target box any more are pruned.
inline std::set<ExponentVector> brute_cone_power(const std::vector<ExponentVector>& positives, std::size_t i,
                                                 long target_box, long summand_box) {
  auto reachable = [&](const ExponentVector& s, std::size_t used) {
    const long slack = target_box + static_cast<long>(i - used) * summand_box;
    for (std::size_t c = 0; c < s.size(); ++c) {
      if (abs(s[c]) > slack) return false;
    }
    return true;
  };
  std::set<ExponentVector> level(positives.begin(), positives.end());
  for (std::size_t k = 1; k < i; ++k) {
    std::set<ExponentVector> next;
    for (const auto& s : level) {
      for (const auto& e : positives) {
        ExponentVector t = s + e;
        if (reachable(t, k + 1)) next.insert(std::move(t));
      }
    }
    level = std::move(next);
  }
  std::set<ExponentVector> out;
  for (const auto& s : level) {
    if (reachable(s, i)) out.insert(s);
  }
  return out;
}

/// Every integer vector with entries in [-box, box].
inline std::vector<ExponentVector> box_points(std::size_t n, long box) {
  std::vector<ExponentVector> out;
  std::vector<long> digits(n, -box);
  while (true) {
    ExponentVector g(n);
    for (std::size_t k = 0; k < n; ++k) g[k] = digits[k];
    out.push_back(g);
    std::size_t k = 0;
    while (k < n && digits[k] == box) digits[k++] = -box;
    if (k == n) break;
    ++digits[k];
  }
  return out;
}

}  // namespace testing_support
