#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "skewpbw/field.hpp"

namespace skewpbw {

/// Degree <= 1 tail d0 + sum_k d_k x_k of a relation x_j x_i = q x_i x_j + tail.
struct LowerTerm {
  FieldElement constant;
  std::vector<FieldElement> linear;

  bool is_zero() const;
  friend bool operator==(const LowerTerm& a, const LowerTerm& b) = default;
};

struct PresentationFlags {
  bool quasi_commutative = true;
  bool bijective = true;
};

/// Data of a skew PBW extension / skew quantum polynomial ring
///   x_i r = sigma_i(r) x_i + delta_i(r),
///   x_j x_i = q[i][j] x_i x_j + lower_terms[(j,i)]   (j > i),
/// with x_1..x_r invertible. Indices are 0-based here, 1-based in text.
struct Presentation {
  std::size_t n = 1;
  std::size_t r = 0;
  Field field = Field::rationals();
  std::vector<std::vector<FieldElement>> q;
  std::vector<Automorphism> sigma;
  std::vector<Derivation> delta;
  std::map<std::pair<std::size_t, std::size_t>, LowerTerm> lower_terms;
  PresentationFlags flags;
  bool validated = false;

  /// Scalar c with x_j x_i = c x_i x_j + ... for i < j.
  const FieldElement& commutation(std::size_t i, std::size_t j) const { return q[i][j]; }
  bool has_derivations() const;
  bool is_laurent(std::size_t i) const { return i < r; }
  const LowerTerm* lower_term(std::size_t j, std::size_t i) const;

  friend bool operator==(const Presentation& a, const Presentation& b);
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Commutative polynomial/Laurent ring over the field (all q = 1).
Presentation trivial_presentation(std::size_t n, std::size_t r, Field field);

/// Checks every structural invariant, computes the flags and verifies that
/// the relations are consistent on all generator/parameter overlaps.
/// Errors: QMatrixInvalid, SigmaNoncommuting, LaurentRequiresQuasiCommutative,
/// LaurentRequiresBijective, DeltaWithNontrivialSigma, LowerTermInvalid,
/// RelationsInconsistent, DimensionMismatch.
PresentationPtr validate(Presentation p);

/// One stage R[z_1;theta_1]...[z_k;theta_k] of the iterated Ore form.
struct IteratedStage {
  std::size_t index = 0;
  /// theta_k on coefficients.
  Automorphism coefficient_action;
  /// theta_k(z_i) = generator_scalars[i] z_i for i < index.
  std::vector<FieldElement> generator_scalars;
};

struct IteratedForm {
  PresentationPtr presentation;
  std::vector<IteratedStage> stages;
};

/// Throws NotQuasiCommutative.
IteratedForm iterated_form(const PresentationPtr& p);

/// Drops derivations and lower terms.
PresentationPtr associated_graded(const PresentationPtr& p);

/// Same combinatorial data over Q for a presentation over Z.
PresentationPtr extend_scalars(const PresentationPtr& p);

}  // namespace skewpbw
