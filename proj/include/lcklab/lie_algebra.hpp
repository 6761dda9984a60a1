#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lcklab/linalg.hpp"

namespace lcklab {

/// One sparse term c * e_k of a bracket value.
struct Term {
  std::size_t index;
  Rational coeff;
  bool operator==(const Term&) const = default;
};

/// Unvalidated bracket table over a labelled basis. Only pairs i < j are
/// stored, so [e_j, e_i] = -[e_i, e_j] holds by construction.
class StructureConstants {
 public:
  explicit StructureConstants(std::vector<std::string> labels);

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Sets [e_i, e_j] = value. Order of i, j is free; i == j must map to 0.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  void set_bracket(const std::string& a, const std::string& b, const Vector& value);

  /// [e_i, e_j] as a sparse term list (empty when zero).
  std::vector<Term> bracket_terms(std::size_t i, std::size_t j) const;
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(std::span<const Rational> u, std::span<const Rational> v) const;

  std::size_t index_of(const std::string& label) const;

  bool operator==(const StructureConstants&) const = default;

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> table_;  // upper triangle, row-major over i < j
};

struct JacobiViolation {
  std::size_t i, j, k;
  Vector residual;
};

/// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] for every i < j < k
/// where it does not vanish.
std::vector<JacobiViolation> jacobi_violations(const StructureConstants& sc);

/// A Lie algebra over Q whose Jacobi identity has been verified.
class LieAlgebra {
 public:
  /// Throws Error(JacobiViolation) listing the first failing triple; call
  /// jacobi_violations() on the table for the full list.
  explicit LieAlgebra(StructureConstants sc);

  static LieAlgebra abelian(std::size_t n);

  std::size_t dim() const noexcept { return sc_.dim(); }
  const std::vector<std::string>& labels() const noexcept { return sc_.labels(); }
  const StructureConstants& constants() const noexcept { return sc_; }
  std::size_t index_of(const std::string& label) const { return sc_.index_of(label); }
  Vector basis_vector(const std::string& label) const { return unit_vector(dim(), index_of(label)); }

  Vector bracket(std::span<const Rational> u, std::span<const Rational> v) const;
  std::vector<Term> bracket_terms(std::size_t i, std::size_t j) const { return sc_.bracket_terms(i, j); }

  bool operator==(const LieAlgebra&) const = default;

 private:
  StructureConstants sc_;
};

Vector bracket(const LieAlgebra& g, std::span<const Rational> u, std::span<const Rational> v);

/// Column j holds [u, e_j].
Matrix ad_matrix(const LieAlgebra& g, std::span<const Rational> u);

bool is_unimodular(const LieAlgebra& g);

/// Span of [a, b] for a in A, b in B.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

/// D^0 = g, D^{i+1} = [D^i, D^i], listed until the first repeat.
std::vector<Subspace> derived_series(const LieAlgebra& g);
/// C^0 = g, C^{i+1} = [g, C^i], listed until the first repeat.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);
Subspace derived_subalgebra(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_abelian(const LieAlgebra& g);

/// K(u, v) = tr(ad_u ad_v) on the basis.
Matrix killing_form(const LieAlgebra& g);

/// Structure constants in the basis f_j = sum_i P(i, j) e_i.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p,
                        std::vector<std::string> labels = {});

/// Subalgebra spanned by `basis` (closed under bracket), re-expressed in that basis.
LieAlgebra restrict_to(const LieAlgebra& g, const std::vector<Vector>& basis);

}  // namespace lcklab
