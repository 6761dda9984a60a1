#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcklab/lie_algebra.hpp"

namespace lcklab {

/// Strictly increasing basis indices (i_1 < ... < i_p).
using Monomial = std::vector<std::size_t>;

/// Lexicographically ordered monomials of Λ^p(Q^n) with O(1) lookup.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t n, std::size_t p);

  std::size_t size() const noexcept { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

  std::size_t index(const Monomial& m) const;

 private:
  static std::uint64_t mask(const Monomial& m);

  std::vector<Monomial> monomials_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

/// Alternating p-form on an n-dimensional algebra,
///   ω = Σ_I c_I e^{i_1} ∧ ... ∧ e^{i_p},
/// evaluated with the determinant convention (no 1/p! factor), so
/// c_I = ω(e_{i_1}, ..., e_{i_p}). Zero coefficients are never stored.
class Cochain {
 public:
  Cochain() = default;
  Cochain(std::size_t dim, std::size_t degree);

  static Cochain scalar(std::size_t dim, const Rational& c);
  /// e^i, the dual of the i-th basis vector.
  static Cochain dual(std::size_t dim, std::size_t i);
  static Cochain one_form(std::span<const Rational> coords);
  static Cochain from_vector(std::size_t dim, std::size_t degree, std::span<const Rational> coords);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coeff(const Monomial& sorted) const;
  /// Adds c * e^{indices}; indices may be unsorted (sign applied) and a
  /// repeated index contributes nothing.
  void add_term(Monomial indices, const Rational& c);

  /// Coordinates in the lexicographic monomial basis of Λ^p.
  Vector to_vector() const;
  /// Coordinates of a 1-form (length dim).
  Vector as_covector() const;

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain operator-() const;
  friend Cochain operator*(const Rational& s, const Cochain& c);

  bool operator==(const Cochain&) const = default;

 private:
  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// Human form such as "x^y + z^w"; duals are lower-cased labels when that is
/// unambiguous and "X*" otherwise.
std::string format_cochain(const Cochain& c, const std::vector<std::string>& labels);

Rational eval(const Cochain& w, const std::vector<Vector>& vs);
Rational eval_basis(const Cochain& w, const Monomial& unsorted_indices);

/// Shuffle wedge without factorial normalization.
Cochain wedge(const Cochain& a, const Cochain& b);

/// Contraction (ι_v ω)(x_2, ..., x_p) = ω(v, x_2, ..., x_p).
Cochain interior(std::span<const Rational> v, const Cochain& w);

/// Chevalley-Eilenberg coboundary with trivial coefficients:
/// (dω)(x_0..x_p) = Σ_{j<k} (-1)^{j+k} ω([x_j, x_k], x_0, .., x̂_j, .., x̂_k, .., x_p).
/// For 1-forms this is dσ(u, v) = -σ([u, v]).
Cochain ce_d(const LieAlgebra& g, const Cochain& w);

/// d_θ ω = dω - θ ∧ ω. Throws LeeFormNotClosed unless dθ = 0.
Cochain twisted_d(const LieAlgebra& g, const Cochain& theta, const Cochain& w);

/// dim ker(d_θ on Λ^p) - rank(d_θ on Λ^{p-1}).
std::size_t twisted_cohomology_dim(const LieAlgebra& g, const Cochain& theta, std::size_t p);
std::vector<std::size_t> twisted_cohomology_dims(const LieAlgebra& g, const Cochain& theta);

/// ψ with d_θ ψ = Ω (echelon particular solution), or nullopt.
std::optional<Cochain> solve_potential(const LieAlgebra& g, const Cochain& theta, const Cochain& omega);

/// Kernel of d on Λ^1, i.e. the annihilator of [g, g].
Subspace closed_one_forms(const LieAlgebra& g);

/// S(i, j) = ω(e_i, e_j) for a 2-form.
Matrix skew_matrix(const Cochain& omega);

}  // namespace lcklab
