#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcklab/cochain.hpp"

namespace lcklab {

/// Endomorphism J with J² = -I; column j is J e_j.
class ComplexStructure {
 public:
  /// Throws OddDimension or BadComplexStructure.
  explicit ComplexStructure(Matrix j);

  std::size_t dim() const noexcept { return j_.rows(); }
  const Matrix& matrix() const noexcept { return j_; }
  Vector apply(std::span<const Rational> v) const { return j_ * v; }

  bool operator==(const ComplexStructure&) const = default;

 private:
  Matrix j_;
};

struct LckStructure {
  LieAlgebra algebra;
  Cochain omega;
  Cochain theta;
  ComplexStructure J;
};

/// One named invariant; `detail` names the first failing basis tuple.
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct LeeField {
  Vector raw;          // h^{-1} θ
  Rational norm_sq;    // |θ|²_h = θ(raw)
  Vector xi;           // raw / |θ|², so θ(ξ) = 1
};

struct ReebData {
  Vector eta;   // ε J ξ
  Cochain phi;  // h(η, ·) / h(η, η)
  int epsilon = 1;
};

struct LckReport {
  std::vector<CheckItem> items;
  /// Solution of θ∧Ω = dΩ, when Ω is nondegenerate and one exists.
  std::optional<Cochain> computed_theta;
  std::optional<Matrix> metric;
  std::optional<LeeField> lee;
  std::optional<ReebData> reeb;
  std::string reeb_failure;
  /// ι_ξ dφ = 0 and ι_η dφ = 0.
  std::optional<bool> dphi_in_kernel;
  std::optional<bool> vaisman;

  bool pass() const;
  const CheckItem* find(const std::string& name) const;
};

namespace check_names {
inline constexpr const char* theta_closed = "dθ = 0";
inline constexpr const char* lck_equation = "dΩ = θ∧Ω";
inline constexpr const char* j_squared = "J² = −I";
inline constexpr const char* integrable = "J integrable";
inline constexpr const char* j_invariant = "Ω J-invariant";
inline constexpr const char* metric_pd = "h positive definite";
inline constexpr const char* theta_on_derived = "θ vanishes on [g,g]";
}  // namespace check_names

/// N(u,v) = [Ju,Jv] - [u,v] - J[Ju,v] - J[u,Jv].
Vector nijenhuis(const LieAlgebra& g, const Matrix& J, std::span<const Rational> u, std::span<const Rational> v);
bool is_integrable(const LieAlgebra& g, const Matrix& J);

/// h(e_i, e_j) = Ω(e_i, J e_j). Throws NotJInvariant.
Matrix metric_from(const Cochain& omega, const Matrix& J);

/// The θ with θ∧Ω = dΩ. Throws DegenerateOmega.
std::optional<Cochain> lee_form_from_omega(const LieAlgebra& g, const Cochain& omega);

LckReport check_lck(const LieAlgebra& g, const Cochain& omega, const Cochain& theta, const Matrix& J);
inline LckReport check_lck(const LckStructure& s) {
  return check_lck(s.algebra, s.omega, s.theta, s.J.matrix());
}

/// Throws MetricNotPD, or BadParameters when θ = 0.
LeeField lee_field(const Cochain& omega, const Cochain& theta, const Matrix& J);

/// Tries ε = +1 then -1 so that Ω = -θ∧φ + dφ. Throws DecompositionFails.
ReebData reeb_data(const LieAlgebra& g, const Cochain& omega, const Cochain& theta, const Matrix& J);

/// Levi-Civita connection of a left-invariant metric:
/// 2h(∇_u v, z) = h([u,v],z) - h([v,z],u) + h([z,u],v).
class LeviCivita {
 public:
  /// Throws MetricNotPD.
  LeviCivita(const LieAlgebra& g, const Matrix& h);
  Vector nabla(std::span<const Rational> u, std::span<const Rational> v) const;

 private:
  const LieAlgebra* g_;
  Matrix h_;
  Matrix h_inv_;
};

Vector koszul_nabla(const LieAlgebra& g, const Matrix& h, std::span<const Rational> u,
                    std::span<const Rational> v);

/// h([u,v],w) + h(v,[u,w]) = 0 for all v, w. Throws MetricNotPD.
bool is_killing(const LieAlgebra& g, const Matrix& h, std::span<const Rational> u);

/// v ↦ [u, Jv] - J[u, v].
Matrix lie_derivative_J(const LieAlgebra& g, const Matrix& J, std::span<const Rational> u);

/// ∇ξ = 0 for the Lee field. Throws MetricNotPD.
bool is_vaisman(const LieAlgebra& g, const Cochain& omega, const Cochain& theta, const Matrix& J);
inline bool is_vaisman(const LckStructure& s) { return is_vaisman(s.algebra, s.omega, s.theta, s.J.matrix()); }

}  // namespace lcklab
