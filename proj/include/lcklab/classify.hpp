#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcklab/lie_algebra.hpp"

namespace lcklab {

enum class ClassTag {
  Prop3Rotation,
  Prop3Hyperbolic,
  Prop4_3i,
  Prop4_3ii,
  Prop4_4,
  Prop4_5,
  Prop4_6,
  Prop4_7i,
  Prop4_7ii,
  Prop4_8,
  ReductiveCompact,
  ReductiveSplit,
  Abelian,
  OutsideCatalog,
  NotUnimodular,
};

const char* to_string(ClassTag tag);
std::optional<ClassTag> parse_class_tag(std::string_view text);
bool is_prop4(ClassTag tag);

struct ClassLabel {
  ClassTag tag = ClassTag::OutsideCatalog;
  /// Char poly of the induced action of W (on N/Z(N) or on N = R^3).
  /// Empty for the reductive and degenerate tags.
  Polynomial char_poly;
  /// Invariant under W -> cW: p³/r² for Φ = t³ + pt + r with r ≠ 0,
  /// otherwise the sign of the linear or constant term.
  std::optional<Rational> scale_invariant;
  /// Inertia (positive, negative, zero) of the Killing form on [g,g], reductive case only.
  std::optional<std::array<std::size_t, 3>> killing_inertia;
  std::string note;
};

/// Throws WrongDimension unless dim g = 4.
ClassLabel classify4(const LieAlgebra& g);

/// Nilradical of a solvable algebra: the common kernel of
/// x ↦ tr(ad_{b_1} ··· ad_{b_j} ad_x) over all monomials of degree < n in the
/// basis, which by Lie's theorem is exactly {x : ad_x nilpotent}. The result
/// is verified to be a nilpotent ideal. Throws BadParameters when g is not solvable.
Subspace nilradical(const LieAlgebra& g);

/// Matrix of ad_w on an ad_w-invariant subspace, in the subspace's basis.
Matrix restricted_ad(const LieAlgebra& g, std::span<const Rational> w, const Subspace& s);

/// (positive, negative, zero) counts of a symmetric form by exact congruence.
std::array<std::size_t, 3> inertia(const Matrix& s);

/// Φ(t) = t³ - m t² + n t - 1.
struct DoubleRootQuery {
  long m = 0;
  long n = 0;
};

Polynomial double_root_polynomial(DoubleRootQuery q);

/// Repeated real root via gcd(Φ, Φ'), exact.
std::optional<Rational> double_root_test(DoubleRootQuery q);

/// Floating-point cross-check: Durand-Kerner roots, a near-coincident real
/// pair proposes the nearest integer, accepted only if Φ and Φ' both vanish
/// there exactly.
struct NumericDoubleRoot {
  bool near_double = false;
  std::optional<long> confirmed;
};
NumericDoubleRoot double_root_numeric_oracle(DoubleRootQuery q);

enum class Lattice { Yes, No, NotApplicable };
const char* to_string(Lattice l);

struct LatticeVerdict {
  Lattice verdict = Lattice::NotApplicable;
  std::string reason;
};
LatticeVerdict lattice_verdict(ClassTag tag);

/// For reductive g: dim t = 1 and rank s = 1. Empty when g is not reductive.
std::optional<bool> reductive_lck_criterion(const LieAlgebra& g);

/// Reductive means g = center ⊕ [g,g] with nondegenerate Killing form on [g,g].
bool is_reductive(const LieAlgebra& g);

}  // namespace lcklab
