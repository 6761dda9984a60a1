#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcklab/hermitian.hpp"
#include "lcklab/kernels.hpp"

namespace lcklab {

/// Coefficient grid lo, lo+step, ..., hi (inclusive when hi lands on it).
struct GridSpec {
  Rational lo = -3;
  Rational hi = 3;
  Rational step = Rational(1, 2);

  std::vector<Rational> values() const;
  /// "lo:hi:step"
  std::string to_string() const;
  /// Throws ParseError; step must be positive and lo <= hi.
  static GridSpec parse(std::string_view text);
  bool operator==(const GridSpec&) const = default;
};

struct SearchOptions {
  GridSpec grid;
  /// Coefficients tried on each kernel vector of {d_θΩ = 0, Ω J-invariant}.
  std::vector<Rational> sample{0, 1, -1, 2, -2, Rational(1, 2), Rational(-1, 2)};
  Execution exec = Execution::Parallel;
};

struct LckWitness {
  Cochain omega;
  Cochain theta;
  Matrix J;
  std::size_t j_index = 0;  // position in the candidate list
};

struct SearchResult {
  std::optional<LckWitness> witness;
  GridSpec grid;
  std::size_t closed_forms_dim = 0;
  std::size_t theta_points = 0;  // grid points per J, θ = 0 excluded
  std::size_t j_candidates = 0;  // integrable candidates actually searched
  std::size_t j_rejected = 0;    // candidates dropped as non-integrable

  /// One-line verdict; a miss always reads as evidence, not proof.
  std::string summary() const;
};

inline constexpr const char* kNoWitness =
    "no witness on grid (evidence only, not a proof of non-existence)";

/// The J with J e_i = ±e_j, J e_j = ∓e_i over a perfect matching of the basis.
/// Twelve candidates in dimension 4. Throws OddDimension; dim must be <= 8.
std::vector<Matrix> coordinate_complex_structures(std::size_t n);

/// Scans θ over the closed-1-form grid (lexicographic, θ = 0 skipped) for
/// each J candidate in order, and returns the first (J, θ, sample) witness
/// with Ω nondegenerate and h positive definite. The parallel path spreads
/// grid points over threads and still returns the first witness in order.
/// Throws OddDimension.
SearchResult lck_search(const LieAlgebra& g, const std::optional<Matrix>& J, const SearchOptions& opts = {});

}  // namespace lcklab
