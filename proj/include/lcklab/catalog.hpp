#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcklab/classify.hpp"
#include "lcklab/hermitian.hpp"

namespace lcklab {

enum class Family { HeisenbergType, U2JDelta, Surface, Prop3, Prop4, InoueSPlusJq, HopfJd };

/// Textual form: heisenberg_type(2), u2_Jdelta(1,0,+), surface(6), surface(4,2),
/// prop3_family(rotation), prop4_family(8,1,1), inoue_splus_Jq(1), hopf_Jd(1/2).
/// Omitted numeric parameters take the defaults shown by `catalog list`.
struct CatalogKey {
  Family family = Family::Surface;
  int index = 0;                 // n for heisenberg_type, k for surface
  std::string variant;           // prop3: rotation|hyperbolic; prop4: 3i 3ii 4 5 6 7i 7ii 8
  std::vector<Rational> params;  // (c,d), (a,b), q or d, in printed order
  int sign = 1;                  // u2_Jdelta only

  /// Throws ParseError for malformed text, BadParameters outside the domain.
  static CatalogKey parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const CatalogKey&) const = default;
};

struct CatalogEntry {
  CatalogKey key;
  LieAlgebra algebra;
  std::optional<ComplexStructure> J;
  std::optional<Cochain> omega;
  /// The Lee form computed from Ω.
  std::optional<Cochain> theta;
  /// The uniform "θ = w" of the surface list, kept to report the correction.
  std::optional<Cochain> printed_theta;
};

/// Throws BadParameters when the key is outside the family's domain.
CatalogEntry build(const CatalogKey& key);

/// One key per family member with default parameters.
std::vector<CatalogKey> catalog_keys();

struct ExpectedProperties {
  std::optional<bool> lck;
  std::optional<bool> vaisman;
  std::optional<ClassTag> label;
  LatticeVerdict lattice;
};

ExpectedProperties expected_properties(const CatalogKey& key);

}  // namespace lcklab
