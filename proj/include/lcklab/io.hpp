#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "lcklab/catalog.hpp"

namespace lcklab {

inline constexpr const char* kAlgebraSchema = "lck-lab/algebra/1";

/// On-disk algebra description. Everything is addressed by basis name;
/// rationals are "p" or "p/q" strings.
///
///   { "schema": "lck-lab/algebra/1", "name": "surface(6)", "dim": 4,
///     "basis": ["X","Y","Z","W"],
///     "brackets": [ {"left":"X","right":"Y","value":{"Z":"-1"}} ],
///     "forms": { "Omega": {"degree":2,"terms":[{"index":["X","Y"],"coeff":"1"}]} },
///     "J": [ {"from":"X","to":"Y","coeff":"1"} ] }
struct AlgebraFile {
  std::string name;
  LieAlgebra algebra;
  std::map<std::string, Cochain> forms;
  std::optional<Matrix> J;

  bool operator==(const AlgebraFile&) const = default;
};

/// Throws Error(ParseError) with a line/column or a JSON pointer to the
/// offending field, or Error(JacobiViolation).
AlgebraFile parse_algebra_file(std::string_view text);
AlgebraFile read_algebra_file(const std::string& path);
std::string emit_algebra_file(const AlgebraFile& f);

/// Forms "Omega" and "theta" when present, "theta_printed" when the listed Lee
/// form differs from the computed one.
AlgebraFile to_algebra_file(const CatalogEntry& e);

}  // namespace lcklab
