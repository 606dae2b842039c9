#pragma once

// Line-oriented text formats `hopf v1`, `module v1`, `twist v1`.
// The grammar is documented in docs/formats.md.

#include <optional>
#include <string>

#include "hopflab/hopf.hpp"
#include "hopflab/module.hpp"

namespace hopflab {

std::string serialize_hopf(const HopfAlgebra& H);
/// Shape and field membership are checked; the Hopf axioms are not. A file
/// without an antipode section gets S from solve_antipode.
HopfAlgebra parse_hopf(const std::string& text);

std::string serialize_module(const HopfAlgebra& H, const ModuleRep& V);
ModuleRep parse_module(const std::string& text, const HopfAlgebra& H);

struct TwistFile {
  TensorElement J;
  std::optional<TensorElement> J_inv;
};

std::string serialize_twist(const HopfAlgebra& H, const TensorElement& J,
                            const std::optional<TensorElement>& J_inv = std::nullopt);
/// Throws ValidationError if the file names a different algebra.
TwistFile parse_twist(const std::string& text, const HopfAlgebra& H);

/// FNV-1a over the serialized algebra, as 16 hex digits.
std::string algebra_hash(const HopfAlgebra& H);

std::string read_file(const std::string& path);

}  // namespace hopflab
