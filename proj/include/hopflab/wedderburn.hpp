#pragma once

// Wedderburn data of a split semisimple Hopf algebra: central primitive
// idempotents, block sizes, irreducible characters and Schur elements.

#include <cstdint>
#include <vector>

#include "hopflab/hopf.hpp"
#include "hopflab/integrals.hpp"
#include "hopflab/report.hpp"

namespace hopflab {

struct WedderburnData {
  std::vector<AlgElement> idempotents;
  std::vector<std::size_t> dims;
  std::vector<Vector> characters;  // χ_i as covectors
  Vector schur;                    // c_i for the form λ↼u
  Vector lambda_of_e;              // λ(e_i)
  Vector regular_character;        // χ_H
  std::vector<std::size_t> dual_index;  // S(e_i) = e_{dual_index[i]}
};

/// Basis of Z(H) from [z, b_i] = 0.
std::vector<AlgElement> center(const HopfAlgebra& H);

/// Splits Z(H) with random central elements. Ordering: the block with
/// ε(e) = 1 first, the rest by decreasing coefficient codes. Throws
/// FieldTooSmall (with the needed extension degree) or NotSemisimple.
std::vector<AlgElement> central_primitive_idempotents(const HopfAlgebra& H, std::uint64_t seed);

/// isqrt(rank L_e). Throws NonSquareBlock.
std::size_t block_dimension(const HopfAlgebra& H, const AlgElement& e);

/// χ_i(a) = χ_H(a e_i) / d_i. Throws DimensionNotInvertible.
std::vector<Vector> irreducible_characters(const HopfAlgebra& H, const std::vector<AlgElement>& idempotents,
                                           const std::vector<std::size_t>& dims);

/// Solves λ↼u = Σ (1/c_i) χ_i. Throws InconsistentSchur.
Vector schur_elements(const HopfAlgebra& H, const std::vector<Vector>& characters, const Vector& lambda,
                      const AlgElement& u);

WedderburnData wedderburn(const HopfAlgebra& H, const IntegralData& id, std::uint64_t seed);

/// Idempotent completeness and orthogonality, Σ d_i² = dim H, χ_i(e_j),
/// χ_H = Σ d_i χ_i, p > d_i, the dual-index involution, and the unit, dual
/// basis and idempotent identities tying u, λ and e_i together.
Report verify_block_identities(const HopfAlgebra& H, const WedderburnData& wd, const IntegralData& id);

/// H over GF(p^{k·factor}).
HopfAlgebra extend_field(const HopfAlgebra& H, int factor);

}  // namespace hopflab
