#pragma once

// Sweedler contraction engine: arithmetic in H^{⊗m}.

#include <span>
#include <vector>

#include "hopflab/hopf.hpp"

namespace hopflab {

TensorElement as_tensor(const AlgElement& a);
TensorElement tensor_product(const Field& F, const TensorElement& a, const TensorElement& b);
TensorElement tensor_product(const Field& F, std::span<const AlgElement> legs);
/// 1⊗...⊗1 with m legs.
TensorElement tensor_one(const HopfAlgebra& H, std::size_t m);

TensorElement add(const Field& F, const TensorElement& a, const TensorElement& b);
TensorElement subtract(const Field& F, const TensorElement& a, const TensorElement& b);
TensorElement scale(const Field& F, const TensorElement& a, FieldElement s);

/// Leg-wise product in the algebra H^{⊗m}.
TensorElement multiply(const HopfAlgebra& H, const TensorElement& a, const TensorElement& b);

/// Applies the linear map with matrix M (columns = images of basis vectors)
/// to one leg.
TensorElement apply_leg(const Field& F, const TensorElement& t, std::size_t leg, const Matrix& M);
/// Δ applied to one leg; the result has one more leg.
TensorElement comultiply_leg(const HopfAlgebra& H, const TensorElement& t, std::size_t leg);
/// ε applied to one leg; the result has one fewer leg.
TensorElement counit_leg(const HopfAlgebra& H, const TensorElement& t, std::size_t leg);

/// Reorders legs: leg i of the result is leg perm[i] of t.
TensorElement permute_legs(const TensorElement& t, std::span<const std::size_t> perm);
/// a_(1)⊗a_(2)⊗...⊗a_(m) ↦ a_(2)⊗...⊗a_(m)⊗a_(1).
TensorElement rotate_left(const TensorElement& t);
/// Order-2 flip.
TensorElement flip(const TensorElement& t);

/// Multiplies the legs together in order: a_(1) a_(2) ... a_(m).
AlgElement contract(const HopfAlgebra& H, const TensorElement& t);

/// Δ_{m-1}(a) as an m-leg tensor, built as a left fold (Δ⊗id⊗...)∘...∘Δ.
/// m = 1 returns a itself. Throws DimensionMismatch for m = 0.
TensorElement iterated_coproduct(const HopfAlgebra& H, const AlgElement& a, std::size_t m);

/// Human-readable index tuple for witnesses.
std::string describe_index(const TensorElement& t, std::size_t flat);

/// First index where a and b differ, or npos.
std::size_t first_difference(const TensorElement& a, const TensorElement& b);

}  // namespace hopflab
