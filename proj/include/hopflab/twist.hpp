#pragma once

// Drinfeld twists J ∈ H⊗H and the twisted Hopf algebra H^J.

#include <optional>

#include "hopflab/hopf.hpp"
#include "hopflab/integrals.hpp"
#include "hopflab/report.hpp"

namespace hopflab {

struct Twist {
  TensorElement J;
  TensorElement J_inv;
  AlgElement Q;      // S(J^(1)) J^(2)
  AlgElement Q_inv;  // J^-(1) S(J^-(2))
};

/// Checks invertibility, normalization and the cocycle identity. J_inv is
/// solved for when not supplied. Throws NotInvertible, NormalizationFails or
/// CocycleFails with the first offending coordinate.
Twist twist_validate(const HopfAlgebra& H, const TensorElement& J,
                     const std::optional<TensorElement>& J_inv = std::nullopt);

/// Same algebra and counit; Δ^J(a) = J⁻¹Δ(a)J, S^J(a) = Q⁻¹S(a)Q.
HopfAlgebra twist_hopf(const HopfAlgebra& H, const Twist& t);

/// u^J computed in H^J from Λ against Q⁻¹S(Q)u, plus the unexpanded form
/// S^J(Λ_(2)Q)Q⁻¹Λ_(1).
Report twisted_u_check(const HopfAlgebra& H, const Twist& t, const IntegralData& id);

/// Runs integrals and Wedderburn on H and H^J and compares the multisets of
/// indicator rows over [lo, hi] and of block dimensions.
Report gauge_invariance_check(const HopfAlgebra& H, const Twist& t, int lo, int hi, std::uint64_t seed);

}  // namespace hopflab
