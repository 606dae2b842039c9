#pragma once

// Explicit finite-dimensional H-modules.

#include <vector>

#include "hopflab/hopf.hpp"
#include "hopflab/report.hpp"

namespace hopflab {

/// action[i] is ρ(b_i) acting on column vectors of length dim.
struct ModuleRep {
  std::size_t dim = 0;
  std::vector<Matrix> action;
};

/// ρ(a) = Σ a_i ρ(b_i).
Matrix act(const HopfAlgebra& H, const ModuleRep& V, const AlgElement& a);

/// ρ(b_i)ρ(b_j) = Σ_k m_ij^k ρ(b_k) for all pairs, and ρ(1) = I.
Report module_verify(const HopfAlgebra& H, const ModuleRep& V);
/// Throws ModuleAxiomViolation if module_verify fails.
void require_module(const HopfAlgebra& H, const ModuleRep& V);

/// χ_V(b_i) = tr ρ(b_i).
Vector module_character(const HopfAlgebra& H, const ModuleRep& V);
/// ρ*(b_i) = ρ(S(b_i))^T.
ModuleRep module_dual(const HopfAlgebra& H, const ModuleRep& V);
/// ρ(b_i) = Σ Δ-coefficients ρ_V(b_j)⊗ρ_W(b_k).
ModuleRep module_tensor(const HopfAlgebra& H, const ModuleRep& V, const ModuleRep& W);

ModuleRep regular_module(const HopfAlgebra& H);
/// One-dimensional module through ε.
ModuleRep trivial_module(const HopfAlgebra& H);

/// χ_V·χ_W evaluated via Δ: b ↦ Σ c^b_{jk} χ_V(b_j) χ_W(b_k).
Vector convolve(const HopfAlgebra& H, const Vector& chi_v, const Vector& chi_w);

}  // namespace hopflab
