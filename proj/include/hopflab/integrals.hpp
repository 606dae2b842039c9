#pragma once

// Integrals Λ ∈ H and λ ∈ H*, the element u = S(Λ_(2))Λ_(1), and the
// distinguished group-like g.

#include <utility>

#include "hopflab/hopf.hpp"
#include "hopflab/report.hpp"

namespace hopflab {

/// Which linear condition defined λ. The dual-basis identity
/// a = λ(aΛ_(1))S(Λ_(2)) decides; Right is tried first.
enum class DualConvention {
  Right,  // a_(1) λ(a_(2)) = λ(a) 1
  Left,   // λ(a_(1)) a_(2) = λ(a) 1
};

const char* to_string(DualConvention c);

struct IntegralData {
  AlgElement lambda_H;
  Vector lambda_dual;
  AlgElement u;
  AlgElement u_inv;
  AlgElement g;
  FieldElement eps_of_lambda;
  DualConvention convention = DualConvention::Right;
};

struct IntegralOptions {
  /// Skip the p² > dim(H) precondition.
  bool allow_small_characteristic = false;
};

/// Spans {Λ : b_i Λ = ε(b_i) Λ for all i}; first nonzero coordinate is 1.
/// Throws NoIntegral or IntegralSpaceTooBig.
AlgElement compute_integral(const HopfAlgebra& H);

/// λ under the given convention, unnormalized, first nonzero coordinate 1.
Vector compute_dual_integral(const HopfAlgebra& H, DualConvention c);

/// λ scaled so λ(Λ) = 1. Throws DegeneratePairing.
Vector normalize_pair(const HopfAlgebra& H, const AlgElement& Lambda, const Vector& lambda);

/// u = S(Λ_(2))Λ_(1) and its inverse. Throws SingularU, or NotAHopfAlgebra
/// if S²(b_i) ≠ u b_i u⁻¹ for some i.
std::pair<AlgElement, AlgElement> compute_u(const HopfAlgebra& H, const AlgElement& Lambda);

/// g = S(u⁻¹)u, checked group-like and implementing S⁴. Throws NotGrouplike.
AlgElement distinguished_grouplike(const HopfAlgebra& H, const AlgElement& u, const AlgElement& u_inv);

/// Full pipeline from a given nonzero integral. Throws PreconditionPSquare,
/// SemisimplicityFailure (ε(Λ) = 0), DegeneratePairing, SingularU.
IntegralData integral_data(const HopfAlgebra& H, const AlgElement& Lambda, IntegralOptions opts = {});
IntegralData integral_data(const HopfAlgebra& H, IntegralOptions opts = {});

/// Two-sidedness, λ(Λ) = 1, ε(Λ) ≠ 0, S(Λ) = Λ, S² = conjugation by u,
/// u S(u) central, and one-dimensional integral spaces.
Report integral_properties(const HopfAlgebra& H, const IntegralData& d);

/// The dual-basis, symmetry and Radford-type tensor identities (i)-(vii).
Report verify_frobenius_identities(const HopfAlgebra& H, const IntegralData& d);

struct CocommutativityFlags {
  bool integral_cocommutative = true;  // Δ(Λ) = flip Δ(Λ)
  bool lambda_symmetric = true;        // λ(ab) = λ(ba)
  bool involutory = true;              // S² = id
};

CocommutativityFlags cocommutativity_flags(const HopfAlgebra& H, const IntegralData& d);

/// The three flags must agree. Throws EquivalenceViolation otherwise; the
/// single report entry carries the triple as its witness text.
Report cocommutativity_equivalence(const HopfAlgebra& H, const IntegralData& d);

}  // namespace hopflab
