#pragma once

// Sweedler power maps and higher Frobenius–Schur indicators.

#include <map>
#include <vector>

#include "hopflab/hopf.hpp"
#include "hopflab/integrals.hpp"
#include "hopflab/module.hpp"
#include "hopflab/report.hpp"
#include "hopflab/wedderburn.hpp"

namespace hopflab {

/// Matrices of P_n, built by P_n(a) = a_(1) P_{n-1}(a_(2)) for n ≥ 2 and
/// P_{-n}(a) = S(a_(1)) P_{-(n-1)}(a_(2)), memoized.
class SweedlerPowers {
 public:
  explicit SweedlerPowers(const HopfAlgebra& H) : H_(H) {}

  const Matrix& matrix(int n);
  AlgElement apply(int n, const AlgElement& a);

 private:
  const HopfAlgebra& H_;
  std::map<int, Matrix> cache_;
};

/// P_n(a) straight from the definition through Δ_{|n|-1}(a). Cost grows like
/// dim^|n|; SweedlerPowers is the scalable route.
AlgElement sweedler_power(const HopfAlgebra& H, const AlgElement& a, int n);

/// P_n(Λ) central and S-fixed for lo ≤ n ≤ hi.
Report power_centrality_check(const HopfAlgebra& H, const AlgElement& Lambda, int lo, int hi);

/// ν_n(V) = χ(u⁻¹ P_n(Λ)).
FieldElement indicator(const HopfAlgebra& H, const IntegralData& id, const Vector& chi, int n);
FieldElement indicator(const HopfAlgebra& H, const IntegralData& id, const Vector& chi, int n, SweedlerPowers& P);

/// χ_i(P_n(Λ)) λ(e_i) / d_i². Throws DimensionNotInvertible.
FieldElement indicator_simple(const HopfAlgebra& H, const WedderburnData& wd, const IntegralData& id, std::size_t i,
                              int n, SweedlerPowers& P);

/// ε(Λ)χ(u⁻¹), checked against ε(Λ) Σ λ(e_i)/d_i² χ(e_i). Throws
/// EquivalenceViolation if the two forms differ.
FieldElement nu_zero(const HopfAlgebra& H, const IntegralData& id, const WedderburnData& wd, const Vector& chi);

/// Trace of v_1⊗...⊗v_n ↦ v_2⊗...⊗v_n⊗u⁻¹v_1 on (V^{⊗n})^H, the image of
/// Λ/ε(Λ). Throws BudgetExceeded if dim(V)^n > budget, NotAModule.
FieldElement operator_indicator(const HopfAlgebra& H, const IntegralData& id, const ModuleRep& V, int n,
                                std::size_t budget = 100000);

/// tr(S ∘ P_{n-1}) on H.
FieldElement regular_indicator_trace(const HopfAlgebra& H, int n, SweedlerPowers& P);
FieldElement regular_indicator_trace(const HopfAlgebra& H, int n);

struct IndicatorTable {
  int lo = 0;
  int hi = 0;
  std::vector<Vector> rows;  // rows[i][n - lo] = ν_n(V_i)
  Vector regular_row;        // ν_n(H)
  Report checks;

  FieldElement value(std::size_t i, int n) const { return rows[i][static_cast<std::size_t>(n - lo)]; }
};

/// Fills the table and records: ν_{-1} = ν_1, ν_{-2} = ν_2, dual invariance,
/// the closed form for simples, ν_0 two ways, the regular row against
/// tr(S∘P_{n-1}) and Σ d_i ν_n(V_i), and P_n(Λ) centrality.
IndicatorTable indicator_table(const HopfAlgebra& H, const IntegralData& id, const WedderburnData& wd, int lo, int hi);

}  // namespace hopflab
