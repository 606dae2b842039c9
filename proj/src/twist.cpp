#include "hopflab/twist.hpp"

#include <algorithm>

#include "hopflab/error.hpp"
#include "hopflab/indicators.hpp"
#include "hopflab/tensor.hpp"
#include "hopflab/wedderburn.hpp"

namespace hopflab {

namespace {

// Left multiplication by t on H⊗H as an n²×n² matrix.
Matrix left_mult_tensor(const HopfAlgebra& H, const TensorElement& t) {
  const std::size_t N = t.coeffs.size();
  Matrix M(N, N);
  for (std::size_t c = 0; c < N; ++c) {
    TensorElement e(t.order, t.dim);
    e.coeffs[c] = H.field().one();
    M.set_column(c, multiply(H, t, e).coeffs);
  }
  return M;
}

std::string witness(const TensorElement& a, const TensorElement& b, const Field& F) {
  const std::size_t i = first_difference(a, b);
  return "at " + describe_index(a, i) + ": " + F.format(a.coeffs[i]) + " vs " + F.format(b.coeffs[i]);
}

AlgElement leg_product(const HopfAlgebra& H, const TensorElement& t, bool s_on_first) {
  const std::size_t n = H.dim();
  AlgElement out = H.zero();
  for (std::size_t flat = 0; flat < t.coeffs.size(); ++flat) {
    if (t.coeffs[flat].is_zero()) continue;
    const AlgElement a = H.basis(flat / n), b = H.basis(flat % n);
    const AlgElement p = s_on_first ? H.multiply(H.antipode(a), b) : H.multiply(a, H.antipode(b));
    out = H.add(out, H.scale(p, t.coeffs[flat]));
  }
  return out;
}

}  // namespace

Twist twist_validate(const HopfAlgebra& H, const TensorElement& J, const std::optional<TensorElement>& J_inv) {
  const Field& F = H.field();
  const std::size_t n = H.dim();
  if (J.order != 2 || J.dim != n) throw Error(ErrorCode::DimensionMismatch, "twist must lie in H⊗H");
  const TensorElement one2 = tensor_one(H, 2);
  Twist t;
  t.J = J;
  if (J_inv) {
    t.J_inv = *J_inv;
  } else {
    const SolveResult r = solve(F, left_mult_tensor(H, J), one2.coeffs);
    if (!r.solution || !r.nullspace.empty()) throw Error(ErrorCode::NotInvertible, "J has no inverse in H⊗H");
    t.J_inv = TensorElement(2, n);
    t.J_inv.coeffs = *r.solution;
  }
  if (multiply(H, J, t.J_inv) != one2) {
    throw Error(ErrorCode::NotInvertible, "J·J⁻¹ ≠ 1⊗1, " + witness(multiply(H, J, t.J_inv), one2, F));
  }
  if (multiply(H, t.J_inv, J) != one2) {
    throw Error(ErrorCode::NotInvertible, "J⁻¹·J ≠ 1⊗1, " + witness(multiply(H, t.J_inv, J), one2, F));
  }
  const TensorElement one1 = as_tensor(H.one());
  for (std::size_t leg : {0u, 1u}) {
    const TensorElement c = counit_leg(H, J, leg);
    if (c != one1) {
      throw Error(ErrorCode::NormalizationFails, std::string(leg == 0 ? "(ε⊗id)" : "(id⊗ε)") + "(J) ≠ 1, " +
                                                     witness(c, one1, F));
    }
  }
  // (Δ⊗id)(J)(J⊗1) = (id⊗Δ)(J)(1⊗J)
  const TensorElement lhs = multiply(H, comultiply_leg(H, J, 0), tensor_product(F, J, one1));
  const TensorElement rhs = multiply(H, comultiply_leg(H, J, 1), tensor_product(F, one1, J));
  if (lhs != rhs) throw Error(ErrorCode::CocycleFails, "cocycle identity fails " + witness(lhs, rhs, F));

  t.Q = leg_product(H, J, true);
  t.Q_inv = leg_product(H, t.J_inv, false);
  if (H.multiply(t.Q, t.Q_inv) != H.one() || H.multiply(t.Q_inv, t.Q) != H.one()) {
    throw Error(ErrorCode::NotInvertible, "Q·Q⁻¹ ≠ 1");
  }
  return t;
}

HopfAlgebra twist_hopf(const HopfAlgebra& H, const Twist& t) {
  const std::size_t n = H.dim();
  Vector comult(n * n * n);
  Matrix S(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const AlgElement b = H.basis(i);
    const TensorElement d = multiply(H, multiply(H, t.J_inv, H.comultiply(b)), t.J);
    std::copy(d.coeffs.begin(), d.coeffs.end(), comult.begin() + static_cast<std::ptrdiff_t>(i * n * n));
    S.set_column(i, H.multiply(H.multiply(t.Q_inv, H.antipode(b)), t.Q).coeffs);
  }
  return HopfAlgebra(H.field(), n, H.mult_tensor(), std::move(comult), H.unit_vector(), H.counit_vector(),
                     std::move(S));
}

Report twisted_u_check(const HopfAlgebra& H, const Twist& t, const IntegralData& id) {
  Report r;
  const HopfAlgebra HJ = twist_hopf(H, t);
  const AlgElement& L = id.lambda_H;
  std::string w;
  for (std::size_t i = 0; i < H.dim() && w.empty(); ++i) {
    const AlgElement b = H.basis(i);
    if (HJ.multiply(b, L) != HJ.scale(L, HJ.counit(b))) w = "b" + std::to_string(i);
  }
  r.add("twist.integral_shared", w.empty(), w);

  const AlgElement expected = H.multiply(H.multiply(t.Q_inv, H.antipode(t.Q)), id.u);
  AlgElement uJ;
  try {
    uJ = compute_u(HJ, L).first;
    r.add("twist.u_formula", uJ == expected);
  } catch (const Error& e) {
    r.add("twist.u_formula", false, e.what());
  }

  // S^J(Λ_(2)Q) Q⁻¹Λ_(1) with Δ(Λ) untwisted.
  const std::size_t n = H.dim();
  const TensorElement dL = H.comultiply(L);
  AlgElement direct = H.zero();
  for (std::size_t flat = 0; flat < dL.coeffs.size(); ++flat) {
    if (dL.coeffs[flat].is_zero()) continue;
    const AlgElement left = H.multiply(t.Q_inv, H.basis(flat / n));
    const AlgElement right = HJ.antipode(H.multiply(H.basis(flat % n), t.Q));
    direct = H.add(direct, H.scale(H.multiply(right, left), dL.coeffs[flat]));
  }
  r.add("twist.u_unexpanded_form", direct == expected);
  return r;
}

namespace {

struct Summary {
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::size_t> dims;
};

Summary summarize(const HopfAlgebra& H, int lo, int hi, std::uint64_t seed, Report& r, const std::string& tag) {
  const IntegralData id = integral_data(H);
  const WedderburnData wd = wedderburn(H, id, seed);
  const IndicatorTable t = indicator_table(H, id, wd, lo, hi);
  r.merge(t.checks, tag + ".");
  Summary s;
  for (const auto& row : t.rows) {
    std::vector<std::uint64_t> codes;
    for (auto v : row) codes.push_back(v.code());
    s.rows.push_back(std::move(codes));
  }
  s.dims = wd.dims;
  std::sort(s.rows.begin(), s.rows.end());
  std::sort(s.dims.begin(), s.dims.end());
  return s;
}

}  // namespace

Report gauge_invariance_check(const HopfAlgebra& H, const Twist& t, int lo, int hi, std::uint64_t seed) {
  Report r;
  const HopfAlgebra HJ = twist_hopf(H, t);
  const Report ax = verify_axioms(HJ);
  r.merge(ax, "twisted.");
  if (!ax.all_passed()) return r;
  const Summary a = summarize(H, lo, hi, seed, r, "original");
  const Summary b = summarize(HJ, lo, hi, seed, r, "twisted");
  r.add("gauge.dimension_multiset", a.dims == b.dims);
  std::string w;
  if (a.rows != b.rows) {
    for (std::size_t i = 0; i < std::min(a.rows.size(), b.rows.size()) && w.empty(); ++i)
      if (a.rows[i] != b.rows[i]) w = "sorted row " + std::to_string(i) + " differs";
    if (w.empty()) w = "row counts differ";
  }
  r.add("gauge.indicator_multiset", w.empty(), w);
  return r;
}

}  // namespace hopflab
