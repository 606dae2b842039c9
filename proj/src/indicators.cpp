#include "hopflab/indicators.hpp"

#include <cstdlib>

#include "hopflab/error.hpp"
#include "hopflab/tensor.hpp"

namespace hopflab {

namespace {

Matrix matrix_of(const HopfAlgebra& H, auto&& map) {
  Matrix M(H.dim(), H.dim());
  for (std::size_t i = 0; i < H.dim(); ++i) M.set_column(i, map(H.basis(i)).coeffs);
  return M;
}

}  // namespace

const Matrix& SweedlerPowers::matrix(int n) {
  if (auto it = cache_.find(n); it != cache_.end()) return it->second;
  const Field& F = H_.field();
  Matrix M;
  if (n == 0) {
    M = matrix_of(H_, [&](const AlgElement& a) { return H_.scale(H_.one(), H_.counit(a)); });
  } else if (n == 1) {
    M = Matrix::identity(F, H_.dim());
  } else if (n == -1) {
    M = H_.antipode_matrix();
  } else {
    const Matrix prev = matrix(n > 0 ? n - 1 : n + 1);
    M = Matrix(H_.dim(), H_.dim());
    for (std::size_t i = 0; i < H_.dim(); ++i) {
      AlgElement acc = H_.zero();
      for (const auto& t : H_.coproduct_terms(i)) {
        const AlgElement left = n > 0 ? H_.basis(t.left) : H_.antipode(H_.basis(t.left));
        acc = H_.add(acc, H_.scale(H_.multiply(left, AlgElement{prev.column(t.right)}), t.c));
      }
      M.set_column(i, acc.coeffs);
    }
  }
  return cache_.emplace(n, std::move(M)).first->second;
}

AlgElement SweedlerPowers::apply(int n, const AlgElement& a) {
  return AlgElement{hopflab::apply(H_.field(), matrix(n), a.coeffs)};
}

AlgElement sweedler_power(const HopfAlgebra& H, const AlgElement& a, int n) {
  if (n == 0) return H.scale(H.one(), H.counit(a));
  const std::size_t m = static_cast<std::size_t>(std::abs(n));
  TensorElement t = iterated_coproduct(H, a, m);
  if (n < 0) {
    for (std::size_t leg = 0; leg < m; ++leg) t = apply_leg(H.field(), t, leg, H.antipode_matrix());
  }
  return contract(H, t);
}

Report power_centrality_check(const HopfAlgebra& H, const AlgElement& Lambda, int lo, int hi) {
  SweedlerPowers P(H);
  Report r;
  std::string central_w, fixed_w;
  for (int n = lo; n <= hi; ++n) {
    const AlgElement pn = P.apply(n, Lambda);
    for (std::size_t i = 0; i < H.dim() && central_w.empty(); ++i) {
      if (H.multiply(pn, H.basis(i)) != H.multiply(H.basis(i), pn)) {
        central_w = "n=" + std::to_string(n) + ", b" + std::to_string(i);
      }
    }
    if (fixed_w.empty() && H.antipode(pn) != pn) fixed_w = "n=" + std::to_string(n);
  }
  r.add("power.central", central_w.empty(), central_w);
  r.add("power.antipode_fixed", fixed_w.empty(), fixed_w);
  return r;
}

FieldElement indicator(const HopfAlgebra& H, const IntegralData& id, const Vector& chi, int n, SweedlerPowers& P) {
  return H.pair(chi, H.multiply(id.u_inv, P.apply(n, id.lambda_H)));
}

FieldElement indicator(const HopfAlgebra& H, const IntegralData& id, const Vector& chi, int n) {
  SweedlerPowers P(H);
  return indicator(H, id, chi, n, P);
}

FieldElement indicator_simple(const HopfAlgebra& H, const WedderburnData& wd, const IntegralData& id, std::size_t i,
                              int n, SweedlerPowers& P) {
  const Field& F = H.field();
  const FieldElement d = F.from_int(static_cast<std::int64_t>(wd.dims[i]));
  if (d.is_zero()) throw Error(ErrorCode::DimensionNotInvertible, "block dimension divisible by p");
  const FieldElement chi_p = H.pair(wd.characters[i], P.apply(n, id.lambda_H));
  return F.div(F.mul(chi_p, wd.lambda_of_e[i]), F.mul(d, d));
}

FieldElement nu_zero(const HopfAlgebra& H, const IntegralData& id, const WedderburnData& wd, const Vector& chi) {
  const Field& F = H.field();
  const FieldElement direct = F.mul(id.eps_of_lambda, H.pair(chi, id.u_inv));
  FieldElement sum = F.zero();
  for (std::size_t i = 0; i < wd.idempotents.size(); ++i) {
    const FieldElement d = F.from_int(static_cast<std::int64_t>(wd.dims[i]));
    sum = F.add(sum, F.mul(F.div(wd.lambda_of_e[i], F.mul(d, d)), H.pair(chi, wd.idempotents[i])));
  }
  const FieldElement via_blocks = F.mul(id.eps_of_lambda, sum);
  if (direct != via_blocks) {
    throw Error(ErrorCode::EquivalenceViolation, "ν_0 forms differ: " + F.format(direct) + " vs " + F.format(via_blocks));
  }
  return direct;
}

namespace {

// Applies ρ(b_{i_1})⊗...⊗ρ(b_{i_n}) to a vector of V^{⊗n}.
Vector apply_pure(const Field& F, const ModuleRep& V, const std::vector<std::size_t>& legs, Vector v) {
  const std::size_t d = V.dim;
  std::size_t stride = v.size();
  for (std::size_t leg = 0; leg < legs.size(); ++leg) {
    stride /= d;
    const Matrix& M = V.action[legs[leg]];
    Vector out(v.size());
    for (std::size_t flat = 0; flat < v.size(); ++flat) {
      const FieldElement c = v[flat];
      if (c.is_zero()) continue;
      const std::size_t i = (flat / stride) % d;
      const std::size_t base = flat - i * stride;
      for (std::size_t r = 0; r < d; ++r) {
        const FieldElement m = M(r, i);
        if (!m.is_zero()) out[base + r * stride] = F.add(out[base + r * stride], F.mul(c, m));
      }
    }
    v = std::move(out);
  }
  return v;
}

}  // namespace

FieldElement operator_indicator(const HopfAlgebra& H, const IntegralData& id, const ModuleRep& V, int n,
                                std::size_t budget) {
  const Field& F = H.field();
  if (n < 1) throw Error(ErrorCode::DimensionMismatch, "operator route needs n >= 1");
  if (!module_verify(H, V).all_passed()) throw Error(ErrorCode::NotAModule, "action does not define an H-module");
  std::size_t N = 1;
  for (int i = 0; i < n; ++i) {
    N *= V.dim;
    if (N > budget) {
      throw Error(ErrorCode::BudgetExceeded, "dim(V)^" + std::to_string(n) + " exceeds budget " + std::to_string(budget));
    }
  }

  // Terms of Δ_{n-1}(Λ/ε(Λ)).
  const AlgElement proj = H.scale(id.lambda_H, F.inv(id.eps_of_lambda));
  const TensorElement T = iterated_coproduct(H, proj, static_cast<std::size_t>(n));
  std::vector<std::pair<std::vector<std::size_t>, FieldElement>> terms;
  for (std::size_t flat = 0; flat < T.coeffs.size(); ++flat) {
    if (T.coeffs[flat].is_zero()) continue;
    std::vector<std::size_t> legs(static_cast<std::size_t>(n));
    for (std::size_t l = 0; l < legs.size(); ++l) legs[l] = T.leg_index(flat, l);
    terms.emplace_back(std::move(legs), T.coeffs[flat]);
  }
  auto project = [&](const Vector& v) {
    Vector out(N);
    for (const auto& [legs, c] : terms) {
      const Vector w = apply_pure(F, V, legs, v);
      for (std::size_t i = 0; i < N; ++i) out[i] = F.add(out[i], F.mul(c, w[i]));
    }
    return out;
  };

  SubspaceBasis inv(F, N);
  for (std::size_t j = 0; j < N; ++j) {
    Vector e(N);
    e[j] = F.one();
    inv.insert(project(e));
  }

  // v_1⊗rest ↦ rest⊗u⁻¹v_1, with u taken from the idempotent integral
  // Λ/ε(Λ); u is linear in Λ, so its inverse picks up a factor ε(Λ).
  const Matrix u_inv = act(H, V, H.scale(id.u_inv, id.eps_of_lambda));
  const std::size_t rest = N / V.dim;
  FieldElement trace = F.zero();
  const auto& basis = inv.vectors();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Vector& w = basis[k];
    Vector image(N);
    for (std::size_t flat = 0; flat < N; ++flat) {
      const FieldElement c = w[flat];
      if (c.is_zero()) continue;
      const std::size_t v1 = flat / rest, tail = flat % rest;
      for (std::size_t r = 0; r < V.dim; ++r) {
        const FieldElement m = u_inv(r, v1);
        if (!m.is_zero()) image[tail * V.dim + r] = F.add(image[tail * V.dim + r], F.mul(c, m));
      }
    }
    const auto coords = inv.coordinates(image);
    if (!coords) throw Error(ErrorCode::EquivalenceViolation, "cyclic shift does not preserve the invariants");
    trace = F.add(trace, (*coords)[k]);
  }
  return trace;
}

FieldElement regular_indicator_trace(const HopfAlgebra& H, int n, SweedlerPowers& P) {
  return trace(H.field(), multiply(H.field(), H.antipode_matrix(), P.matrix(n - 1)));
}

FieldElement regular_indicator_trace(const HopfAlgebra& H, int n) {
  SweedlerPowers P(H);
  return regular_indicator_trace(H, n, P);
}

IndicatorTable indicator_table(const HopfAlgebra& H, const IntegralData& id, const WedderburnData& wd, int lo, int hi) {
  const Field& F = H.field();
  if (lo > hi) throw Error(ErrorCode::DimensionMismatch, "empty n range");
  SweedlerPowers P(H);
  IndicatorTable t;
  t.lo = lo;
  t.hi = hi;
  const std::size_t r = wd.idempotents.size();
  for (std::size_t i = 0; i < r; ++i) {
    Vector row;
    for (int n = lo; n <= hi; ++n) row.push_back(indicator(H, id, wd.characters[i], n, P));
    t.rows.push_back(std::move(row));
  }
  for (int n = lo; n <= hi; ++n) t.regular_row.push_back(indicator(H, id, wd.regular_character, n, P));

  auto value = [&](std::size_t i, int n) {
    return n >= lo && n <= hi ? t.value(i, n) : indicator(H, id, wd.characters[i], n, P);
  };
  std::string w1, w2, wdual, wclosed, wzero, wreg, wsum;
  for (std::size_t i = 0; i < r; ++i) {
    if (w1.empty() && value(i, -1) != value(i, 1)) w1 = "i=" + std::to_string(i);
    if (w2.empty() && value(i, -2) != value(i, 2)) w2 = "i=" + std::to_string(i);
    for (int n = lo; n <= hi; ++n) {
      const std::string at = "i=" + std::to_string(i) + ", n=" + std::to_string(n);
      if (wdual.empty() && t.value(i, n) != t.value(wd.dual_index[i], n)) wdual = at;
      if (wclosed.empty() && t.value(i, n) != indicator_simple(H, wd, id, i, n, P)) wclosed = at;
    }
    try {
      if (nu_zero(H, id, wd, wd.characters[i]) != value(i, 0)) wzero = "i=" + std::to_string(i);
    } catch (const Error& e) {
      if (wzero.empty()) wzero = e.what();
    }
  }
  for (int n = lo; n <= hi; ++n) {
    const std::size_t k = static_cast<std::size_t>(n - lo);
    if (wreg.empty() && t.regular_row[k] != regular_indicator_trace(H, n, P)) wreg = "n=" + std::to_string(n);
    FieldElement s = F.zero();
    for (std::size_t i = 0; i < r; ++i) s = F.add(s, F.mul(F.from_int(static_cast<std::int64_t>(wd.dims[i])), t.rows[i][k]));
    if (wsum.empty() && s != t.regular_row[k]) wsum = "n=" + std::to_string(n);
  }
  t.checks.add("indicators.nu_minus_one_equals_nu_one", w1.empty(), w1);
  t.checks.add("indicators.nu_minus_two_equals_nu_two", w2.empty(), w2);
  t.checks.add("indicators.dual_invariance", wdual.empty(), wdual);
  t.checks.add("indicators.closed_form_for_simples", wclosed.empty(), wclosed);
  t.checks.add("indicators.nu_zero_two_forms", wzero.empty(), wzero);
  t.checks.add("indicators.regular_trace_formula", wreg.empty(), wreg);
  t.checks.add("indicators.regular_row_decomposition", wsum.empty(), wsum);
  t.checks.merge(power_centrality_check(H, id.lambda_H, lo, hi));
  return t;
}

}  // namespace hopflab
