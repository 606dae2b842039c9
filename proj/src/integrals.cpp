#include "hopflab/integrals.hpp"

#include <optional>
#include <tuple>

#include "hopflab/error.hpp"
#include "hopflab/tensor.hpp"

namespace hopflab {

const char* to_string(DualConvention c) { return c == DualConvention::Right ? "right" : "left"; }

namespace {

Vector first_nonzero_one(const Field& F, Vector v) {
  for (auto c : v) {
    if (!c.is_zero()) {
      const FieldElement s = F.inv(c);
      for (auto& x : v) x = F.mul(x, s);
      break;
    }
  }
  return v;
}

Vector one_dimensional_kernel(const Field& F, const Matrix& A, const char* what) {
  auto ker = kernel(F, A);
  if (ker.empty()) throw Error(ErrorCode::NoIntegral, std::string("no nonzero ") + what);
  if (ker.size() > 1) {
    throw Error(ErrorCode::IntegralSpaceTooBig,
                std::string(what) + " space has dimension " + std::to_string(ker.size()));
  }
  return first_nonzero_one(F, ker.front());
}

// Σ_t c_t f(left_t, right_t) over the coproduct terms of Λ.
template <class Fn>
void for_each_term(const HopfAlgebra& H, const TensorElement& t, Fn&& fn) {
  const std::size_t n = H.dim();
  for (std::size_t flat = 0; flat < t.coeffs.size(); ++flat) {
    if (!t.coeffs[flat].is_zero()) fn(flat / n, flat % n, t.coeffs[flat]);
  }
}

std::string basis_witness(const char* label, std::size_t i) {
  return std::string(label) + "=b" + std::to_string(i);
}

std::string tensor_witness(const TensorElement& a, const TensorElement& b, const Field& F) {
  const std::size_t i = first_difference(a, b);
  if (i == static_cast<std::size_t>(-1)) return {};
  return "at " + describe_index(a, i) + ": " + F.format(a.coeffs[i]) + " vs " + F.format(b.coeffs[i]);
}

AlgElement power_of_s(const HopfAlgebra& H, AlgElement a, int times) {
  for (int i = 0; i < times; ++i) a = H.antipode(a);
  return a;
}

bool is_central(const HopfAlgebra& H, const AlgElement& z) {
  for (std::size_t i = 0; i < H.dim(); ++i) {
    if (H.multiply(z, H.basis(i)) != H.multiply(H.basis(i), z)) return false;
  }
  return true;
}

}  // namespace

AlgElement compute_integral(const HopfAlgebra& H) {
  const Field& F = H.field();
  const std::size_t n = H.dim();
  // Rows (i, r): (L_{b_i} - ε(b_i) I) Λ = 0.
  Matrix A(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix L = H.left_mult_matrix(H.basis(i));
    const FieldElement e = H.counit_vector()[i];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) A(i * n + r, c) = r == c ? F.sub(L(r, c), e) : L(r, c);
  }
  return AlgElement{one_dimensional_kernel(F, A, "integral")};
}

Vector compute_dual_integral(const HopfAlgebra& H, DualConvention conv) {
  const Field& F = H.field();
  const std::size_t n = H.dim();
  const Vector& unit = H.unit_vector();
  // Row (i, r): Σ_k c^i_{rk} λ_k - unit_r λ_i = 0 (right), mirrored for left.
  Matrix A(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : H.coproduct_terms(i)) {
      const std::size_t r = conv == DualConvention::Right ? t.left : t.right;
      const std::size_t k = conv == DualConvention::Right ? t.right : t.left;
      A(i * n + r, k) = F.add(A(i * n + r, k), t.c);
    }
    for (std::size_t r = 0; r < n; ++r) A(i * n + r, i) = F.sub(A(i * n + r, i), unit[r]);
  }
  return one_dimensional_kernel(F, A, "dual integral");
}

Vector normalize_pair(const HopfAlgebra& H, const AlgElement& Lambda, const Vector& lambda) {
  const Field& F = H.field();
  const FieldElement v = H.pair(lambda, Lambda);
  if (v.is_zero()) throw Error(ErrorCode::DegeneratePairing, "λ(Λ) = 0");
  const FieldElement s = F.inv(v);
  Vector out = lambda;
  for (auto& x : out) x = F.mul(x, s);
  return out;
}

std::pair<AlgElement, AlgElement> compute_u(const HopfAlgebra& H, const AlgElement& Lambda) {
  AlgElement u = H.zero();
  for_each_term(H, H.comultiply(Lambda), [&](std::size_t j, std::size_t k, FieldElement c) {
    u = H.add(u, H.scale(H.multiply(H.antipode(H.basis(k)), H.basis(j)), c));
  });
  AlgElement u_inv;
  try {
    u_inv = H.inverse(u);
  } catch (const Error&) {
    throw Error(ErrorCode::SingularU, "u = S(Λ_(2))Λ_(1) is not invertible");
  }
  for (std::size_t i = 0; i < H.dim(); ++i) {
    const AlgElement b = H.basis(i);
    if (power_of_s(H, b, 2) != H.multiply(H.multiply(u, b), u_inv)) {
      throw Error(ErrorCode::NotAHopfAlgebra, "S^2(b" + std::to_string(i) + ") differs from u b u^-1");
    }
  }
  return {u, u_inv};
}

AlgElement distinguished_grouplike(const HopfAlgebra& H, const AlgElement& u, const AlgElement& u_inv) {
  const Field& F = H.field();
  const AlgElement g = H.multiply(H.antipode(u_inv), u);
  const TensorElement gg = tensor_product(F, as_tensor(g), as_tensor(g));
  if (H.comultiply(g) != gg) throw Error(ErrorCode::NotGrouplike, "Δ(g) ≠ g⊗g");
  if (H.counit(g) != F.one()) throw Error(ErrorCode::NotGrouplike, "ε(g) ≠ 1");
  const AlgElement g_inv = H.inverse(g);
  for (std::size_t i = 0; i < H.dim(); ++i) {
    const AlgElement b = H.basis(i);
    if (power_of_s(H, b, 4) != H.multiply(H.multiply(g, b), g_inv)) {
      throw Error(ErrorCode::NotGrouplike, "S^4(b" + std::to_string(i) + ") ≠ g b g^-1");
    }
  }
  return g;
}

namespace {

// a = λ(aΛ_(1))S(Λ_(2)) for every basis a; returns the first failing index.
std::optional<std::size_t> dual_basis_failure(const HopfAlgebra& H, const TensorElement& dL, const Vector& lambda) {
  const Field& F = H.field();
  for (std::size_t a = 0; a < H.dim(); ++a) {
    AlgElement acc = H.zero();
    for_each_term(H, dL, [&](std::size_t j, std::size_t k, FieldElement c) {
      const FieldElement w = F.mul(c, H.pair(lambda, H.multiply(H.basis(a), H.basis(j))));
      if (!w.is_zero()) acc = H.add(acc, H.scale(H.antipode(H.basis(k)), w));
    });
    if (acc != H.basis(a)) return a;
  }
  return std::nullopt;
}

}  // namespace

IntegralData integral_data(const HopfAlgebra& H, const AlgElement& Lambda, IntegralOptions opts) {
  const Field& F = H.field();
  const std::uint64_t p = F.characteristic();
  if (!opts.allow_small_characteristic && p * p <= H.dim()) {
    throw Error(ErrorCode::PreconditionPSquare,
                "p^2 = " + std::to_string(p * p) + " does not exceed dim " + std::to_string(H.dim()));
  }
  if (Lambda.is_zero()) throw Error(ErrorCode::NoIntegral, "zero integral supplied");
  IntegralData d;
  d.lambda_H = Lambda;
  d.eps_of_lambda = H.counit(Lambda);
  if (d.eps_of_lambda.is_zero()) {
    throw Error(ErrorCode::SemisimplicityFailure, "ε(Λ) = 0: H is not semisimple");
  }
  const TensorElement dL = H.comultiply(Lambda);
  bool found = false;
  for (DualConvention c : {DualConvention::Right, DualConvention::Left}) {
    Vector lambda;
    try {
      lambda = normalize_pair(H, Lambda, compute_dual_integral(H, c));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NoIntegral) continue;
      throw;
    }
    if (!dual_basis_failure(H, dL, lambda)) {
      d.lambda_dual = std::move(lambda);
      d.convention = c;
      found = true;
      break;
    }
    if (!found && d.lambda_dual.empty()) {
      d.lambda_dual = lambda;  // keep the first candidate so reports can show the failure
      d.convention = c;
    }
  }
  if (d.lambda_dual.empty()) throw Error(ErrorCode::NoIntegral, "no nonzero dual integral under either convention");
  std::tie(d.u, d.u_inv) = compute_u(H, Lambda);
  d.g = distinguished_grouplike(H, d.u, d.u_inv);
  return d;
}

IntegralData integral_data(const HopfAlgebra& H, IntegralOptions opts) {
  return integral_data(H, compute_integral(H), opts);
}

Report integral_properties(const HopfAlgebra& H, const IntegralData& d) {
  const Field& F = H.field();
  Report r;
  const AlgElement& L = d.lambda_H;

  std::string w;
  for (std::size_t i = 0; i < H.dim() && w.empty(); ++i) {
    const AlgElement b = H.basis(i);
    const AlgElement expect = H.scale(L, H.counit(b));
    if (H.multiply(b, L) != expect) w = "left, " + basis_witness("h", i);
    else if (H.multiply(L, b) != expect) w = "right, " + basis_witness("h", i);
  }
  r.add("integral.two_sided", w.empty(), w);

  try {
    compute_integral(H);
    r.add("integral.space_dim_one", true);
  } catch (const Error& e) {
    r.add("integral.space_dim_one", false, e.what());
  }
  try {
    compute_dual_integral(H, d.convention);
    r.add("integral.dual_space_dim_one", true);
  } catch (const Error& e) {
    r.add("integral.dual_space_dim_one", false, e.what());
  }
  r.add("integral.normalized", H.pair(d.lambda_dual, L) == F.one(), "λ(Λ) = " + F.format(H.pair(d.lambda_dual, L)));
  r.add("integral.semisimple", !d.eps_of_lambda.is_zero(), "ε(Λ) = " + F.format(d.eps_of_lambda));
  r.add("integral.antipode_fixed", H.antipode(L) == L);
  r.add("integral.p_squared_exceeds_dim", F.characteristic() * F.characteristic() > H.dim(),
        "p = " + std::to_string(F.characteristic()) + ", dim = " + std::to_string(H.dim()));

  w.clear();
  for (std::size_t i = 0; i < H.dim() && w.empty(); ++i) {
    const AlgElement b = H.basis(i);
    if (H.antipode(H.antipode(b)) != H.multiply(H.multiply(d.u, b), d.u_inv)) w = basis_witness("h", i);
  }
  r.add("u.s_square_conjugation", w.empty(), w);
  r.add("u.inverse", H.multiply(d.u, d.u_inv) == H.one() && H.multiply(d.u_inv, d.u) == H.one());
  const AlgElement uSu = H.multiply(d.u, H.antipode(d.u));
  r.add("u.u_s_u_commute", uSu == H.multiply(H.antipode(d.u), d.u));
  r.add("u.u_s_u_central", is_central(H, uSu));
  return r;
}

Report verify_frobenius_identities(const HopfAlgebra& H, const IntegralData& d) {
  const Field& F = H.field();
  const std::size_t n = H.dim();
  Report r;
  const TensorElement dL = H.comultiply(d.lambda_H);
  const Vector& lambda = d.lambda_dual;

  // (i)
  auto fail = dual_basis_failure(H, dL, lambda);
  r.add("frobenius.dual_basis_left", !fail, fail ? basis_witness("a", *fail) : "");

  // (ii) a = λ(S(Λ_(2))a)Λ_(1)
  std::string w;
  for (std::size_t a = 0; a < n && w.empty(); ++a) {
    AlgElement acc = H.zero();
    for_each_term(H, dL, [&](std::size_t j, std::size_t k, FieldElement c) {
      const FieldElement s = F.mul(c, H.pair(lambda, H.multiply(H.antipode(H.basis(k)), H.basis(a))));
      if (!s.is_zero()) acc = H.add(acc, H.scale(H.basis(j), s));
    });
    if (acc != H.basis(a)) w = basis_witness("a", a);
  }
  r.add("frobenius.dual_basis_right", w.empty(), w);

  // (iii) λ(ab) = λ(S²(b)a)
  w.clear();
  for (std::size_t b = 0; b < n && w.empty(); ++b) {
    const AlgElement s2b = H.antipode(H.antipode(H.basis(b)));
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
      if (H.pair(lambda, H.multiply(H.basis(a), H.basis(b))) != H.pair(lambda, H.multiply(s2b, H.basis(a)))) {
        w = basis_witness("a", a) + ", " + basis_witness("b", b);
      }
    }
  }
  r.add("frobenius.nakayama", w.empty(), w);

  // (iv) Λ_(1)⊗u⁻¹S(Λ_(2)) is symmetric.
  const Matrix Lu_inv = H.left_mult_matrix(d.u_inv);
  const TensorElement X = apply_leg(F, apply_leg(F, dL, 1, H.antipode_matrix()), 1, Lu_inv);
  r.add("frobenius.symmetric_dual_basis", X == flip(X), tensor_witness(X, flip(X), F));

  // (v) Λ_(1) u⁻¹ S(Λ_(2)) = 1
  r.add("frobenius.dual_basis_product", contract(H, X) == H.one());

  // (vi) Λ_(2)⊗Λ_(1) = Λ_(1)⊗S²(Λ_(2))g
  const TensorElement rhs = apply_leg(F, apply_leg(F, dL, 1, H.s_square_matrix()), 1, H.right_mult_matrix(d.g));
  r.add("frobenius.radford_relation", flip(dL) == rhs, tensor_witness(flip(dL), rhs, F));

  // (vii) Λ_(2)⊗...⊗Λ_(m)⊗u⁻¹Λ_(1) = Λ_(1)⊗...⊗Λ_(m)S(u⁻¹)
  const Matrix R_su_inv = H.right_mult_matrix(H.antipode(d.u_inv));
  for (std::size_t m = 2; m <= 4; ++m) {
    const TensorElement T = iterated_coproduct(H, d.lambda_H, m);
    const TensorElement lhs = apply_leg(F, rotate_left(T), m - 1, Lu_inv);
    const TensorElement rhs_m = apply_leg(F, T, m - 1, R_su_inv);
    r.add("frobenius.shifted_relation_m" + std::to_string(m), lhs == rhs_m, tensor_witness(lhs, rhs_m, F));
  }
  return r;
}

CocommutativityFlags cocommutativity_flags(const HopfAlgebra& H, const IntegralData& d) {
  CocommutativityFlags f;
  const TensorElement dL = H.comultiply(d.lambda_H);
  f.integral_cocommutative = dL == flip(dL);
  for (std::size_t a = 0; a < H.dim() && f.lambda_symmetric; ++a)
    for (std::size_t b = 0; b < H.dim() && f.lambda_symmetric; ++b)
      f.lambda_symmetric = H.pair(d.lambda_dual, H.multiply(H.basis(a), H.basis(b))) ==
                           H.pair(d.lambda_dual, H.multiply(H.basis(b), H.basis(a)));
  f.involutory = H.is_involutory();
  return f;
}

Report cocommutativity_equivalence(const HopfAlgebra& H, const IntegralData& d) {
  const CocommutativityFlags f = cocommutativity_flags(H, d);
  auto tf = [](bool b) { return b ? "T" : "F"; };
  const std::string triple =
      std::string("(") + tf(f.integral_cocommutative) + "," + tf(f.lambda_symmetric) + "," + tf(f.involutory) + ")";
  if (f.integral_cocommutative != f.lambda_symmetric || f.lambda_symmetric != f.involutory) {
    throw Error(ErrorCode::EquivalenceViolation, "cocommutativity flags disagree: " + triple);
  }
  Report r;
  r.add("cocommutativity.equivalence", true, triple);
  return r;
}

}  // namespace hopflab
