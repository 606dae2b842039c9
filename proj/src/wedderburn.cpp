#include "hopflab/wedderburn.hpp"

#include <algorithm>
#include <random>

#include "hopflab/error.hpp"
#include "hopflab/poly.hpp"

namespace hopflab {

std::vector<AlgElement> center(const HopfAlgebra& H) {
  const Field& F = H.field();
  const std::size_t n = H.dim();
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    // z ↦ b_i z - z b_i
    blocks.push_back(subtract(F, H.right_mult_matrix(H.basis(i)), H.left_mult_matrix(H.basis(i))));
  }
  std::vector<AlgElement> out;
  for (auto& v : kernel(F, vstack(blocks))) out.push_back(AlgElement{std::move(v)});
  return out;
}

namespace {

// p(z) with constant term c·e, computed by Horner in the block with unit e.
AlgElement evaluate_in_block(const HopfAlgebra& H, const Poly& p, const AlgElement& z, const AlgElement& e) {
  AlgElement acc = H.zero();
  for (int i = p.degree(); i >= 0; --i) acc = H.add(H.multiply(acc, z), H.scale(e, p.coeff(i)));
  return acc;
}

struct Block {
  AlgElement e;
  std::vector<AlgElement> basis;  // of e·Z(H)
};

Block restrict_block(const HopfAlgebra& H, const AlgElement& e, const std::vector<AlgElement>& zbasis) {
  SubspaceBasis sb(H.field(), H.dim());
  Block b{e, {}};
  for (const auto& z : zbasis) {
    AlgElement ez = H.multiply(e, z);
    if (sb.insert(ez.coeffs)) b.basis.push_back(std::move(ez));
  }
  return b;
}

void split(const HopfAlgebra& H, const Block& block, std::mt19937_64& rng, std::vector<AlgElement>& out) {
  const Field& F = H.field();
  const std::size_t m = block.basis.size();
  if (m == 1) {
    out.push_back(block.e);
    return;
  }
  SubspaceBasis coords(F, H.dim());
  for (const auto& b : block.basis) coords.insert(b.coeffs);
  const PolyRing R(F);
  constexpr int kAttempts = 40;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    AlgElement z = H.zero();
    for (const auto& b : block.basis) z = H.add(z, H.scale(b, F.random(rng)));
    // Matrix of multiplication by z on e·Z(H).
    Matrix M(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      auto c = coords.coordinates(H.multiply(z, block.basis[j]).coeffs);
      if (!c) throw Error(ErrorCode::NotSemisimple, "center is not closed under multiplication");
      M.set_column(j, *c);
    }
    const Poly mp = min_poly(F, M, rng);
    const Factorization fac = R.factor(mp, rng);
    for (const auto& f : fac.factors) {
      if (f.multiplicity > 1) throw Error(ErrorCode::NotSemisimple, "center has nilpotent elements");
    }
    if (fac.factors.size() == 1) {
      const int d = fac.factors[0].factor.degree();
      if (d > 1 && static_cast<std::size_t>(d) == m) {
        throw FieldTooSmall(d, "block of the center is a degree " + std::to_string(d) + " field extension");
      }
      continue;
    }
    for (std::size_t j = 0; j < fac.factors.size(); ++j) {
      const Poly& fj = fac.factors[j].factor;
      const Poly cofactor = R.div(mp, fj);
      // s·cofactor ≡ 1 mod fj, so s·cofactor is the CRT idempotent.
      auto [g, s, t] = R.ext_gcd(cofactor, fj);
      (void)g;
      (void)t;
      const Poly idem = R.mod(R.mul(s, cofactor), mp);
      const AlgElement ej = evaluate_in_block(H, idem, z, block.e);
      split(H, restrict_block(H, ej, block.basis), rng, out);
    }
    return;
  }
  throw Error(ErrorCode::NotSemisimple, "random central elements failed to split a block of dimension " +
                                            std::to_string(m));
}

bool codes_greater(const AlgElement& a, const AlgElement& b) { return b.coeffs < a.coeffs; }

}  // namespace

std::vector<AlgElement> central_primitive_idempotents(const HopfAlgebra& H, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<AlgElement> out;
  split(H, restrict_block(H, H.one(), center(H)), rng, out);
  const Field& F = H.field();
  std::sort(out.begin(), out.end(), [&](const AlgElement& a, const AlgElement& b) {
    const bool ta = H.counit(a) == F.one(), tb = H.counit(b) == F.one();
    if (ta != tb) return ta;
    return codes_greater(a, b);
  });
  return out;
}

std::size_t block_dimension(const HopfAlgebra& H, const AlgElement& e) {
  const std::size_t r = rank(H.field(), H.left_mult_matrix(e));
  std::size_t d = 0;
  while ((d + 1) * (d + 1) <= r) ++d;
  if (d * d != r) throw Error(ErrorCode::NonSquareBlock, "block of rank " + std::to_string(r) + " is not split");
  return d;
}

std::vector<Vector> irreducible_characters(const HopfAlgebra& H, const std::vector<AlgElement>& idempotents,
                                           const std::vector<std::size_t>& dims) {
  const Field& F = H.field();
  std::vector<Vector> out;
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    const FieldElement d = F.from_int(static_cast<std::int64_t>(dims[i]));
    if (d.is_zero()) throw Error(ErrorCode::DimensionNotInvertible, "block dimension divisible by p");
    const FieldElement dinv = F.inv(d);
    Vector chi(H.dim());
    for (std::size_t b = 0; b < H.dim(); ++b) {
      chi[b] = F.mul(H.pair(H.regular_character(), H.multiply(H.basis(b), idempotents[i])), dinv);
    }
    out.push_back(std::move(chi));
  }
  return out;
}

Vector schur_elements(const HopfAlgebra& H, const std::vector<Vector>& characters, const Vector& lambda,
                      const AlgElement& u) {
  const Field& F = H.field();
  const std::size_t n = H.dim();
  Matrix A(n, characters.size());
  Vector rhs(n);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t i = 0; i < characters.size(); ++i) A(b, i) = characters[i][b];
    rhs[b] = H.pair(lambda, H.multiply(u, H.basis(b)));  // (λ↼u)(b) = λ(ub)
  }
  const SolveResult r = solve(F, A, rhs);
  if (!r.solution || !r.nullspace.empty()) {
    throw Error(ErrorCode::InconsistentSchur, "λ↼u is not a unique combination of irreducible characters");
  }
  Vector c;
  for (auto x : *r.solution) {
    if (x.is_zero()) throw Error(ErrorCode::InconsistentSchur, "zero coefficient for an irreducible character");
    c.push_back(F.inv(x));
  }
  return c;
}

WedderburnData wedderburn(const HopfAlgebra& H, const IntegralData& id, std::uint64_t seed) {
  WedderburnData wd;
  wd.idempotents = central_primitive_idempotents(H, seed);
  for (const auto& e : wd.idempotents) wd.dims.push_back(block_dimension(H, e));
  wd.characters = irreducible_characters(H, wd.idempotents, wd.dims);
  wd.schur = schur_elements(H, wd.characters, id.lambda_dual, id.u);
  for (const auto& e : wd.idempotents) wd.lambda_of_e.push_back(H.pair(id.lambda_dual, e));
  wd.regular_character = H.regular_character();
  for (const auto& e : wd.idempotents) {
    const AlgElement se = H.antipode(e);
    auto it = std::find(wd.idempotents.begin(), wd.idempotents.end(), se);
    if (it == wd.idempotents.end()) throw Error(ErrorCode::NotSemisimple, "S(e_i) is not a central primitive idempotent");
    wd.dual_index.push_back(static_cast<std::size_t>(it - wd.idempotents.begin()));
  }
  return wd;
}

namespace {

std::string index_witness(std::size_t i) { return "i=" + std::to_string(i); }

// Σ_t c_t f(b_left, b_right) over Δ(Λ).
template <class Fn>
void for_each_term(const HopfAlgebra& H, const TensorElement& t, Fn&& fn) {
  const std::size_t n = H.dim();
  for (std::size_t flat = 0; flat < t.coeffs.size(); ++flat) {
    if (!t.coeffs[flat].is_zero()) fn(flat / n, flat % n, t.coeffs[flat]);
  }
}

}  // namespace

Report verify_block_identities(const HopfAlgebra& H, const WedderburnData& wd, const IntegralData& id) {
  const Field& F = H.field();
  const std::size_t n = H.dim();
  const std::size_t r = wd.idempotents.size();
  Report rep;
  std::string w;

  AlgElement sum = H.zero();
  for (const auto& e : wd.idempotents) sum = H.add(sum, e);
  rep.add("wedderburn.idempotents_sum_to_one", sum == H.one());
  w.clear();
  for (std::size_t i = 0; i < r && w.empty(); ++i)
    for (std::size_t j = 0; j < r && w.empty(); ++j) {
      const AlgElement p = H.multiply(wd.idempotents[i], wd.idempotents[j]);
      if (p != (i == j ? wd.idempotents[i] : H.zero())) w = "i=" + std::to_string(i) + ", j=" + std::to_string(j);
    }
  rep.add("wedderburn.idempotents_orthogonal", w.empty(), w);
  w.clear();
  for (std::size_t i = 0; i < r && w.empty(); ++i)
    for (std::size_t b = 0; b < n && w.empty(); ++b)
      if (H.multiply(wd.idempotents[i], H.basis(b)) != H.multiply(H.basis(b), wd.idempotents[i])) w = index_witness(i);
  rep.add("wedderburn.idempotents_central", w.empty(), w);

  std::size_t sq = 0;
  for (auto d : wd.dims) sq += d * d;
  rep.add("wedderburn.sum_of_squares", sq == n, std::to_string(sq) + " vs " + std::to_string(n));
  bool p_ok = true;
  for (auto d : wd.dims) p_ok = p_ok && d < F.characteristic();
  rep.add("wedderburn.p_exceeds_block_dims", p_ok);

  w.clear();
  for (std::size_t i = 0; i < r && w.empty(); ++i)
    for (std::size_t j = 0; j < r && w.empty(); ++j) {
      const FieldElement expect = i == j ? F.from_int(static_cast<std::int64_t>(wd.dims[i])) : F.zero();
      if (H.pair(wd.characters[i], wd.idempotents[j]) != expect) w = "i=" + std::to_string(i) + ", j=" + std::to_string(j);
    }
  rep.add("wedderburn.character_on_idempotents", w.empty(), w);

  Vector combo(n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t b = 0; b < n; ++b)
      combo[b] = F.add(combo[b], F.mul(F.from_int(static_cast<std::int64_t>(wd.dims[i])), wd.characters[i][b]));
  rep.add("wedderburn.regular_character_decomposition", combo == wd.regular_character);

  w.clear();
  for (std::size_t i = 0; i < r && w.empty(); ++i) {
    const std::size_t j = wd.dual_index[i];
    if (wd.dual_index[j] != i) w = index_witness(i) + " not an involution";
    for (std::size_t b = 0; b < n && w.empty(); ++b)
      if (H.pair(wd.characters[i], H.antipode(H.basis(b))) != wd.characters[j][b]) w = index_witness(i) + ", χ∘S";
  }
  rep.add("wedderburn.dual_index_involution", w.empty(), w);

  // Schur elements are inverse block dimensions for the form λ↼u.
  w.clear();
  for (std::size_t i = 0; i < r && w.empty(); ++i)
    if (wd.schur[i] != F.inv(F.from_int(static_cast<std::int64_t>(wd.dims[i])))) w = index_witness(i);
  rep.add("schur.inverse_dimension", w.empty(), w);

  // (a) u = u Σ d_i c_i e_i, i.e. Σ d_i c_i e_i = 1.
  AlgElement central = H.zero();
  for (std::size_t i = 0; i < r; ++i) {
    const FieldElement dc = F.mul(F.from_int(static_cast<std::int64_t>(wd.dims[i])), wd.schur[i]);
    central = H.add(central, H.scale(wd.idempotents[i], dc));
  }
  rep.add("blocks.u_unit_relation", H.multiply(id.u, central) == id.u && central == H.one());

  const TensorElement dL = H.comultiply(id.lambda_H);

  // (b) u = χ_H(Λ_(1)) S(Λ_(2))
  AlgElement ub = H.zero();
  for_each_term(H, dL, [&](std::size_t j, std::size_t k, FieldElement c) {
    const FieldElement s = F.mul(c, wd.regular_character[j]);
    if (!s.is_zero()) ub = H.add(ub, H.scale(H.antipode(H.basis(k)), s));
  });
  rep.add("blocks.u_via_regular_character", ub == id.u);

  // (c) λ(e_i) = d_i χ_i(u⁻¹)
  w.clear();
  for (std::size_t i = 0; i < r && w.empty(); ++i) {
    const FieldElement rhs = F.mul(F.from_int(static_cast<std::int64_t>(wd.dims[i])), H.pair(wd.characters[i], id.u_inv));
    if (wd.lambda_of_e[i] != rhs) w = index_witness(i);
  }
  rep.add("blocks.lambda_of_idempotent", w.empty(), w);

  // (d) u S(u) = S(u) u = ε(Λ) Σ d_i²/λ(e_i) e_i
  AlgElement rhs_d = H.zero();
  bool lambda_e_nonzero = true;
  for (std::size_t i = 0; i < r; ++i) {
    if (wd.lambda_of_e[i].is_zero()) {
      lambda_e_nonzero = false;
      continue;
    }
    const FieldElement d2 = F.from_int(static_cast<std::int64_t>(wd.dims[i] * wd.dims[i]));
    rhs_d = H.add(rhs_d, H.scale(wd.idempotents[i], F.div(F.mul(id.eps_of_lambda, d2), wd.lambda_of_e[i])));
  }
  const AlgElement uSu = H.multiply(id.u, H.antipode(id.u));
  rep.add("blocks.u_s_u_decomposition",
          lambda_e_nonzero && uSu == rhs_d && H.multiply(H.antipode(id.u), id.u) == uSu,
          lambda_e_nonzero ? "" : "λ(e_i) = 0");

  // (e) λ(e_i) = λ(S(e_i))
  w.clear();
  for (std::size_t i = 0; i < r && w.empty(); ++i)
    if (wd.lambda_of_e[i] != H.pair(id.lambda_dual, H.antipode(wd.idempotents[i]))) w = index_witness(i);
  rep.add("blocks.lambda_antipode_invariant", w.empty(), w);

  // (f) e_i = d_i χ_i(Λ_(1)) u⁻¹S(Λ_(2)) = d_i χ_i(u⁻¹S(Λ_(2))) Λ_(1)
  w.clear();
  for (std::size_t i = 0; i < r && w.empty(); ++i) {
    const FieldElement d = F.from_int(static_cast<std::int64_t>(wd.dims[i]));
    AlgElement first = H.zero(), second = H.zero();
    for_each_term(H, dL, [&](std::size_t j, std::size_t k, FieldElement c) {
      const AlgElement uS = H.multiply(id.u_inv, H.antipode(H.basis(k)));
      first = H.add(first, H.scale(uS, F.mul(c, wd.characters[i][j])));
      second = H.add(second, H.scale(H.basis(j), F.mul(c, H.pair(wd.characters[i], uS))));
    });
    if (H.scale(first, d) != wd.idempotents[i]) w = index_witness(i) + ", first form";
    else if (H.scale(second, d) != wd.idempotents[i]) w = index_witness(i) + ", second form";
  }
  rep.add("blocks.idempotent_formula", w.empty(), w);

  // (g) λ↼u = u⇀λ = χ_H
  Vector left(n), right(n);
  for (std::size_t b = 0; b < n; ++b) {
    left[b] = H.pair(id.lambda_dual, H.multiply(id.u, H.basis(b)));
    right[b] = H.pair(id.lambda_dual, H.multiply(H.basis(b), id.u));
  }
  rep.add("blocks.symmetric_form_is_regular_character", left == wd.regular_character && right == wd.regular_character);

  // g = S(u⁻¹)u = u S(u⁻¹)
  rep.add("blocks.grouplike_two_forms", H.multiply(id.u, H.antipode(id.u_inv)) == id.g);
  return rep;
}

HopfAlgebra extend_field(const HopfAlgebra& H, int factor) {
  const Field& F = H.field();
  const Field target = Field::automatic(F.characteristic(), F.degree() * factor);
  return base_change(H, FieldEmbedding(F, target));
}

}  // namespace hopflab
