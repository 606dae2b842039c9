#include "hopflab/module.hpp"

#include "hopflab/error.hpp"

namespace hopflab {

namespace {

void check_shape(const HopfAlgebra& H, const ModuleRep& V) {
  if (V.action.size() != H.dim()) {
    throw Error(ErrorCode::AlgebraMismatch, "module has " + std::to_string(V.action.size()) +
                                                " action matrices for an algebra of dimension " +
                                                std::to_string(H.dim()));
  }
  for (const auto& M : V.action) {
    if (M.rows() != V.dim || M.cols() != V.dim) {
      throw Error(ErrorCode::NotAModule, "action matrix does not match module dimension");
    }
  }
}

}  // namespace

Matrix act(const HopfAlgebra& H, const ModuleRep& V, const AlgElement& a) {
  check_shape(H, V);
  if (a.size() != H.dim()) throw Error(ErrorCode::AlgebraMismatch, "element length");
  const Field& F = H.field();
  Matrix out(V.dim, V.dim);
  for (std::size_t i = 0; i < H.dim(); ++i) {
    if (a[i].is_zero()) continue;
    out = add(F, out, scale(F, V.action[i], a[i]));
  }
  return out;
}

Report module_verify(const HopfAlgebra& H, const ModuleRep& V) {
  check_shape(H, V);
  const Field& F = H.field();
  Report report;
  std::string witness;
  for (std::size_t i = 0; i < H.dim() && witness.empty(); ++i) {
    for (std::size_t j = 0; j < H.dim(); ++j) {
      Matrix rhs(V.dim, V.dim);
      for (const auto& t : H.product_terms(i, j)) rhs = add(F, rhs, scale(F, V.action[t.k], t.c));
      if (multiply(F, V.action[i], V.action[j]) != rhs) {
        witness = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
      }
    }
  }
  report.add("module.multiplicative", witness.empty(), witness);
  const bool unital = act(H, V, H.one()) == Matrix::identity(F, V.dim);
  report.add("module.unital", unital, unital ? "" : "ρ(1) ≠ I");
  return report;
}

void require_module(const HopfAlgebra& H, const ModuleRep& V) {
  const Report r = module_verify(H, V);
  for (const auto& c : r.checks()) {
    if (!c.passed) throw Error(ErrorCode::ModuleAxiomViolation, c.name + " fails at " + c.witness);
  }
}

Vector module_character(const HopfAlgebra& H, const ModuleRep& V) {
  check_shape(H, V);
  Vector chi(H.dim());
  for (std::size_t i = 0; i < H.dim(); ++i) chi[i] = trace(H.field(), V.action[i]);
  return chi;
}

ModuleRep module_dual(const HopfAlgebra& H, const ModuleRep& V) {
  check_shape(H, V);
  ModuleRep D{V.dim, {}};
  for (std::size_t i = 0; i < H.dim(); ++i) {
    D.action.push_back(transpose(act(H, V, H.antipode(H.basis(i)))));
  }
  return D;
}

ModuleRep module_tensor(const HopfAlgebra& H, const ModuleRep& V, const ModuleRep& W) {
  check_shape(H, V);
  check_shape(H, W);
  const Field& F = H.field();
  ModuleRep T{V.dim * W.dim, {}};
  for (std::size_t i = 0; i < H.dim(); ++i) {
    Matrix M(T.dim, T.dim);
    for (const auto& term : H.coproduct_terms(i)) {
      M = add(F, M, scale(F, kronecker(F, V.action[term.left], W.action[term.right]), term.c));
    }
    T.action.push_back(std::move(M));
  }
  return T;
}

ModuleRep regular_module(const HopfAlgebra& H) {
  ModuleRep R{H.dim(), {}};
  for (std::size_t i = 0; i < H.dim(); ++i) R.action.push_back(H.left_mult_matrix(H.basis(i)));
  return R;
}

ModuleRep trivial_module(const HopfAlgebra& H) {
  ModuleRep T{1, {}};
  for (std::size_t i = 0; i < H.dim(); ++i) {
    Matrix M(1, 1);
    M(0, 0) = H.counit_vector()[i];
    T.action.push_back(std::move(M));
  }
  return T;
}

Vector convolve(const HopfAlgebra& H, const Vector& chi_v, const Vector& chi_w) {
  const Field& F = H.field();
  Vector out(H.dim());
  for (std::size_t i = 0; i < H.dim(); ++i) {
    FieldElement acc = F.zero();
    for (const auto& t : H.coproduct_terms(i)) {
      acc = F.add(acc, F.mul(t.c, F.mul(chi_v[t.left], chi_w[t.right])));
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace hopflab
