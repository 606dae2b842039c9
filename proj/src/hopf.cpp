#include "hopflab/hopf.hpp"

#include <algorithm>
#include <sstream>

#include "hopflab/error.hpp"
#include "hopflab/tensor.hpp"

namespace hopflab {

bool AlgElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](FieldElement e) { return e.is_zero(); });
}

TensorElement::TensorElement(std::size_t order_, std::size_t dim_) : order(order_), dim(dim_) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < order; ++i) size *= dim;
  coeffs.assign(size, FieldElement{});
}

std::size_t TensorElement::stride(std::size_t leg) const {
  std::size_t s = 1;
  for (std::size_t i = leg + 1; i < order; ++i) s *= dim;
  return s;
}

HopfAlgebra::HopfAlgebra(Field field, std::size_t dim, Vector mult, Vector comult, Vector unit,
                         Vector counit, Matrix antipode)
    : field_(std::move(field)),
      n_(dim),
      mult_(std::move(mult)),
      comult_(std::move(comult)),
      unit_(std::move(unit)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  const std::size_t cube = n_ * n_ * n_;
  if (n_ == 0 || mult_.size() != cube || comult_.size() != cube || unit_.size() != n_ ||
      counit_.size() != n_ || antipode_.rows() != n_ || antipode_.cols() != n_) {
    throw Error(ErrorCode::DimensionMismatch, "structure tensors do not match dimension " +
                                                  std::to_string(n_));
  }
  for (const Vector* v : std::initializer_list<const Vector*>{&mult_, &comult_, &unit_, &counit_, &antipode_.data()}) {
    for (auto e : *v) {
      if (!field_.contains(e)) throw Error(ErrorCode::DimensionMismatch, "entry outside field");
    }
  }
  product_terms_.resize(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        const FieldElement c = this->mult(i, j, k);
        if (!c.is_zero()) product_terms_[i * n_ + j].push_back({static_cast<std::uint32_t>(k), c});
      }
  coproduct_terms_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        const FieldElement c = this->comult(i, j, k);
        if (!c.is_zero()) {
          coproduct_terms_[i].push_back(
              {static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k), c});
        }
      }
  regular_character_.assign(n_, field_.zero());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      regular_character_[i] = field_.add(regular_character_[i], this->mult(i, j, j));
}

std::span<const ProductTerm> HopfAlgebra::product_terms(std::size_t i, std::size_t j) const {
  return product_terms_[i * n_ + j];
}

std::span<const CoproductTerm> HopfAlgebra::coproduct_terms(std::size_t i) const {
  return coproduct_terms_[i];
}

void HopfAlgebra::check(const AlgElement& a) const {
  if (a.size() != n_) {
    throw Error(ErrorCode::AlgebraMismatch, "element of length " + std::to_string(a.size()) +
                                                " in algebra of dimension " + std::to_string(n_));
  }
}

AlgElement HopfAlgebra::zero() const { return AlgElement{Vector(n_, field_.zero())}; }

AlgElement HopfAlgebra::one() const { return AlgElement{unit_}; }

AlgElement HopfAlgebra::basis(std::size_t i) const {
  AlgElement e = zero();
  e[i] = field_.one();
  return e;
}

AlgElement HopfAlgebra::add(const AlgElement& a, const AlgElement& b) const {
  check(a);
  check(b);
  AlgElement r = zero();
  for (std::size_t i = 0; i < n_; ++i) r[i] = field_.add(a[i], b[i]);
  return r;
}

AlgElement HopfAlgebra::sub(const AlgElement& a, const AlgElement& b) const {
  check(a);
  check(b);
  AlgElement r = zero();
  for (std::size_t i = 0; i < n_; ++i) r[i] = field_.sub(a[i], b[i]);
  return r;
}

AlgElement HopfAlgebra::scale(const AlgElement& a, FieldElement s) const {
  check(a);
  AlgElement r = zero();
  for (std::size_t i = 0; i < n_; ++i) r[i] = field_.mul(a[i], s);
  return r;
}

AlgElement HopfAlgebra::multiply(const AlgElement& a, const AlgElement& b) const {
  check(a);
  check(b);
  AlgElement r = zero();
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b[j].is_zero()) continue;
      const FieldElement ab = field_.mul(a[i], b[j]);
      for (const auto& t : product_terms(i, j)) r[t.k] = field_.add(r[t.k], field_.mul(ab, t.c));
    }
  }
  return r;
}

TensorElement HopfAlgebra::comultiply(const AlgElement& a) const {
  check(a);
  TensorElement t(2, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& term : coproduct_terms(i)) {
      auto& slot = t.coeffs[term.left * n_ + term.right];
      slot = field_.add(slot, field_.mul(a[i], term.c));
    }
  }
  return t;
}

AlgElement HopfAlgebra::antipode(const AlgElement& a) const {
  check(a);
  return AlgElement{hopflab::apply(field_, antipode_, a.coeffs)};
}

FieldElement HopfAlgebra::counit(const AlgElement& a) const {
  check(a);
  return pair(counit_, a);
}

FieldElement HopfAlgebra::pair(std::span<const FieldElement> covector, const AlgElement& a) const {
  check(a);
  if (covector.size() != n_) throw Error(ErrorCode::AlgebraMismatch, "covector length");
  FieldElement acc = field_.zero();
  for (std::size_t i = 0; i < n_; ++i) {
    if (!a[i].is_zero() && !covector[i].is_zero()) acc = field_.add(acc, field_.mul(covector[i], a[i]));
  }
  return acc;
}

Matrix HopfAlgebra::left_mult_matrix(const AlgElement& a) const {
  Matrix L(n_, n_);
  for (std::size_t j = 0; j < n_; ++j) L.set_column(j, multiply(a, basis(j)).coeffs);
  return L;
}

Matrix HopfAlgebra::right_mult_matrix(const AlgElement& a) const {
  Matrix R(n_, n_);
  for (std::size_t j = 0; j < n_; ++j) R.set_column(j, multiply(basis(j), a).coeffs);
  return R;
}

Matrix HopfAlgebra::s_square_matrix() const { return hopflab::multiply(field_, antipode_, antipode_); }

bool HopfAlgebra::is_involutory() const { return s_square_matrix() == Matrix::identity(field_, n_); }

AlgElement HopfAlgebra::inverse(const AlgElement& a) const {
  const auto result = solve(field_, left_mult_matrix(a), unit_);
  if (!result.solution || !result.nullspace.empty()) {
    throw Error(ErrorCode::NotInvertible, "element has no inverse");
  }
  AlgElement x{*result.solution};
  if (multiply(x, a) != one()) throw Error(ErrorCode::NotInvertible, "left inverse is not two-sided");
  return x;
}

namespace {

std::string tuple_str(std::initializer_list<std::size_t> idx) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (auto i : idx) {
    if (!first) os << ',';
    first = false;
    os << i;
  }
  os << ')';
  return os.str();
}

}  // namespace

Report verify_axioms(const HopfAlgebra& H) {
  const Field& F = H.field();
  const std::size_t n = H.dim();
  Report report;

  // Associativity: (b_i b_j) b_k = b_i (b_j b_k).
  {
    std::string witness;
    Vector lhs(n), rhs(n);
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      for (std::size_t j = 0; j < n && witness.empty(); ++j)
        for (std::size_t k = 0; k < n; ++k) {
          std::fill(lhs.begin(), lhs.end(), F.zero());
          std::fill(rhs.begin(), rhs.end(), F.zero());
          for (const auto& a : H.product_terms(i, j))
            for (const auto& b : H.product_terms(a.k, k)) lhs[b.k] = F.add(lhs[b.k], F.mul(a.c, b.c));
          for (const auto& a : H.product_terms(j, k))
            for (const auto& b : H.product_terms(i, a.k)) rhs[b.k] = F.add(rhs[b.k], F.mul(a.c, b.c));
          if (lhs != rhs) {
            witness = "basis triple " + tuple_str({i, j, k});
            break;
          }
        }
    report.add("associativity", witness.empty(), witness);
  }

  // Unit: 1 b_i = b_i = b_i 1.
  {
    std::string witness;
    for (std::size_t i = 0; i < n; ++i) {
      if (H.multiply(H.one(), H.basis(i)) != H.basis(i) || H.multiply(H.basis(i), H.one()) != H.basis(i)) {
        witness = "basis element " + std::to_string(i);
        break;
      }
    }
    report.add("unit", witness.empty(), witness);
  }

  // Coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ.
  {
    std::string witness;
    for (std::size_t i = 0; i < n; ++i) {
      const TensorElement d = H.comultiply(H.basis(i));
      const TensorElement lhs = comultiply_leg(H, d, 0);
      const TensorElement rhs = comultiply_leg(H, d, 1);
      const std::size_t diff = first_difference(lhs, rhs);
      if (diff != std::string::npos) {
        witness = "basis element " + std::to_string(i) + " at " + describe_index(lhs, diff);
        break;
      }
    }
    report.add("coassociativity", witness.empty(), witness);
  }

  // Counit: (ε⊗id)Δ = id = (id⊗ε)Δ.
  {
    std::string witness;
    for (std::size_t i = 0; i < n; ++i) {
      const TensorElement d = H.comultiply(H.basis(i));
      const TensorElement left = counit_leg(H, d, 0);
      const TensorElement right = counit_leg(H, d, 1);
      if (left.coeffs != H.basis(i).coeffs || right.coeffs != H.basis(i).coeffs) {
        witness = "basis element " + std::to_string(i);
        break;
      }
    }
    report.add("counit", witness.empty(), witness);
  }

  // Δ and ε are algebra maps.
  {
    std::string delta_witness, eps_witness;
    const TensorElement one2 = tensor_one(H, 2);
    if (H.comultiply(H.one()) != one2) delta_witness = "Δ(1) ≠ 1⊗1";
    if (H.counit(H.one()) != F.one()) eps_witness = "ε(1) ≠ 1";
    std::vector<TensorElement> deltas;
    for (std::size_t i = 0; i < n; ++i) deltas.push_back(H.comultiply(H.basis(i)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const AlgElement ij = H.multiply(H.basis(i), H.basis(j));
        if (delta_witness.empty() && H.comultiply(ij) != multiply(H, deltas[i], deltas[j])) {
          delta_witness = "basis pair " + tuple_str({i, j});
        }
        if (eps_witness.empty() &&
            H.counit(ij) != F.mul(H.counit_vector()[i], H.counit_vector()[j])) {
          eps_witness = "basis pair " + tuple_str({i, j});
        }
      }
    report.add("comultiplication_multiplicative", delta_witness.empty(), delta_witness);
    report.add("counit_multiplicative", eps_witness.empty(), eps_witness);
  }

  // Antipode: m(S⊗id)Δ = ηε = m(id⊗S)Δ.
  {
    std::string witness;
    const Matrix& S = H.antipode_matrix();
    for (std::size_t i = 0; i < n && witness.empty(); ++i) {
      const TensorElement d = H.comultiply(H.basis(i));
      const AlgElement left = contract(H, apply_leg(F, d, 0, S));
      const AlgElement right = contract(H, apply_leg(F, d, 1, S));
      const AlgElement expected = H.scale(H.one(), H.counit_vector()[i]);
      if (left != expected) witness = "m(S⊗id)Δ at basis element " + std::to_string(i);
      else if (right != expected) witness = "m(id⊗S)Δ at basis element " + std::to_string(i);
    }
    report.add("antipode", witness.empty(), witness);
  }
  return report;
}

Matrix solve_antipode(const Field& F, std::size_t n, const Vector& mult, const Vector& comult,
                      const Vector& unit, const Vector& counit) {
  // Unknown S(l, j) (coefficient of b_l in S(b_j)) at index l n + j.
  // m(S⊗id)Δ(b_i) = Σ_{j,k} c^i_{jk} Σ_l S(l,j) b_l b_k
  // m(id⊗S)Δ(b_i) = Σ_{j,k} c^i_{jk} Σ_l S(l,k) b_j b_l
  const std::size_t unknowns = n * n;
  Matrix A(2 * n * n, unknowns);
  Vector rhs(2 * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const FieldElement c = comult[(i * n + j) * n + k];
        if (c.is_zero()) continue;
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t r = 0; r < n; ++r) {
            const FieldElement left = mult[(l * n + k) * n + r];
            if (!left.is_zero()) {
              auto& slot = A(i * n + r, l * n + j);
              slot = F.add(slot, F.mul(c, left));
            }
            const FieldElement right = mult[(j * n + l) * n + r];
            if (!right.is_zero()) {
              auto& slot = A(n * n + i * n + r, l * n + k);
              slot = F.add(slot, F.mul(c, right));
            }
          }
      }
    for (std::size_t r = 0; r < n; ++r) {
      rhs[i * n + r] = F.mul(counit[i], unit[r]);
      rhs[n * n + i * n + r] = F.mul(counit[i], unit[r]);
    }
  }
  const auto result = solve(F, A, rhs);
  if (!result.solution) throw Error(ErrorCode::NotAHopfAlgebra, "no antipode satisfies the bialgebra data");
  if (!result.nullspace.empty()) throw Error(ErrorCode::NotAHopfAlgebra, "antipode is not unique");
  Matrix S(n, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = 0; j < n; ++j) S(l, j) = (*result.solution)[l * n + j];
  return S;
}

HopfAlgebra base_change(const HopfAlgebra& H, const FieldEmbedding& embed) {
  auto map = [&](const Vector& v) {
    Vector out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [&](FieldElement e) { return embed(e); });
    return out;
  };
  Matrix S(H.dim(), H.dim());
  for (std::size_t i = 0; i < H.dim(); ++i)
    for (std::size_t j = 0; j < H.dim(); ++j) S(i, j) = embed(H.antipode_matrix()(i, j));
  return HopfAlgebra(embed.target(), H.dim(), map(H.mult_tensor()), map(H.comult_tensor()),
                     map(H.unit_vector()), map(H.counit_vector()), std::move(S));
}

}  // namespace hopflab
