#pragma once

// Finite-dimensional Hopf algebras given by structure constants.

#include <cstdint>
#include <span>
#include <vector>

#include "hopflab/ff.hpp"
#include "hopflab/linalg.hpp"
#include "hopflab/report.hpp"

namespace hopflab {

/// Coefficient vector of an element of H in the declared basis.
struct AlgElement {
  Vector coeffs;

  std::size_t size() const { return coeffs.size(); }
  FieldElement operator[](std::size_t i) const { return coeffs[i]; }
  FieldElement& operator[](std::size_t i) { return coeffs[i]; }
  bool is_zero() const;

  friend bool operator==(const AlgElement&, const AlgElement&) = default;
};

/// Element of H^{⊗m}; coefficient of b_{i_1}⊗...⊗b_{i_m} lives at the
/// lexicographic index i_1 n^{m-1} + ... + i_m.
struct TensorElement {
  std::size_t order = 1;
  std::size_t dim = 0;
  Vector coeffs;

  TensorElement() = default;
  TensorElement(std::size_t order, std::size_t dim);

  std::size_t stride(std::size_t leg) const;
  std::size_t leg_index(std::size_t flat, std::size_t leg) const {
    return (flat / stride(leg)) % dim;
  }

  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

struct ProductTerm {
  std::uint32_t k;
  FieldElement c;
};

struct CoproductTerm {
  std::uint32_t left;
  std::uint32_t right;
  FieldElement c;
};

class HopfAlgebra {
 public:
  /// mult[(i n + j) n + k] is the coefficient of b_k in b_i b_j;
  /// comult[(i n + j) n + k] the coefficient of b_j⊗b_k in Δ(b_i);
  /// column i of antipode is S(b_i). Shapes are checked, axioms are not.
  HopfAlgebra(Field field, std::size_t dim, Vector mult, Vector comult, Vector unit, Vector counit,
              Matrix antipode);

  const Field& field() const { return field_; }
  std::size_t dim() const { return n_; }

  FieldElement mult(std::size_t i, std::size_t j, std::size_t k) const {
    return mult_[(i * n_ + j) * n_ + k];
  }
  FieldElement comult(std::size_t i, std::size_t j, std::size_t k) const {
    return comult_[(i * n_ + j) * n_ + k];
  }
  const Vector& mult_tensor() const { return mult_; }
  const Vector& comult_tensor() const { return comult_; }
  const Vector& unit_vector() const { return unit_; }
  const Vector& counit_vector() const { return counit_; }
  const Matrix& antipode_matrix() const { return antipode_; }

  std::span<const ProductTerm> product_terms(std::size_t i, std::size_t j) const;
  std::span<const CoproductTerm> coproduct_terms(std::size_t i) const;

  AlgElement zero() const;
  AlgElement one() const;
  AlgElement basis(std::size_t i) const;

  AlgElement add(const AlgElement& a, const AlgElement& b) const;
  AlgElement sub(const AlgElement& a, const AlgElement& b) const;
  AlgElement scale(const AlgElement& a, FieldElement s) const;

  /// Throws AlgebraMismatch on wrong lengths.
  AlgElement multiply(const AlgElement& a, const AlgElement& b) const;
  TensorElement comultiply(const AlgElement& a) const;
  AlgElement antipode(const AlgElement& a) const;
  FieldElement counit(const AlgElement& a) const;

  /// Matrix of x ↦ a x; its trace is the regular character at a.
  Matrix left_mult_matrix(const AlgElement& a) const;
  /// Matrix of x ↦ x a.
  Matrix right_mult_matrix(const AlgElement& a) const;
  Matrix s_square_matrix() const;
  bool is_involutory() const;

  /// Regular character χ_H as a covector: χ_H(b_i) = tr L_{b_i}.
  const Vector& regular_character() const { return regular_character_; }
  /// Σ_i f_i a_i for a covector f.
  FieldElement pair(std::span<const FieldElement> covector, const AlgElement& a) const;

  /// Solves two-sided inverse by linear algebra. Throws NotInvertible.
  AlgElement inverse(const AlgElement& a) const;

  friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.mult_ == b.mult_ && a.comult_ == b.comult_ &&
           a.unit_ == b.unit_ && a.counit_ == b.counit_ && a.antipode_ == b.antipode_;
  }

 private:
  void check(const AlgElement& a) const;

  Field field_;
  std::size_t n_;
  Vector mult_;
  Vector comult_;
  Vector unit_;
  Vector counit_;
  Matrix antipode_;
  std::vector<std::vector<ProductTerm>> product_terms_;
  std::vector<std::vector<CoproductTerm>> coproduct_terms_;
  Vector regular_character_;
};

/// Exhaustive check over basis tuples of associativity, unit,
/// coassociativity, counit, multiplicativity of Δ and ε, and the antipode
/// identity. One report entry per axiom family; the witness names the first
/// failing basis tuple.
Report verify_axioms(const HopfAlgebra& H);

/// Solves m(S⊗id)Δ = ηε = m(id⊗S)Δ for S given the bialgebra data.
/// Throws NotAHopfAlgebra if no unique solution exists.
Matrix solve_antipode(const Field& F, std::size_t dim, const Vector& mult, const Vector& comult,
                      const Vector& unit, const Vector& counit);

/// H over a larger field through `embed`.
HopfAlgebra base_change(const HopfAlgebra& H, const FieldEmbedding& embed);

}  // namespace hopflab
