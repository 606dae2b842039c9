#pragma once

// Exact dense linear algebra over a Field.

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hopflab/ff.hpp"
#include "hopflab/poly.hpp"

namespace hopflab {

using Vector = std::vector<FieldElement>;

/// Row-major dense matrix. Entries are only meaningful together with the
/// Field they were computed in.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(const Field& F, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const FieldElement> v);

  const std::vector<FieldElement>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

struct SolveResult {
  std::optional<Vector> solution;  // empty when the system is inconsistent
  std::vector<Vector> nullspace;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> row_reduce(const Field& F, Matrix& A);

Matrix multiply(const Field& F, const Matrix& A, const Matrix& B);
Vector apply(const Field& F, const Matrix& A, std::span<const FieldElement> x);
Matrix add(const Field& F, const Matrix& A, const Matrix& B);
Matrix subtract(const Field& F, const Matrix& A, const Matrix& B);
Matrix scale(const Field& F, const Matrix& A, FieldElement s);
Matrix transpose(const Matrix& A);
Matrix kronecker(const Field& F, const Matrix& A, const Matrix& B);
/// Rows of the blocks stacked top to bottom. Throws DimensionMismatch.
Matrix vstack(std::span<const Matrix> blocks);

/// Throws DimensionMismatch.
SolveResult solve(const Field& F, const Matrix& A, std::span<const FieldElement> b);
/// Basis of {x : A x = 0}, one vector per free column.
std::vector<Vector> kernel(const Field& F, const Matrix& A);
std::size_t rank(const Field& F, const Matrix& A);
/// Throws DimensionMismatch or SingularMatrix.
Matrix inverse(const Field& F, const Matrix& A);
FieldElement trace(const Field& F, const Matrix& A);
bool is_zero(const Matrix& A);

/// p(A) by Horner's rule.
Matrix evaluate(const Field& F, const Poly& p, const Matrix& A);

/// Monic minimal polynomial: least common multiple of Krylov minimal
/// polynomials of random vectors (falling back to unit vectors) until the
/// candidate annihilates A.
Poly min_poly(const Field& F, const Matrix& A, std::mt19937_64& rng);

/// Incrementally maintained echelon basis of a subspace of F^n.
class SubspaceBasis {
 public:
  SubspaceBasis(const Field& F, std::size_t ambient) : field_(F), ambient_(ambient) {}

  /// Adds v if it is independent; returns true when the span grew.
  bool insert(std::span<const FieldElement> v);
  /// Coordinates of v in the inserted vectors, or nullopt if v is outside.
  std::optional<Vector> coordinates(std::span<const FieldElement> v) const;

  std::size_t dimension() const { return original_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vector>& vectors() const { return original_; }

 private:
  // Echelon rows with their pivot and the combination of originals they encode.
  struct Row {
    Vector reduced;
    std::size_t pivot;
    Vector combo;
  };
  void reduce(Vector& v, Vector& combo) const;

  Field field_;
  std::size_t ambient_;
  std::vector<Row> rows_;
  std::vector<Vector> original_;
};

}  // namespace hopflab
