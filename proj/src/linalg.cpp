#include "hopflab/linalg.hpp"

#include <algorithm>

#include "hopflab/error.hpp"

namespace hopflab {

Matrix Matrix::identity(const Field& F, std::size_t n) {
  Matrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = F.one();
  return I;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const FieldElement> v) {
  if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "column length");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

std::vector<std::size_t> row_reduce(const Field& F, Matrix& A) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
    std::size_t sel = r;
    while (sel < A.rows() && A(sel, c).is_zero()) ++sel;
    if (sel == A.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(sel, j), A(r, j));
    }
    const FieldElement inv = F.inv(A(r, c));
    for (std::size_t j = c; j < A.cols(); ++j) A(r, j) = F.mul(A(r, j), inv);
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (i == r) continue;
      const FieldElement t = A(i, c);
      if (t.is_zero()) continue;
      for (std::size_t j = c; j < A.cols(); ++j) {
        if (!A(r, j).is_zero()) A(i, j) = F.sub(A(i, j), F.mul(t, A(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix multiply(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.cols() != B.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
  Matrix C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t k = 0; k < A.cols(); ++k) {
      const FieldElement a = A(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < B.cols(); ++j) {
        const FieldElement b = B(k, j);
        if (!b.is_zero()) C(i, j) = F.add(C(i, j), F.mul(a, b));
      }
    }
  }
  return C;
}

Vector apply(const Field& F, const Matrix& A, std::span<const FieldElement> x) {
  if (A.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shapes");
  Vector y(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    FieldElement acc = F.zero();
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (!x[j].is_zero() && !A(i, j).is_zero()) acc = F.add(acc, F.mul(A(i, j), x[j]));
    }
    y[i] = acc;
  }
  return y;
}

Matrix add(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix sum shapes");
  }
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = F.add(A(i, j), B(i, j));
  return C;
}

Matrix subtract(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix difference shapes");
  }
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = F.sub(A(i, j), B(i, j));
  return C;
}

Matrix scale(const Field& F, const Matrix& A, FieldElement s) {
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = F.mul(A(i, j), s);
  return C;
}

Matrix transpose(const Matrix& A) {
  Matrix T(A.cols(), A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) T(j, i) = A(i, j);
  return T;
}

Matrix kronecker(const Field& F, const Matrix& A, const Matrix& B) {
  Matrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const FieldElement a = A(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < B.rows(); ++k)
        for (std::size_t l = 0; l < B.cols(); ++l)
          K(i * B.rows() + k, j * B.cols() + l) = F.mul(a, B(k, l));
    }
  }
  return K;
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorCode::DimensionMismatch, "vstack column counts");
    rows += b.rows();
  }
  Matrix S(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) S(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return S;
}

SolveResult solve(const Field& F, const Matrix& A, std::span<const FieldElement> b) {
  if (b.size() != A.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  Matrix aug(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  const auto pivots = row_reduce(F, aug);
  SolveResult result;
  result.nullspace = kernel(F, A);
  if (!pivots.empty() && pivots.back() == A.cols()) return result;
  Vector x(A.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, A.cols());
  result.solution = std::move(x);
  return result;
}

std::vector<Vector> kernel(const Field& F, const Matrix& A) {
  Matrix R = A;
  const auto pivots = row_reduce(F, R);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < A.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(A.cols());
    v[free] = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(R(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Field& F, const Matrix& A) {
  Matrix R = A;
  return row_reduce(F, R).size();
}

Matrix inverse(const Field& F, const Matrix& A) {
  if (!A.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = A.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = F.one();
  }
  const auto pivots = row_reduce(F, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

FieldElement trace(const Field& F, const Matrix& A) {
  if (!A.is_square()) throw Error(ErrorCode::DimensionMismatch, "trace of a non-square matrix");
  FieldElement t = F.zero();
  for (std::size_t i = 0; i < A.rows(); ++i) t = F.add(t, A(i, i));
  return t;
}

bool is_zero(const Matrix& A) {
  return std::all_of(A.data().begin(), A.data().end(), [](FieldElement e) { return e.is_zero(); });
}

Matrix evaluate(const Field& F, const Poly& p, const Matrix& A) {
  if (!A.is_square()) throw Error(ErrorCode::DimensionMismatch, "polynomial of a non-square matrix");
  Matrix acc(A.rows(), A.cols());
  const Matrix I = Matrix::identity(F, A.rows());
  for (int i = p.degree(); i >= 0; --i) {
    acc = add(F, multiply(F, acc, A), scale(F, I, p.coeff(i)));
  }
  return acc;
}

namespace {

// Minimal polynomial of v relative to A: first linear relation among
// v, Av, A^2 v, ...
Poly krylov_min_poly(const Field& F, const Matrix& A, const Vector& v) {
  SubspaceBasis basis(F, v.size());
  Vector w = v;
  while (true) {
    if (auto coords = basis.coordinates(w)) {
      // A^d v = sum c_i A^i v  =>  x^d - sum c_i x^i
      std::vector<FieldElement> c(coords->size() + 1);
      for (std::size_t i = 0; i < coords->size(); ++i) c[i] = F.neg((*coords)[i]);
      c.back() = F.one();
      return Poly(std::move(c));
    }
    basis.insert(w);
    w = apply(F, A, w);
  }
}

}  // namespace

Poly min_poly(const Field& F, const Matrix& A, std::mt19937_64& rng) {
  if (!A.is_square()) throw Error(ErrorCode::DimensionMismatch, "minimal polynomial of a non-square matrix");
  const PolyRing ring(F);
  const std::size_t n = A.rows();
  Poly m = ring.constant(F.one());
  if (n == 0) return m;
  auto absorb = [&](const Vector& v) {
    const Poly local = krylov_min_poly(F, A, v);
    m = ring.monic(ring.div(ring.mul(m, local), ring.gcd(m, local)));
  };
  for (int attempt = 0; attempt < 3; ++attempt) {
    Vector v(n);
    for (auto& e : v) e = F.random(rng);
    absorb(v);
    if (is_zero(evaluate(F, m, A))) return m;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = F.one();
    absorb(e);
  }
  return m;
}

void SubspaceBasis::reduce(Vector& v, Vector& combo) const {
  for (const auto& row : rows_) {
    const FieldElement t = v[row.pivot];
    if (t.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!row.reduced[j].is_zero()) v[j] = field_.sub(v[j], field_.mul(t, row.reduced[j]));
    }
    for (std::size_t j = 0; j < row.combo.size(); ++j) {
      if (!row.combo[j].is_zero()) combo[j] = field_.add(combo[j], field_.mul(t, row.combo[j]));
    }
  }
}

bool SubspaceBasis::insert(std::span<const FieldElement> v) {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "subspace vector length");
  Vector w(v.begin(), v.end());
  Vector combo(original_.size() + 1);
  reduce(w, combo);
  // w = v - sum combo_j * original_j
  const auto it = std::find_if(w.begin(), w.end(), [](FieldElement e) { return !e.is_zero(); });
  if (it == w.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - w.begin());
  const FieldElement inv = field_.inv(w[pivot]);
  for (auto& e : w) e = field_.mul(e, inv);
  Vector row_combo(original_.size() + 1);
  for (std::size_t j = 0; j < original_.size(); ++j) row_combo[j] = field_.neg(field_.mul(combo[j], inv));
  row_combo[original_.size()] = inv;
  for (auto& r : rows_) r.combo.push_back(field_.zero());
  rows_.push_back({std::move(w), pivot, std::move(row_combo)});
  original_.emplace_back(v.begin(), v.end());
  return true;
}

std::optional<Vector> SubspaceBasis::coordinates(std::span<const FieldElement> v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "subspace vector length");
  Vector w(v.begin(), v.end());
  Vector combo(original_.size());
  reduce(w, combo);
  if (std::any_of(w.begin(), w.end(), [](FieldElement e) { return !e.is_zero(); })) return std::nullopt;
  return combo;
}

}  // namespace hopflab
