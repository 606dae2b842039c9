#include "hopflab/tensor.hpp"

#include <numeric>
#include <sstream>

#include "hopflab/error.hpp"

namespace hopflab {

namespace {

void require_same_shape(const TensorElement& a, const TensorElement& b) {
  if (a.order != b.order || a.dim != b.dim) {
    throw Error(ErrorCode::DimensionMismatch, "tensor shapes differ");
  }
}

void require_leg(const TensorElement& t, std::size_t leg) {
  if (leg >= t.order) throw Error(ErrorCode::DimensionMismatch, "leg index out of range");
}

}  // namespace

TensorElement as_tensor(const AlgElement& a) {
  TensorElement t(1, a.size());
  t.coeffs = a.coeffs;
  return t;
}

TensorElement tensor_product(const Field& F, const TensorElement& a, const TensorElement& b) {
  if (a.dim != b.dim) throw Error(ErrorCode::DimensionMismatch, "tensor dimensions differ");
  TensorElement t(a.order + b.order, a.dim);
  const std::size_t bs = b.coeffs.size();
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < bs; ++j) {
      if (!b.coeffs[j].is_zero()) t.coeffs[i * bs + j] = F.mul(a.coeffs[i], b.coeffs[j]);
    }
  }
  return t;
}

TensorElement tensor_product(const Field& F, std::span<const AlgElement> legs) {
  if (legs.empty()) throw Error(ErrorCode::DimensionMismatch, "empty tensor product");
  TensorElement t = as_tensor(legs.front());
  for (std::size_t i = 1; i < legs.size(); ++i) t = tensor_product(F, t, as_tensor(legs[i]));
  return t;
}

TensorElement tensor_one(const HopfAlgebra& H, std::size_t m) {
  std::vector<AlgElement> legs(m, H.one());
  return tensor_product(H.field(), legs);
}

TensorElement add(const Field& F, const TensorElement& a, const TensorElement& b) {
  require_same_shape(a, b);
  TensorElement t = a;
  for (std::size_t i = 0; i < t.coeffs.size(); ++i) t.coeffs[i] = F.add(a.coeffs[i], b.coeffs[i]);
  return t;
}

TensorElement subtract(const Field& F, const TensorElement& a, const TensorElement& b) {
  require_same_shape(a, b);
  TensorElement t = a;
  for (std::size_t i = 0; i < t.coeffs.size(); ++i) t.coeffs[i] = F.sub(a.coeffs[i], b.coeffs[i]);
  return t;
}

TensorElement scale(const Field& F, const TensorElement& a, FieldElement s) {
  TensorElement t = a;
  for (auto& c : t.coeffs) c = F.mul(c, s);
  return t;
}

TensorElement multiply(const HopfAlgebra& H, const TensorElement& a, const TensorElement& b) {
  require_same_shape(a, b);
  if (a.dim != H.dim()) throw Error(ErrorCode::AlgebraMismatch, "tensor over a different algebra");
  const Field& F = H.field();
  const std::size_t n = a.dim;
  const std::size_t m = a.order;
  TensorElement out(m, n);

  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
    if (!b.coeffs[j].is_zero()) nz_b.push_back(j);
  }
  // Expansion buffer of (flat index, coefficient) built leg by leg.
  std::vector<std::pair<std::size_t, FieldElement>> cur, next;
  std::vector<std::size_t> ia(m), ib(m);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t l = m, x = i; l-- > 0; x /= n) ia[l] = x % n;
    for (std::size_t j : nz_b) {
      for (std::size_t l = m, x = j; l-- > 0; x /= n) ib[l] = x % n;
      cur.assign(1, {0, F.mul(a.coeffs[i], b.coeffs[j])});
      for (std::size_t l = 0; l < m && !cur.empty(); ++l) {
        next.clear();
        for (const auto& [idx, c] : cur) {
          for (const auto& t : H.product_terms(ia[l], ib[l])) next.emplace_back(idx * n + t.k, F.mul(c, t.c));
        }
        std::swap(cur, next);
      }
      for (const auto& [idx, c] : cur) out.coeffs[idx] = F.add(out.coeffs[idx], c);
    }
  }
  return out;
}

TensorElement apply_leg(const Field& F, const TensorElement& t, std::size_t leg, const Matrix& M) {
  require_leg(t, leg);
  if (M.rows() != t.dim || M.cols() != t.dim) throw Error(ErrorCode::DimensionMismatch, "leg map shape");
  TensorElement out(t.order, t.dim);
  const std::size_t s = t.stride(leg);
  const std::size_t n = t.dim;
  for (std::size_t flat = 0; flat < t.coeffs.size(); ++flat) {
    const FieldElement c = t.coeffs[flat];
    if (c.is_zero()) continue;
    const std::size_t i = (flat / s) % n;
    const std::size_t base = flat - i * s;
    for (std::size_t r = 0; r < n; ++r) {
      const FieldElement m = M(r, i);
      if (!m.is_zero()) out.coeffs[base + r * s] = F.add(out.coeffs[base + r * s], F.mul(c, m));
    }
  }
  return out;
}

TensorElement comultiply_leg(const HopfAlgebra& H, const TensorElement& t, std::size_t leg) {
  require_leg(t, leg);
  const Field& F = H.field();
  const std::size_t n = t.dim;
  TensorElement out(t.order + 1, n);
  const std::size_t s = t.stride(leg);  // weight of legs after `leg`
  for (std::size_t flat = 0; flat < t.coeffs.size(); ++flat) {
    const FieldElement c = t.coeffs[flat];
    if (c.is_zero()) continue;
    const std::size_t after = flat % s;
    const std::size_t i = (flat / s) % n;
    const std::size_t before = flat / (s * n);
    for (const auto& term : H.coproduct_terms(i)) {
      const std::size_t idx = ((before * n + term.left) * n + term.right) * s + after;
      out.coeffs[idx] = F.add(out.coeffs[idx], F.mul(c, term.c));
    }
  }
  return out;
}

TensorElement counit_leg(const HopfAlgebra& H, const TensorElement& t, std::size_t leg) {
  require_leg(t, leg);
  if (t.order == 1) throw Error(ErrorCode::DimensionMismatch, "counit of the last leg");
  const Field& F = H.field();
  const std::size_t n = t.dim;
  TensorElement out(t.order - 1, n);
  const std::size_t s = t.stride(leg);
  for (std::size_t flat = 0; flat < t.coeffs.size(); ++flat) {
    const FieldElement c = t.coeffs[flat];
    if (c.is_zero()) continue;
    const std::size_t after = flat % s;
    const std::size_t i = (flat / s) % n;
    const std::size_t before = flat / (s * n);
    const FieldElement e = H.counit_vector()[i];
    if (e.is_zero()) continue;
    const std::size_t idx = before * s + after;
    out.coeffs[idx] = F.add(out.coeffs[idx], F.mul(c, e));
  }
  return out;
}

TensorElement permute_legs(const TensorElement& t, std::span<const std::size_t> perm) {
  if (perm.size() != t.order) throw Error(ErrorCode::DimensionMismatch, "permutation length");
  TensorElement out(t.order, t.dim);
  std::vector<std::size_t> idx(t.order);
  for (std::size_t flat = 0; flat < t.coeffs.size(); ++flat) {
    if (t.coeffs[flat].is_zero()) continue;
    for (std::size_t l = t.order, x = flat; l-- > 0; x /= t.dim) idx[l] = x % t.dim;
    std::size_t target = 0;
    for (std::size_t l = 0; l < t.order; ++l) target = target * t.dim + idx[perm[l]];
    out.coeffs[target] = t.coeffs[flat];
  }
  return out;
}

TensorElement rotate_left(const TensorElement& t) {
  std::vector<std::size_t> perm(t.order);
  for (std::size_t l = 0; l < t.order; ++l) perm[l] = (l + 1) % t.order;
  return permute_legs(t, perm);
}

TensorElement flip(const TensorElement& t) {
  if (t.order != 2) throw Error(ErrorCode::DimensionMismatch, "flip needs two legs");
  const std::size_t perm[2] = {1, 0};
  return permute_legs(t, perm);
}

AlgElement contract(const HopfAlgebra& H, const TensorElement& t) {
  if (t.dim != H.dim()) throw Error(ErrorCode::AlgebraMismatch, "tensor over a different algebra");
  const Field& F = H.field();
  const std::size_t n = t.dim;
  AlgElement out = H.zero();
  std::vector<std::size_t> idx(t.order);
  Vector cur(n), next(n);
  for (std::size_t flat = 0; flat < t.coeffs.size(); ++flat) {
    if (t.coeffs[flat].is_zero()) continue;
    for (std::size_t l = t.order, x = flat; l-- > 0; x /= n) idx[l] = x % n;
    std::fill(cur.begin(), cur.end(), F.zero());
    cur[idx[0]] = t.coeffs[flat];
    for (std::size_t l = 1; l < t.order; ++l) {
      std::fill(next.begin(), next.end(), F.zero());
      for (std::size_t k = 0; k < n; ++k) {
        if (cur[k].is_zero()) continue;
        for (const auto& term : H.product_terms(k, idx[l])) {
          next[term.k] = F.add(next[term.k], F.mul(cur[k], term.c));
        }
      }
      std::swap(cur, next);
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = F.add(out[k], cur[k]);
  }
  return out;
}

TensorElement iterated_coproduct(const HopfAlgebra& H, const AlgElement& a, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::DimensionMismatch, "iterated coproduct needs at least one leg");
  if (a.size() != H.dim()) throw Error(ErrorCode::AlgebraMismatch, "element length");
  TensorElement t = as_tensor(a);
  for (std::size_t i = 1; i < m; ++i) t = comultiply_leg(H, t, 0);
  return t;
}

std::string describe_index(const TensorElement& t, std::size_t flat) {
  std::vector<std::size_t> idx(t.order);
  for (std::size_t l = t.order, x = flat; l-- > 0; x /= t.dim) idx[l] = x % t.dim;
  std::ostringstream os;
  os << "b";
  for (std::size_t l = 0; l < t.order; ++l) os << (l ? "⊗b" : "") << idx[l];
  return os.str();
}

std::size_t first_difference(const TensorElement& a, const TensorElement& b) {
  require_same_shape(a, b);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] != b.coeffs[i]) return i;
  }
  return std::string::npos;
}

}  // namespace hopflab
