#include "hopflab/builders.hpp"

#include <algorithm>
#include <array>

#include "hopflab/error.hpp"

namespace hopflab {

GroupTable::GroupTable(std::size_t order, std::vector<std::size_t> cayley, std::vector<std::string> names)
    : m_(order), cayley_(std::move(cayley)), names_(std::move(names)) {
  if (m_ == 0 || cayley_.size() != m_ * m_) throw Error(ErrorCode::InvalidGroupTable, "table size");
  for (std::size_t a = 0; a < m_; ++a) {
    std::vector<bool> row(m_), col(m_);
    for (std::size_t b = 0; b < m_; ++b) {
      const std::size_t r = mul(a, b), c = mul(b, a);
      if (r >= m_ || row[r] || col[c]) throw Error(ErrorCode::InvalidGroupTable, "not a Latin square");
      row[r] = col[c] = true;
    }
  }
  identity_ = m_;
  for (std::size_t e = 0; e < m_ && identity_ == m_; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < m_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ == m_) throw Error(ErrorCode::InvalidGroupTable, "no identity");
  inverse_.assign(m_, m_);
  for (std::size_t a = 0; a < m_; ++a)
    for (std::size_t b = 0; b < m_; ++b)
      if (mul(a, b) == identity_) inverse_[a] = b;
  for (std::size_t a = 0; a < m_; ++a)
    for (std::size_t b = 0; b < m_; ++b)
      for (std::size_t c = 0; c < m_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(ErrorCode::InvalidGroupTable, "not associative at (" + std::to_string(a) + "," +
                                                        std::to_string(b) + "," + std::to_string(c) + ")");
  if (names_.empty()) {
    for (std::size_t a = 0; a < m_; ++a) names_.push_back(std::to_string(a));
  }
  if (names_.size() != m_) throw Error(ErrorCode::InvalidGroupTable, "name count");
}

GroupTable cyclic_group(std::size_t m) {
  std::vector<std::size_t> t(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a * m + b] = (a + b) % m;
  return GroupTable(m, std::move(t));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t ma = a.order(), mb = b.order(), m = ma * mb;
  std::vector<std::size_t> t(m * m);
  std::vector<std::string> names;
  for (std::size_t x = 0; x < m; ++x) {
    names.push_back("(" + a.name(x / mb) + "," + b.name(x % mb) + ")");
    for (std::size_t y = 0; y < m; ++y)
      t[x * m + y] = a.mul(x / mb, y / mb) * mb + b.mul(x % mb, y % mb);
  }
  return GroupTable(m, std::move(t), std::move(names));
}

GroupTable symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  std::vector<std::size_t> t(m * m);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    names.push_back(std::to_string(perms[a][0]) + std::to_string(perms[a][1]) + std::to_string(perms[a][2]));
    for (std::size_t b = 0; b < m; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a * m + b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return GroupTable(m, std::move(t), std::move(names));
}

GroupTable dihedral_group4() {
  // r^a s^b · r^c s^d = r^{a + (-1)^b c} s^{b+d}
  std::vector<std::size_t> t(64);
  std::vector<std::string> names;
  for (std::size_t x = 0; x < 8; ++x) {
    const std::size_t a = x % 4, b = x / 4;
    names.push_back("r" + std::to_string(a) + (b ? "s" : ""));
    for (std::size_t y = 0; y < 8; ++y) {
      const std::size_t c = y % 4, d = y / 4;
      const std::size_t rot = (a + (b ? 4 - c : c)) % 4;
      t[x * 8 + y] = rot + 4 * ((b + d) % 2);
    }
  }
  return GroupTable(8, std::move(t), std::move(names));
}

GroupTable quaternion_group() {
  // Unit u ∈ {1,i,j,k} with sign; index 2u + (negative ? 1 : 0).
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const char* label[4] = {"1", "i", "j", "k"};
  std::vector<std::size_t> t(64);
  std::vector<std::string> names;
  for (std::size_t x = 0; x < 8; ++x) {
    names.push_back(std::string(x % 2 ? "-" : "") + label[x / 2]);
    for (std::size_t y = 0; y < 8; ++y) {
      const int ux = static_cast<int>(x / 2), uy = static_cast<int>(y / 2);
      int s = sign[ux][uy];
      if (x % 2) s = -s;
      if (y % 2) s = -s;
      t[x * 8 + y] = static_cast<std::size_t>(2 * unit[ux][uy] + (s < 0 ? 1 : 0));
    }
  }
  return GroupTable(8, std::move(t), std::move(names));
}

namespace {

void check_group_preconditions(const GroupTable& G, const Field& F, std::size_t dim, BuildOptions opts) {
  if (!opts.check_preconditions) return;
  const std::uint64_t p = F.characteristic();
  if (G.order() % p == 0) {
    throw Error(ErrorCode::CharacteristicDividesOrder,
                "characteristic " + std::to_string(p) + " divides |G| = " + std::to_string(G.order()));
  }
  if (p * p <= dim) {
    throw Error(ErrorCode::PreconditionPSquare,
                "p^2 = " + std::to_string(p * p) + " does not exceed dim " + std::to_string(dim));
  }
}

std::size_t at(std::size_t n, std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; }

}  // namespace

HopfAlgebra group_algebra(const GroupTable& G, const Field& F, BuildOptions opts) {
  const std::size_t n = G.order();
  check_group_preconditions(G, F, n, opts);
  Vector mult(n * n * n), comult(n * n * n), unit(n), counit(n, F.one());
  Matrix S(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult[at(n, a, b, G.mul(a, b))] = F.one();
    comult[at(n, a, a, a)] = F.one();
    S(G.inverse(a), a) = F.one();
  }
  unit[G.identity()] = F.one();
  return HopfAlgebra(F, n, std::move(mult), std::move(comult), std::move(unit), std::move(counit), std::move(S));
}

HopfAlgebra dual_group_algebra(const GroupTable& G, const Field& F, BuildOptions opts) {
  const std::size_t n = G.order();
  check_group_preconditions(G, F, n, opts);
  Vector mult(n * n * n), comult(n * n * n), unit(n, F.one()), counit(n);
  Matrix S(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    mult[at(n, a, a, a)] = F.one();
    S(G.inverse(a), a) = F.one();
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) comult[at(n, G.mul(x, y), x, y)] = F.one();
  counit[G.identity()] = F.one();
  return HopfAlgebra(F, n, std::move(mult), std::move(comult), std::move(unit), std::move(counit), std::move(S));
}

HopfAlgebra drinfeld_double(const GroupTable& G, const Field& F, BuildOptions opts) {
  const std::size_t m = G.order(), n = m * m;
  check_group_preconditions(G, F, n, opts);
  auto idx = [m](std::size_t g, std::size_t h) { return g * m + h; };
  Vector mult(n * n * n), comult(n * n * n), unit(n), counit(n);
  Matrix S(n, n);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h) {
      const std::size_t hinv = G.inverse(h);
      for (std::size_t g2 = 0; g2 < m; ++g2) {
        if (g != G.mul(G.mul(h, g2), hinv)) continue;
        for (std::size_t h2 = 0; h2 < m; ++h2) mult[at(n, idx(g, h), idx(g2, h2), idx(g, G.mul(h, h2)))] = F.one();
      }
      for (std::size_t x = 0; x < m; ++x) {
        const std::size_t y = G.mul(G.inverse(x), g);
        comult[at(n, idx(g, h), idx(x, h), idx(y, h))] = F.one();
      }
      counit[idx(g, h)] = g == G.identity() ? F.one() : F.zero();
      S(idx(G.mul(G.mul(hinv, G.inverse(g)), h), hinv), idx(g, h)) = F.one();
    }
  for (std::size_t g = 0; g < m; ++g) unit[idx(g, G.identity())] = F.one();
  return HopfAlgebra(F, n, std::move(mult), std::move(comult), std::move(unit), std::move(counit), std::move(S));
}

}  // namespace hopflab
