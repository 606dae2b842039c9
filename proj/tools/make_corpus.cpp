// Writes the bundled corpus: algebras, example modules and twists.
// usage: make_corpus <out-dir>

#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>

#include "hopflab/builders.hpp"
#include "hopflab/io.hpp"
#include "hopflab/module.hpp"
#include "hopflab/tensor.hpp"

using namespace hopflab;
namespace fs = std::filesystem;

namespace {

fs::path out_dir;

void write(const std::string& name, const std::string& text) {
  std::ofstream(out_dir / name) << text;
  std::cout << name << '\n';
}

// ρ(σ) e_x = e_{σ(x)} on the sum-zero plane, basis v1 = e0 - e1, v2 = e1 - e2.
ModuleRep s3_standard(const HopfAlgebra& H, const GroupTable& G, bool full) {
  const Field& F = H.field();
  const std::size_t d = full ? 3 : 2;
  ModuleRep V{d, {}};
  for (std::size_t g = 0; g < G.order(); ++g) {
    const std::string& nm = G.name(g);
    int sigma[3];
    for (int x = 0; x < 3; ++x) sigma[x] = nm[x] - '0';
    Matrix M(d, d);
    if (full) {
      for (int x = 0; x < 3; ++x) M(sigma[x], x) = F.one();
    } else {
      const int basis[2][3] = {{1, -1, 0}, {0, 1, -1}};
      for (int c = 0; c < 2; ++c) {
        int w[3] = {0, 0, 0};
        for (int x = 0; x < 3; ++x) w[sigma[x]] += basis[c][x];
        // w = a v1 + b v2 with a = w0, b = -w2
        M(0, c) = F.from_int(w[0]);
        M(1, c) = F.from_int(-w[2]);
      }
    }
    V.action.push_back(std::move(M));
  }
  return V;
}

// J = Σ_{x,y} β(x, y) δ_x ⊗ δ_y on the dual group algebra.
TensorElement dual_bicharacter(const HopfAlgebra& H, const std::function<FieldElement(std::size_t, std::size_t)>& beta) {
  const std::size_t n = H.dim();
  TensorElement J(2, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) J.coeffs[x * n + y] = beta(x, y);
  return J;
}

// Twist on kD4 pulled back from the Klein subgroup {r0, r2, s, r2s}: with
// primitive idempotents e_(a,b) of that subgroup, J = Σ (-1)^{a d} e_(a,b) ⊗ e_(c,d).
TensorElement d4_klein_twist(const HopfAlgebra& H) {
  const Field& F = H.field();
  const std::size_t kidx[2][2] = {{0, 4}, {2, 6}};
  std::vector<AlgElement> e;
  for (int cx = 0; cx < 2; ++cx)
    for (int cy = 0; cy < 2; ++cy) {
      AlgElement v = H.zero();
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v[kidx[i][j]] = F.from_int(((cx * i + cy * j) % 2) ? -1 : 1);
      e.push_back(H.scale(v, F.inv(F.from_int(4))));
    }
  TensorElement J(2, H.dim());
  for (int c = 0; c < 4; ++c)
    for (int d = 0; d < 4; ++d) {
      const FieldElement b = F.from_int(((c / 2) * (d % 2)) % 2 ? -1 : 1);
      J = add(F, J, scale(F, tensor_product(F, as_tensor(e[c]), as_tensor(e[d])), b));
    }
  return J;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <out-dir>\n";
    return 2;
  }
  out_dir = argv[1];
  fs::create_directories(out_dir);

  const Field f5 = Field::prime(5), f7 = Field::prime(7), f25 = Field::automatic(5, 2);
  struct Entry {
    const char* name;
    GroupTable group;
    Field field;
  };
  const std::vector<Entry> groups = {
      {"c2", cyclic_group(2), f5},
      {"c3", cyclic_group(3), f7},
      {"c4", cyclic_group(4), f5},
      {"k4", direct_product(cyclic_group(2), cyclic_group(2)), f5},
      {"s3", symmetric_group3(), f7},
      {"d4", dihedral_group4(), f5},
      {"q8", quaternion_group(), f25},
  };
  auto suffix = [](const Field& F) {
    return "_gf" + std::to_string(F.order()) + ".hopf";
  };
  for (const auto& g : groups) {
    write(std::string(g.name) + suffix(g.field), serialize_hopf(group_algebra(g.group, g.field)));
    write(std::string(g.name) + "dual" + suffix(g.field), serialize_hopf(dual_group_algebra(g.group, g.field)));
  }
  write("d_c2" + suffix(f5), serialize_hopf(drinfeld_double(cyclic_group(2), f5)));
  write("d_c3" + suffix(f7), serialize_hopf(drinfeld_double(cyclic_group(3), f7)));
  write("d_s3" + suffix(f7), serialize_hopf(drinfeld_double(symmetric_group3(), f7)));

  // Twist-only algebra and the non-semisimple example.
  const HopfAlgebra c3c3dual = dual_group_algebra(direct_product(cyclic_group(3), cyclic_group(3)), f7);
  write("c3c3dual_gf7.hopf", serialize_hopf(c3c3dual));
  write("c3_gf3.hopf", serialize_hopf(group_algebra(cyclic_group(3), Field::prime(3), {false})));
  write("malformed.hopf",
        "hopf v1\n"
        "field 5 1\n"
        "dim 2\n"
        "mult:\n"
        "0 0 0 1\n"
        "0 1 1 1 7\n"
        "end\n");

  const GroupTable s3 = symmetric_group3();
  const HopfAlgebra s3_gf7 = group_algebra(s3, f7);
  write("s3_std.module", serialize_module(s3_gf7, s3_standard(s3_gf7, s3, false)));
  write("s3_perm.module", serialize_module(s3_gf7, s3_standard(s3_gf7, s3, true)));

  const HopfAlgebra k4dual = dual_group_algebra(direct_product(cyclic_group(2), cyclic_group(2)), f5);
  write("k4_bichar.twist", serialize_twist(k4dual, dual_bicharacter(k4dual, [&](std::size_t x, std::size_t y) {
          const std::size_t e = (x / 2) * (y % 2) + (x % 2) * (y / 2);
          return f5.from_int(e % 2 ? -1 : 1);
        })));
  write("c3c3_bichar.twist", serialize_twist(c3c3dual, dual_bicharacter(c3c3dual, [&](std::size_t x, std::size_t y) {
          const int e = ((static_cast<int>((x / 3) * (y % 3)) - static_cast<int>((x % 3) * (y / 3))) % 3 + 3) % 3;
          return f7.pow(f7.from_int(2), e);
        })));
  const HopfAlgebra d4 = group_algebra(dihedral_group4(), f5);
  write("d4_klein.twist", serialize_twist(d4, d4_klein_twist(d4)));
  return 0;
}
