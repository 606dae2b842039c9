#pragma once

// Finite groups and the Hopf algebras built from them.

#include <string>
#include <vector>

#include "hopflab/hopf.hpp"

namespace hopflab {

/// Multiplication table of a finite group; element 0 need not be the
/// identity but every bundled group puts it there.
class GroupTable {
 public:
  /// cayley[a * order + b] = a·b. Throws InvalidGroupTable unless the table
  /// is a Latin square with an identity, inverses, and associativity.
  GroupTable(std::size_t order, std::vector<std::size_t> cayley, std::vector<std::string> names = {});

  std::size_t order() const { return m_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return cayley_[a * m_ + b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::string& name(std::size_t a) const { return names_[a]; }

 private:
  std::size_t m_;
  std::vector<std::size_t> cayley_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> names_;
};

GroupTable cyclic_group(std::size_t m);
/// (a, b) ↦ a * |B| + b.
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
/// Permutations of {0,1,2} in lexicographic order of their one-line
/// notation, composed as (στ)(x) = σ(τ(x)).
GroupTable symmetric_group3();
/// r^a s^b ↦ a + 4b with srs⁻¹ = r⁻¹.
GroupTable dihedral_group4();
/// 1, -1, i, -i, j, -j, k, -k.
GroupTable quaternion_group();

struct BuildOptions {
  /// When false, p ∤ |G| and the p² bound are not enforced. Used to build
  /// negative controls.
  bool check_preconditions = true;
};

HopfAlgebra group_algebra(const GroupTable& G, const Field& F, BuildOptions opts = {});
HopfAlgebra dual_group_algebra(const GroupTable& G, const Field& F, BuildOptions opts = {});
/// Basis δ_g⊗h at index g·|G| + h.
HopfAlgebra drinfeld_double(const GroupTable& G, const Field& F, BuildOptions opts = {});

}  // namespace hopflab
