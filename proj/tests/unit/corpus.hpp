#pragma once

// Shared fixtures: the pinned corpus algebras built in memory.

#include <string>
#include <vector>

#include "hopflab/builders.hpp"
#include "hopflab/io.hpp"

namespace testing_corpus {

struct Named {
  std::string name;
  hopflab::HopfAlgebra H;
};

inline std::string path(const std::string& file) { return std::string(HOPFLAB_CORPUS_DIR) + "/" + file; }

inline hopflab::HopfAlgebra load(const std::string& file) { return hopflab::parse_hopf(hopflab::read_file(path(file))); }

/// Every group, dual group and double algebra of the corpus, in memory.
inline std::vector<Named> all() {
  using namespace hopflab;
  const Field f5 = Field::prime(5), f7 = Field::prime(7), f25 = Field::automatic(5, 2);
  struct G {
    std::string name;
    GroupTable group;
    Field field;
  };
  const std::vector<G> groups = {
      {"c2", cyclic_group(2), f5},
      {"c3", cyclic_group(3), f7},
      {"c4", cyclic_group(4), f5},
      {"k4", direct_product(cyclic_group(2), cyclic_group(2)), f5},
      {"s3", symmetric_group3(), f7},
      {"d4", dihedral_group4(), f5},
      {"q8", quaternion_group(), f25},
  };
  std::vector<Named> out;
  for (const auto& g : groups) {
    out.push_back({g.name, group_algebra(g.group, g.field)});
    out.push_back({g.name + "dual", dual_group_algebra(g.group, g.field)});
  }
  out.push_back({"d_c2", drinfeld_double(cyclic_group(2), f5)});
  out.push_back({"d_c3", drinfeld_double(cyclic_group(3), f7)});
  out.push_back({"d_s3", drinfeld_double(symmetric_group3(), f7)});
  return out;
}

}  // namespace testing_corpus
