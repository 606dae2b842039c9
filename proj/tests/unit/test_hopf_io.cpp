#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "hopflab/error.hpp"
#include "hopflab/module.hpp"
#include "hopflab/tensor.hpp"

using namespace hopflab;

namespace {

// Copy of H with one structure constant changed.
HopfAlgebra with_mult(const HopfAlgebra& H, std::size_t i, std::size_t j, std::size_t k, FieldElement c) {
  Vector m = H.mult_tensor();
  m[(i * H.dim() + j) * H.dim() + k] = c;
  return HopfAlgebra(H.field(), H.dim(), m, H.comult_tensor(), H.unit_vector(), H.counit_vector(),
                     H.antipode_matrix());
}

}  // namespace

TEST_CASE("group algebra basics over GF(7)[C3]") {
  const Field F = Field::prime(7);
  const HopfAlgebra H = group_algebra(cyclic_group(3), F);
  CHECK(verify_axioms(H).all_passed());
  const AlgElement g = H.basis(1), g2 = H.basis(2);
  CHECK(H.multiply(g, g2) == H.one());
  CHECK(H.comultiply(g) == tensor_product(F, as_tensor(g), as_tensor(g)));
  CHECK(H.antipode(g) == g2);
  CHECK(H.counit(g) == F.one());

  CHECK(H.left_mult_matrix(H.one()) == Matrix::identity(F, 3));
  CHECK(trace(F, H.left_mult_matrix(g)).is_zero());
  AlgElement L = H.add(H.add(H.one(), g), g2);
  const Matrix ML = H.left_mult_matrix(L);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) CHECK(ML(r, c) == F.one());
  CHECK(trace(F, ML) == F.from_int(3));
}

TEST_CASE("iterated coproduct") {
  const Field F = Field::prime(7);
  const HopfAlgebra H = group_algebra(cyclic_group(3), F);
  const AlgElement g = H.basis(1);
  CHECK(iterated_coproduct(H, g, 1) == as_tensor(g));
  CHECK(iterated_coproduct(H, g, 2) == tensor_product(F, as_tensor(g), as_tensor(g)));
  CHECK_THROWS_AS(iterated_coproduct(H, g, 0), Error);

  // Δ₂(Σx) = Σ x⊗x⊗x
  const AlgElement L = H.add(H.add(H.one(), g), H.basis(2));
  TensorElement expect(3, 3);
  for (std::size_t x = 0; x < 3; ++x) expect.coeffs[x * 9 + x * 3 + x] = F.one();
  CHECK(iterated_coproduct(H, L, 3) == expect);

  // (Δ⊗id)∘Δ_{m-2} = Δ_{m-1} on D(S3)
  const HopfAlgebra D = drinfeld_double(symmetric_group3(), F);
  std::mt19937_64 rng(11);
  AlgElement a = D.zero();
  for (auto& c : a.coeffs) c = F.random(rng);
  for (std::size_t m = 2; m <= 3; ++m)
    CHECK(comultiply_leg(D, iterated_coproduct(D, a, m), 0) == iterated_coproduct(D, a, m + 1));
}

TEST_CASE("every corpus algebra passes the axioms") {
  for (const auto& [name, H] : testing_corpus::all()) {
    INFO(name);
    const Report r = verify_axioms(H);
    CHECK(r.all_passed());
    // every bundled algebra is involutory
    CHECK(H.is_involutory());
    const std::uint64_t p = H.field().characteristic();
    CHECK(p * p > H.dim());
  }
}

TEST_CASE("corrupted structure constants are caught") {
  const Field F = Field::prime(7);
  const HopfAlgebra H = group_algebra(cyclic_group(3), F);
  const Report r = verify_axioms(with_mult(H, 1, 1, 2, F.from_int(3)));
  CHECK_FALSE(r.passed("associativity"));
  const Check* c = r.find("associativity");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->witness.empty());

  Matrix S = H.antipode_matrix();
  S(1, 1) = F.one();
  S(2, 1) = F.zero();
  const HopfAlgebra bad(F, 3, H.mult_tensor(), H.comult_tensor(), H.unit_vector(), H.counit_vector(), S);
  CHECK_FALSE(verify_axioms(bad).passed("antipode"));
  CHECK_FALSE(bad.is_involutory());
}

TEST_CASE("antipode solved from bialgebra data") {
  for (const auto& [name, H] : testing_corpus::all()) {
    if (H.dim() > 16) continue;
    INFO(name);
    CHECK(solve_antipode(H.field(), H.dim(), H.mult_tensor(), H.comult_tensor(), H.unit_vector(),
                         H.counit_vector()) == H.antipode_matrix());
  }
}

TEST_CASE("builders") {
  const Field f5 = Field::prime(5), f3 = Field::prime(3), f7 = Field::prime(7);
  CHECK(group_algebra(cyclic_group(2), f5).dim() == 2);
  CHECK(group_algebra(symmetric_group3(), f7).dim() == 6);
  CHECK_THROWS_AS(group_algebra(cyclic_group(3), f3), Error);
  try {
    group_algebra(cyclic_group(3), f3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CharacteristicDividesOrder);
  }
  CHECK(verify_axioms(group_algebra(cyclic_group(3), f3, {false})).all_passed());
  CHECK(drinfeld_double(symmetric_group3(), f7).dim() == 36);
  CHECK_THROWS_AS(drinfeld_double(cyclic_group(2), Field::prime(2)), Error);

  // Latin square but not associative
  std::vector<std::size_t> t = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  CHECK_NOTHROW(GroupTable(3, t));
  std::swap(t[4], t[5]);
  std::swap(t[7], t[8]);
  CHECK_THROWS_AS(GroupTable(3, t), Error);
}

TEST_CASE("modules") {
  const Field F = Field::prime(7);
  const GroupTable G = symmetric_group3();
  const HopfAlgebra H = group_algebra(G, F);
  const ModuleRep R = regular_module(H);
  CHECK(module_verify(H, R).all_passed());
  CHECK(module_character(H, R) == H.regular_character());

  const ModuleRep V = parse_module(read_file(testing_corpus::path("s3_std.module")), H);
  CHECK(module_verify(H, V).all_passed());
  const Vector chi = module_character(H, V);
  for (std::size_t g = 0; g < G.order(); ++g) {
    const std::string& n = G.name(g);
    int fixed = 0;
    for (int x = 0; x < 3; ++x) fixed += (n[x] - '0') == x;
    INFO(n);
    // classical standard character: #fixed points - 1
    CHECK(chi[g] == F.from_int(fixed - 1));
  }

  // χ_{V*} = χ_V ∘ S
  const Vector dual = module_character(H, module_dual(H, V));
  for (std::size_t i = 0; i < H.dim(); ++i) CHECK(dual[i] == H.pair(chi, H.antipode(H.basis(i))));

  // trivial ⊗ V has the character of V; characters of tensors convolve
  const ModuleRep T = trivial_module(H);
  CHECK(module_character(H, module_tensor(H, T, V)) == chi);
  const ModuleRep VV = module_tensor(H, V, V);
  CHECK(module_verify(H, VV).all_passed());
  CHECK(module_character(H, VV) == convolve(H, chi, chi));

  // noncocommutative case
  const HopfAlgebra D = drinfeld_double(cyclic_group(3), F);
  const ModuleRep RD = regular_module(D);
  const ModuleRep RR = module_tensor(D, RD, module_dual(D, RD));
  CHECK(module_verify(D, RR).all_passed());
  CHECK(module_character(D, RR) == convolve(D, D.regular_character(), module_character(D, module_dual(D, RD))));

  ModuleRep broken = V;
  broken.action[1](0, 0) = F.add(broken.action[1](0, 0), F.one());
  CHECK_FALSE(module_verify(H, broken).all_passed());
  CHECK_THROWS_AS(require_module(H, broken), Error);
}

TEST_CASE("serialization round trips") {
  for (const auto& [name, H] : testing_corpus::all()) {
    INFO(name);
    const std::string text = serialize_hopf(H);
    const HopfAlgebra back = parse_hopf(text);
    CHECK(back == H);
    CHECK(serialize_hopf(back) == text);
    CHECK(algebra_hash(back) == algebra_hash(H));
  }
  // files on disk are what the builders produce
  CHECK(testing_corpus::load("s3_gf7.hopf") == group_algebra(symmetric_group3(), Field::prime(7)));
  CHECK(testing_corpus::load("q8_gf25.hopf") == group_algebra(quaternion_group(), Field::automatic(5, 2)));
  CHECK(testing_corpus::load("d_s3_gf7.hopf") == drinfeld_double(symmetric_group3(), Field::prime(7)));

  const HopfAlgebra H = group_algebra(symmetric_group3(), Field::prime(7));
  const ModuleRep V = parse_module(read_file(testing_corpus::path("s3_std.module")), H);
  const ModuleRep W = parse_module(serialize_module(H, V), H);
  CHECK(W.dim == V.dim);
  CHECK(W.action == V.action);
}

TEST_CASE("parse errors") {
  const auto code_of = [](const std::string& text) {
    try {
      parse_hopf(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ValidationError;
  };
  CHECK(code_of(read_file(testing_corpus::path("malformed.hopf"))) == ErrorCode::ParseError);
  CHECK(code_of("") == ErrorCode::ParseError);
  CHECK(code_of("hopf v2\n") == ErrorCode::ParseError);
  CHECK(code_of("hopf v1\nfield 5 1\ndim 2\nmult:\n0 0 9 1\nend\n") == ErrorCode::ParseError);
  CHECK(code_of("hopf v1\nfield 5 1\ndim 1\nmult:\n0 0 0 [1,2]\nend\n") == ErrorCode::ParseError);
  CHECK_THROWS_AS(read_file(testing_corpus::path("no_such_file.hopf")), Error);

  // entry-less antipode section is solved for
  const HopfAlgebra H = group_algebra(cyclic_group(3), Field::prime(7));
  std::string text = serialize_hopf(H);
  text = text.substr(0, text.find("antipode:")) + "end\n";
  CHECK(parse_hopf(text) == H);

  const HopfAlgebra S3 = group_algebra(symmetric_group3(), Field::prime(7));
  // a 3x3 action on a 2-dim module
  CHECK_THROWS_AS(parse_module("module v1\ndim 2\naction:\n0 2 0 [1]\nend\n", S3), Error);
  // twist for a different algebra
  CHECK_THROWS_AS(parse_twist(read_file(testing_corpus::path("k4_bichar.twist")), S3), Error);
  try {
    parse_twist(read_file(testing_corpus::path("k4_bichar.twist")), S3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValidationError);
  }
}
