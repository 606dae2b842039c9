#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hopflab/error.hpp"
#include "hopflab/ff.hpp"
#include "hopflab/poly.hpp"

using namespace hopflab;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::ValidationError;
}

}  // namespace

TEST_CASE("field construction") {
  const Field f5 = Field::prime(5);
  CHECK(f5.order() == 5);
  CHECK(f5.degree() == 1);

  const Field f4 = Field::extension(2, 2, {1, 1, 1});
  CHECK(f4.order() == 4);

  // x^2 + 1 has no root mod 7: brute force over all residues.
  for (std::uint64_t r = 0; r < 7; ++r) CHECK((r * r + 1) % 7 != 0);
  const Field f49 = Field::automatic(7, 2);
  CHECK(f49.modulus() == std::vector<std::uint64_t>{1, 0, 1});

  CHECK(code_of([] { Field::prime(9); }) == ErrorCode::NonPrimeCharacteristic);
  CHECK(code_of([] { Field::extension(5, 2, {4, 0, 1}); }) == ErrorCode::ReducibleModulus);  // x^2 - 1
  CHECK(code_of([] { Field::extension(2, 4, {1, 0, 1, 0, 1}); }) == ErrorCode::ReducibleModulus);  // (x^2+x+1)^2
  CHECK_NOTHROW(Field::extension(2, 4, {1, 1, 0, 0, 1}));
  CHECK_NOTHROW(Field::extension(3, 5, {1, 2, 0, 0, 0, 1}));  // x^5 + 2x + 1, Rabin path
  CHECK(code_of([] { Field::extension(3, 5, {2, 0, 0, 0, 0, 1}); }) == ErrorCode::ReducibleModulus);  // x^5 - 1
}

TEST_CASE("arithmetic examples") {
  const Field f5 = Field::prime(5);
  CHECK(f5.add(f5.from_int(2), f5.from_int(3)) == f5.zero());
  const Field f7 = Field::prime(7);
  CHECK(f7.inv(f7.from_int(3)) == f7.from_int(5));
  CHECK(code_of([&] { f7.inv(f7.zero()); }) == ErrorCode::DivisionByZero);

  const Field f4 = Field::extension(2, 2, {1, 1, 1});
  const std::uint64_t x_coeffs[] = {0, 1};
  const std::uint64_t x1_coeffs[] = {1, 1};
  const FieldElement x = f4.from_coeffs(x_coeffs);
  CHECK(f4.mul(x, x) == f4.from_coeffs(x1_coeffs));
  CHECK(f4.format(f4.mul(x, x)) == "[1,1]");
  CHECK(f7.format(f7.from_int(-1)) == "[6]");
  CHECK(f7.pow(f7.from_int(3), -1) == f7.from_int(5));
}

TEST_CASE("embedding into the prime subfield") {
  const Field f5 = Field::prime(5);
  const Field f25 = Field::automatic(5, 2);
  CHECK(f25.coeffs(f5.embed(f5.from_int(3), f25)) == std::vector<std::uint64_t>{3, 0});
  CHECK(f5.embed(f5.zero(), f25) == f25.zero());
  CHECK(f5.embed(f5.one(), f25) == f25.one());
  CHECK(code_of([&] { f5.embed(f5.one(), Field::prime(7)); }) == ErrorCode::CharacteristicMismatch);

  // Generic embedding GF(4) -> GF(16) is a ring homomorphism.
  const Field f4 = Field::automatic(2, 2);
  const Field f16 = Field::automatic(2, 4);
  const FieldEmbedding emb(f4, f16);
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t b = 0; b < 4; ++b) {
      const FieldElement x{a}, y{b};
      CHECK(emb(f4.add(x, y)) == f16.add(emb(x), emb(y)));
      CHECK(emb(f4.mul(x, y)) == f16.mul(emb(x), emb(y)));
    }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(17);
  for (const Field& F : {Field::prime(7), Field::automatic(5, 2), Field::automatic(2, 3),
                         Field::automatic(3, 4), Field::prime(2147483647)}) {
    for (int trial = 0; trial < 300; ++trial) {
      const FieldElement a = F.random(rng), b = F.random(rng), c = F.random(rng);
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, F.neg(a)) == F.zero());
      if (!a.is_zero()) CHECK(F.mul(a, F.inv(a)) == F.one());
      // Frobenius is additive.
      const auto p = static_cast<std::int64_t>(F.characteristic());
      CHECK(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)));
    }
  }
}

TEST_CASE("embedding commutes with the ring operations") {
  std::mt19937_64 rng(3);
  const Field f7 = Field::prime(7);
  const Field f343 = Field::automatic(7, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const FieldElement a = f7.random(rng), b = f7.random(rng);
    CHECK(f7.embed(f7.add(a, b), f343) == f343.add(f7.embed(a, f343), f7.embed(b, f343)));
    CHECK(f7.embed(f7.mul(a, b), f343) == f343.mul(f7.embed(a, f343), f7.embed(b, f343)));
    if (a != b) CHECK(f7.embed(a, f343) != f7.embed(b, f343));
  }
}
