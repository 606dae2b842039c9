#pragma once

// Exact arithmetic in GF(p) and GF(p^k).
//
// Elements are packed as base-p integers: c0 + c1*p + ... + c_{k-1}*p^{k-1}
// where c_i are the coefficients of the polynomial representative modulo the
// defining irreducible polynomial. All arithmetic goes through the Field,
// which acts as the context object (as in NTL/fflas-style interfaces).

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace hopflab {

class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint64_t code) : code_(code) {}

  constexpr std::uint64_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint64_t code_ = 0;
};

class Field {
 public:
  /// GF(p). Throws NonPrimeCharacteristic.
  static Field prime(std::uint64_t p);

  /// GF(p^k) with an explicit monic modulus [c0, ..., c_{k-1}, 1].
  /// Throws NonPrimeCharacteristic or ReducibleModulus.
  static Field extension(std::uint64_t p, int k, std::vector<std::uint64_t> modulus);

  /// GF(p^k) with the lexicographically smallest monic irreducible modulus,
  /// comparing coefficient lists [c0, c1, ...] from c0 upward.
  static Field automatic(std::uint64_t p, int k);

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  /// Monic modulus coefficients, low degree first; empty when k = 1.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_coeffs(std::span<const std::uint64_t> coeffs) const;
  std::vector<std::uint64_t> coeffs(FieldElement a) const;
  bool contains(FieldElement a) const { return a.code() < q_; }
  /// True when a lies in the prime subfield GF(p).
  bool in_prime_subfield(FieldElement a) const { return a.code() < p_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws DivisionByZero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  /// Negative exponents invert first.
  FieldElement pow(FieldElement a, std::int64_t e) const;
  FieldElement pow_u(FieldElement a, std::uint64_t e) const;

  /// Uniform random element.
  FieldElement random(std::mt19937_64& rng) const;

  /// Image of an element of GF(p) (this field must be prime) in `target`'s
  /// prime subfield. Throws CharacteristicMismatch.
  FieldElement embed(FieldElement a, const Field& target) const;

  /// "[c0,c1,...]" with exactly k entries.
  std::string format(FieldElement a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint64_t p, int k, std::vector<std::uint64_t> modulus);

  FieldElement mul_poly(FieldElement a, FieldElement b) const;
  FieldElement inv_poly(FieldElement a) const;

  std::uint64_t p_ = 2;
  int k_ = 1;
  std::uint64_t q_ = 2;
  std::vector<std::uint64_t> modulus_;
};

bool is_prime(std::uint64_t n);

/// Irreducibility of a monic polynomial over GF(p) (coefficients low degree
/// first). Root search first; exhaustive trial division for degree <= 4,
/// Rabin's distinct-degree test above that.
bool is_irreducible_over_prime(std::uint64_t p, std::span<const std::uint64_t> monic);

}  // namespace hopflab
