#pragma once

// Univariate polynomials over a Field and their factorization.

#include <random>
#include <utility>
#include <vector>

#include "hopflab/ff.hpp"

namespace hopflab {

/// Coefficients low degree first; never has trailing zeros, so the zero
/// polynomial is the empty list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<FieldElement> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  FieldElement coeff(int i) const;
  FieldElement leading() const { return coeffs_.empty() ? FieldElement{} : coeffs_.back(); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<FieldElement> coeffs_;
};

struct FactorPower {
  Poly factor;  // monic irreducible
  int multiplicity;
};

struct Factorization {
  FieldElement unit;                 // leading coefficient of the input
  std::vector<FactorPower> factors;  // sorted by (degree, coefficients)
};

class PolyRing {
 public:
  explicit PolyRing(Field field) : field_(std::move(field)) {}

  const Field& field() const { return field_; }

  Poly constant(FieldElement c) const;
  Poly x() const;
  /// x - root
  Poly linear(FieldElement root) const;
  Poly from_ints(std::initializer_list<std::int64_t> coeffs) const;

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly scale(const Poly& a, FieldElement c) const;
  /// Throws DivisionByZero when b is zero.
  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
  Poly mod(const Poly& a, const Poly& b) const { return divmod(a, b).second; }
  Poly div(const Poly& a, const Poly& b) const { return divmod(a, b).first; }
  Poly monic(const Poly& a) const;
  /// Monic gcd (zero if both inputs are zero).
  Poly gcd(const Poly& a, const Poly& b) const;
  /// Returns (g, s, t) with s*a + t*b = g monic.
  std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) const;
  Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus) const;
  Poly derivative(const Poly& a) const;
  FieldElement eval(const Poly& a, FieldElement x) const;

  /// Square-free, distinct-degree and equal-degree (Cantor-Zassenhaus)
  /// factorization. The product of unit and all factors with multiplicity
  /// reproduces f. Throws DivisionByZero for f = 0.
  Factorization factor(const Poly& f, std::mt19937_64& rng) const;

  /// Roots of f in the field, sorted by code, without multiplicity.
  std::vector<FieldElement> roots(const Poly& f, std::mt19937_64& rng) const;

  std::string format(const Poly& f) const;

 private:
  std::vector<std::pair<Poly, int>> squarefree(const Poly& monic_f) const;
  std::vector<std::pair<Poly, int>> distinct_degree(const Poly& sqfree_monic) const;
  void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) const;
  Poly pth_root(const Poly& f) const;

  Field field_;
};

/// Ring homomorphism GF(p^k) -> GF(p^m) for k | m, sending the generator x to
/// the smallest root (by code) of the source modulus in the target field.
class FieldEmbedding {
 public:
  /// Throws CharacteristicMismatch, or FieldTooSmall when k does not divide m.
  FieldEmbedding(const Field& source, const Field& target);

  FieldElement operator()(FieldElement a) const;
  const Field& source() const { return source_; }
  const Field& target() const { return target_; }

 private:
  Field source_;
  Field target_;
  std::vector<FieldElement> generator_powers_;
};

}  // namespace hopflab
