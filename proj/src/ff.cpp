#include "hopflab/ff.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "hopflab/error.hpp"
#include "hopflab/poly.hpp"

namespace hopflab {

namespace {

constexpr int kMaxDegree = 16;

std::uint64_t checked_power(std::uint64_t p, int k) {
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) {
      throw Error(ErrorCode::DimensionMismatch, "field order p^k exceeds 2^62");
    }
    q *= p;
  }
  return q;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_over_prime(std::uint64_t p, std::span<const std::uint64_t> monic) {
  const int k = static_cast<int>(monic.size()) - 1;
  if (k < 1 || monic.back() != 1) return false;
  if (k == 1) return true;
  const Field gfp = Field::prime(p);
  std::vector<FieldElement> c;
  for (auto v : monic) c.push_back(gfp.from_int(static_cast<std::int64_t>(v % p)));
  const Poly f(c);
  const PolyRing ring(gfp);

  // No roots.
  if (p <= 100000) {
    for (std::uint64_t r = 0; r < p; ++r) {
      if (ring.eval(f, FieldElement{r}).is_zero()) return false;
    }
  } else {
    const Poly xp = ring.powmod(ring.x(), p, f);
    if (ring.gcd(f, ring.sub(xp, ring.x())).degree() > 0) return false;
  }
  if (k <= 3) return true;

  if (k <= 4 && p <= 1000) {
    // Exhaustive trial division by monic quadratics.
    for (std::uint64_t c0 = 0; c0 < p; ++c0) {
      for (std::uint64_t c1 = 0; c1 < p; ++c1) {
        const Poly d({FieldElement{c0}, FieldElement{c1}, gfp.one()});
        if (ring.mod(f, d).is_zero()) return false;
      }
    }
    return true;
  }

  // Rabin: x^(p^k) = x mod f and gcd(x^(p^(k/r)) - x, f) = 1 for primes r | k.
  auto frobenius_power = [&](int times) {
    Poly h = ring.x();
    for (int i = 0; i < times; ++i) h = ring.powmod(h, p, f);
    return h;
  };
  if (!ring.sub(frobenius_power(k), ring.x()).is_zero()) return false;
  for (int r = 2; r <= k; ++r) {
    if (k % r != 0 || !is_prime(static_cast<std::uint64_t>(r))) continue;
    const Poly h = ring.sub(frobenius_power(k / r), ring.x());
    if (ring.gcd(f, h).degree() != 0) return false;
  }
  return true;
}

Field::Field(std::uint64_t p, int k, std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), q_(checked_power(p, k)), modulus_(std::move(modulus)) {}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
    throw Error(ErrorCode::NonPrimeCharacteristic,
                std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(p, 1, {});
}

Field Field::extension(std::uint64_t p, int k, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
    throw Error(ErrorCode::NonPrimeCharacteristic,
                std::to_string(p) + " is not a prime below 2^31");
  }
  if (k < 1 || k > kMaxDegree) {
    throw Error(ErrorCode::ReducibleModulus, "extension degree must be in 1..16");
  }
  if (k == 1) {
    if (!modulus.empty() && !(modulus.size() == 2 && modulus[1] == 1)) {
      throw Error(ErrorCode::ReducibleModulus, "degree-1 field takes no modulus");
    }
    return Field(p, 1, {});
  }
  if (static_cast<int>(modulus.size()) != k + 1 || modulus.back() != 1) {
    throw Error(ErrorCode::ReducibleModulus, "modulus must be monic of degree k");
  }
  for (auto c : modulus) {
    if (c >= p) throw Error(ErrorCode::ReducibleModulus, "modulus coefficient out of range");
  }
  if (!is_irreducible_over_prime(p, modulus)) {
    throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(p)");
  }
  return Field(p, k, std::move(modulus));
}

Field Field::automatic(std::uint64_t p, int k) {
  const Field base = prime(p);
  if (k == 1) return base;
  if (k < 1 || k > kMaxDegree) {
    throw Error(ErrorCode::ReducibleModulus, "extension degree must be in 1..16");
  }
  checked_power(p, k);
  // Enumerate [c0, ..., c_{k-1}] with c0 most significant.
  std::vector<std::uint64_t> c(k, 0);
  while (true) {
    std::vector<std::uint64_t> modulus = c;
    modulus.push_back(1);
    if (modulus[0] != 0 && is_irreducible_over_prime(p, modulus)) {
      return Field(p, k, std::move(modulus));
    }
    int i = k - 1;
    while (i >= 0 && ++c[i] == p) c[i--] = 0;
    if (i < 0) break;
  }
  throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
}

FieldElement Field::from_int(std::int64_t v) const {
  const auto sp = static_cast<std::int64_t>(p_);
  std::int64_t r = v % sp;
  if (r < 0) r += sp;
  return FieldElement{static_cast<std::uint64_t>(r)};
}

FieldElement Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) > k_) {
    throw Error(ErrorCode::DimensionMismatch, "too many coefficients for field element");
  }
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    code = code * p_ + coeffs[i] % p_;
  }
  return FieldElement{code};
}

std::vector<std::uint64_t> Field::coeffs(FieldElement a) const {
  std::vector<std::uint64_t> out(k_);
  std::uint64_t code = a.code();
  for (int i = 0; i < k_; ++i) {
    out[i] = code % p_;
    code /= p_;
  }
  return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (k_ == 1) {
    std::uint64_t s = a.code() + b.code();
    return FieldElement{s >= p_ ? s - p_ : s};
  }
  std::uint64_t x = a.code(), y = b.code(), out = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    std::uint64_t s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    out += s * scale;
    scale *= p_;
    x /= p_;
    y /= p_;
  }
  return FieldElement{out};
}

FieldElement Field::neg(FieldElement a) const {
  if (k_ == 1) return FieldElement{a.code() == 0 ? 0 : p_ - a.code()};
  std::uint64_t x = a.code(), out = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    const std::uint64_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    x /= p_;
  }
  return FieldElement{out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (k_ == 1) return FieldElement{(a.code() * b.code()) % p_};
  return mul_poly(a, b);
}

FieldElement Field::mul_poly(FieldElement a, FieldElement b) const {
  std::uint64_t ca[kMaxDegree], cb[kMaxDegree], prod[2 * kMaxDegree] = {};
  std::uint64_t x = a.code(), y = b.code();
  for (int i = 0; i < k_; ++i) {
    ca[i] = x % p_;
    cb[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  for (int i = 0; i < k_; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    }
  }
  // x^k = -(c0 + c1 x + ... + c_{k-1} x^{k-1})
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    const std::uint64_t t = prod[d];
    if (t == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k_; ++i) {
      const std::uint64_t sub = (t * modulus_[i]) % p_;
      prod[d - k_ + i] = (prod[d - k_ + i] + p_ - sub) % p_;
    }
  }
  std::uint64_t code = 0;
  for (int i = k_; i-- > 0;) code = code * p_ + prod[i];
  return FieldElement{code};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (k_ == 1) {
    // Extended Euclid on integers.
    std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(a.code());
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t qt = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
      std::tie(s0, s1) = std::make_pair(s1, s0 - qt * s1);
    }
    return from_int(s0);
  }
  return inv_poly(a);
}

FieldElement Field::inv_poly(FieldElement a) const {
  // Extended Euclid in GF(p)[x] against the modulus.
  const Field base(p_, 1, {});
  const PolyRing ring(base);
  std::vector<FieldElement> ca, cm;
  for (auto c : coeffs(a)) ca.push_back(FieldElement{c});
  for (auto c : modulus_) cm.push_back(FieldElement{c});
  auto [g, s, t] = ring.ext_gcd(Poly(ca), Poly(cm));
  (void)t;
  if (g.degree() != 0) throw Error(ErrorCode::DivisionByZero, "element not invertible");
  std::vector<std::uint64_t> out;
  for (int i = 0; i <= s.degree(); ++i) out.push_back(s.coeff(i).code());
  return from_coeffs(out);
}

FieldElement Field::pow_u(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement Field::pow(FieldElement a, std::int64_t e) const {
  if (e < 0) return pow_u(inv(a), static_cast<std::uint64_t>(-(e + 1)) + 1);
  return pow_u(a, static_cast<std::uint64_t>(e));
}

FieldElement Field::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, q_ - 1);
  return FieldElement{dist(rng)};
}

FieldElement Field::embed(FieldElement a, const Field& target) const {
  if (target.p_ != p_) {
    throw Error(ErrorCode::CharacteristicMismatch,
                "cannot embed GF(" + std::to_string(p_) + ") into GF(" + std::to_string(target.p_) +
                    "^" + std::to_string(target.k_) + ")");
  }
  if (!in_prime_subfield(a)) {
    throw Error(ErrorCode::CharacteristicMismatch, "element is not in the prime subfield");
  }
  return FieldElement{a.code()};
}

std::string Field::format(FieldElement a) const {
  std::ostringstream os;
  os << '[';
  const auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

}  // namespace hopflab
