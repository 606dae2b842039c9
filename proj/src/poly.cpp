#include "hopflab/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hopflab/error.hpp"

namespace hopflab {

Poly::Poly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return FieldElement{};
  return coeffs_[static_cast<std::size_t>(i)];
}

Poly PolyRing::constant(FieldElement c) const { return Poly({c}); }

Poly PolyRing::x() const { return Poly({field_.zero(), field_.one()}); }

Poly PolyRing::linear(FieldElement root) const { return Poly({field_.neg(root), field_.one()}); }

Poly PolyRing::from_ints(std::initializer_list<std::int64_t> coeffs) const {
  std::vector<FieldElement> c;
  for (auto v : coeffs) c.push_back(field_.from_int(v));
  return Poly(std::move(c));
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
  std::vector<FieldElement> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = field_.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  }
  return Poly(std::move(c));
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const {
  std::vector<FieldElement> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = field_.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  }
  return Poly(std::move(c));
}

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldElement> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = field_.add(c[i + j], field_.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return Poly(std::move(c));
}

Poly PolyRing::scale(const Poly& a, FieldElement s) const {
  std::vector<FieldElement> c(a.coeffs());
  for (auto& v : c) v = field_.mul(v, s);
  return Poly(std::move(c));
}

std::pair<Poly, Poly> PolyRing::divmod(const Poly& a, const Poly& b) const {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<FieldElement> r(a.coeffs());
  std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const FieldElement lead_inv = field_.inv(b.leading());
  const int db = b.degree();
  for (int d = a.degree(); d >= db; --d) {
    const FieldElement t = field_.mul(r[static_cast<std::size_t>(d)], lead_inv);
    if (t.is_zero()) continue;
    q[static_cast<std::size_t>(d - db)] = t;
    for (int i = 0; i <= db; ++i) {
      auto& slot = r[static_cast<std::size_t>(d - db + i)];
      slot = field_.sub(slot, field_.mul(t, b.coeffs()[static_cast<std::size_t>(i)]));
    }
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly PolyRing::monic(const Poly& a) const {
  if (a.is_zero()) return a;
  return scale(a, field_.inv(a.leading()));
}

Poly PolyRing::gcd(const Poly& a, const Poly& b) const {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

std::tuple<Poly, Poly, Poly> PolyRing::ext_gcd(const Poly& a, const Poly& b) const {
  Poly r0 = a, r1 = b;
  Poly s0 = constant(field_.one()), s1{};
  Poly t0{}, t1 = constant(field_.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, sub(s0, mul(q, s1)));
    t0 = std::exchange(t1, sub(t0, mul(q, t1)));
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FieldElement li = field_.inv(r0.leading());
  return {scale(r0, li), scale(s0, li), scale(t0, li)};
}

Poly PolyRing::powmod(const Poly& base, std::uint64_t e, const Poly& modulus) const {
  Poly result = mod(constant(field_.one()), modulus);
  Poly b = mod(base, modulus);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, b), modulus);
    e >>= 1;
    if (e) b = mod(mul(b, b), modulus);
  }
  return result;
}

Poly PolyRing::derivative(const Poly& a) const {
  if (a.degree() < 1) return {};
  std::vector<FieldElement> c(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) {
    c[static_cast<std::size_t>(i - 1)] = field_.mul(field_.from_int(i), a.coeff(i));
  }
  return Poly(std::move(c));
}

FieldElement PolyRing::eval(const Poly& a, FieldElement x) const {
  FieldElement acc = field_.zero();
  for (int i = a.degree(); i >= 0; --i) acc = field_.add(field_.mul(acc, x), a.coeff(i));
  return acc;
}

Poly PolyRing::pth_root(const Poly& f) const {
  // f(x) = g(x^p); coefficients of g are p-th roots: a^(q/p).
  const std::uint64_t p = field_.characteristic();
  const std::uint64_t root_exp = field_.order() / p;
  std::vector<FieldElement> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) {
    c.push_back(field_.pow_u(f.coeff(i), root_exp));
  }
  return Poly(std::move(c));
}

std::vector<std::pair<Poly, int>> PolyRing::squarefree(const Poly& f) const {
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() < 1) return out;
  const int p = static_cast<int>(std::min<std::uint64_t>(field_.characteristic(), 1u << 30));
  const Poly df = derivative(f);
  if (df.is_zero()) {
    for (auto& [g, m] : squarefree(pth_root(f))) out.emplace_back(g, m * p);
    return out;
  }
  Poly c = gcd(f, df);
  Poly w = div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = div(w, y);
    if (fac.degree() > 0) out.emplace_back(monic(fac), i);
    w = y;
    c = div(c, y);
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree(pth_root(monic(c)))) out.emplace_back(g, m * p);
  }
  return out;
}

std::vector<std::pair<Poly, int>> PolyRing::distinct_degree(const Poly& sqfree) const {
  std::vector<std::pair<Poly, int>> out;
  Poly f = sqfree;
  Poly h = x();
  const std::uint64_t q = field_.order();
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    h = powmod(h, q, f);
    Poly g = gcd(f, sub(h, x()));
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = div(f, g);
      h = mod(h, f);
    }
  }
  if (f.degree() > 0) out.emplace_back(monic(f), f.degree());
  return out;
}

void PolyRing::equal_degree(const Poly& f, int d, std::mt19937_64& rng,
                            std::vector<Poly>& out) const {
  if (f.degree() == d) {
    out.push_back(monic(f));
    return;
  }
  const std::uint64_t p = field_.characteristic();
  const std::uint64_t q = field_.order();
  while (true) {
    std::vector<FieldElement> c(static_cast<std::size_t>(f.degree()));
    for (auto& v : c) v = field_.random(rng);
    const Poly a(std::move(c));
    if (a.degree() < 1) continue;
    Poly b;
    if (p == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(k d - 1)).
      const int steps = field_.degree() * d;
      Poly term = a;
      b = a;
      for (int j = 1; j < steps; ++j) {
        term = mod(mul(term, term), f);
        b = add(b, term);
      }
    } else {
      // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
      Poly norm = mod(a, f);
      Poly frob = mod(a, f);
      for (int j = 1; j < d; ++j) {
        frob = powmod(frob, q, f);
        norm = mod(mul(norm, frob), f);
      }
      b = sub(powmod(norm, (q - 1) / 2, f), constant(field_.one()));
    }
    Poly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(div(f, g), d, rng, out);
      return;
    }
  }
}

namespace {

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

}  // namespace

Factorization PolyRing::factor(const Poly& f, std::mt19937_64& rng) const {
  if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "cannot factor the zero polynomial");
  Factorization result{f.leading(), {}};
  const Poly g = monic(f);
  for (auto& [sq, mult] : squarefree(g)) {
    for (auto& [block, d] : distinct_degree(sq)) {
      std::vector<Poly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& h : irreducibles) {
        auto it = std::find_if(result.factors.begin(), result.factors.end(),
                               [&](const FactorPower& fp) { return fp.factor == h; });
        if (it != result.factors.end()) {
          it->multiplicity += mult;
        } else {
          result.factors.push_back({h, mult});
        }
      }
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const FactorPower& a, const FactorPower& b) { return poly_less(a.factor, b.factor); });
  return result;
}

std::vector<FieldElement> PolyRing::roots(const Poly& f, std::mt19937_64& rng) const {
  std::vector<FieldElement> out;
  for (const auto& fp : factor(f, rng).factors) {
    if (fp.factor.degree() == 1) out.push_back(field_.neg(fp.factor.coeff(0)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string PolyRing::format(const Poly& f) const {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const FieldElement c = f.coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == field_.one();
    if (!unit || i == 0) os << (field_.degree() == 1 ? std::to_string(c.code()) : field_.format(c));
    if (i >= 1) os << (unit ? "" : "*") << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

FieldEmbedding::FieldEmbedding(const Field& source, const Field& target)
    : source_(source), target_(target) {
  if (source.characteristic() != target.characteristic()) {
    throw Error(ErrorCode::CharacteristicMismatch, "fields have different characteristic");
  }
  if (target.degree() % source.degree() != 0) {
    throw FieldTooSmall(source.degree(), "target degree is not a multiple of source degree");
  }
  const int k = source.degree();
  FieldElement gen = target.zero();
  if (k == 1) {
    gen = target.one();  // unused beyond power 0
  } else {
    std::vector<FieldElement> c;
    for (auto v : source.modulus()) c.push_back(FieldElement{v});
    std::mt19937_64 rng(0x5eed);
    const PolyRing ring(target);
    const auto r = ring.roots(Poly(std::move(c)), rng);
    if (r.empty()) throw FieldTooSmall(k, "source modulus has no root in target");
    gen = r.front();
  }
  FieldElement acc = target.one();
  for (int i = 0; i < k; ++i) {
    generator_powers_.push_back(acc);
    acc = target.mul(acc, gen);
  }
}

FieldElement FieldEmbedding::operator()(FieldElement a) const {
  FieldElement out = target_.zero();
  const auto c = source_.coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    out = target_.add(out, target_.mul(FieldElement{c[i]}, generator_powers_[i]));
  }
  return out;
}

}  // namespace hopflab
