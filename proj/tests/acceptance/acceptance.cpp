// Acceptance run over the bundled corpus. One line per criterion; exit code
// is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hopflab/builders.hpp"
#include "hopflab/cli.hpp"
#include "hopflab/error.hpp"
#include "hopflab/indicators.hpp"
#include "hopflab/io.hpp"
#include "hopflab/twist.hpp"

using namespace hopflab;

namespace {

std::string corpus(const std::string& f) { return std::string(HOPFLAB_CORPUS_DIR) + "/" + f; }

struct Entry {
  std::string file;
  HopfAlgebra H;
};

const std::vector<std::string> kGroups = {"c2_gf5", "c3_gf7", "c4_gf5", "k4_gf5", "s3_gf7", "d4_gf5", "q8_gf25"};

std::vector<Entry> load_corpus() {
  std::vector<std::string> names;
  for (const auto& g : kGroups) {
    names.push_back(g);
    names.push_back(g.substr(0, 2) + "dual" + g.substr(2));
  }
  for (const char* d : {"d_c2_gf5", "d_c3_gf7", "d_s3_gf7"}) names.push_back(d);
  std::vector<Entry> out;
  for (const auto& n : names) out.push_back({n + ".hopf", parse_hopf(read_file(corpus(n + ".hopf")))});
  return out;
}

GroupTable group_of(const std::string& name) {
  if (name.starts_with("c2")) return cyclic_group(2);
  if (name.starts_with("c3")) return cyclic_group(3);
  if (name.starts_with("c4")) return cyclic_group(4);
  if (name.starts_with("k4")) return direct_product(cyclic_group(2), cyclic_group(2));
  if (name.starts_with("s3")) return symmetric_group3();
  if (name.starts_with("d4")) return dihedral_group4();
  return quaternion_group();
}

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

// Complex character tables, one row per irreducible, indexed by the group
// element numbering of the builders.
using Table = std::vector<std::vector<std::complex<double>>>;

Table cyclic_table(std::size_t m) {
  Table t;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<std::complex<double>> row;
    for (std::size_t j = 0; j < m; ++j) row.push_back(std::polar(1.0, 2 * std::numbers::pi * double(j * k) / double(m)));
    t.push_back(row);
  }
  return t;
}

Table character_table(const std::string& name, const GroupTable& G) {
  if (name.starts_with("c2")) return cyclic_table(2);
  if (name.starts_with("c3")) return cyclic_table(3);
  if (name.starts_with("c4")) return cyclic_table(4);
  Table t;
  if (name.starts_with("k4")) {
    // element a·2 + b
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        std::vector<std::complex<double>> row;
        for (std::size_t g = 0; g < 4; ++g) row.push_back(((g / 2) * x + (g % 2) * y) % 2 ? -1.0 : 1.0);
        t.push_back(row);
      }
    return t;
  }
  if (name.starts_with("s3")) {
    std::vector<std::complex<double>> triv, sign, std2;
    for (std::size_t g = 0; g < 6; ++g) {
      const std::string& p = G.name(g);
      int fixed = 0;
      for (int x = 0; x < 3; ++x) fixed += p[x] - '0' == x;
      triv.push_back(1.0);
      sign.push_back(fixed == 1 ? -1.0 : 1.0);
      std2.push_back(double(fixed - 1));
    }
    return {triv, sign, std2};
  }
  if (name.starts_with("d4")) {
    // r^a s^b at a + 4b
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        std::vector<std::complex<double>> row;
        for (std::size_t g = 0; g < 8; ++g) row.push_back(((g % 4) * x + (g / 4) * y) % 2 ? -1.0 : 1.0);
        t.push_back(row);
      }
    std::vector<std::complex<double>> two;
    for (std::size_t g = 0; g < 8; ++g) two.push_back(g / 4 ? 0.0 : (g % 4 == 0 ? 2.0 : g % 4 == 2 ? -2.0 : 0.0));
    t.push_back(two);
    return t;
  }
  // Q8: unit u ∈ {1,i,j,k} with sign bit, at 2u + neg
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      std::vector<std::complex<double>> row;
      for (std::size_t g = 0; g < 8; ++g) {
        const std::size_t u = g / 2;
        const int e = u == 1 ? x : u == 2 ? y : u == 3 ? x + y : 0;
        row.push_back(e % 2 ? -1.0 : 1.0);
      }
      t.push_back(row);
    }
  std::vector<std::complex<double>> two;
  for (std::size_t g = 0; g < 8; ++g) two.push_back(g == 0 ? 2.0 : g == 1 ? -2.0 : 0.0);
  t.push_back(two);
  return t;
}

// (1/|G|) Σ χ(g²), rounded to an integer.
long classical_nu2(const GroupTable& G, const std::vector<std::complex<double>>& chi) {
  std::complex<double> s = 0;
  for (std::size_t g = 0; g < G.order(); ++g) s += chi[G.mul(g, g)];
  return std::lround((s / double(G.order())).real());
}

std::size_t group_power(const GroupTable& G, std::size_t g, int n) {
  std::size_t x = G.identity();
  for (int k = 0; k < n; ++k) x = G.mul(x, g);
  return x;
}

int run_cli_quiet(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return run_cli(args, out, err);
}

using Pair = std::pair<IntegralData, WedderburnData>;

}  // namespace

int main() {
  std::vector<Entry> all;
  try {
    all = load_corpus();
  } catch (const std::exception& e) {
    std::cout << "corpus load failed: " << e.what() << '\n';
    return 1;
  }
  std::map<std::string, Pair> data;
  int failures = 0;
  auto report = [&](int k, const std::string& title, const Outcome& o) {
    std::cout << "criterion " << k << " " << (o.pass ? "PASS" : "FAIL") << "  " << title;
    if (!o.note.empty()) std::cout << "  (" << o.note << ")";
    std::cout << '\n';
    failures += !o.pass;
  };
  auto guarded = [&](int k, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    try {
      body(o);
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    report(k, title, o);
  };

  guarded(1, "axioms, one-dimensional integrals, semisimplicity, p^2 > dim", [&](Outcome& o) {
    const auto t0 = Clock::now();
    for (const auto& [file, H] : all) {
      if (!verify_axioms(H).all_passed()) o.fail(file + ": axioms");
      const IntegralData id = integral_data(H);
      const Report r = integral_properties(H, id);
      for (const char* c : {"integral.space_dim_one", "integral.dual_space_dim_one", "integral.semisimple",
                            "integral.p_squared_exceeds_dim"})
        if (!r.passed(c)) o.fail(file + ": " + c);
      data.emplace(file, Pair{id, wedderburn(H, id, 1)});
    }
    const double s = seconds_since(t0);
    o.note = o.pass ? std::to_string(all.size()) + " algebras, " + std::to_string(s) + " s" : o.note;
    if (s >= 5.0) o.fail("runtime " + std::to_string(s) + " s");
  });

  guarded(2, "S^2(b) = u b u^-1 with u = S(L_2)L_1", [&](Outcome& o) {
    for (const auto& [file, H] : all) {
      const IntegralData& id = data.at(file).first;
      // u contracted here from Δ(Λ)
      const TensorElement d = H.comultiply(id.lambda_H);
      const std::size_t n = H.dim();
      AlgElement u = H.zero();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (d.coeffs[i * n + j].is_zero()) continue;
          u = H.add(u, H.scale(H.multiply(H.antipode(H.basis(j)), H.basis(i)), d.coeffs[i * n + j]));
        }
      if (!(u == id.u)) o.fail(file + ": u differs");
      const AlgElement ui = H.inverse(u);
      for (std::size_t i = 0; i < n; ++i)
        if (!(H.antipode(H.antipode(H.basis(i))) == H.multiply(H.multiply(u, H.basis(i)), ui)))
          o.fail(file + ": b" + std::to_string(i));
    }
  });

  guarded(3, "identity suite via props, exit 0 on every algebra", [&](Outcome& o) {
    const auto t0 = Clock::now();
    for (const auto& [file, H] : all)
      if (const int code = run_cli_quiet({"props", corpus(file)}); code != 0)
        o.fail(file + ": exit " + std::to_string(code));
    const double s = seconds_since(t0);
    if (s >= 30.0) o.fail("runtime " + std::to_string(s) + " s");
    if (o.pass) o.note = std::to_string(s) + " s";
  });

  guarded(4, "Wedderburn dimensions", [&](Outcome& o) {
    for (const auto& [file, H] : all) {
      std::size_t sum = 0;
      for (auto d : data.at(file).second.dims) sum += d * d;
      if (sum != H.dim()) o.fail(file + ": sum of squares " + std::to_string(sum));
    }
    auto dims = data.at("s3_gf7.hopf").second.dims;
    std::sort(dims.begin(), dims.end());
    if (dims != std::vector<std::size_t>{1, 1, 2}) o.fail("S3 dims");
    std::size_t sum = 0;
    for (auto d : data.at("d_s3_gf7.hopf").second.dims) sum += d * d;
    if (sum != 36) o.fail("D(S3)");
  });

  guarded(5, "nu_2 of simples matches the classical indicator mod p", [&](Outcome& o) {
    for (const auto& g : kGroups) {
      const std::string file = g + ".hopf";
      const HopfAlgebra& H = std::find_if(all.begin(), all.end(), [&](const Entry& e) { return e.file == file; })->H;
      const GroupTable G = group_of(g);
      const auto& [id, wd] = data.at(file);
      std::vector<std::pair<std::size_t, std::uint64_t>> ours, theirs;
      for (std::size_t i = 0; i < wd.dims.size(); ++i)
        ours.push_back({wd.dims[i], indicator(H, id, wd.characters[i], 2).code()});
      for (const auto& chi : character_table(g, G))
        theirs.push_back({std::size_t(std::lround(chi[G.identity()].real())),
                          H.field().from_int(classical_nu2(G, chi)).code()});
      std::sort(ours.begin(), ours.end());
      std::sort(theirs.begin(), theirs.end());
      if (ours != theirs) o.fail(g);
    }
  });

  guarded(6, "nu_n(H) = tr(S P_{n-1}) = #{g : g^n = e}", [&](Outcome& o) {
    for (const auto& g : kGroups) {
      const std::string file = g + ".hopf";
      const HopfAlgebra& H = std::find_if(all.begin(), all.end(), [&](const Entry& e) { return e.file == file; })->H;
      const GroupTable G = group_of(g);
      const IntegralData& id = data.at(file).first;
      SweedlerPowers P(H);
      for (int n = 1; n <= int(G.order()); ++n) {
        std::int64_t count = 0;
        for (std::size_t x = 0; x < G.order(); ++x) count += group_power(G, x, n) == G.identity();
        const FieldElement want = H.field().from_int(count);
        if (regular_indicator_trace(H, n, P) != want || indicator(H, id, H.regular_character(), n, P) != want)
          o.fail(g + " n=" + std::to_string(n));
      }
    }
  });

  guarded(7, "operator route equals the integral formula", [&](Outcome& o) {
    const auto t0 = Clock::now();
    auto compare = [&](const std::string& file, const ModuleRep& V, int top) {
      const HopfAlgebra H = parse_hopf(read_file(corpus(file)));
      const IntegralData id = integral_data(H);
      const Vector chi = module_character(H, V);
      for (int n = 1; n <= top; ++n)
        if (operator_indicator(H, id, V, n) != indicator(H, id, chi, n)) o.fail(file + " n=" + std::to_string(n));
    };
    for (const char* f : {"c3_gf7.hopf", "c2_gf5.hopf"}) compare(f, regular_module(parse_hopf(read_file(corpus(f)))), 4);
    const HopfAlgebra S3 = parse_hopf(read_file(corpus("s3_gf7.hopf")));
    compare("s3_gf7.hopf", parse_module(read_file(corpus("s3_std.module")), S3), 3);
    const double s = seconds_since(t0);
    if (s >= 10.0) o.fail("runtime " + std::to_string(s) + " s");
  });

  guarded(8, "nu_-1 = nu_1, nu_-2 = nu_2, dual simples, closed form, n in -6..6", [&](Outcome& o) {
    for (const auto& [file, H] : all) {
      const auto& [id, wd] = data.at(file);
      const IndicatorTable t = indicator_table(H, id, wd, -6, 6);
      for (const char* c : {"indicators.nu_minus_one_equals_nu_one", "indicators.nu_minus_two_equals_nu_two",
                            "indicators.dual_invariance", "indicators.closed_form_for_simples"})
        if (!t.checks.passed(c)) o.fail(file + ": " + c);
    }
  });

  guarded(9, "gauge invariance under bicharacter twists", [&](Outcome& o) {
    for (const auto& [alg, tw] : std::vector<std::pair<std::string, std::string>>{
             {"k4dual_gf5.hopf", "k4_bichar.twist"},
             {"c3c3dual_gf7.hopf", "c3c3_bichar.twist"},
             {"d4_gf5.hopf", "d4_klein.twist"}}) {
      const HopfAlgebra H = parse_hopf(read_file(corpus(alg)));
      const TwistFile f = parse_twist(read_file(corpus(tw)), H);
      const Twist t = twist_validate(H, f.J, f.J_inv);
      if (!verify_axioms(twist_hopf(H, t)).all_passed()) o.fail(alg + ": H^J axioms");
      if (!twisted_u_check(H, t, integral_data(H)).passed("twist.u_formula")) o.fail(alg + ": u^J");
      const Report g = gauge_invariance_check(H, t, -4, 4, 1);
      if (!g.passed("gauge.indicator_multiset") || !g.passed("gauge.dimension_multiset")) o.fail(alg + ": multisets");
    }
  });

  guarded(10, "indicator tables do not depend on the scale of the integral", [&](Outcome& o) {
    std::mt19937_64 rng(20261018);
    for (const auto& [file, H] : all) {
      const auto& [id, wd] = data.at(file);
      FieldElement c;
      do c = H.field().random(rng);
      while (c.is_zero() || c == H.field().one());
      const IntegralData scaled = integral_data(H, H.scale(id.lambda_H, c));
      const WedderburnData wd2 = wedderburn(H, scaled, 1);
      const IndicatorTable a = indicator_table(H, id, wd, -6, 6);
      const IndicatorTable b = indicator_table(H, scaled, wd2, -6, 6);
      if (a.rows != b.rows || a.regular_row != b.regular_row) o.fail(file);
    }
  });

  guarded(11, "GF(3)[C3] is rejected as not semisimple", [&](Outcome& o) {
    const HopfAlgebra H = parse_hopf(read_file(corpus("c3_gf3.hopf")));
    try {
      integral_data(H);
      o.fail("integral data accepted");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SemisimplicityFailure) o.fail(e.what());
    }
    std::ostringstream out, err;
    const int code = run_cli({"check", corpus("c3_gf3.hopf")}, out, err);
    if (code != 1) o.fail("check exit " + std::to_string(code));
    if (out.str().find("FAIL semisimplicity.counit_of_integral_nonzero") == std::string::npos)
      o.fail("no semisimplicity failure reported");
  });

  std::cout << (failures ? "acceptance FAILED" : "acceptance passed") << " (" << 11 - failures << "/11)\n";
  return failures ? 1 : 0;
}
