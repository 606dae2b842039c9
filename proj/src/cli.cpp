#include "hopflab/cli.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <regex>

#include "CLI11.hpp"
#include "hopflab/error.hpp"
#include "hopflab/indicators.hpp"
#include "hopflab/integrals.hpp"
#include "hopflab/io.hpp"
#include "hopflab/poly.hpp"
#include "hopflab/twist.hpp"
#include "hopflab/wedderburn.hpp"
#include "json.hpp"

namespace hopflab {

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr std::uint64_t kDefaultSeed = 1;

struct Options {
  std::string command;
  std::string file;
  std::string format = "text";
  std::string n_range = "-4..6";
  std::optional<std::uint64_t> seed;
  bool extend_field = false;
  bool no_verify = false;
  bool allow_small_p = false;
  std::string module_file;
  std::string twist_file;
  std::size_t budget = 100000;
  int lo = -4;
  int hi = 6;
};

// Emits checks and tables in either output format, in call order.
class Printer {
 public:
  Printer(std::ostream& out, bool json) : out_(out), json_(json) {}

  void header(const std::string& command, const std::string& digest) {
    if (json_) {
      line({{"record", "header"}, {"tool", "hopflab"}, {"version", kVersion}, {"command", command}, {"input", digest}});
    } else {
      out_ << "hopflab " << kVersion << " " << command << " (input " << digest << ")\n";
    }
  }

  void checks(const Report& r) {
    for (const auto& c : r.checks()) {
      ++total_;
      if (!c.passed) ++failed_;
      if (json_) {
        nlohmann::ordered_json j{{"record", "check"}, {"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
        if (!c.witness.empty()) j["witness"] = c.witness;
        line(j);
      } else {
        out_ << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.witness.empty()) out_ << "  [" << c.witness << "]";
        out_ << '\n';
      }
    }
  }

  void fail(const std::string& name, const std::string& why) {
    Report r;
    r.add(name, false, why);
    checks(r);
  }

  void value(const std::string& name, const std::string& text) {
    if (json_) {
      line({{"record", "value"}, {"name", name}, {"value", text}});
    } else {
      out_ << name << " = " << text << '\n';
    }
  }

  void table(const std::string& name, const std::vector<std::string>& columns,
             const std::vector<std::pair<std::string, std::vector<std::string>>>& rows) {
    if (json_) {
      for (const auto& [label, cells] : rows) {
        nlohmann::ordered_json j{{"record", "row"}, {"table", name}, {"row", label}};
        for (std::size_t c = 0; c < cells.size(); ++c) j[columns[c]] = cells[c];
        line(j);
      }
      return;
    }
    out_ << name << ":\n";
    std::vector<std::size_t> width(columns.size() + 1, 0);
    for (const auto& [label, cells] : rows) {
      width[0] = std::max(width[0], label.size());
      for (std::size_t c = 0; c < cells.size(); ++c) width[c + 1] = std::max(width[c + 1], cells[c].size());
    }
    for (std::size_t c = 0; c < columns.size(); ++c) width[c + 1] = std::max(width[c + 1], columns[c].size());
    out_ << "  " << std::string(width[0], ' ');
    for (std::size_t c = 0; c < columns.size(); ++c) out_ << "  " << pad(columns[c], width[c + 1]);
    out_ << '\n';
    for (const auto& [label, cells] : rows) {
      out_ << "  " << pad(label, width[0]);
      for (std::size_t c = 0; c < cells.size(); ++c) out_ << "  " << pad(cells[c], width[c + 1]);
      out_ << '\n';
    }
  }

  int finish() {
    const bool ok = failed_ == 0;
    if (json_) {
      line({{"record", "summary"}, {"status", ok ? "pass" : "fail"}, {"checks", total_}, {"failed", failed_}});
    } else {
      out_ << "result: " << (ok ? "pass" : "fail") << " (" << total_ - failed_ << "/" << total_ << " checks)\n";
    }
    return ok ? 0 : 1;
  }

 private:
  static std::string pad(const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); }
  void line(const nlohmann::ordered_json& j) { out_ << j.dump() << '\n'; }

  std::ostream& out_;
  bool json_;
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
};

std::string format_vector(const Field& F, std::span<const FieldElement> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += F.format(v[i]);
  }
  return s + ")";
}

// A loaded algebra together with optional module and twist, all over the
// same (possibly extended) field.
struct Inputs {
  HopfAlgebra H;
  std::optional<ModuleRep> module;
  std::optional<TwistFile> twist;
};

Inputs load(const Options& o) {
  Inputs in{parse_hopf(read_file(o.file)), std::nullopt, std::nullopt};
  if (!o.module_file.empty()) in.module = parse_module(read_file(o.module_file), in.H);
  if (!o.twist_file.empty()) in.twist = parse_twist(read_file(o.twist_file), in.H);
  return in;
}

Inputs extend(const Inputs& in, int factor) {
  const Field& F = in.H.field();
  const FieldEmbedding emb(F, Field::automatic(F.characteristic(), F.degree() * factor));
  Inputs out{base_change(in.H, emb), std::nullopt, std::nullopt};
  auto embed_vec = [&](Vector v) {
    for (auto& x : v) x = emb(x);
    return v;
  };
  if (in.module) {
    ModuleRep V{in.module->dim, {}};
    for (const auto& M : in.module->action) {
      Matrix E(M.rows(), M.cols());
      for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) E(r, c) = emb(M(r, c));
      V.action.push_back(std::move(E));
    }
    out.module = std::move(V);
  }
  if (in.twist) {
    TwistFile t{in.twist->J, in.twist->J_inv};
    t.J.coeffs = embed_vec(t.J.coeffs);
    if (t.J_inv) t.J_inv->coeffs = embed_vec(t.J_inv->coeffs);
    out.twist = std::move(t);
  }
  return out;
}

void print_integrals(Printer& pr, const HopfAlgebra& H, const IntegralData& id) {
  const Field& F = H.field();
  pr.value("Lambda", format_vector(F, id.lambda_H.coeffs));
  pr.value("lambda", format_vector(F, id.lambda_dual));
  pr.value("lambda.convention", to_string(id.convention));
  pr.value("epsilon(Lambda)", F.format(id.eps_of_lambda));
  pr.value("u", format_vector(F, id.u.coeffs));
  pr.value("u_inv", format_vector(F, id.u_inv.coeffs));
  pr.value("g", format_vector(F, id.g.coeffs));
}

void print_wedderburn(Printer& pr, const HopfAlgebra& H, const WedderburnData& wd) {
  const Field& F = H.field();
  std::vector<std::string> cols;
  for (std::size_t b = 0; b < H.dim(); ++b) cols.push_back("b" + std::to_string(b));
  std::vector<std::pair<std::string, std::vector<std::string>>> blocks, chars;
  for (std::size_t i = 0; i < wd.idempotents.size(); ++i) {
    const std::string label = "V" + std::to_string(i);
    blocks.push_back({label,
                      {std::to_string(wd.dims[i]), F.format(wd.schur[i]), F.format(wd.lambda_of_e[i]),
                       "V" + std::to_string(wd.dual_index[i])}});
    std::vector<std::string> cells;
    for (auto x : wd.characters[i]) cells.push_back(F.format(x));
    chars.push_back({label, cells});
  }
  pr.table("blocks", {"dim", "schur", "lambda(e)", "dual"}, blocks);
  pr.table("characters", cols, chars);
  for (std::size_t i = 0; i < wd.idempotents.size(); ++i) {
    pr.value("e" + std::to_string(i), format_vector(F, wd.idempotents[i].coeffs));
  }
}

void print_indicators(Printer& pr, const HopfAlgebra& H, const WedderburnData& wd, const IndicatorTable& t) {
  const Field& F = H.field();
  std::vector<std::string> cols;
  for (int n = t.lo; n <= t.hi; ++n) cols.push_back("nu" + std::to_string(n));
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::vector<std::string> cells;
    for (auto x : t.rows[i]) cells.push_back(F.format(x));
    rows.push_back({"V" + std::to_string(i) + " (dim " + std::to_string(wd.dims[i]) + ")", cells});
  }
  std::vector<std::string> reg;
  for (auto x : t.regular_row) reg.push_back(F.format(x));
  rows.push_back({"H", reg});
  pr.table("indicators", cols, rows);
}

// Integral data and Wedderburn data with at most one field extension.
struct Pipeline {
  Inputs in;
  IntegralData id;
  std::optional<WedderburnData> wd;
};

Pipeline run_pipeline(Inputs in, const Options& o, bool need_wedderburn, Printer& pr) {
  const IntegralOptions iopts{o.allow_small_p};
  const std::uint64_t seed = *o.seed;
  for (int attempt = 0;; ++attempt) {
    try {
      IntegralData id = integral_data(in.H, iopts);
      std::optional<WedderburnData> wd;
      if (need_wedderburn) wd = wedderburn(in.H, id, seed);
      return Pipeline{std::move(in), std::move(id), std::move(wd)};
    } catch (const FieldTooSmall& e) {
      if (!o.extend_field || attempt > 0) throw;
      pr.value("field.extended_by", std::to_string(e.required_degree()));
      in = extend(in, e.required_degree());
    }
  }
}

int execute(const Options& o, std::ostream& out) {
  Printer pr(out, o.format == "json-lines");
  Inputs in = load(o);
  pr.header(o.command, algebra_hash(in.H));
  const HopfAlgebra& H0 = in.H;

  if (!o.no_verify) {
    Report ax = verify_axioms(H0);
    pr.checks(ax);
    if (!ax.all_passed()) return pr.finish();
  }

  if (o.command == "check") {
    const std::uint64_t p = H0.field().characteristic();
    Report r;
    r.add("precondition.p_squared_exceeds_dim", p * p > H0.dim(),
          "p = " + std::to_string(p) + ", dim = " + std::to_string(H0.dim()));
    try {
      const AlgElement L = compute_integral(H0);
      r.add("integral.space_dim_one", true);
      const FieldElement e = H0.counit(L);
      r.add("semisimplicity.counit_of_integral_nonzero", !e.is_zero(), "ε(Λ) = " + H0.field().format(e));
    } catch (const Error& e) {
      r.add("integral.space_dim_one", false, e.what());
    }
    pr.checks(r);
    return pr.finish();
  }

  const bool need_wd = o.command != "integrals";
  std::optional<Pipeline> run;
  try {
    run = run_pipeline(std::move(in), o, need_wd, pr);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ValidationError) throw;
    pr.fail("pipeline", e.what());
    return pr.finish();
  }
  Pipeline& pl = *run;
  const HopfAlgebra& H = pl.in.H;
  const IntegralData& id = pl.id;

  if (o.command == "integrals") {
    print_integrals(pr, H, id);
    pr.checks(integral_properties(H, id));
    pr.checks(verify_frobenius_identities(H, id));
    try {
      pr.checks(cocommutativity_equivalence(H, id));
    } catch (const Error& e) {
      pr.fail("cocommutativity.equivalence", e.what());
    }
    return pr.finish();
  }

  const WedderburnData& wd = *pl.wd;
  if (o.command == "wedderburn") {
    print_wedderburn(pr, H, wd);
    pr.checks(verify_block_identities(H, wd, id));
    return pr.finish();
  }

  if (o.command == "indicators") {
    const IndicatorTable t = indicator_table(H, id, wd, o.lo, o.hi);
    print_indicators(pr, H, wd, t);
    pr.checks(t.checks);
    if (pl.in.module) {
      const ModuleRep& V = *pl.in.module;
      Report mv = module_verify(H, V);
      pr.checks(mv);
      if (!mv.all_passed()) return pr.finish();
      const Vector chi = module_character(H, V);
      SweedlerPowers P(H);
      std::vector<std::pair<std::string, std::vector<std::string>>> rows;
      Report routes;
      for (int n = std::max(1, o.lo); n <= o.hi; ++n) {
        const FieldElement a = indicator(H, id, chi, n, P);
        std::string b;
        try {
          const FieldElement v = operator_indicator(H, id, V, n, o.budget);
          b = H.field().format(v);
          routes.add("module.route_equivalence_n" + std::to_string(n), v == a);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::BudgetExceeded) throw;
          b = "skipped";
          routes.add("module.route_equivalence_n" + std::to_string(n) + ".skipped_budget", true, e.what());
        }
        rows.push_back({"n=" + std::to_string(n), {H.field().format(a), b}});
      }
      pr.table("module", {"integral", "operator"}, rows);
      pr.checks(routes);
    }
    return pr.finish();
  }

  if (o.command == "twist-check") {
    if (!pl.in.twist) throw Error(ErrorCode::ValidationError, "twist-check needs --twist");
    std::optional<Twist> tw;
    try {
      tw = twist_validate(H, pl.in.twist->J, pl.in.twist->J_inv);
    } catch (const Error& e) {
      pr.fail("twist.valid", e.what());
      return pr.finish();
    }
    Report ok;
    ok.add("twist.valid", true);
    pr.checks(ok);
    pr.value("Q", format_vector(H.field(), tw->Q.coeffs));
    pr.checks(twisted_u_check(H, *tw, id));
    pr.checks(gauge_invariance_check(H, *tw, o.lo, o.hi, *o.seed));
    return pr.finish();
  }

  // props
  pr.checks(integral_properties(H, id));
  pr.checks(verify_frobenius_identities(H, id));
  try {
    pr.checks(cocommutativity_equivalence(H, id));
  } catch (const Error& e) {
    pr.fail("cocommutativity.equivalence", e.what());
  }
  pr.checks(verify_block_identities(H, wd, id));
  pr.checks(indicator_table(H, id, wd, o.lo, o.hi).checks);
  return pr.finish();
}

bool parse_range(const std::string& s, int& lo, int& hi) {
  static const std::regex re(R"(^(-?\d+)\.\.(-?\d+)$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) return false;
  lo = std::stoi(m[1]);
  hi = std::stoi(m[2]);
  return lo <= hi;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  // "--n-range -4..4": glue the value on so it is not read as an option.
  std::vector<std::string> args;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == "--n-range" && i + 1 < raw.size()) {
      args.push_back("--n-range=" + raw[++i]);
    } else {
      args.push_back(raw[i]);
    }
  }

  Options o;
  CLI::App app{"Exact computations with semisimple Hopf algebras over finite fields", "hopflab"};
  app.require_subcommand(1);
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"check", "axioms, semisimplicity and the p^2 > dim precondition"},
      {"integrals", "integrals, u, g and the dual basis identities"},
      {"wedderburn", "central idempotents, characters, Schur elements"},
      {"indicators", "higher Frobenius-Schur indicator table"},
      {"twist-check", "twist axioms, twisted u and gauge invariance"},
      {"props", "every identity check on one algebra"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "algebra file (hopf v1)")->required();
    sub->add_option("--format", o.format, "text or json-lines")->check(CLI::IsMember({"text", "json-lines"}));
    sub->add_option("--n-range", o.n_range, "indicator range a..b");
    sub->add_option("--seed", o.seed, "seed for randomized splitting");
    sub->add_flag("--extend-field", o.extend_field, "extend the field once if it does not split H");
    sub->add_flag("--no-verify", o.no_verify, "skip the exhaustive axiom check");
    sub->add_flag("--allow-small-p", o.allow_small_p, "do not enforce p^2 > dim");
    sub->add_option("--budget", o.budget, "max dim(V)^n for the operator route");
    if (std::string(name) == "indicators") sub->add_option("--module", o.module_file, "module file (module v1)");
    if (std::string(name) == "twist-check") sub->add_option("--twist", o.twist_file, "twist file (twist v1)")->required();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hopflab: " << e.what() << '\n';
    return 2;
  }
  o.command = app.get_subcommands().front()->get_name();
  if (!parse_range(o.n_range, o.lo, o.hi)) {
    err << "hopflab: bad --n-range '" << o.n_range << "', expected a..b with a <= b\n";
    return 2;
  }
  if (!o.seed) {
    const char* env = std::getenv("HOPFLAB_SEED");
    o.seed = env ? std::strtoull(env, nullptr, 10) : kDefaultSeed;
  }

  try {
    return execute(o, out);
  } catch (const Error& e) {
    err << "hopflab: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ValidationError ? 2 : 1;
  }
}

}  // namespace hopflab
