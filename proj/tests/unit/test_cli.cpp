#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "hopflab/cli.hpp"
#include "json.hpp"

using testing_corpus::path;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hopflab::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> records(const std::string& text) {
  std::vector<nlohmann::json> r;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) r.push_back(nlohmann::json::parse(line));
  return r;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"check", path("s3_gf7.hopf")}).code == 0);
  const Run bad = run({"check", path("c3_gf3.hopf"), "--format", "json-lines"});
  CHECK(bad.code == 1);
  bool found = false;
  for (const auto& r : records(bad.out))
    if (r["record"] == "check" && r["name"] == "semisimplicity.counit_of_integral_nonzero") {
      found = true;
      CHECK(r["status"] == "fail");
    }
  CHECK(found);

  const Run parse = run({"check", path("malformed.hopf")});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("ParseError") != std::string::npos);
  CHECK(run({"check", path("missing.hopf")}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate", path("s3_gf7.hopf")}).code == 2);
  CHECK(run({"indicators", path("s3_gf7.hopf"), "--n-range", "5..1"}).code == 2);
  CHECK(run({"indicators", path("s3_gf7.hopf"), "--format", "xml"}).code == 2);
  CHECK(run({"twist-check", path("s3_gf7.hopf"), "--twist", path("k4_bichar.twist")}).code == 2);
}

TEST_CASE("commands on the corpus") {
  CHECK(run({"integrals", path("q8_gf25.hopf")}).code == 0);
  CHECK(run({"wedderburn", path("s3_gf7.hopf")}).code == 0);
  CHECK(run({"props", path("d_s3_gf7.hopf")}).code == 0);
  CHECK(run({"twist-check", path("k4dual_gf5.hopf"), "--twist", path("k4_bichar.twist"), "--n-range", "-4..4"}).code == 0);
  CHECK(run({"twist-check", path("c3c3dual_gf7.hopf"), "--twist", path("c3c3_bichar.twist")}).code == 0);
  CHECK(run({"twist-check", path("d4_gf5.hopf"), "--twist", path("d4_klein.twist")}).code == 0);

  const Run ind = run({"indicators", path("s3_gf7.hopf"), "--n-range", "1..3", "--module", path("s3_std.module"),
                       "--format", "json-lines"});
  CHECK(ind.code == 0);
  std::vector<std::string> nu2;
  for (const auto& r : records(ind.out))
    if (r["record"] == "row" && r["table"] == "indicators" && r["row"] != "H") nu2.push_back(r["nu2"]);
  CHECK(nu2 == std::vector<std::string>{"[1]", "[1]", "[1]"});
}

TEST_CASE("every check appears once") {
  const Run r = run({"props", path("s3_gf7.hopf"), "--format", "json-lines"});
  std::set<std::string> seen;
  std::size_t n = 0;
  for (const auto& rec : records(r.out)) {
    if (rec["record"] != "check") continue;
    ++n;
    CHECK(seen.insert(rec["name"].get<std::string>()).second);
  }
  const auto last = records(r.out).back();
  CHECK(last["record"] == "summary");
  CHECK(last["checks"] == n);
  CHECK(records(r.out).front()["record"] == "header");
}

TEST_CASE("deterministic output") {
  const std::vector<std::string> args = {"props", path("d_c3_gf7.hopf"), "--format", "json-lines", "--seed", "9"};
  CHECK(run(args).out == run(args).out);
  const Run a = run({"wedderburn", path("d_c3_gf7.hopf"), "--format", "json-lines", "--seed", "1"});
  const Run b = run({"wedderburn", path("d_c3_gf7.hopf"), "--format", "json-lines", "--seed", "77"});
  CHECK(a.out == b.out);
}

TEST_CASE("field extension on demand") {
  // GF(5)[C3] needs cube roots of unity from GF(25)
  std::string text = hopflab::serialize_hopf(hopflab::group_algebra(hopflab::cyclic_group(3), hopflab::Field::prime(5)));
  const std::string file = std::string(HOPFLAB_BINARY_DIR) + "/c3_gf5.hopf";
  std::ofstream(file) << text;
  CHECK(run({"wedderburn", file}).code == 1);
  const Run ok = run({"wedderburn", file, "--extend-field"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("field.extended_by = 2") != std::string::npos);
}
