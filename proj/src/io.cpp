#include "hopflab/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "hopflab/error.hpp"

namespace hopflab {

namespace {

void write_entries(std::ostringstream& os, const Field& F, const Vector& v, std::size_t n, int arity) {
  for (std::size_t flat = 0; flat < v.size(); ++flat) {
    if (v[flat].is_zero()) continue;
    std::size_t rest = flat;
    std::vector<std::size_t> idx(static_cast<std::size_t>(arity));
    for (int l = arity; l-- > 0; rest /= n) idx[static_cast<std::size_t>(l)] = rest % n;
    for (auto i : idx) os << i << ' ';
    os << F.format(v[flat]) << '\n';
  }
}

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

// Splits into non-empty, non-comment lines of whitespace-separated words.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string w;
    while (ls >> w) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::uint64_t parse_uint(const std::string& w, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || ptr != w.data() + w.size()) throw ParseError(line, "expected an integer, got '" + w + "'");
  return v;
}

std::size_t parse_index(const std::string& w, std::size_t bound, std::size_t line) {
  const std::uint64_t v = parse_uint(w, line);
  if (v >= bound) throw ParseError(line, "index " + w + " out of range (bound " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

// Accepts "[c0,c1,...]" or a bare non-negative integer for k = 1.
FieldElement parse_element(const Field& F, const std::string& w, std::size_t line) {
  std::vector<std::uint64_t> coeffs;
  if (!w.empty() && w.front() == '[') {
    if (w.back() != ']') throw ParseError(line, "unterminated field element '" + w + "'");
    std::string body = w.substr(1, w.size() - 2);
    std::istringstream parts(body);
    std::string c;
    while (std::getline(parts, c, ',')) coeffs.push_back(parse_uint(c, line));
  } else {
    coeffs.push_back(parse_uint(w, line));
  }
  if (coeffs.size() > static_cast<std::size_t>(F.degree())) throw ParseError(line, "too many coefficients in '" + w + "'");
  for (auto c : coeffs) {
    if (c >= F.characteristic()) throw ParseError(line, "coefficient out of range in '" + w + "'");
  }
  return F.from_coeffs(coeffs);
}

void expect_header(const std::vector<Line>& lines, const std::string& kind) {
  if (lines.empty() || lines[0].words.size() != 2 || lines[0].words[0] != kind || lines[0].words[1] != "v1") {
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header '" + kind + " v1'");
  }
}

void expect_words(const Line& l, std::size_t count) {
  if (l.words.size() != count) {
    throw ParseError(l.number, "expected " + std::to_string(count) + " fields, got " + std::to_string(l.words.size()));
  }
}

bool is_section(const Line& l) { return l.words.size() == 1 && l.words[0].back() == ':'; }

}  // namespace

std::string serialize_hopf(const HopfAlgebra& H) {
  const Field& F = H.field();
  const std::size_t n = H.dim();
  std::ostringstream os;
  os << "hopf v1\n";
  os << "field " << F.characteristic() << ' ' << F.degree();
  if (F.degree() > 1) {
    os << " modulus";
    for (auto c : F.modulus()) os << ' ' << c;
  }
  os << "\ndim " << n << '\n';
  os << "mult:\n";
  write_entries(os, F, H.mult_tensor(), n, 3);
  os << "comult:\n";
  write_entries(os, F, H.comult_tensor(), n, 3);
  os << "unit:\n";
  write_entries(os, F, H.unit_vector(), n, 1);
  os << "counit:\n";
  write_entries(os, F, H.counit_vector(), n, 1);
  // Entry "i j c": S(b_i) has coefficient c on b_j.
  os << "antipode:\n";
  write_entries(os, F, transpose(H.antipode_matrix()).data(), n, 2);
  os << "end\n";
  return os.str();
}

HopfAlgebra parse_hopf(const std::string& text) {
  const auto lines = tokenize(text);
  expect_header(lines, "hopf");
  std::size_t pos = 1;
  if (pos >= lines.size() || lines[pos].words[0] != "field") throw ParseError(lines[0].number, "missing field line");
  const Line& fl = lines[pos++];
  if (fl.words.size() < 3) throw ParseError(fl.number, "field line needs p and k");
  const std::uint64_t p = parse_uint(fl.words[1], fl.number);
  const std::uint64_t k = parse_uint(fl.words[2], fl.number);
  if (k == 0 || k > 16) throw ParseError(fl.number, "extension degree out of range");
  auto make_field = [&]() {
    if (k == 1) {
      if (fl.words.size() != 3) throw ParseError(fl.number, "k = 1 takes no modulus");
      return Field::prime(p);
    }
    if (fl.words.size() == 3) return Field::automatic(p, static_cast<int>(k));
    if (fl.words[3] != "modulus" || fl.words.size() != 4 + k + 1) {
      throw ParseError(fl.number, "expected 'modulus' followed by k+1 coefficients");
    }
    std::vector<std::uint64_t> mod;
    for (std::size_t i = 4; i < fl.words.size(); ++i) mod.push_back(parse_uint(fl.words[i], fl.number));
    return Field::extension(p, static_cast<int>(k), mod);
  };
  const Field F = make_field();

  if (pos >= lines.size() || lines[pos].words[0] != "dim") throw ParseError(fl.number, "missing dim line");
  expect_words(lines[pos], 2);
  const std::uint64_t n64 = parse_uint(lines[pos].words[1], lines[pos].number);
  if (n64 == 0 || n64 > 256) throw ParseError(lines[pos].number, "dimension out of range");
  const std::size_t n = static_cast<std::size_t>(n64);
  ++pos;

  std::map<std::string, Vector> sections;
  const std::map<std::string, std::pair<int, std::size_t>> shapes = {
      {"mult", {3, n * n * n}}, {"comult", {3, n * n * n}}, {"unit", {1, n}},
      {"counit", {1, n}},       {"antipode", {2, n * n}}};
  bool ended = false;
  while (pos < lines.size()) {
    const Line& l = lines[pos++];
    if (l.words.size() == 1 && l.words[0] == "end") {
      ended = true;
      break;
    }
    if (!is_section(l)) throw ParseError(l.number, "expected a section header");
    const std::string name = l.words[0].substr(0, l.words[0].size() - 1);
    auto shape = shapes.find(name);
    if (shape == shapes.end()) throw ParseError(l.number, "unknown section '" + name + "'");
    if (sections.count(name)) throw ParseError(l.number, "duplicate section '" + name + "'");
    const auto [arity, size] = shape->second;
    Vector v(size);
    while (pos < lines.size() && !is_section(lines[pos]) && lines[pos].words[0] != "end") {
      const Line& e = lines[pos++];
      expect_words(e, static_cast<std::size_t>(arity) + 1);
      std::size_t flat = 0;
      for (int a = 0; a < arity; ++a) flat = flat * n + parse_index(e.words[static_cast<std::size_t>(a)], n, e.number);
      v[flat] = F.add(v[flat], parse_element(F, e.words.back(), e.number));
    }
    sections[name] = std::move(v);
  }
  if (!ended) throw ParseError(lines.back().number, "missing 'end'");
  if (pos != lines.size()) throw ParseError(lines[pos].number, "content after 'end'");
  for (const char* required : {"mult", "comult", "unit", "counit"}) {
    if (!sections.count(required)) throw ParseError(lines.back().number, std::string("missing section ") + required);
  }
  Matrix S(n, n);
  if (auto it = sections.find("antipode"); it != sections.end()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) S(j, i) = it->second[i * n + j];
  } else {
    S = solve_antipode(F, n, sections["mult"], sections["comult"], sections["unit"], sections["counit"]);
  }
  return HopfAlgebra(F, n, sections["mult"], sections["comult"], sections["unit"], sections["counit"], S);
}

std::string serialize_module(const HopfAlgebra& H, const ModuleRep& V) {
  const Field& F = H.field();
  std::ostringstream os;
  os << "module v1\nalgebra " << algebra_hash(H) << "\ndim " << V.dim << '\n';
  os << "action:\n";
  for (std::size_t i = 0; i < V.action.size(); ++i)
    for (std::size_t r = 0; r < V.dim; ++r)
      for (std::size_t c = 0; c < V.dim; ++c)
        if (!V.action[i](r, c).is_zero()) os << i << ' ' << r << ' ' << c << ' ' << F.format(V.action[i](r, c)) << '\n';
  os << "end\n";
  return os.str();
}

namespace {

// Reads the optional `algebra <hash>` line and checks it.
std::size_t check_algebra_line(const std::vector<Line>& lines, std::size_t pos, const HopfAlgebra& H) {
  if (pos < lines.size() && lines[pos].words[0] == "algebra") {
    expect_words(lines[pos], 2);
    if (lines[pos].words[1] != algebra_hash(H)) {
      throw Error(ErrorCode::ValidationError, "file is for algebra " + lines[pos].words[1] + ", not " + algebra_hash(H));
    }
    ++pos;
  }
  return pos;
}

}  // namespace

ModuleRep parse_module(const std::string& text, const HopfAlgebra& H) {
  const auto lines = tokenize(text);
  expect_header(lines, "module");
  std::size_t pos = check_algebra_line(lines, 1, H);
  if (pos >= lines.size() || lines[pos].words[0] != "dim") throw ParseError(lines[0].number, "missing dim line");
  expect_words(lines[pos], 2);
  const std::uint64_t d64 = parse_uint(lines[pos].words[1], lines[pos].number);
  if (d64 == 0 || d64 > 4096) throw ParseError(lines[pos].number, "module dimension out of range");
  const std::size_t d = static_cast<std::size_t>(d64);
  ++pos;
  if (pos >= lines.size() || lines[pos].words.size() != 1 || lines[pos].words[0] != "action:") {
    throw ParseError(pos < lines.size() ? lines[pos].number : lines.back().number, "expected 'action:'");
  }
  ++pos;
  ModuleRep V{d, std::vector<Matrix>(H.dim(), Matrix(d, d))};
  const Field& F = H.field();
  while (pos < lines.size() && lines[pos].words[0] != "end") {
    const Line& e = lines[pos++];
    expect_words(e, 4);
    const std::size_t i = parse_index(e.words[0], H.dim(), e.number);
    const std::size_t r = parse_index(e.words[1], d, e.number);
    const std::size_t c = parse_index(e.words[2], d, e.number);
    V.action[i](r, c) = F.add(V.action[i](r, c), parse_element(F, e.words[3], e.number));
  }
  if (pos + 1 != lines.size()) throw ParseError(lines.back().number, "expected a single trailing 'end'");
  return V;
}

std::string serialize_twist(const HopfAlgebra& H, const TensorElement& J, const std::optional<TensorElement>& J_inv) {
  const Field& F = H.field();
  std::ostringstream os;
  os << "twist v1\nalgebra " << algebra_hash(H) << "\ncoeffs:\n";
  write_entries(os, F, J.coeffs, H.dim(), 2);
  if (J_inv) {
    os << "inverse:\n";
    write_entries(os, F, J_inv->coeffs, H.dim(), 2);
  }
  os << "end\n";
  return os.str();
}

TwistFile parse_twist(const std::string& text, const HopfAlgebra& H) {
  const auto lines = tokenize(text);
  expect_header(lines, "twist");
  std::size_t pos = check_algebra_line(lines, 1, H);
  const std::size_t n = H.dim();
  TwistFile out{TensorElement(2, n), std::nullopt};
  bool seen_coeffs = false;
  bool ended = false;
  while (pos < lines.size()) {
    const Line& l = lines[pos++];
    if (l.words.size() == 1 && l.words[0] == "end") {
      ended = true;
      break;
    }
    if (!is_section(l) || (l.words[0] != "coeffs:" && l.words[0] != "inverse:")) {
      throw ParseError(l.number, "expected 'coeffs:' or 'inverse:'");
    }
    const bool inverse = l.words[0] == "inverse:";
    if ((inverse && out.J_inv) || (!inverse && seen_coeffs)) throw ParseError(l.number, "duplicate section");
    TensorElement t(2, n);
    while (pos < lines.size() && !is_section(lines[pos]) && lines[pos].words[0] != "end") {
      const Line& e = lines[pos++];
      expect_words(e, 3);
      const std::size_t flat = parse_index(e.words[0], n, e.number) * n + parse_index(e.words[1], n, e.number);
      t.coeffs[flat] = H.field().add(t.coeffs[flat], parse_element(H.field(), e.words[2], e.number));
    }
    if (inverse) {
      out.J_inv = std::move(t);
    } else {
      out.J = std::move(t);
      seen_coeffs = true;
    }
  }
  if (!ended) throw ParseError(lines.empty() ? 1 : lines.back().number, "missing 'end'");
  if (pos != lines.size()) throw ParseError(lines[pos].number, "content after 'end'");
  if (!seen_coeffs) throw ParseError(lines.back().number, "missing 'coeffs:' section");
  return out;
}

std::string algebra_hash(const HopfAlgebra& H) {
  const std::string s = serialize_hopf(H);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 15];
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hopflab
