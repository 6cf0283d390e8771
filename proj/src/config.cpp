#include "veralg/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "veralg/error.hpp"

namespace veralg {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

long long parse_int(const std::string& s, int line) {
  const std::string t = trim(s);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    parse_fail(line, "expected an integer, got '" + t + "'");
  }
  if (used != t.size()) parse_fail(line, "expected an integer, got '" + t + "'");
  return v;
}

std::vector<long long> parse_ints(const std::string& s, int line) {
  std::istringstream in(s);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_int(tok, line));
  return out;
}

// "2 -1 (0,1)" -> entries; tuples may not contain spaces after trimming commas.
std::vector<EntryCoeffs> parse_row(const std::string& s, int line) {
  std::vector<EntryCoeffs> out;
  std::size_t k = 0;
  while (k < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[k]))) {
      ++k;
      continue;
    }
    if (s[k] == '(') {
      const auto close = s.find(')', k);
      if (close == std::string::npos) parse_fail(line, "unterminated tuple");
      EntryCoeffs c;
      std::istringstream in(s.substr(k + 1, close - k - 1));
      std::string tok;
      while (std::getline(in, tok, ',')) c.push_back(parse_int(tok, line));
      if (c.empty()) parse_fail(line, "empty tuple");
      out.push_back(c);
      k = close + 1;
    } else {
      std::size_t e = k;
      while (e < s.size() && !std::isspace(static_cast<unsigned char>(s[e]))) ++e;
      out.push_back({parse_int(s.substr(k, e - k), line)});
      k = e;
    }
  }
  return out;
}

// Recursive-descent bracket words.
struct WordParser {
  const std::string& s;
  std::size_t k = 0;

  void skip() {
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
  }
  template <class Leaf, class Br>
  auto parse(Leaf leaf, Br br) -> decltype(leaf('e', 0)) {
    skip();
    if (k >= s.size()) throw Error(ErrorCode::ParseError, "bracket word ends early: " + s);
    if (s[k] == '[') {
      ++k;
      auto x = parse(leaf, br);
      skip();
      if (k >= s.size() || s[k] != ',') throw Error(ErrorCode::ParseError, "expected ',' in " + s);
      ++k;
      auto y = parse(leaf, br);
      skip();
      if (k >= s.size() || s[k] != ']') throw Error(ErrorCode::ParseError, "expected ']' in " + s);
      ++k;
      return br(x, y);
    }
    const char c = s[k];
    if (c != 'e' && c != 'f' && c != 'h') throw Error(ErrorCode::ParseError, "bad generator in " + s);
    ++k;
    std::size_t e = k;
    while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
    if (e == k) throw Error(ErrorCode::ParseError, "generator without index in " + s);
    const int idx = std::stoi(s.substr(k, e - k));
    k = e;
    return leaf(c, idx);
  }
  void finish() {
    skip();
    if (k != s.size()) throw Error(ErrorCode::ParseError, "trailing text in " + s);
  }
};

void check_word(const std::string& w, int line) {
  WordParser wp{w};
  try {
    wp.parse([](char, int) { return 0; }, [](int, int) { return 0; });
    wp.finish();
  } catch (const Error& e) {
    parse_fail(line, e.what());
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + std::to_string(v[k]);
  return out;
}

[[noreturn]] void invalid(const std::string& field, const std::string& msg) {
  throw Error(ErrorCode::ValidationError, field + ": " + msg);
}

void validate_config(const DatumConfig& c) {
  if (c.matrix.empty()) invalid("datum.row", "no matrix rows");
  const std::size_t n = c.matrix.size();
  for (const auto& r : c.matrix)
    if (r.size() != n) invalid("datum.row", "matrix is not square");
  if (c.parity.size() != n) invalid("datum.parity", "expected " + std::to_string(n) + " entries");
  for (int x : c.parity)
    if (x != 1 && x != -1) invalid("datum.parity", "entries must be 1 or -1");
  if (c.i && (*c.i < 1 || *c.i > static_cast<int>(n))) invalid("options.i", "out of range");
  for (const auto& [i, m] : c.generators)
    if (i < 1 || i > static_cast<int>(n)) invalid("generators", "index out of range");
  to_datum(c);
}

}  // namespace

DatumConfig parse_config_text(const std::string& text) {
  DatumConfig c;
  std::istringstream in(text);
  std::string raw, section;
  int gen_index = 0;
  bool have_p = false;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto hash = raw.find('#');
    const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') parse_fail(line, "malformed section header");
      const std::string h = trim(s.substr(1, s.size() - 2));
      if (h.rfind("generators", 0) == 0) {
        section = "generators";
        gen_index = static_cast<int>(parse_int(h.substr(10), line));
      } else if (h == "field" || h == "datum" || h == "options" || h == "meta") {
        section = h;
      } else {
        parse_fail(line, "unknown section [" + h + "]");
      }
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) parse_fail(line, "expected key = value");
    const std::string key = trim(s.substr(0, eq)), val = trim(s.substr(eq + 1));
    if (key.empty()) parse_fail(line, "empty key");
    if (section.empty()) {
      if (key != "name") parse_fail(line, "unknown key '" + key + "' outside a section");
      c.name = val;
    } else if (section == "field") {
      if (key == "p") {
        c.p = static_cast<int>(parse_int(val, line));
        have_p = true;
      } else if (key == "ext_poly") {
        std::vector<int> poly;
        for (long long x : parse_ints(val, line)) poly.push_back(static_cast<int>(x));
        c.ext_poly = poly;
      } else {
        parse_fail(line, "unknown key '" + key + "' in [field]");
      }
    } else if (section == "datum") {
      if (key == "row")
        c.matrix.push_back(parse_row(val, line));
      else if (key == "parity")
        for (long long x : parse_ints(val, line)) c.parity.push_back(static_cast<int>(x));
      else
        parse_fail(line, "unknown key '" + key + "' in [datum]");
    } else if (section == "options") {
      if (key == "i")
        c.i = static_cast<int>(parse_int(val, line));
      else
        parse_fail(line, "unknown key '" + key + "' in [options]");
    } else if (section == "generators") {
      check_word(val, line);
      c.generators[gen_index][key] = val;
    } else {
      c.meta[key] = val;
    }
  }
  if (!have_p) invalid("field.p", "missing");
  validate_config(c);
  return c;
}

DatumConfig parse_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

std::string serialize_config(const DatumConfig& c) {
  std::ostringstream out;
  if (!c.name.empty()) out << "name = " << c.name << "\n";
  out << "\n[field]\np = " << c.p << "\n";
  if (c.ext_poly) out << "ext_poly = " << join_ints(*c.ext_poly) << "\n";
  out << "\n[datum]\n";
  for (const auto& r : c.matrix) {
    out << "row =";
    for (const auto& e : r) {
      out << ' ';
      if (e.size() == 1) {
        out << e[0];
      } else {
        out << '(';
        for (std::size_t k = 0; k < e.size(); ++k) out << (k ? "," : "") << e[k];
        out << ')';
      }
    }
    out << "\n";
  }
  out << "parity = " << join_ints(c.parity) << "\n";
  if (c.i) out << "\n[options]\ni = " << *c.i << "\n";
  for (const auto& [i, m] : c.generators) {
    out << "\n[generators " << i << "]\n";
    for (const auto& [k, v] : m) out << k << " = " << v << "\n";
  }
  if (!c.meta.empty()) {
    out << "\n[meta]\n";
    for (const auto& [k, v] : c.meta) out << k << " = " << v << "\n";
  }
  return out.str();
}

ContragredientDatum to_datum(const DatumConfig& c, std::optional<int> p_override) {
  const int p = p_override.value_or(c.p);
  Field f;
  try {
    f = make_field(p, c.ext_poly);
  } catch (const Error& e) {
    invalid(c.ext_poly ? "field.ext_poly" : "field.p", std::string(error_name(e.code())) + " (" + e.what() + ")");
  }
  const std::size_t n = c.matrix.size();
  Matrix A(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      const auto& e = c.matrix[r][s];
      if (e.size() > static_cast<std::size_t>(f->degree()))
        invalid("datum.row", "entry tuple longer than the field degree");
      A.at(r, s) = f->from_coeffs(e);
    }
  ContragredientDatum d{f, A, c.parity};
  try {
    d.validate();
  } catch (const Error& e) {
    invalid("datum", e.what());
  }
  return d;
}

Vec eval_word(const GradedLieAlgebra& g, const std::string& word) {
  WordParser wp{word};
  Vec v = wp.parse(
      [&](char c, int idx) {
        if (idx < 1 || idx > g.theta()) throw Error(ErrorCode::InvalidArgument, "generator index out of range: " + word);
        const int k = idx - 1;
        return g.unit(c == 'e' ? g.e(k) : c == 'f' ? g.f(k) : g.h(k));
      },
      [&](const Vec& x, const Vec& y) { return g.bracket(x, y); });
  wp.finish();
  return v;
}

}  // namespace veralg
