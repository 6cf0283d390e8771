#include "veralg/report.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>
#include <numeric>
#include <sstream>

#include "veralg/alphap.hpp"
#include "veralg/error.hpp"
#include "veralg/verlinde.hpp"

namespace veralg {

using nlohmann::json;

namespace {

json scalar(const FieldContext& F, Elt e) {
  if (F.degree() == 1) return static_cast<int>(e);
  return F.format(e);
}

json roots_json(const RootSet& s) {
  json a = json::array();
  for (const auto& r : s) a.push_back(format_root(r));
  return a;
}

json restricted_json(const RootSet& s, int i) {
  json a = json::array();
  for (const auto& r : s) a.push_back(format_restricted(r, i));
  return a;
}

json sizes_json(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

json error_json(const Error& e) { return {{"error", error_name(e.code())}, {"message", e.what()}}; }

json verdict(bool ok, json detail = json::array()) { return {{"ok", ok}, {"detail", std::move(detail)}}; }

json failures_json(const std::vector<std::string>& f, std::size_t keep = 5) {
  json a = json::array();
  for (std::size_t k = 0; k < f.size() && k < keep; ++k) a.push_back(f[k]);
  return a;
}

// n * beta' with beta' primitive, e.g. "2*12^23".
std::string multiple_str(const Root& r, int i) {
  int g = 0;
  for (int c : r) g = std::gcd(g, c);
  return std::to_string(g) + "*" + format_restricted(primitive_part(r), i);
}

json datum_echo(const DatumConfig& c, const ContragredientDatum& d) {
  const FieldContext& F = *d.field;
  json m = json::array();
  for (std::size_t r = 0; r < d.A.rows(); ++r) {
    json row = json::array();
    for (std::size_t s = 0; s < d.A.cols(); ++s) row.push_back(scalar(F, d.A(r, s)));
    m.push_back(row);
  }
  json e = {{"name", c.name}, {"p", F.p()}, {"matrix", m}, {"parity", d.parity}};
  e["ext_poly"] = F.degree() > 1 ? json(F.ext_poly()) : json(nullptr);
  return e;
}

json roots_section(const ContragredientDatum& d, const RootSystemBundle& b) {
  const auto orbit = weyl_orbit(d);
  json cm = cartan_matrix_of(d);
  return {{"cartan_matrix", cm},
          {"orbit_nodes", orbit.nodes.size()},
          {"delta_plus", roots_json(b.delta_plus)},
          {"odd_nd", roots_json(b.odd_nd)},
          {"nabla_plus", roots_json(b.nabla_plus)},
          {"counts", {{"delta_plus", b.delta_plus.size()}, {"odd_nd", b.odd_nd.size()}, {"nabla_plus", b.nabla_plus.size()}}}};
}

json build_section(const GradedLieAlgebra& g) {
  json dims = json::array();
  for (const auto& [r, n] : g.positive_dims()) dims.push_back({format_root(r), n});
  const auto [ev, od] = g.sdim();
  json form;
  try {
    invariant_form(g);
    form = {{"exists", true}, {"nondegenerate", true}};
  } catch (const Error& e) {
    form = error_json(e);
  }
  const auto dord = check_derivation_order(g);
  return {{"dim", g.dim()},
          {"sdim", {ev, od}},
          {"graded_dims", dims},
          {"invariant_form", form},
          {"derivation_order", verdict(dord.ok(), failures_json(dord.failures))}};
}

json decompose_section(const GradedLieAlgebra& g, int i) {
  const auto& b = g.bundle();
  const auto sp = alpha_strings(b, i);
  json strings = json::array();
  for (const auto& s : sp.strings) strings.push_back({{"generator", format_root(s.generator)}, {"length", s.length}});
  json out = {{"i", i + 1}, {"strings", strings}, {"delta_min", roots_json(sp.delta_min)}};
  out["jordan_type"] = sizes_json(jordan_type(g.ad(g.e(i))));
  try {
    out["predicted_type"] = sizes_json(predicted_jordan_type(g, i));
  } catch (const Error& e) {
    out["predicted_type"] = error_json(e);
  }
  try {
    json blocks = json::array();
    for (const auto& nb : string_decomposition(g, i).blocks) blocks.push_back({{"name", nb.name}, {"size", nb.size}});
    out["blocks"] = blocks;
  } catch (const Error& e) {
    out["blocks"] = error_json(e);
  }
  if (g.datum().A(i, i) != g.field()->from_int(2)) return out;
  const auto rd = ss_root_data(b, sp);
  json mult = json::array();
  for (const auto& r : rd.multiples) mult.push_back(multiple_str(r, i));
  json good = json::array();
  for (const auto& v : rd.i_good) {
    json w = nullptr;
    if (v.witness) w = {format_root(v.witness->first), format_root(v.witness->second)};
    good.push_back({{"beta", format_root(v.beta)}, {"good", v.good}, {"vacuous", v.vacuous}, {"witness", w}});
  }
  out["root_data"] = {{"nabla_plus", restricted_json(rd.nabla_plus, i)},
                      {"delta_plus", restricted_json(rd.delta_plus, i)},
                      {"multiples", mult},
                      {"i_good", good},
                      {"all_good", rd.all_good},
                      {"parabolic_set", restricted_json(rd.parabolic_set, i)},
                      {"parabolic_matches", rd.parabolic_matches ? json(*rd.parabolic_matches) : json(nullptr)}};
  return out;
}

GeneratorOverrides overrides_for(const DatumConfig& c, const GradedLieAlgebra& g, int i) {
  GeneratorOverrides ov;
  auto it = c.generators.find(i + 1);
  if (it == c.generators.end()) return ov;
  for (const auto& [name, word] : it->second) ov[name] = eval_word(g, word);
  return ov;
}

std::string cell_key(const SSLieAlgebra& ss, std::size_t a, std::size_t b, std::size_t s) {
  return ss.summands[a].name + " (x) " + ss.summands[b].name + " -> L_" + std::to_string(ss.tensor(a, b).summands[s].size);
}

json recognition_json(const SSLieAlgebra& ss) {
  try {
    const auto r = recognize_p3(ss);
    const FieldContext& F = *ss.g.field();
    json idx = json::array();
    for (int k : r.indices) idx.push_back(k + 1);
    json raw = json::array();
    for (std::size_t a = 0; a < r.B.rows(); ++a) {
      json row = json::array();
      for (std::size_t c = 0; c < r.B.cols(); ++c) row.push_back(scalar(F, r.B(a, c)));
      raw.push_back(row);
    }
    json resc = json::array();
    for (Elt e : r.f_rescale) resc.push_back(scalar(F, e));
    return {{"indices", idx},
            {"B_raw", raw},
            {"B", lift_normalized(r.B_normalized)},
            {"parity", r.parity},
            {"parity_encoding", "1 even, -1 odd"},
            {"f_rescale", resc},
            {"ss_sdim", {r.ss_sdim.first, r.ss_sdim.second}},
            {"built_sdim", {r.built_sdim.first, r.built_sdim.second}}};
  } catch (const Error& e) {
    return error_json(e);
  }
}

json semisimplify_section(const SSLieAlgebra& ss) {
  const FieldContext& F = *ss.g.field();
  json sums = json::array();
  for (std::size_t s = 0; s < ss.summands.size(); ++s) {
    const auto& x = ss.summands[s];
    sums.push_back({{"name", x.name},
                    {"label", ss.label(s)},
                    {"size", x.size},
                    {"degree", ss.format_degree(x.degree)},
                    {"parity", x.parity}});
  }
  json cells = json::object();
  for (const auto& [key, row] : ss.cells) {
    auto [a, b, s] = key;
    json t = json::object();
    for (auto [r, v] : row) t[ss.summands[r].name] = scalar(F, v);
    cells[cell_key(ss, a, b, s)] = t;
  }
  json out = {{"summands", sums}, {"cells", cells}, {"cross_terms", ss.cross_terms}};
  try {
    const auto f = induced_form(ss, invariant_form(ss.g));
    out["induced_form"] = {{"nondegenerate", f.nondegenerate}, {"degree_paired", f.degree_paired}, {"symmetric", f.symmetric}};
  } catch (const Error& e) {
    out["induced_form"] = error_json(e);
  }
  const auto gen = generated_by_rank_one(ss);
  json unreach = json::array();
  for (auto s : gen.unreachable) unreach.push_back(ss.summands[s].name);
  out["generation"] = {{"generated", gen.generated}, {"unreachable", unreach}};
  const auto op = operadic_check(ss);
  out["operadic"] = {{"ok", op.ok()},
                     {"exhaustive", op.exhaustive},
                     {"pairs_checked", op.pairs_checked},
                     {"triples_checked", op.triples_checked},
                     {"violations", failures_json(op.violations)}};
  if (ss.p == 3) out["recognition"] = recognition_json(ss);
  return out;
}

bool sl2_node(const ContragredientDatum& d, int i) {
  return d.A(i, i) == d.field->from_int(2) && d.parity[i] == 1;
}

json check_section(const DatumConfig& cfg, const GradedLieAlgebra& g) {
  json checks = json::object();
  bool all = true;
  auto put = [&](const std::string& name, bool ok, json detail = json::array()) {
    checks[name] = verdict(ok, std::move(detail));
    all = all && ok;
  };
  const auto ax = check_lie_axioms(g);
  put("super_jacobi", ax.ok(), failures_json(ax.failures));
  const auto ch = check_chevalley(g);
  put("chevalley", ch.ok(), failures_json(ch.failures));
  const auto dord = check_derivation_order(g);
  put("derivation_order", dord.ok(), failures_json(dord.failures));
  Matrix B;
  try {
    B = invariant_form(g);
    put("invariant_form", true);
  } catch (const Error& e) {
    put("invariant_form", false, json::array({error_name(e.code())}));
  }
  if (g.field()->p() <= 3) {
    const auto pbw = pbw_lowchar_check(g);
    put("pbw_lowchar", pbw.violations.empty(), failures_json(pbw.violations));
  }
  for (int i = 0; i < g.theta(); ++i) {
    if (!sl2_node(g.datum(), i)) continue;
    const std::string tag = "i=" + std::to_string(i + 1) + ".";
    try {
      put(tag + "isotypic_type", jordan_type(g.ad(g.e(i))) == predicted_jordan_type(g, i));
      const auto ss = semisimplify_lie(g, i, overrides_for(cfg, g, i));
      bool graded = true;
      for (const auto& [key, row] : ss.cells) {
        auto [a, b, s] = key;
        Root deg = ss.summands[a].degree;
        for (std::size_t k = 0; k < deg.size(); ++k) deg[k] += ss.summands[b].degree[k];
        for (auto [r, v] : row) graded = graded && ss.summands[r].degree == deg;
      }
      put(tag + "graded_table", graded);
      if (B.rows()) {
        try {
          const auto f = induced_form(ss, B);
          put(tag + "induced_form", f.nondegenerate && f.degree_paired && f.symmetric);
        } catch (const Error& e) {
          put(tag + "induced_form", false, json::array({error_name(e.code())}));
        }
      }
      const auto op = operadic_check(ss);
      put(tag + "operadic", op.ok(), failures_json(op.violations));
    } catch (const Error& e) {
      put(tag + "semisimplify", false, json::array({error_name(e.code()), e.what()}));
    }
  }
  return {{"ok", all}, {"checks", checks}};
}

int resolve_i(const DatumConfig& cfg, const RunFlags& flags, int theta, bool required) {
  const auto i = flags.i ? flags.i : cfg.i;
  if (!i) {
    if (required) throw Error(ErrorCode::InvalidArgument, "this command needs --i");
    return -1;
  }
  if (*i < 1 || *i > theta) throw Error(ErrorCode::InvalidArgument, "--i out of range");
  return *i - 1;
}

void render(std::ostringstream& out, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto inline_ok = [](const json& x) {
    if (!x.is_array()) return x.is_primitive();
    for (const auto& y : x)
      if (!y.is_primitive() && !(y.is_array() && std::all_of(y.begin(), y.end(), [](const json& z) { return z.is_primitive(); })))
        return false;
    return true;
  };
  auto leaf = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  std::function<std::string(const json&)> flat = [&](const json& x) -> std::string {
    if (!x.is_array()) return leaf(x);
    std::string s = "[";
    bool first = true;
    for (const auto& y : x) {
      s += (first ? "" : ", ") + flat(y);
      first = false;
    }
    return s + "]";
  };
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (inline_ok(x)) {
        out << pad << k << ": " << flat(x) << "\n";
      } else {
        out << pad << k << ":\n";
        render(out, x, indent + 1);
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (inline_ok(x)) {
        out << pad << "- " << flat(x) << "\n";
      } else {
        out << pad << "-\n";
        render(out, x, indent + 1);
      }
    }
  } else {
    out << pad << leaf(v) << "\n";
  }
}

void diff_into(const json& e, const json& a, const std::string& path, std::vector<std::string>& out) {
  const std::string here = path.empty() ? "/" : path;
  if (e.type() != a.type() && !(e.is_number() && a.is_number())) {
    out.push_back(here + ": expected " + e.dump() + ", got " + a.dump());
    return;
  }
  if (e.is_object()) {
    for (const auto& [k, x] : e.items()) {
      if (!a.contains(k))
        out.push_back(path + "/" + k + ": missing");
      else
        diff_into(x, a.at(k), path + "/" + k, out);
    }
    for (const auto& [k, x] : a.items())
      if (!e.contains(k)) out.push_back(path + "/" + k + ": unexpected " + x.dump());
  } else if (e.is_array()) {
    if (e.size() != a.size()) {
      out.push_back(here + ": expected " + std::to_string(e.size()) + " items, got " + std::to_string(a.size()));
      return;
    }
    for (std::size_t k = 0; k < e.size(); ++k) diff_into(e[k], a[k], path + "[" + std::to_string(k) + "]", out);
  } else if (e != a) {
    out.push_back(here + ": expected " + e.dump() + ", got " + a.dump());
  }
}

}  // namespace

json run_report(const std::string& command, const DatumConfig& cfg, const RunFlags& flags) {
  static const std::vector<std::string> order = {"roots", "build", "decompose", "semisimplify", "check"};
  const auto pos = std::find(order.begin(), order.end(), command);
  if (pos == order.end()) throw Error(ErrorCode::InvalidArgument, "unknown command " + command);
  const auto stage = pos - order.begin();

  const auto d = to_datum(cfg, flags.p);
  json rep = {{"command", command}, {"datum", datum_echo(cfg, d)}};
  const auto b = root_system(d);
  rep["roots"] = roots_section(d, b);
  if (stage == 0) return rep;
  const auto g = build_lie(d, b);
  rep["algebra"] = build_section(g);
  if (stage == 1) return rep;
  if (stage == 4) {
    rep["check"] = check_section(cfg, g);
    return rep;
  }
  const int i = resolve_i(cfg, flags, d.theta(), true);
  rep["decompose"] = decompose_section(g, i);
  if (stage == 2) return rep;
  rep["semisimplify"] = semisimplify_section(semisimplify_lie(g, i, overrides_for(cfg, g, i)));
  return rep;
}

bool report_ok(const json& report) {
  if (!report.contains("check")) return true;
  return report.at("check").at("ok").get<bool>();
}

std::string render_text(const json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

std::string render_json(const json& report) { return report.dump(2) + "\n"; }

std::vector<std::string> json_diff(const json& expected, const json& actual) {
  std::vector<std::string> out;
  diff_into(expected, actual, "", out);
  return out;
}

std::vector<std::string> compare_golden(const json& report, const std::string& golden_path) {
  if (!std::filesystem::exists(golden_path)) throw Error(ErrorCode::GoldenMissing, "no golden file at " + golden_path);
  std::ifstream f(golden_path, std::ios::binary);
  json golden;
  try {
    golden = json::parse(f);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, golden_path + ": " + e.what());
  }
  return json_diff(golden, report);
}

}  // namespace veralg
