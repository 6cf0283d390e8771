#include <functional>

#include "doctest.h"
#include "fixtures.hpp"
#include "veralg/error.hpp"
#include "veralg/verlinde.hpp"

using namespace veralg;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::size_t idx(const SSLieAlgebra& ss, const std::string& name) {
  auto s = ss.find(name);
  REQUIRE_MESSAGE(s.has_value(), name);
  return *s;
}

Elt el(const SSLieAlgebra& ss, long long v) { return ss.g.field()->from_int(v); }

Elt cell(const SSLieAlgebra& ss, const std::string& a, const std::string& b, std::size_t n, const std::string& t) {
  return ss.cell_by_size(idx(ss, a), idx(ss, b), n, idx(ss, t));
}

SSRootData root_data(const ContragredientDatum& d, int i) {
  auto b = root_system(d);
  return ss_root_data(b, alpha_strings(b, i));
}

}  // namespace

TEST_CASE("sl_3 at e_1") {
  auto ss = semisimplify_lie(build_lie(fx::a2()), 0);
  REQUIRE(ss.summands.size() == 4);
  CHECK(ss.label(0) == "L_2^{(1)}");
  CHECK(ss.label(1) == "L_3^{(0)}");
  CHECK(ss.label(2) == "L_1^{(0)}");
  CHECK(ss.label(3) == "L_2^{(-1)}");
  CHECK(cell(ss, "h~_2", "M_{2}", 2, "M_{2}") == el(ss, 3));
  CHECK(cell(ss, "h~_2", "N_{2}", 2, "N_{2}") == el(ss, -3));
  CHECK(cell(ss, "S", "M_{2}", 2, "M_{2}") == el(ss, 3));
  CHECK(cell(ss, "M_{2}", "N_{2}", 1, "h~_2") == el(ss, 1));
  // a_ji with j = 2, i = 1
  CHECK(cell(ss, "M_{2}", "N_{2}", 3, "S") == el(ss, -1));
  CHECK(cell(ss, "S", "S", 3, "S") == el(ss, 4));
  for (const auto& [key, row] : ss.cells) {
    auto [a, b, s] = key;
    CHECK_FALSE((a == 0 && b == 0));
    CHECK_FALSE((a == 3 && b == 3));
  }
  CHECK(ss.cross_terms == 0);
}

TEST_CASE("semisimplification preconditions") {
  auto g = build_lie(fx::brj23());
  CHECK(code_of([&] { semisimplify_lie(g, 0); }) == ErrorCode::NotSL2Node);
  auto g25 = build_lie(fx::brj25());
  CHECK(code_of([&] { semisimplify_lie(g25, 1); }) == ErrorCode::NotSL2Node);
  CHECK(code_of([&] { semisimplify_lie(build_lie(fx::a2()), 0, {{"M_{12}", Vec(8, 0)}}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("generator overrides follow the bracket words") {
  // Brown, i = 2: with e_12 read as (ad e_2) e_1, M_{1^22} is spanned by [e_1, (ad e_2) e_1].
  auto g = build_lie(fx::brown());
  const Vec e1 = g.unit(g.e(0)), e2 = g.unit(g.e(1));
  const Vec w = g.bracket(e1, g.bracket(e2, e1));
  auto ss = semisimplify_lie(g, 1, {{"M_{1^22}", w}});
  CHECK(cell(ss, "M_{1}", "M_{1}", 1, "M_{1^22}") == el(ss, 2));
  CHECK(ss.cells.count({idx(ss, "M_{1^22}"), idx(ss, "M_{1}"), 0}) == 0);
  CHECK(ss.cells.count({idx(ss, "M_{1^22}"), idx(ss, "M_{1^22}"), 0}) == 0);
}

TEST_CASE("gauge rescales one target") {
  auto ss = semisimplify_lie(build_lie(fx::b2()), 1);
  auto gs = gauge(ss, idx(ss, "M_{1}"), idx(ss, "M_{1}"), 1, idx(ss, "M_{1^22}"), el(ss, 2));
  CHECK(cell(gs, "M_{1}", "M_{1}", 1, "M_{1^22}") == el(ss, 2));
  // cells not touching the rescaled summand are unchanged
  CHECK(cell(gs, "M_{1}", "N_{1}", 3, "S") == cell(ss, "M_{1}", "N_{1}", 3, "S"));
  // degree-zero action is independent of the generator scale
  CHECK(cell(gs, "h~_1", "M_{1^22}", 1, "M_{1^22}") == el(ss, 4));
  CHECK(code_of([&] { gauge(ss, idx(ss, "M_{1}"), idx(ss, "M_{1}"), 1, idx(ss, "M_{1^22}"), 0); }) ==
        ErrorCode::DegenerateCase);
}

TEST_CASE("lemma scalars on B2 and G2") {
  {
    auto ss = semisimplify_lie(build_lie(fx::b2()), 0);  // c_12 = -2
    CHECK(cell(ss, "M_{2}", "N_{2}", 1, "h~_2") == el(ss, 6));
    CHECK(cell(ss, "M_{2}", "N_{2}", 3, "S") == el(ss, -4));
    CHECK(cell(ss, "S", "M_{2}", 3, "M_{2}") == el(ss, 4));
    CHECK(cell(ss, "S", "N_{2}", 3, "N_{2}") == el(ss, 4));
  }
  {
    auto ss = semisimplify_lie(build_lie(fx::b2()), 1);  // c_21 = -1
    CHECK(cell(ss, "M_{1}", "N_{1}", 1, "h~_1") == el(ss, 1));
    CHECK(cell(ss, "M_{1}", "N_{1}", 3, "S") == el(ss, -2));
    CHECK(cell(ss, "S", "M_{1}", 2, "M_{1}") == el(ss, 3));
  }
  {
    auto ss = semisimplify_lie(build_lie(fx::g2(7)), 0);  // c_12 = -3, p > 5
    CHECK(cell(ss, "M_{2}", "N_{2}", 1, "h~_2") == el(ss, 72));
    CHECK(cell(ss, "M_{2}", "N_{2}", 3, "S") == el(ss, -120));
    CHECK(cell(ss, "S", "M_{2}", 4, "M_{2}") == el(ss, 15));
  }
  {
    auto ss = semisimplify_lie(build_lie(fx::g2(5)), 0);  // c_12 = -3, p = 5
    CHECK(cell(ss, "M_{2}", "N_{2}", 1, "h~_2") == el(ss, 72));
    const auto s = idx(ss, "S"), m = idx(ss, "M_{2}");
    CHECK(ss.cells.count({s, m, ss.tensor_summand(s, m, 2)}) == 0);
  }
  {
    auto ss = semisimplify_lie(build_lie(fx::b3()), 0);  // c_13 = 0
    CHECK(cell(ss, "M_{3}", "N_{3}", 1, "h~_3") == el(ss, 1));
    CHECK(ss.cells.count({idx(ss, "S"), idx(ss, "M_{3}"), 0}) == 0);
  }
}

TEST_CASE("torus acts by xi on every block") {
  for (auto [d, i] : std::vector<std::pair<ContragredientDatum, int>>{
           {fx::g2(7), 1}, {fx::b3(), 1}, {fx::c3(), 2}, {fx::br3_a1(), 0}, {fx::f4(), 3}}) {
    auto ss = semisimplify_lie(build_lie(d), i);
    const auto& F = *ss.g.field();
    for (std::size_t h = 0; h < ss.summands.size(); ++h) {
      if (ss.summands[h].kind != NamedBlock::Kind::H) continue;
      Vec hv = ss.summands[h].gen;
      for (std::size_t m = 0; m < ss.summands.size(); ++m) {
        const auto& x = ss.summands[m];
        if (x.side == 0) continue;
        Elt xi = 0;
        for (int k = 0; k < ss.theta; ++k)
          if (hv[ss.g.h(k)]) xi = F.add(xi, F.mul(hv[ss.g.h(k)], ss.g.xi(x.root, k)));
        if (x.side < 0) xi = F.neg(xi);
        CHECK(ss.cell_by_size(h, m, x.size, m) == xi);
      }
    }
  }
}

TEST_CASE("graded brackets and different simple columns") {
  for (auto [d, i] : std::vector<std::pair<ContragredientDatum, int>>{
           {fx::g2(7), 1}, {fx::b3(), 0}, {fx::c3(), 2}, {fx::br3_a2(), 0}, {fx::f4(), 1}}) {
    auto ss = semisimplify_lie(build_lie(d), i);
    for (const auto& [key, row] : ss.cells) {
      auto [a, b, s] = key;
      Root deg = ss.summands[a].degree;
      for (std::size_t k = 0; k < deg.size(); ++k) deg[k] += ss.summands[b].degree[k];
      for (auto [r, v] : row) CHECK(ss.summands[r].degree == deg);
      const auto& A = ss.summands[a];
      const auto& B = ss.summands[b];
      if (A.kind == NamedBlock::Kind::M && B.kind == NamedBlock::Kind::N && height(A.root) == 1 &&
          height(B.root) == 1)
        CHECK(A.root == B.root);
    }
  }
}

TEST_CASE("root data of the rank-two examples") {
  auto show = [](const SSRootData& r) { return format_restricted(r.nabla_plus, r.i); };
  CHECK(show(root_data(fx::a2(), 0)) == "{2}");
  CHECK(show(root_data(fx::brown(), 0)) == "{}");
  CHECK(show(root_data(fx::brown(), 1)) == "{1, 1^2}");
  CHECK(show(root_data(fx::b2(3), 0)) == "{}");
  CHECK(show(root_data(fx::b2(5), 0)) == "{2}");
  CHECK(show(root_data(fx::b2(), 1)) == "{1, 1^2}");
  CHECK(show(root_data(fx::g2(), 0)) == "{2, 2^2}");
  auto g2i2 = root_data(fx::g2(), 1);
  CHECK(show(g2i2) == "{1, 1^2, 1^3}");
  CHECK(format_roots(g2i2.delta_plus) == "{1}");
  CHECK(g2i2.all_good);
  CHECK(g2i2.parabolic_matches == true);
}

TEST_CASE("root data of br(3)") {
  auto r = [](const ContragredientDatum& d, int i) { return root_data(d, i); };
  // restricted roots are written in the ambient coordinates, index i deleted
  auto fmt = [](const SSRootData& x, std::vector<int> labels) {
    std::vector<std::string> out;
    for (const auto& b : x.nabla_plus) out.push_back(format_root(b, labels));
    return out;
  };
  using S = std::vector<std::string>;
  auto a1e1 = fmt(r(fx::br3_a1(), 0), {2, 3});
  std::sort(a1e1.begin(), a1e1.end());
  S want1 = {"2", "23", "23^2", "2^23^2", "2^23^3", "2^23^4", "2^33^4", "3"};
  std::sort(want1.begin(), want1.end());
  CHECK(a1e1 == want1);
  auto a1e2 = fmt(r(fx::br3_a1(), 1), {1, 3});
  std::sort(a1e2.begin(), a1e2.end());
  S want2 = {"1", "13", "1^23^4", "13^2", "13^3", "13^4", "3^2", "3"};
  std::sort(want2.begin(), want2.end());
  CHECK(a1e2 == want2);
  auto a2e1 = fmt(r(fx::br3_a2(), 0), {2, 3});
  std::sort(a2e1.begin(), a2e1.end());
  S want3 = {"2", "2^2", "2^33^2", "2^23^2", "2^23", "23^2", "23", "3"};
  std::sort(want3.begin(), want3.end());
  CHECK(a2e1 == want3);
  auto rd = r(fx::br3_a2(), 1);
  auto a2e2 = fmt(rd, {1, 3});
  std::sort(a2e2.begin(), a2e2.end());
  S want4 = {"13", "1^23^2", "3^2", "3"};
  std::sort(want4.begin(), want4.end());
  CHECK(a2e2 == want4);
  CHECK_FALSE(rd.all_good);
  bool flagged = false;
  for (const auto& v : rd.i_good)
    if (v.beta == Root{1, 1, 1}) flagged = !v.good;
  CHECK(flagged);
}

TEST_CASE("multiples in types B, C and F4") {
  auto mult = [](const ContragredientDatum& d, int i) { return root_data(d, i).multiples; };
  // B3: 2 alpha_{i+1, theta}, restricted coordinates
  CHECK(mult(fx::b3(), 0) == fx::roots_of({"1^22^2"}, 2));
  CHECK(mult(fx::b3(), 1) == fx::roots_of({"2^2"}, 2));
  CHECK(mult(fx::b3(), 2).empty());
  // C3 at i = theta: 2 alpha_{j, theta-1}
  CHECK(mult(fx::c3(), 2) == fx::roots_of({"1^22^2", "2^2"}, 2));
  CHECK(mult(fx::c3(), 0).empty());
  CHECK(mult(fx::c3(), 1).empty());
  CHECK(mult(fx::f4(), 0).empty());
  CHECK(mult(fx::f4(), 1).empty());
  // The computed set also contains 2*(12^24), from the highest root (2,4,3,2) and 12^234.
  CHECK(mult(fx::f4(), 2) == fx::roots_of({"2^2", "1^22^2", "1^22^43^2"}, 3));
  // i = 4: 2*23, 2*123, 2*12^23 in coordinates (1,2,3)
  CHECK(mult(fx::f4(), 3) == fx::roots_of({"2^23^2", "1^22^23^2", "1^22^43^2"}, 3));
}

TEST_CASE("i-goodness") {
  auto b = root_system(fx::f4(3));
  auto sp = alpha_strings(b, 0);
  auto v = is_i_good(parse_root("12^33^24", 4), sp, b);
  CHECK_FALSE(v.good);
  CHECK_FALSE(v.witness.has_value());
  auto simple = is_i_good(parse_root("2", 4), sp, b);
  CHECK(simple.good);
  CHECK(simple.vacuous);
  auto ba = root_system(fx::a2());
  auto spa = alpha_strings(ba, 0);
  for (const auto& beta : spa.delta_min) CHECK(is_i_good(beta, spa, ba).good);
  auto bb = root_system(fx::b3());
  auto spb = alpha_strings(bb, 1);
  auto w = is_i_good(parse_root("123", 3), spb, bb);
  REQUIRE(w.witness.has_value());
  Root sum = w.witness->first;
  for (std::size_t k = 0; k < 3; ++k) sum[k] += w.witness->second[k];
  CHECK(sum == Root{1, 1, 1});
}

TEST_CASE("generation by rank one summands") {
  CHECK(generated_by_rank_one(semisimplify_lie(build_lie(fx::a2()), 0)).generated);
  CHECK(generated_by_rank_one(semisimplify_lie(build_lie(fx::g2()), 1)).generated);
  CHECK(generated_by_rank_one(semisimplify_lie(build_lie(fx::b2()), 1)).generated);
  auto ss = semisimplify_lie(build_lie(fx::f4(3)), 0);
  auto rep = generated_by_rank_one(ss);
  CHECK_FALSE(rep.generated);
  bool found = false;
  for (auto s : rep.unreachable)
    if (ss.summands[s].name == "M_{12^33^24}") found = true;
  CHECK(found);
}

TEST_CASE("nonzero brackets for i-good witnesses") {
  for (auto [d, i] : std::vector<std::pair<ContragredientDatum, int>>{
           {fx::b3(), 0}, {fx::b3(), 2}, {fx::c3(), 0}, {fx::c3(), 1}, {fx::br3_a1(), 0}, {fx::g2(), 1}}) {
    auto ss = semisimplify_lie(build_lie(d), i);
    auto sp = alpha_strings(ss.g.bundle(), i);
    for (const auto& beta : sp.delta_min) {
      auto v = is_i_good(beta, sp, ss.g.bundle());
      if (!v.good || v.vacuous) continue;
      const auto* sa = sp.string_of(v.witness->first);
      const auto* sc = sp.string_of(v.witness->second);
      auto a = ss.find("M_{" + format_root(sa->generator) + "}");
      auto c = ss.find("M_{" + format_root(sc->generator) + "}");
      auto t = ss.find("M_{" + format_root(beta) + "}");
      REQUIRE((a && c && t));
      bool nonzero = false;
      for (std::size_t s = 0; s < ss.tensor(*a, *c).summands.size(); ++s)
        nonzero = nonzero || ss.cell(*a, *c, s, *t) || ss.cell(*c, *a, s, *t);
      CAPTURE(format_root(beta));
      CHECK(nonzero);
    }
  }
}

TEST_CASE("induced forms") {
  for (auto [d, i] : std::vector<std::pair<ContragredientDatum, int>>{
           {fx::a2(), 0}, {fx::g2(), 1}, {fx::b2(), 1}, {fx::br3_a1(), 1}, {fx::c3(), 2}}) {
    auto ss = semisimplify_lie(build_lie(d), i);
    auto f = induced_form(ss, invariant_form(ss.g));
    CHECK(f.nondegenerate);
    CHECK(f.degree_paired);
    CHECK(f.symmetric);
  }
  auto ss = semisimplify_lie(build_lie(fx::a2()), 0);
  auto f = induced_form(ss, invariant_form(ss.g));
  CHECK(f.values(0, 3) != 0);
  CHECK(f.values(0, 2) == 0);
}

TEST_CASE("operadic identities") {
  for (auto [d, i] : std::vector<std::pair<ContragredientDatum, int>>{
           {fx::a2(), 0}, {fx::g2(), 1}, {fx::br3_a1(), 0}}) {
    auto ss = semisimplify_lie(build_lie(d), i);
    auto rep = operadic_check(ss);
    CHECK(rep.ok());
    CHECK(rep.triples_checked > 0);
  }
}

TEST_CASE("p = 3 recognition of br(3)") {
  auto B = [](const RecognitionResult& r) { return lift_normalized(r.B_normalized); };
  auto r1 = recognize_p3(semisimplify_lie(build_lie(fx::br3_a1()), 0));
  CHECK(B(r1) == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(r1.parity == std::vector<int>{-1, 1});
  CHECK(r1.ss_sdim == std::make_pair<std::size_t, std::size_t>(10, 8));
  auto r2 = recognize_p3(semisimplify_lie(build_lie(fx::br3_a1()), 1));
  CHECK(B(r2) == std::vector<std::vector<int>>{{0, 1}, {-1, 2}});
  CHECK(r2.parity == std::vector<int>{-1, -1});
  auto r3 = recognize_p3(semisimplify_lie(build_lie(fx::br3_a2()), 0));
  CHECK(B(r3) == std::vector<std::vector<int>>{{2, -2}, {1, 0}});
  CHECK(r3.parity == std::vector<int>{-1, 1});
  CHECK(r3.built_sdim == r3.ss_sdim);
  CHECK(code_of([] { recognize_p3(semisimplify_lie(build_lie(fx::br3_a2()), 1)); }) ==
        ErrorCode::PreconditionNotGood);
}
