#include "veralg/verlinde.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "veralg/error.hpp"

namespace veralg {

namespace {

std::vector<Vec> orbit(const Matrix& t, const Vec& gen, std::size_t size) {
  std::vector<Vec> out{gen};
  for (std::size_t k = 1; k < size; ++k) out.push_back(t.apply(out.back()));
  return out;
}

Root negate(Root r) {
  for (auto& c : r) c = -c;
  return r;
}

Root add_roots(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

bool is_zero_root(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

int parity_sign(int a, int b) { return (a == -1 && b == -1) ? -1 : 1; }

void build_table(SSLieAlgebra& ss) {
  const FieldContext& F = *ss.g.field();
  const auto& mod = ss.strings.module;
  const Matrix P = *inverse(mod.basis_matrix());
  std::vector<std::vector<Vec>> orb;
  for (const auto& s : ss.summands) orb.push_back(orbit(mod.t, s.gen, s.size));

  ss.tensors.clear();
  ss.cells.clear();
  ss.cross_terms = 0;
  const std::size_t n = ss.summands.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ma = ss.summands[a].size, mb = ss.summands[b].size;
      auto key = std::make_pair(ma, mb);
      if (!ss.tensors.count(key)) ss.tensors.emplace(key, tensor_decompose(ma, mb, ss.g.field()));
      const TensorDecomposition& td = ss.tensors.at(key);
      // All brackets [t^k a, t^l b] once per pair.
      std::vector<Vec> br(ma * mb);
      for (std::size_t k = 0; k < ma; ++k)
        for (std::size_t l = 0; l < mb; ++l) br[k * mb + l] = ss.g.bracket(orb[a][k], orb[b][l]);
      for (std::size_t s = 0; s < td.summands.size(); ++s) {
        const auto& ts = td.summands[s];
        if (ts.size >= static_cast<std::size_t>(ss.p)) continue;
        Vec image = ss.g.zero();
        for (std::size_t c = 0; c < ts.gen.size(); ++c)
          if (ts.gen[c]) vec_axpy(F, ts.gen[c], br[c], image);
        if (vec_is_zero(image)) continue;
        const Vec coords = P.apply(image);
        std::vector<std::pair<std::size_t, Elt>> row;
        for (std::size_t r = 0; r < n; ++r) {
          const Elt lead = coords[mod.offset(ss.summands[r].block)];
          if (!lead) continue;
          if (ss.summands[r].size == ts.size)
            row.emplace_back(r, lead);
          else
            ++ss.cross_terms;
        }
        if (!row.empty()) ss.cells[{a, b, s}] = std::move(row);
      }
    }
}

}  // namespace

const TensorDecomposition& SSLieAlgebra::tensor(std::size_t a, std::size_t b) const {
  return tensors.at({summands.at(a).size, summands.at(b).size});
}

Elt SSLieAlgebra::cell(std::size_t a, std::size_t b, std::size_t s, std::size_t target) const {
  auto it = cells.find({a, b, s});
  if (it == cells.end()) return 0;
  for (auto [r, v] : it->second)
    if (r == target) return v;
  return 0;
}

std::size_t SSLieAlgebra::tensor_summand(std::size_t a, std::size_t b, std::size_t n) const {
  const auto& td = tensor(a, b);
  std::optional<std::size_t> hit;
  for (std::size_t s = 0; s < td.summands.size(); ++s)
    if (td.summands[s].size == n) {
      if (hit) throw Error(ErrorCode::InvalidArgument, "several tensor summands of size " + std::to_string(n));
      hit = s;
    }
  if (!hit) throw Error(ErrorCode::InvalidArgument, "no tensor summand of size " + std::to_string(n));
  return *hit;
}

Elt SSLieAlgebra::cell_by_size(std::size_t a, std::size_t b, std::size_t n, std::size_t target) const {
  return cell(a, b, tensor_summand(a, b, n), target);
}

std::optional<std::size_t> SSLieAlgebra::find(const std::string& name) const {
  for (std::size_t s = 0; s < summands.size(); ++s)
    if (summands[s].name == name) return s;
  return std::nullopt;
}

std::vector<std::size_t> SSLieAlgebra::with_label(std::size_t m, const Root& degree) const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < summands.size(); ++s)
    if (summands[s].size == m && summands[s].degree == degree) out.push_back(s);
  return out;
}

std::vector<int> SSLieAlgebra::degree_labels() const {
  std::vector<int> l;
  for (int k = 0; k < theta; ++k)
    if (k != i) l.push_back(k + 1);
  return l;
}

std::string SSLieAlgebra::format_degree(const Root& degree) const {
  if (degree.size() == 1) return std::to_string(degree[0]);
  return format_root(degree, degree_labels());
}

std::string SSLieAlgebra::label(std::size_t s) const {
  return "L_" + std::to_string(summands.at(s).size) + "^{(" + format_degree(summands[s].degree) + ")}";
}

std::pair<std::size_t, std::size_t> SSLieAlgebra::sdim_p3() const {
  if (p != 3) throw Error(ErrorCode::InvalidArgument, "super dimension of the semisimplification needs p = 3");
  std::pair<std::size_t, std::size_t> d{0, 0};
  for (const auto& s : summands) (s.size == 1 ? d.first : d.second) += 1;
  return d;
}

SSLieAlgebra semisimplify_lie(const GradedLieAlgebra& g, int i, const GeneratorOverrides& overrides) {
  const int n = g.theta();
  if (i < 0 || i >= n) throw Error(ErrorCode::InvalidArgument, "index out of range");
  const FieldContext& F = *g.field();
  if (g.datum().A(i, i) != F.from_int(2) || g.datum().parity[i] != 1)
    throw Error(ErrorCode::NotSL2Node, "semisimplification needs a_ii = 2 and an even node");
  const int p = F.p();
  if (!g.ad(g.e(i)).power(static_cast<unsigned>(p)).is_zero())
    throw Error(ErrorCode::DerivationOrderViolation, "(ad e_i)^p != 0");

  SSLieAlgebra ss;
  ss.p = p;
  ss.theta = n;
  ss.i = i;
  ss.g = g;
  ss.strings = string_decomposition(g, i);
  if (!overrides.empty()) {
    std::set<std::string> used;
    for (auto& b : ss.strings.blocks) {
      auto it = overrides.find(b.name);
      if (it == overrides.end()) continue;
      b.gen = it->second;
      used.insert(b.name);
    }
    for (const auto& [name, v] : overrides)
      if (!used.count(name)) throw Error(ErrorCode::InvalidArgument, "no block named " + name);
    std::vector<CyclicBlock> cb;
    for (const auto& b : ss.strings.blocks) cb.push_back({b.size, b.gen});
    ss.strings.module = make_module(ss.strings.module.t, p, cb);
  }
  const Root zero(static_cast<std::size_t>(n - 1), 0);
  for (std::size_t k = 0; k < ss.strings.blocks.size(); ++k) {
    const auto& b = ss.strings.blocks[k];
    if (b.size >= static_cast<std::size_t>(p)) continue;
    SSSummand s{b.kind, b.name, k, b.size, zero, 0, b.root, b.j, g.parity_of(b.gen), b.gen};
    if (b.kind == NamedBlock::Kind::M) {
      s.degree = project_out(b.root, i);
      s.side = 1;
    } else if (b.kind == NamedBlock::Kind::N) {
      s.degree = negate(project_out(b.root, i));
      s.side = -1;
    }
    ss.summands.push_back(s);
  }
  build_table(ss);
  return ss;
}

SSLieAlgebra gauge(const SSLieAlgebra& ss, std::size_t a, std::size_t b, std::size_t n, std::size_t target,
                   Elt value) {
  const FieldContext& F = *ss.g.field();
  const Elt cur = ss.cell_by_size(a, b, n, target);
  if (!cur || !value) throw Error(ErrorCode::DegenerateCase, "cannot gauge a zero cell");
  GeneratorOverrides ov;
  for (const auto& s : ss.summands) ov[s.name] = s.gen;
  const Elt lambda = F.div(cur, value);
  ov[ss.summands[target].name] = vec_scale(F, lambda, ss.summands[target].gen);
  return semisimplify_lie(ss.g, ss.i, ov);
}

// ---- root data ----------------------------------------------------------------

IGoodVerdict is_i_good(const Root& beta, const StringPartition& sp, const RootSystemBundle& b) {
  IGoodVerdict v;
  v.beta = beta;
  if (height(beta) == 1) {
    v.good = v.vacuous = true;
    return v;
  }
  auto short_string = [&](const Root& r) {
    const int len = sp.length_of_string_containing(r);
    return len > 0 && len < sp.p;
  };
  for (const auto& a : b.delta_plus) {
    if (height(a) >= height(beta)) break;
    Root c = beta;
    for (std::size_t k = 0; k < c.size(); ++k) c[k] -= a[k];
    if (!b.delta_plus.count(c) || RootLess{}(c, a)) continue;
    if (short_string(a) && short_string(c)) {
      v.good = true;
      v.witness = std::make_pair(a, c);
      return v;
    }
  }
  return v;
}

RootSet SSRootData::nabla() const {
  RootSet s = nabla_plus;
  for (const auto& r : nabla_plus) s.insert(negate(r));
  return s;
}

SSRootData ss_root_data(const RootSystemBundle& b, const StringPartition& sp) {
  SSRootData d;
  d.i = sp.i;
  for (const auto& beta : sp.delta_min) d.nabla_plus.insert(project_out(beta, sp.i));
  for (const auto& x : d.nabla_plus) {
    bool multiple = false;
    for (const auto& y : d.nabla_plus) {
      if (x == y) continue;
      // x = n y with n >= 2
      int n = 0;
      bool ok = true;
      for (std::size_t k = 0; k < x.size() && ok; ++k) {
        if (y[k] == 0) {
          ok = x[k] == 0;
        } else if (x[k] % y[k] != 0) {
          ok = false;
        } else {
          const int q = x[k] / y[k];
          if (n == 0) n = q;
          ok = q == n;
        }
      }
      if (ok && n >= 2) multiple = true;
    }
    (multiple ? d.multiples : d.delta_plus).insert(x);
  }
  d.all_good = true;
  for (const auto& beta : sp.delta_min) {
    d.i_good.push_back(is_i_good(beta, sp, b));
    d.all_good = d.all_good && d.i_good.back().good;
  }
  for (const auto& r : parabolic_restrict(b, sp.i))
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) d.parabolic_set.insert(r);
  if (d.all_good) d.parabolic_matches = d.parabolic_set == d.delta_plus;
  return d;
}

std::string format_restricted(const Root& r, int i) {
  std::vector<int> labels;
  for (int k = 0; k <= static_cast<int>(r.size()); ++k)
    if (k != i) labels.push_back(k + 1);
  return format_root(r, labels);
}

std::string format_restricted(const RootSet& s, int i) {
  std::string out = "{";
  bool first = true;
  for (const auto& r : s) {
    out += (first ? "" : ", ") + format_restricted(r, i);
    first = false;
  }
  return out + "}";
}

// ---- generation ---------------------------------------------------------------

GenerationReport generated_by_rank_one(const SSLieAlgebra& ss) {
  const Field& f = ss.g.field();
  const FieldContext& F = *f;
  // Isotypic groups (degree, size) with their copies.
  std::map<std::pair<Root, std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t s = 0; s < ss.summands.size(); ++s) groups[{ss.summands[s].degree, ss.summands[s].size}].push_back(s);
  std::map<std::pair<Root, std::size_t>, SpanTracker> span;
  for (const auto& [key, copies] : groups) span.emplace(key, SpanTracker(f, copies.size()));
  auto unit_in = [&](std::size_t s) {
    const auto key = std::make_pair(ss.summands[s].degree, ss.summands[s].size);
    const auto& copies = groups.at(key);
    Vec v(copies.size(), 0);
    v[std::find(copies.begin(), copies.end(), s) - copies.begin()] = 1;
    span.at(key).insert(v);
  };
  for (std::size_t s = 0; s < ss.summands.size(); ++s) {
    const auto& x = ss.summands[s];
    if (x.side == 0 || ((x.kind == NamedBlock::Kind::M || x.kind == NamedBlock::Kind::N) && height(x.root) == 1))
      unit_in(s);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [k1, c1] : groups)
      for (const auto& [k2, c2] : groups) {
        const auto& U1 = span.at(k1).vectors();
        const auto& U2 = span.at(k2).vectors();
        if (U1.empty() || U2.empty()) continue;
        const Root deg = add_roots(k1.first, k2.first);
        const auto& td = ss.tensor(c1[0], c2[0]);
        for (std::size_t t = 0; t < td.summands.size(); ++t) {
          const std::size_t n = td.summands[t].size;
          auto it = groups.find({deg, n});
          if (it == groups.end()) continue;
          const auto& tgt = it->second;
          for (const auto& u : std::vector<Vec>(U1))
            for (const auto& w : std::vector<Vec>(U2)) {
              Vec v(tgt.size(), 0);
              for (std::size_t a = 0; a < c1.size(); ++a)
                for (std::size_t b = 0; b < c2.size(); ++b) {
                  const Elt uw = F.mul(u[a], w[b]);
                  if (!uw) continue;
                  for (std::size_t r = 0; r < tgt.size(); ++r) {
                    const Elt c = ss.cell(c1[a], c2[b], t, tgt[r]);
                    if (c) v[r] = F.add(v[r], F.mul(uw, c));
                  }
                }
              if (!vec_is_zero(v) && span.at({deg, n}).insert(v)) changed = true;
            }
        }
      }
  }
  GenerationReport rep;
  for (const auto& [key, copies] : groups)
    for (std::size_t k = 0; k < copies.size(); ++k) {
      Vec v(copies.size(), 0);
      v[k] = 1;
      if (!span.at(key).contains(v)) rep.unreachable.push_back(copies[k]);
    }
  std::sort(rep.unreachable.begin(), rep.unreachable.end());
  rep.generated = rep.unreachable.empty();
  return rep;
}

// ---- induced form -------------------------------------------------------------

InducedForm induced_form(const SSLieAlgebra& ss, const Matrix& B) {
  const FieldContext& F = *ss.g.field();
  const std::size_t n = ss.summands.size();
  const Matrix& t = ss.strings.module.t;
  InducedForm out;
  out.values = Matrix(ss.g.field(), n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& A = ss.summands[a];
      const auto& Bs = ss.summands[b];
      if (A.size != Bs.size) continue;
      const auto& td = ss.tensor(a, b);
      const auto& gen = td.summands[ss.tensor_summand(a, b, 1)].gen;
      auto oa = orbit(t, A.gen, A.size), ob = orbit(t, Bs.gen, Bs.size);
      Elt v = 0;
      for (std::size_t c = 0; c < gen.size(); ++c)
        if (gen[c]) v = F.add(v, F.mul(gen[c], form_value(B, oa[c / Bs.size], ob[c % Bs.size])));
      out.values.at(a, b) = v;
    }
  out.nondegenerate = rank(out.values) == n;
  out.degree_paired = out.symmetric = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elt v = out.values(a, b);
      if (v && !is_zero_root(add_roots(ss.summands[a].degree, ss.summands[b].degree))) out.degree_paired = false;
      const int sign = ((ss.summands[a].size % 2 == 0) ? -1 : 1) * parity_sign(ss.summands[a].parity, ss.summands[b].parity);
      const Elt expect = sign == 1 ? v : F.neg(v);
      if (out.values(b, a) != expect) out.symmetric = false;
    }
  if (!out.nondegenerate) throw Error(ErrorCode::DegenerateInducedForm, "induced form is singular");
  return out;
}

// ---- operadic identities ------------------------------------------------------

OperadicReport operadic_check(const SSLieAlgebra& ss, std::size_t exhaustive_limit, std::size_t random_triples) {
  const FieldContext& F = *ss.g.field();
  const auto& mod = ss.strings.module;
  const Matrix Bm = mod.basis_matrix();
  const Matrix Binv = *inverse(Bm);
  Matrix D(ss.g.field(), mod.dim(), mod.dim());
  for (std::size_t b = 0; b < mod.blocks.size(); ++b)
    if (mod.blocks[b].size < static_cast<std::size_t>(ss.p))
      for (std::size_t k = 0; k < mod.blocks[b].size; ++k) D.at(mod.offset(b) + k, mod.offset(b) + k) = 1;
  const Matrix P = Bm * D * Binv;

  std::vector<Vec> basis;
  std::vector<int> par;
  std::vector<std::string> name;
  for (const auto& s : ss.summands) {
    auto o = orbit(mod.t, s.gen, s.size);
    for (std::size_t k = 0; k < o.size(); ++k) {
      basis.push_back(o[k]);
      par.push_back(s.parity);
      name.push_back("t^" + std::to_string(k) + " " + s.name);
    }
  }
  auto sg = [&](int a, int b) { return parity_sign(a, b) == 1 ? Elt{1} : F.neg(1); };
  OperadicReport rep;
  const std::size_t m = basis.size();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      Vec v = ss.g.bracket(basis[x], basis[y]);
      vec_axpy(F, sg(par[x], par[y]), ss.g.bracket(basis[y], basis[x]), v);
      ++rep.pairs_checked;
      if (!vec_is_zero(P.apply(v))) rep.violations.push_back("antisymmetry: " + name[x] + ", " + name[y]);
    }
  auto jacobi = [&](std::size_t x, std::size_t y, std::size_t z) {
    Vec v(ss.g.dim(), 0);
    vec_axpy(F, sg(par[x], par[z]), ss.g.bracket(ss.g.bracket(basis[x], basis[y]), basis[z]), v);
    vec_axpy(F, sg(par[y], par[x]), ss.g.bracket(ss.g.bracket(basis[y], basis[z]), basis[x]), v);
    vec_axpy(F, sg(par[z], par[y]), ss.g.bracket(ss.g.bracket(basis[z], basis[x]), basis[y]), v);
    ++rep.triples_checked;
    if (!vec_is_zero(P.apply(v))) rep.violations.push_back("jacobi: " + name[x] + ", " + name[y] + ", " + name[z]);
  };
  if (m <= exhaustive_limit) {
    rep.exhaustive = true;
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        for (std::size_t z = 0; z < m; ++z) jacobi(x, y, z);
  } else if (m > 0) {
    std::mt19937 rng(1);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (std::size_t k = 0; k < random_triples; ++k) jacobi(pick(rng), pick(rng), pick(rng));
  }
  return rep;
}

// ---- p = 3 recognition --------------------------------------------------------

std::vector<std::vector<int>> lift_normalized(const Matrix& B) {
  const FieldContext& F = *B.field();
  std::vector<std::vector<int>> out(B.rows(), std::vector<int>(B.cols()));
  for (std::size_t a = 0; a < B.rows(); ++a) {
    const bool two = B(a, a) == F.from_int(2);
    for (std::size_t b = 0; b < B.cols(); ++b)
      out[a][b] = (a == b) ? F.centered_lift(B(a, b)) : two ? F.nonpositive_lift(B(a, b)) : F.centered_lift(B(a, b));
    if (two) out[a][a] = 2;
  }
  return out;
}

RecognitionResult recognize_p3(const SSLieAlgebra& ss) {
  if (ss.p != 3) throw Error(ErrorCode::InvalidArgument, "recognition is implemented for p = 3");
  const auto& g = ss.g;
  const FieldContext& F = *g.field();
  const auto& A = g.datum().A;
  const int i = ss.i;
  const StringPartition sp = alpha_strings(g.bundle(), i);
  const SSRootData rd = ss_root_data(g.bundle(), sp);
  for (const auto& v : rd.i_good)
    if (!v.good) throw Error(ErrorCode::PreconditionNotGood, format_root(v.beta) + " is not i-good");

  RecognitionResult res;
  for (int j = 0; j < ss.theta; ++j) {
    if (j == i) continue;
    const int len = sp.length_of_string_containing(simple_root(ss.theta, j));
    if (len > 0 && len < ss.p) res.indices.push_back(j);
  }
  const std::size_t r = res.indices.size();
  res.B = Matrix(g.field(), r, r);
  for (std::size_t a = 0; a < r; ++a) {
    const int j = res.indices[a];
    res.parity.push_back(A(i, j) == 0 ? 1 : -1);
    for (std::size_t b = 0; b < r; ++b) {
      const int k = res.indices[b];
      res.B.at(a, b) = A(i, j) == 0 ? A(j, k) : F.sub(F.neg(A(j, k)), F.mul(A(j, i), A(i, k)));
    }
  }

  auto need = [&](const std::string& nm) {
    auto s = ss.find(nm);
    if (!s) throw Error(ErrorCode::RelationFailure, "missing summand " + nm);
    return *s;
  };
  std::vector<std::size_t> E, Fb, H;
  for (int j : res.indices) {
    const std::string root = format_root(simple_root(ss.theta, j));
    E.push_back(need("M_{" + root + "}"));
    Fb.push_back(need("N_{" + root + "}"));
    H.push_back(need("h~_" + std::to_string(j + 1)));
  }
  auto fail = [](const std::string& what) { throw Error(ErrorCode::RelationFailure, what); };
  auto only = [&](std::size_t a, std::size_t b, std::size_t s, std::size_t target, Elt want, const std::string& what) {
    auto it = ss.cells.find({a, b, s});
    const std::vector<std::pair<std::size_t, Elt>> none;
    const auto& row = it == ss.cells.end() ? none : it->second;
    for (auto [t, v] : row)
      if (t != target) fail(what + ": stray component on " + ss.summands[t].name);
    if (ss.cell(a, b, s, target) != want) fail(what);
  };
  for (std::size_t a = 0; a < r; ++a) {
    const bool odd = ss.summands[E[a]].size == 2;
    if (odd != (res.parity[a] == -1) || ss.summands[Fb[a]].size != ss.summands[E[a]].size)
      fail("parity of e_" + std::to_string(res.indices[a] + 1));
    for (std::size_t b = 0; b < r; ++b) {
      if (a != b) {
        if (ss.cells.lower_bound({E[a], Fb[b], 0}) != ss.cells.lower_bound({E[a], Fb[b] + 1, 0}))
          fail("[e_j, f_k] != 0 for j != k");
        continue;
      }
      const std::size_t s = ss.tensor_summand(E[a], Fb[a], 1);
      const Elt c = ss.cell(E[a], Fb[a], s, H[a]);
      if (!c) fail("[e_j, f_j] has no h_j component");
      only(E[a], Fb[a], s, H[a], c, "[e_j, f_j] = c h_j");
      res.f_rescale.push_back(F.inv(c));
    }
    for (std::size_t b = 0; b < r; ++b) {
      const std::size_t m = ss.summands[E[b]].size;
      only(H[a], E[b], ss.tensor_summand(H[a], E[b], m), E[b], res.B(a, b), "[h_j, e_k] = b_jk e_k");
      only(H[a], Fb[b], ss.tensor_summand(H[a], Fb[b], m), Fb[b], F.neg(res.B(a, b)), "[h_j, f_k] = -b_jk f_k");
      if (ss.cells.lower_bound({H[a], H[b], 0}) != ss.cells.lower_bound({H[a], H[b] + 1, 0})) fail("[h_j, h_k] != 0");
    }
  }
  ContragredientDatum d{g.field(), res.B, res.parity};
  d = normalize_rows(d);
  res.B_normalized = d.A;
  res.ss_sdim = ss.sdim_p3();
  res.built_sdim = build_lie(d).sdim();
  if (res.ss_sdim != res.built_sdim)
    throw Error(ErrorCode::DimensionMismatch, "semisimplification and g(B, p) differ in dimension");
  return res;
}

}  // namespace veralg
