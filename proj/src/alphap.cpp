#include "veralg/alphap.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "veralg/error.hpp"

namespace veralg {

namespace {

Vec apply_power(const Matrix& t, Vec v, std::size_t k) {
  for (std::size_t s = 0; s < k; ++s) v = t.apply(v);
  return v;
}

std::size_t nilpotency_index(const Matrix& t, int p) {
  Matrix pw = Matrix::identity(t.field(), t.rows());
  for (int k = 0; k <= p; ++k) {
    if (pw.is_zero()) return static_cast<std::size_t>(k);
    pw = pw * t;
  }
  throw Error(ErrorCode::NotNilpotentOrderP, "t^p != 0");
}

}  // namespace

Matrix AlphaPModule::basis_matrix() const {
  std::vector<Vec> cols;
  for (const auto& b : blocks) {
    Vec v = b.gen;
    for (std::size_t k = 0; k < b.size; ++k) {
      cols.push_back(v);
      v = t.apply(v);
    }
  }
  return Matrix::from_columns(field, dim(), cols);
}

std::size_t AlphaPModule::offset(std::size_t b) const {
  std::size_t o = 0;
  for (std::size_t k = 0; k < b; ++k) o += blocks[k].size;
  return o;
}

std::vector<std::size_t> AlphaPModule::sizes() const {
  std::vector<std::size_t> s;
  for (const auto& b : blocks) s.push_back(b.size);
  std::sort(s.rbegin(), s.rend());
  return s;
}

AlphaPModule make_module(const Matrix& t, int p, std::vector<CyclicBlock> blocks) {
  if (t.rows() != t.cols()) throw Error(ErrorCode::DimensionMismatch, "t must be square");
  nilpotency_index(t, p);
  AlphaPModule m{t.field(), p, t, std::move(blocks)};
  std::size_t total = 0;
  for (const auto& b : m.blocks) {
    if (b.size == 0 || b.size > static_cast<std::size_t>(p))
      throw Error(ErrorCode::InvalidArgument, "block size outside 1..p");
    if (b.gen.size() != t.rows()) throw Error(ErrorCode::DimensionMismatch, "generator length");
    if (!vec_is_zero(apply_power(t, b.gen, b.size)) || vec_is_zero(apply_power(t, b.gen, b.size - 1)))
      throw Error(ErrorCode::InvalidArgument, "generator does not have the stated block size");
    total += b.size;
  }
  if (total != t.rows() || rank(m.basis_matrix()) != t.rows())
    throw Error(ErrorCode::InvalidArgument, "blocks do not form a direct sum decomposition");
  return m;
}

std::vector<std::size_t> jordan_type(const Matrix& t) {
  const std::size_t n = t.rows();
  std::vector<std::size_t> r{n};
  Matrix pw = t;
  while (r.back() != 0) {
    r.push_back(rank(pw));
    if (r.size() > n + 2) throw Error(ErrorCode::NotNilpotentOrderP, "operator is not nilpotent");
    pw = pw * t;
  }
  // number of blocks of size >= k is r_{k-1} - r_k
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k < r.size(); ++k) {
    std::size_t ge_k = r[k - 1] - r[k];
    std::size_t ge_k1 = k + 1 < r.size() ? r[k] - r[k + 1] : 0;
    for (std::size_t c = 0; c < ge_k - ge_k1; ++c) out.push_back(k);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

AlphaPModule jordan_blocks(const Matrix& t, int p, const std::vector<int>* grade) {
  const std::size_t n = t.rows();
  const std::size_t top = nilpotency_index(t, p);
  const Field& f = t.field();
  std::vector<std::vector<Vec>> K(top + 2);
  {
    Matrix pw = Matrix::identity(f, n);
    for (std::size_t k = 1; k <= top + 1; ++k) {
      pw = pw * t;
      K[k] = kernel(pw);
    }
  }
  // Coordinate classes in order of first appearance.
  std::vector<std::vector<std::size_t>> classes;
  if (grade) {
    std::map<int, std::size_t> id;
    std::vector<int> order;
    for (std::size_t c = 0; c < n; ++c) order.push_back((*grade)[c]);
    std::vector<int> keys = order;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (int k : keys) {
      id[k] = classes.size();
      classes.emplace_back();
    }
    for (std::size_t c = 0; c < n; ++c) classes[id[(*grade)[c]]].push_back(c);
  } else {
    classes.emplace_back();
    for (std::size_t c = 0; c < n; ++c) classes[0].push_back(c);
  }

  std::vector<CyclicBlock> blocks;
  for (std::size_t k = top; k >= 1; --k) {
    SpanTracker q(f, n);
    for (const auto& v : K[k - 1]) q.insert(v);
    for (const auto& v : K[k + 1]) q.insert(t.apply(v));
    for (const auto& cls : classes) {
      for (const auto& v : K[k]) {
        Vec w(n, 0);
        for (std::size_t c : cls) w[c] = v[c];
        if (vec_is_zero(w)) continue;
        if (q.insert(w)) blocks.push_back({k, w});
      }
    }
  }
  return make_module(t, p, std::move(blocks));
}

Matrix tensor_t(const Field& f, std::size_t a, std::size_t b) {
  Matrix t(f, a * b, a * b);
  for (std::size_t k = 0; k < a; ++k)
    for (std::size_t l = 0; l < b; ++l) {
      const std::size_t src = k * b + l;
      if (k + 1 < a) t.at((k + 1) * b + l, src) = f->add(t((k + 1) * b + l, src), 1);
      if (l + 1 < b) t.at(k * b + l + 1, src) = f->add(t(k * b + l + 1, src), 1);
    }
  return t;
}

namespace {

struct Term {
  int k, l;
  long long c;
};
struct TableEntry {
  std::size_t size;
  std::vector<Term> terms;
};

// Generators fixed by convention, keyed by (a, b, regime). Regime: 0 = p equal to the
// smallest admissible prime for the pair, 1 = larger p. An empty list means no convention.
std::vector<TableEntry> convention(std::size_t a, std::size_t b, int p) {
  using V = std::vector<TableEntry>;
  if (a == 2 && b == 2 && p > 2) return V{{1, {{1, 2, 1}, {2, 1, -1}}}, {3, {{1, 1, 1}}}};
  if (a == 3 && b == 3) {
    if (p > 3) return V{{1, {{1, 3, 1}, {2, 2, -1}, {3, 1, 1}}}, {3, {{1, 2, 1}, {2, 1, -1}}}, {5, {{1, 1, 1}}}};
    if (p == 3) return V{{3, {{2, 2, 1}}}, {3, {{1, 2, 1}, {2, 1, -1}}}, {3, {{1, 1, 1}}}};
  }
  const TableEntry l1_44{1, {{1, 4, 1}, {2, 3, -1}, {3, 2, 1}, {4, 1, -1}}};
  if (a == 4 && b == 4) {
    if (p > 5)
      return V{l1_44, {3, {{1, 3, 3}, {2, 2, -4}, {3, 1, 3}}}, {5, {{1, 2, 1}, {2, 1, -1}}}, {7, {{1, 1, 1}}}};
    if (p == 5) return V{l1_44};
  }
  if (a == 3 && b == 2) {
    if (p > 3) return V{{2, {{1, 2, 2}, {2, 1, -1}}}, {4, {{1, 1, 1}}}};
    if (p == 3) return V{{3, {{1, 1, 1}}}, {3, {{2, 1, 1}}}};
  }
  const TableEntry l2_34{2, {{1, 3, 1}, {2, 2, -2}, {3, 1, 3}}};
  if (a == 3 && b == 4) {
    if (p > 5) return V{l2_34, {4, {{1, 2, 2}, {2, 1, -3}}}, {6, {{1, 1, 1}}}};
    if (p == 5) return V{l2_34};
  }
  return {};
}

std::size_t tensor_degree(const Vec& v, std::size_t b) {
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v[c]) return c / b + c % b + 2;
  return 0;
}

}  // namespace

TensorDecomposition tensor_decompose(std::size_t a, std::size_t b, const Field& f) {
  const int p = f->p();
  if (a == 0 || b == 0 || a > static_cast<std::size_t>(p) || b > static_cast<std::size_t>(p))
    throw Error(ErrorCode::InvalidArgument, "factor sizes must lie in 1..p");
  const Matrix t = tensor_t(f, a, b);
  std::vector<int> grade(a * b);
  for (std::size_t c = 0; c < a * b; ++c) grade[c] = static_cast<int>(c / b + c % b);
  AlphaPModule greedy = jordan_blocks(t, p, &grade);

  std::vector<TensorSummand> fallback;
  for (const auto& blk : greedy.blocks) {
    Vec g = blk.gen;
    for (Elt c : g)
      if (c) {
        g = vec_scale(*f, f->inv(c), g);
        break;
      }
    fallback.push_back({blk.size, g, false});
  }
  // Ascending size, then descending degree of the generator.
  std::stable_sort(fallback.begin(), fallback.end(), [&](const TensorSummand& x, const TensorSummand& y) {
    if (x.size != y.size) return x.size < y.size;
    return tensor_degree(x.gen, b) > tensor_degree(y.gen, b);
  });

  std::vector<TensorSummand> out;
  const auto conv = convention(a, b, p);
  for (const auto& e : conv) {
    Vec g(a * b, 0);
    for (const auto& term : e.terms)
      g[(term.k - 1) * b + (term.l - 1)] = f->add(g[(term.k - 1) * b + (term.l - 1)], f->from_int(term.c));
    out.push_back({e.size, g, true});
  }
  // Summands the convention leaves open keep the computed choice.
  std::map<std::size_t, std::size_t> fixed;
  for (const auto& e : conv) fixed[e.size] += 1;
  for (const auto& s : fallback) {
    if (fixed[s.size] > 0) {
      fixed[s.size] -= 1;
      continue;
    }
    out.push_back(s);
  }

  std::vector<CyclicBlock> blocks;
  for (const auto& s : out) blocks.push_back({s.size, s.gen});
  TensorDecomposition td{a, b, p, out, make_module(t, p, blocks)};
  return td;
}

std::string format_tensor(const Field& f, std::size_t b, const Vec& gen) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t c = 0; c < gen.size(); ++c) {
    if (!gen[c]) continue;
    int v = f->in_prime_field(gen[c]) ? f->centered_lift(gen[c]) : 0;
    std::string coef = f->in_prime_field(gen[c]) ? std::to_string(std::abs(v)) : f->format(gen[c]);
    bool neg = f->in_prime_field(gen[c]) && v < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    if (coef != "1") os << coef << " ";
    os << "v" << c / b + 1 << "*w" << c % b + 1;
    first = false;
  }
  return first ? "0" : os.str();
}

std::vector<int> fusion(int i, int j, int p) {
  if (i < 1 || j < 1 || i >= p || j >= p) throw Error(ErrorCode::InvalidArgument, "fusion labels must lie in 1..p-1");
  std::vector<int> out;
  const int top = std::min({i, j, p - i, p - j});
  for (int k = 1; k <= top; ++k) out.push_back(std::abs(i - j) + 2 * k - 1);
  return out;
}

std::vector<int> VerpObject::multiset() const {
  std::vector<int> m;
  for (const auto& l : labels) m.push_back(l.m);
  std::sort(m.begin(), m.end());
  return m;
}

VerpObject semisimplify_object(const AlphaPModule& m) {
  VerpObject o;
  o.p = m.p;
  for (std::size_t b = 0; b < m.blocks.size(); ++b)
    if (m.blocks[b].size < static_cast<std::size_t>(m.p)) o.labels.push_back({static_cast<int>(m.blocks[b].size), b});
  return o;
}

VerpHom semisimplify_hom(const Matrix& f, const AlphaPModule& src, const AlphaPModule& tgt) {
  if (f.rows() != tgt.dim() || f.cols() != src.dim()) throw Error(ErrorCode::DimensionMismatch, "map shape");
  if (f * src.t != tgt.t * f) throw Error(ErrorCode::NotEquivariant, "map does not commute with t");
  const FieldContext& F = *f.field();
  VerpHom h;
  h.p = src.p;
  for (std::size_t b = 0; b < src.blocks.size(); ++b)
    if (src.blocks[b].size < static_cast<std::size_t>(src.p)) h.src_blocks.push_back(b);
  for (std::size_t b = 0; b < tgt.blocks.size(); ++b)
    if (tgt.blocks[b].size < static_cast<std::size_t>(tgt.p)) h.tgt_blocks.push_back(b);
  h.scalars = Matrix(f.field(), h.tgt_blocks.size(), h.src_blocks.size());
  const Matrix P = *inverse(tgt.basis_matrix());
  for (std::size_t s = 0; s < h.src_blocks.size(); ++s) {
    const auto& sb = src.blocks[h.src_blocks[s]];
    Vec c = P.apply(f.apply(sb.gen));
    for (std::size_t r = 0; r < h.tgt_blocks.size(); ++r) {
      const std::size_t tb = h.tgt_blocks[r];
      Elt lead = c[tgt.offset(tb)];
      if (!lead) continue;
      if (tgt.blocks[tb].size == sb.size)
        h.scalars.at(r, s) = lead;
      else
        ++h.cross_terms;
    }
  }
  (void)F;
  return h;
}

Matrix equivariant_map(const AlphaPModule& src, const AlphaPModule& tgt, const std::vector<Vec>& images) {
  if (images.size() != src.blocks.size()) throw Error(ErrorCode::DimensionMismatch, "one image per block");
  std::vector<Vec> cols;
  for (std::size_t b = 0; b < src.blocks.size(); ++b) {
    Vec v = images[b];
    if (!vec_is_zero(apply_power(tgt.t, v, src.blocks[b].size)))
      throw Error(ErrorCode::NotEquivariant, "image is not killed by t^size");
    for (std::size_t k = 0; k < src.blocks[b].size; ++k) {
      cols.push_back(v);
      v = tgt.t.apply(v);
    }
  }
  // f B = C with B the source cyclic basis.
  Matrix C = Matrix::from_columns(src.field, tgt.dim(), cols);
  return C * *inverse(src.basis_matrix());
}

namespace {

Elt hcoef(const GradedLieAlgebra& g, int k, int m) { return g.datum().A(k, m); }

}  // namespace

StringDecomposition string_decomposition(const GradedLieAlgebra& g, int i) {
  const int n = g.theta();
  if (i < 0 || i >= n) throw Error(ErrorCode::InvalidArgument, "index out of range");
  const FieldContext& F = *g.field();
  const Elt aii = hcoef(g, i, i);
  if (aii != 0 && aii != F.from_int(2)) throw Error(ErrorCode::InvalidArgument, "a_ii must be 0 or 2");
  const Root ai = simple_root(n, i);
  const auto& dims = g.positive_dims();
  const Matrix& t = g.ad(g.e(i));

  StringDecomposition sd;
  sd.i = i;
  struct Str {
    Root gen;
    std::size_t len;
  };
  std::vector<Str> strings;
  for (const auto& [beta, d] : dims) {
    if (beta == ai) continue;
    Root prev = beta;
    prev[i] -= 1;
    if (dims.count(prev)) continue;
    std::size_t len = 0;
    Root cur = beta;
    while (dims.count(cur)) {
      ++len;
      cur[i] += 1;
    }
    strings.push_back({beta, len});
  }
  for (const auto& s : strings)
    sd.blocks.push_back({NamedBlock::Kind::M, "M_{" + format_root(s.gen) + "}", s.gen, -1, s.len, g.unit(g.e(s.gen))});

  auto h_combo = [&](std::vector<std::pair<int, Elt>> terms) {
    Vec v = g.zero();
    for (auto [k, c] : terms) v[g.h(k)] = F.add(v[g.h(k)], c);
    return v;
  };
  if (aii != 0) {
    sd.blocks.push_back({NamedBlock::Kind::S, "S", ai, -1, 3, g.unit(g.f(i))});
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Vec h = hcoef(g, i, j) == 0 ? h_combo({{j, 1}}) : h_combo({{j, F.from_int(2)}, {i, F.neg(hcoef(g, j, i))}});
      sd.blocks.push_back({NamedBlock::Kind::H, "h~_" + std::to_string(j + 1), {}, j, 1, h});
    }
  } else {
    int j0 = -1;
    for (int j = 0; j < n && j0 < 0; ++j)
      if (hcoef(g, j, i) != 0) j0 = j;
    if (j0 < 0) throw Error(ErrorCode::DegenerateCase, "a_ii = 0 and xi_i vanishes on h");
    sd.blocks.push_back({NamedBlock::Kind::F, "<f_" + std::to_string(i + 1) + ">", ai, -1, 2, g.unit(g.f(i))});
    const Elt inv = F.inv(hcoef(g, j0, i));
    sd.blocks.push_back({NamedBlock::Kind::HE, "<h>", ai, j0, 2, h_combo({{j0, inv}})});
    for (int k = 0; k < n; ++k) {
      if (k == i || k == j0) continue;
      Vec h = h_combo({{k, 1}, {j0, F.neg(F.mul(hcoef(g, k, i), inv))}});
      sd.blocks.push_back({NamedBlock::Kind::H, "h~_" + std::to_string(k + 1), {}, k, 1, h});
    }
  }
  const Matrix& fi = g.ad(g.f(i));
  for (const auto& s : strings) {
    Vec v = g.unit(g.f(s.gen));
    for (std::size_t k = 1; k < s.len; ++k) v = fi.apply(v);
    sd.blocks.push_back({NamedBlock::Kind::N, "N_{" + format_root(s.gen) + "}", s.gen, -1, s.len, v});
  }
  std::vector<CyclicBlock> cb;
  for (const auto& b : sd.blocks) {
    cb.push_back({b.size, b.gen});
    sd.multiplicity[b.size] += 1;
  }
  sd.module = make_module(t, g.field()->p(), cb);
  return sd;
}

std::vector<std::size_t> predicted_jordan_type(const GradedLieAlgebra& g, int i) {
  const int n = g.theta();
  const Root ai = simple_root(n, i);
  const auto& dims = g.positive_dims();
  std::vector<std::size_t> out;
  for (const auto& [beta, d] : dims) {
    if (beta == ai) continue;
    Root prev = beta;
    prev[i] -= 1;
    if (dims.count(prev)) continue;
    std::size_t len = 0;
    for (Root cur = beta; dims.count(cur); cur[i] += 1) ++len;
    out.push_back(len);
    out.push_back(len);
  }
  if (g.datum().A(i, i) != 0) {
    out.push_back(3);
    for (int k = 1; k < n; ++k) out.push_back(1);
  } else {
    out.push_back(2);
    out.push_back(2);
    for (int k = 2; k < n; ++k) out.push_back(1);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace veralg
