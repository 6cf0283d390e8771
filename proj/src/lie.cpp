#include "veralg/lie.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "veralg/error.hpp"

namespace veralg {

namespace {

struct Origin {
  bool square = false;  // [x, x] with x in g_from, else [e_i, x]
  int i = -1;
  Root from;
  Vec x;
};

struct Degree {
  Root deg;
  int parity = 1;
  std::size_t dim = 0;
  std::vector<Origin> origin;
  std::map<int, Matrix> E;  // i: g_deg -> g_{deg + a_i}
  std::map<int, Matrix> F;  // j: g_deg -> g_{deg - a_j}; height >= 2 only
  std::vector<Vec> rep;     // images under x -> ([f_j, x])_j, one per basis vector
  std::optional<SpanTracker> tracker;
};

struct Layout {
  std::vector<std::size_t> off, blk;
  std::size_t size = 0;
};

class Builder {
 public:
  Builder(const ContragredientDatum& d, const RootSystemBundle& b)
      : d_(d), b_(b), F_(*d.field), n_(d.theta()) {}

  std::map<Root, Degree, RootLess> run();

 private:
  int parity_of(const Root& r) const {
    int s = 1;
    for (int m = 0; m < n_; ++m)
      if (d_.parity[m] == -1 && (r[m] % 2 != 0)) s = -s;
    return s;
  }
  Elt xi(const Root& g, int k) const {
    Elt s = 0;
    for (int m = 0; m < n_; ++m)
      if (g[m]) s = F_.add(s, F_.mul(F_.from_int(g[m]), d_.A(k, m)));
    return s;
  }
  Elt sgn(int s) const { return s == 1 ? 1 : F_.neg(1); }
  bool is_simple(const Root& r, int j) const {
    for (int m = 0; m < n_; ++m)
      if (r[m] != (m == j ? 1 : 0)) return false;
    return true;
  }
  const Degree* find(const Root& r) const {
    for (int c : r)
      if (c < 0) return nullptr;
    auto it = deg_.find(r);
    return it == deg_.end() ? nullptr : &it->second;
  }
  Root minus(Root r, int j) const {
    r[j] -= 1;
    return r;
  }
  Root plus(Root r, int j) const {
    r[j] += 1;
    return r;
  }
  Layout layout(const Root& beta) const {
    Layout L;
    L.off.assign(n_, 0);
    L.blk.assign(n_, 0);
    for (int j = 0; j < n_; ++j) {
      L.off[j] = L.size;
      if (const Degree* g = find(minus(beta, j))) L.blk[j] = g->dim;
      L.size += L.blk[j];
    }
    return L;
  }

  Vec rep_of_bracket(const Root& mu, const Vec& y, const Root& nu, const Vec& x) const;
  Vec bracket(const Root& mu, const Vec& y, const Root& nu, const Vec& x) const;
  void build_degree(const Root& beta);

  const ContragredientDatum& d_;
  const RootSystemBundle& b_;
  const FieldContext& F_;
  int n_;
  std::map<Root, Degree, RootLess> deg_;
  std::map<Root, Layout, RootLess> layouts_;
};

// ([f_j, [y, x]])_j laid out over the blocks g_{mu+nu-a_j}, by the super Jacobi identity.
Vec Builder::rep_of_bracket(const Root& mu, const Vec& y, const Root& nu, const Vec& x) const {
  Root beta = mu;
  for (int m = 0; m < n_; ++m) beta[m] += nu[m];
  const Layout L = layout(beta);
  Vec R(L.size, 0);
  const int pmu = parity_of(mu);
  auto add_block = [&](int j, const Vec& v, Elt c) {
    if (v.empty() || c == 0) return;
    if (v.size() != L.blk[j]) throw Error(ErrorCode::DimensionMismatch, "internal: block size");
    for (std::size_t t = 0; t < v.size(); ++t)
      if (v[t]) R[L.off[j] + t] = F_.add(R[L.off[j] + t], F_.mul(c, v[t]));
  };
  for (int j = 0; j < n_; ++j) {
    const Elt pj = sgn(d_.parity[j]);
    // [[f_j, y], x]
    if (is_simple(mu, j)) {
      add_block(j, x, F_.neg(F_.mul(F_.mul(pj, y[0]), xi(nu, j))));
    } else if (const Degree* g = find(mu); g && g->F.count(j)) {
      Vec u = g->F.at(j).apply(y);
      if (!vec_is_zero(u)) add_block(j, bracket(minus(mu, j), u, nu, x), 1);
    }
    // (-1)^{|j||mu|} [y, [f_j, x]]
    const Elt s = sgn((d_.parity[j] == -1 && pmu == -1) ? -1 : 1);
    if (is_simple(nu, j)) {
      add_block(j, y, F_.mul(s, F_.mul(F_.mul(pj, x[0]), xi(mu, j))));
    } else if (const Degree* g = find(nu); g && g->F.count(j)) {
      Vec u = g->F.at(j).apply(x);
      if (!vec_is_zero(u)) add_block(j, bracket(mu, y, minus(nu, j), u), s);
    }
  }
  return R;
}

// [y, x] for y in g_mu, x in g_nu (positive degrees), as coordinates in g_{mu+nu}; empty if that piece is zero.
Vec Builder::bracket(const Root& mu, const Vec& y, const Root& nu, const Vec& x) const {
  Root beta = mu;
  for (int m = 0; m < n_; ++m) beta[m] += nu[m];
  const Degree* b = find(beta);
  if (!b) return {};
  for (int i = 0; i < n_; ++i) {
    if (is_simple(mu, i)) {
      const Degree* g = find(nu);
      if (g && g->E.count(i)) return vec_scale(F_, y[0], g->E.at(i).apply(x));
    }
    if (is_simple(nu, i)) {
      const Degree* g = find(mu);
      if (g && g->E.count(i)) {
        const int s = (d_.parity[i] == -1 && parity_of(mu) == -1) ? 1 : -1;
        return vec_scale(F_, F_.mul(sgn(s), x[0]), g->E.at(i).apply(y));
      }
    }
  }
  auto c = b->tracker->coordinates(rep_of_bracket(mu, y, nu, x));
  if (!c) throw Error(ErrorCode::DimensionMismatch, "internal: bracket outside its graded piece");
  return *c;
}

void Builder::build_degree(const Root& beta) {
  Degree D;
  D.deg = beta;
  D.parity = parity_of(beta);
  const Layout L = layout(beta);
  D.tracker.emplace(d_.field, L.size);

  auto offer = [&](Origin o) {
    Vec R = o.square ? rep_of_bracket(o.from, o.x, o.from, o.x)
                     : rep_of_bracket(simple_root(n_, o.i), Vec{1}, o.from, o.x);
    if (D.tracker->insert(R)) {
      D.rep.push_back(std::move(R));
      D.origin.push_back(std::move(o));
    }
  };

  // (ad e_i)^k e_j first, smallest i first.
  for (int i = 0; i < n_; ++i) {
    const int k = beta[i];
    if (k < 1) continue;
    int j = -1, others = 0;
    for (int m = 0; m < n_; ++m)
      if (m != i && beta[m] != 0) {
        ++others;
        if (beta[m] == 1) j = m;
      }
    if (others != 1 || j < 0) continue;
    Root cur = simple_root(n_, j);
    Vec v{1};
    bool ok = true;
    for (int t = 1; t < k && ok; ++t) {
      const Degree* g = find(cur);
      if (!g || !g->E.count(i)) {
        ok = false;
        break;
      }
      v = g->E.at(i).apply(v);
      cur = plus(cur, i);
      if (vec_is_zero(v)) ok = false;
    }
    if (ok && find(cur)) offer({false, i, cur, v});
  }
  // [e_b, e_b] for b odd non-degenerate.
  bool even = std::all_of(beta.begin(), beta.end(), [](int c) { return c % 2 == 0; });
  if (even) {
    Root half = beta;
    for (auto& c : half) c /= 2;
    if (b_.odd_nd.count(half))
      if (const Degree* g = find(half)) {
        Vec x(g->dim, 0);
        x[0] = 1;
        offer({true, -1, half, x});
      }
  }
  // Remaining candidates [e_i, b] in (i, basis index) order.
  for (int i = 0; i < n_; ++i) {
    const Root gamma = minus(beta, i);
    const Degree* g = find(gamma);
    if (!g) continue;
    for (std::size_t c = 0; c < g->dim; ++c) {
      Vec x(g->dim, 0);
      x[c] = 1;
      offer({false, i, gamma, x});
    }
  }
  D.dim = D.tracker->size();
  if (D.dim == 0) return;

  for (int j = 0; j < n_; ++j) {
    if (L.blk[j] == 0) continue;
    Matrix Fj(d_.field, L.blk[j], D.dim);
    for (std::size_t k = 0; k < D.dim; ++k)
      for (std::size_t t = 0; t < L.blk[j]; ++t) Fj.at(t, k) = D.rep[k][L.off[j] + t];
    D.F.emplace(j, std::move(Fj));
  }
  auto [it, inserted] = deg_.emplace(beta, std::move(D));
  (void)inserted;
  const Degree& B = it->second;
  for (int i = 0; i < n_; ++i) {
    const Root gamma = minus(beta, i);
    auto git = deg_.find(gamma);
    if (find(gamma) == nullptr) continue;
    Degree& G = git->second;
    Matrix Ei(d_.field, B.dim, G.dim);
    for (std::size_t c = 0; c < G.dim; ++c) {
      Vec x(G.dim, 0);
      x[c] = 1;
      auto co = B.tracker->coordinates(rep_of_bracket(simple_root(n_, i), Vec{1}, gamma, x));
      if (!co) throw Error(ErrorCode::DimensionMismatch, "internal: [e_i, x] outside its graded piece");
      Ei.set_col(c, *co);
    }
    G.E.emplace(i, std::move(Ei));
  }
}

std::map<Root, Degree, RootLess> Builder::run() {
  int max_ht = 0;
  for (const auto& r : b_.nabla_plus) max_ht = std::max(max_ht, height(r));
  std::vector<Root> level;
  for (int k = 0; k < n_; ++k) {
    Degree D;
    D.deg = simple_root(n_, k);
    D.parity = d_.parity[k];
    D.dim = 1;
    D.origin.push_back({});
    deg_.emplace(D.deg, std::move(D));
    level.push_back(simple_root(n_, k));
  }
  for (int ht = 2; !level.empty(); ++ht) {
    if (ht > max_ht + 1) throw Error(ErrorCode::NonTerminating, "nonzero graded piece above the highest root");
    RootSet next;
    for (const auto& g : level)
      for (int i = 0; i < n_; ++i) next.insert(plus(g, i));
    level.clear();
    for (const auto& beta : next) {
      build_degree(beta);
      if (deg_.count(beta)) level.push_back(beta);
    }
  }
  return std::move(deg_);
}

}  // namespace

std::pair<std::size_t, std::size_t> GradedLieAlgebra::sdim() const {
  std::size_t ev = 0, od = 0;
  for (const auto& b : basis_) (b.parity == 1 ? ev : od) += 1;
  return {ev, od};
}

std::optional<std::size_t> GradedLieAlgebra::find_e(const Root& deg, int slot) const {
  auto it = e_offset_.find(deg);
  if (it == e_offset_.end() || slot >= static_cast<int>(pos_dims_.at(deg))) return std::nullopt;
  return it->second + slot;
}

std::optional<std::size_t> GradedLieAlgebra::find_f(const Root& deg, int slot) const {
  auto e = find_e(deg, slot);
  if (!e) return std::nullopt;
  return f_base_ + *e;
}

std::size_t GradedLieAlgebra::e(const Root& deg) const {
  auto r = find_e(deg);
  if (!r) throw Error(ErrorCode::InvalidArgument, "no root vector e_" + format_root(deg));
  return *r;
}

std::size_t GradedLieAlgebra::f(const Root& deg) const {
  auto r = find_f(deg);
  if (!r) throw Error(ErrorCode::InvalidArgument, "no root vector f_" + format_root(deg));
  return *r;
}

Vec GradedLieAlgebra::unit(std::size_t idx) const {
  Vec v(dim(), 0);
  v.at(idx) = 1;
  return v;
}

Matrix GradedLieAlgebra::ad_of(const Vec& x) const {
  Matrix m(field(), dim(), dim());
  const FieldContext& F = *field();
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    m = m + ad_[a].scaled(x[a]);
  }
  (void)F;
  return m;
}

Vec GradedLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  const FieldContext& F = *field();
  Vec out(dim(), 0);
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    vec_axpy(F, x[a], ad_[a].apply(y), out);
  }
  return out;
}

int GradedLieAlgebra::parity_of(const Vec& x) const {
  int par = 0;
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    if (par == 0)
      par = basis_[a].parity;
    else if (par != basis_[a].parity)
      throw Error(ErrorCode::InvalidArgument, "vector is not homogeneous for the parity");
  }
  return par == 0 ? 1 : par;
}

std::string GradedLieAlgebra::format(const Vec& x) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    os << (first ? "" : " + ") << field()->format(x[a]) << "*" << basis_[a].label;
    first = false;
  }
  return first ? "0" : os.str();
}

Elt GradedLieAlgebra::xi(const Root& beta, int k) const {
  const FieldContext& F = *field();
  Elt s = 0;
  for (int m = 0; m < theta(); ++m)
    if (beta[m]) s = F.add(s, F.mul(F.from_int(beta[m]), datum_.A(k, m)));
  return s;
}

GradedLieAlgebra build_lie(const ContragredientDatum& d, const RootSystemBundle& b) {
  d.validate();
  const FieldContext& F = *d.field;
  const int n = d.theta();
  auto degs = Builder(d, b).run();

  for (const auto& [r, D] : degs)
    if (!b.nabla_plus.count(r) || D.dim != 1)
      throw Error(ErrorCode::DimensionMismatch, "dim g_" + format_root(r) + " = " + std::to_string(D.dim) +
                                                    " disagrees with the root system");
  for (const auto& r : b.nabla_plus)
    if (!degs.count(r)) throw Error(ErrorCode::DimensionMismatch, "missing graded piece g_" + format_root(r));

  GradedLieAlgebra g;
  g.datum_ = d;
  g.bundle_ = b;
  for (const auto& [r, D] : degs) {
    g.e_offset_[r] = g.basis_.size();
    g.pos_dims_[r] = D.dim;
    for (std::size_t s = 0; s < D.dim; ++s)
      g.basis_.push_back({BasisElement::Kind::E, r, D.parity, static_cast<int>(s),
                          "e_{" + format_root(r) + "}" + (D.dim > 1 ? "#" + std::to_string(s) : "")});
  }
  const std::size_t npos = g.basis_.size();
  g.h_offset_ = npos;
  for (int k = 0; k < n; ++k)
    g.basis_.push_back({BasisElement::Kind::H, Root(n, 0), 1, k, "h_" + std::to_string(k + 1)});
  g.f_base_ = npos + n;
  for (std::size_t a = 0; a < npos; ++a) {
    BasisElement be = g.basis_[a];
    be.kind = BasisElement::Kind::F;
    for (auto& c : be.degree) c = -c;
    be.label[0] = 'f';
    g.basis_.push_back(be);
  }
  const std::size_t N = g.basis_.size();
  const Field& fld = d.field;
  auto sgn = [&](bool neg) { return neg ? F.neg(1) : Elt{1}; };
  auto eidx = [&](const Root& r, std::size_t s) { return g.e_offset_.at(r) + s; };
  auto fidx = [&](const Root& r, std::size_t s) { return g.f_base_ + g.e_offset_.at(r) + s; };

  std::vector<Matrix> ad_e(n, Matrix(fld, N, N)), ad_f(n, Matrix(fld, N, N)), ad_h(n, Matrix(fld, N, N));
  for (int i = 0; i < n; ++i) {
    const Root ai = simple_root(n, i);
    const Elt pi = sgn(d.parity[i] == -1);
    for (const auto& [mu, D] : degs) {
      for (std::size_t s = 0; s < D.dim; ++s) {
        Vec x(D.dim, 0);
        x[s] = 1;
        // [e_i, e_mu]
        if (D.E.count(i)) {
          Root up = mu;
          up[i] += 1;
          Vec y = D.E.at(i).apply(x);
          for (std::size_t t = 0; t < y.size(); ++t) ad_e[i].at(eidx(up, t), eidx(mu, s)) = y[t];
          // [f_i, f_mu] = sum c f_{mu + a_i}
          for (std::size_t t = 0; t < y.size(); ++t) ad_f[i].at(fidx(up, t), fidx(mu, s)) = y[t];
        }
        if (mu == ai) {
          ad_f[i].at(g.h(i), eidx(mu, s)) = F.neg(pi);  // [f_i, e_i] = -p_i h_i
          ad_e[i].at(g.h(i), fidx(mu, s)) = 1;          // [e_i, f_i] = h_i
        } else if (D.F.count(i)) {
          Root down = mu;
          down[i] -= 1;
          Vec y = D.F.at(i).apply(x);
          for (std::size_t t = 0; t < y.size(); ++t) {
            ad_f[i].at(eidx(down, t), eidx(mu, s)) = y[t];
            ad_e[i].at(fidx(down, t), fidx(mu, s)) = F.mul(pi, y[t]);  // [e_i, f_mu] = p_i sum c f
          }
        }
        // h_k acts by xi_mu(h_k)
        ad_h[i].at(eidx(mu, s), eidx(mu, s)) = g.xi(mu, i);
        ad_h[i].at(fidx(mu, s), fidx(mu, s)) = F.neg(g.xi(mu, i));
      }
    }
    for (int k = 0; k < n; ++k) {
      ad_e[i].at(g.e(ai), g.h(k)) = F.neg(d.A(k, i));  // [e_i, h_k] = -a_ki e_i
      ad_f[i].at(g.f(ai), g.h(k)) = d.A(k, i);         // [f_i, h_k] = a_ki f_i
    }
  }

  g.ad_.assign(N, Matrix(fld, N, N));
  for (int k = 0; k < n; ++k) g.ad_[g.h(k)] = ad_h[k];
  for (const auto& [mu, D] : degs) {
    for (std::size_t s = 0; s < D.dim; ++s) {
      const Origin& o = D.origin[s];
      Matrix A;
      if (height(mu) == 1) {
        int i = static_cast<int>(std::find(mu.begin(), mu.end(), 1) - mu.begin());
        A = ad_e[i];
      } else {
        Matrix X(fld, N, N);
        for (std::size_t c = 0; c < o.x.size(); ++c)
          if (o.x[c]) X = X + g.ad_[eidx(o.from, c)].scaled(o.x[c]);
        const bool odd_x = degs.at(o.from).parity == -1;
        if (o.square) {
          Matrix XX = X * X;
          A = odd_x ? XX + XX : Matrix(fld, N, N);
        } else {
          const bool both_odd = odd_x && d.parity[o.i] == -1;
          A = ad_e[o.i] * X - (X * ad_e[o.i]).scaled(sgn(both_odd));
        }
      }
      g.ad_[eidx(mu, s)] = std::move(A);
    }
  }

  Matrix Om(fld, N, N);
  for (const auto& [mu, D] : degs)
    for (std::size_t s = 0; s < D.dim; ++s) {
      const bool odd_ht = height(mu) % 2 != 0;
      Om.at(fidx(mu, s), eidx(mu, s)) = sgn(odd_ht);
      Om.at(eidx(mu, s), fidx(mu, s)) = sgn(odd_ht != (D.parity == -1));
    }
  for (int k = 0; k < n; ++k) Om.at(g.h(k), g.h(k)) = F.neg(1);
  g.omega_ = Om;
  const Matrix Oinv = *inverse(Om);
  for (const auto& [mu, D] : degs)
    for (std::size_t s = 0; s < D.dim; ++s) {
      if (height(mu) == 1) {
        int i = static_cast<int>(std::find(mu.begin(), mu.end(), 1) - mu.begin());
        g.ad_[fidx(mu, s)] = ad_f[i];
      } else {
        g.ad_[fidx(mu, s)] = (Om * g.ad_[eidx(mu, s)] * Oinv).scaled(sgn(height(mu) % 2 != 0));
      }
    }
  return g;
}

GradedLieAlgebra build_lie(const ContragredientDatum& d) { return build_lie(d, root_system(d)); }

Matrix ad_matrix(const GradedLieAlgebra& g, const Vec& x) { return g.ad_of(x); }

Elt form_value(const Matrix& B, const Vec& x, const Vec& y) {
  const FieldContext& F = *B.field();
  Vec By = B.apply(y);
  Elt s = 0;
  for (std::size_t a = 0; a < x.size(); ++a)
    if (x[a]) s = F.add(s, F.mul(x[a], By[a]));
  return s;
}

Matrix invariant_form(const GradedLieAlgebra& g) {
  const FieldContext& F = *g.field();
  const std::size_t N = g.dim();
  const auto& basis = g.basis();
  auto sum_zero = [&](std::size_t a, std::size_t b) {
    for (std::size_t m = 0; m < basis[a].degree.size(); ++m)
      if (basis[a].degree[m] + basis[b].degree[m] != 0) return false;
    return true;
  };
  // Unknown u(a, b) for a <= b with paired degrees; B(b, a) = (-1)^{|a||b|} B(a, b).
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> unk;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b)
      if (sum_zero(a, b)) unk.emplace(std::make_pair(a, b), unk.size());
  auto var = [&](std::size_t a, std::size_t b) -> std::pair<std::size_t, Elt> {
    if (a <= b) return {unk.at({a, b}), 1};
    const bool neg = basis[a].parity == -1 && basis[b].parity == -1;
    return {unk.at({b, a}), neg ? F.neg(1) : Elt{1}};
  };

  std::vector<Vec> rows;
  std::vector<Elt> rhs;
  // Homogeneous constraints B([x_a, x_b], x_c) - B(x_a, [x_b, x_c]) = 0.
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      Vec ab = g.bracket(a, b);
      for (std::size_t c = 0; c < N; ++c) {
        bool tot = true;
        for (std::size_t m = 0; m < basis[a].degree.size(); ++m)
          if (basis[a].degree[m] + basis[b].degree[m] + basis[c].degree[m] != 0) tot = false;
        if (!tot) continue;
        Vec row(unk.size(), 0);
        for (std::size_t m = 0; m < N; ++m)
          if (ab[m] && sum_zero(m, c)) {
            auto [u, s] = var(m, c);
            row[u] = F.add(row[u], F.mul(s, ab[m]));
          }
        Vec bc = g.bracket(b, c);
        for (std::size_t m = 0; m < N; ++m)
          if (bc[m] && sum_zero(a, m)) {
            auto [u, s] = var(a, m);
            row[u] = F.sub(row[u], F.mul(s, bc[m]));
          }
        if (!vec_is_zero(row)) {
          rows.push_back(std::move(row));
          rhs.push_back(0);
        }
      }
    }
  // Gauge: B(e_j, f_j) = 1 for the first index of each connected component.
  const int n = g.theta();
  std::vector<int> comp(n, -1);
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = s;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (comp[v] < 0 && g.datum().A(u, v) != 0) {
          comp[v] = s;
          stack.push_back(v);
        }
    }
    Vec row(unk.size(), 0);
    auto [u, sg] = var(g.e(s), g.f(s));
    row[u] = sg;
    rows.push_back(std::move(row));
    rhs.push_back(1);
  }
  Matrix M(g.field(), rows.size(), unk.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unk.size(); ++c) M.at(r, c) = rows[r][c];
  auto sol = solve(M, rhs);
  if (!sol) throw Error(ErrorCode::NoInvariantForm, "invariance system is inconsistent");
  Matrix B(g.field(), N, N);
  for (const auto& [ab, u] : unk) {
    auto [a, b] = ab;
    B.at(a, b) = (*sol)[u];
    const bool neg = basis[a].parity == -1 && basis[b].parity == -1;
    B.at(b, a) = neg ? F.neg((*sol)[u]) : (*sol)[u];
  }
  if (rank(B) != N) throw Error(ErrorCode::DegenerateForm, "invariant form is degenerate");
  return B;
}

PbwReport pbw_lowchar_check(const GradedLieAlgebra& g, std::size_t samples, unsigned seed) {
  PbwReport rep;
  const int p = g.field()->p();
  if (p != 2 && p != 3) return rep;
  rep.applicable = true;
  const int want = p == 3 ? -1 : 1;
  std::vector<std::size_t> idx;
  for (std::size_t a = 0; a < g.dim(); ++a)
    if (g.basis()[a].parity == want) idx.push_back(a);
  auto test = [&](const Vec& x, const std::string& name) {
    Vec xx = g.bracket(x, x);
    Vec v = p == 3 ? g.bracket(x, xx) : xx;
    if (!vec_is_zero(v)) rep.violations.push_back(name + ": " + g.format(v));
  };
  for (auto a : idx) {
    test(g.unit(a), g.basis()[a].label);
    ++rep.basis_checked;
  }
  if (idx.empty()) return rep;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Elt> coef(0, g.field()->order() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    Vec x = g.zero();
    for (auto a : idx) x[a] = coef(rng);
    test(x, "random sample " + std::to_string(s));
    ++rep.random_checked;
  }
  return rep;
}

LieCheckReport check_lie_axioms(const GradedLieAlgebra& g, std::size_t exhaustive_limit, std::size_t random_triples) {
  LieCheckReport rep;
  const FieldContext& F = *g.field();
  const std::size_t N = g.dim();
  const auto& basis = g.basis();
  auto sign = [&](std::size_t a, std::size_t b) {
    return (basis[a].parity == -1 && basis[b].parity == -1) ? F.neg(1) : Elt{1};
  };
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      Vec ab = g.bracket(a, b), ba = g.bracket(b, a);
      if (ab != vec_scale(F, F.neg(sign(a, b)), ba))
        rep.failures.push_back("antisymmetry fails for " + basis[a].label + ", " + basis[b].label);
    }
  if (N <= exhaustive_limit) {
    // ad [x, y] = ad x ad y - (-1)^{|x||y|} ad y ad x is Jacobi for every third argument.
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        Matrix lhs = g.ad_of(g.bracket(a, b));
        Matrix rhs = g.ad(a) * g.ad(b) - (g.ad(b) * g.ad(a)).scaled(sign(a, b));
        if (lhs != rhs) rep.failures.push_back("Jacobi fails for " + basis[a].label + ", " + basis[b].label);
      }
  } else {
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, N - 1);
    for (std::size_t t = 0; t < random_triples; ++t) {
      std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      Vec lhs = g.bracket(g.unit(a), g.bracket(b, c));
      Vec r1 = g.bracket(g.bracket(a, b), g.unit(c));
      Vec r2 = vec_scale(F, sign(a, b), g.bracket(g.unit(b), g.bracket(a, c)));
      if (lhs != vec_add(F, r1, r2))
        rep.failures.push_back("Jacobi fails for " + basis[a].label + ", " + basis[b].label + ", " + basis[c].label);
    }
  }
  return rep;
}

LieCheckReport check_chevalley(const GradedLieAlgebra& g) {
  LieCheckReport rep;
  const FieldContext& F = *g.field();
  const std::size_t N = g.dim();
  const auto& basis = g.basis();
  const Matrix& W = g.omega();
  for (std::size_t a = 0; a < N; ++a) {
    Vec w = W.col(a);
    for (std::size_t m = 0; m < N; ++m) {
      if (!w[m]) continue;
      for (std::size_t t = 0; t < basis[a].degree.size(); ++t)
        if (basis[m].degree[t] != -basis[a].degree[t]) {
          rep.failures.push_back("omega does not negate the degree of " + basis[a].label);
          break;
        }
    }
    Vec ww = W.apply(w);
    Vec expect = g.unit(a);
    if (basis[a].parity == -1) expect = vec_scale(F, F.neg(1), expect);
    if (ww != expect) rep.failures.push_back("omega^2 != (-1)^|x| on " + basis[a].label);
  }
  for (int i = 0; i < g.theta(); ++i) {
    if (W.col(g.e(i)) != vec_scale(F, F.neg(1), g.unit(g.f(i)))) rep.failures.push_back("omega(e_i) != -f_i");
    Elt pi = g.datum().parity[i] == -1 ? Elt{1} : F.neg(1);
    if (W.col(g.f(i)) != vec_scale(F, pi, g.unit(g.e(i)))) rep.failures.push_back("omega(f_i) != -p_i e_i");
  }
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      if (W.apply(g.bracket(a, b)) != g.bracket(W.col(a), W.col(b)))
        rep.failures.push_back("omega is not a homomorphism on " + basis[a].label + ", " + basis[b].label);
  return rep;
}

LieCheckReport check_derivation_order(const GradedLieAlgebra& g) {
  LieCheckReport rep;
  const unsigned p = static_cast<unsigned>(g.field()->p());
  for (int i = 0; i < g.theta(); ++i) {
    if (!g.ad(g.e(i)).power(p).is_zero()) rep.failures.push_back("(ad e_" + std::to_string(i + 1) + ")^p != 0");
    if (!g.ad(g.f(i)).power(p).is_zero()) rep.failures.push_back("(ad f_" + std::to_string(i + 1) + ")^p != 0");
  }
  return rep;
}

}  // namespace veralg
