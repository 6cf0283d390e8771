#include "veralg/roots.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

#include "veralg/error.hpp"

namespace veralg {

bool RootLess::operator()(const Root& a, const Root& b) const {
  const int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return b < a;
}

int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

Root simple_root(int theta, int i) {
  Root r(theta, 0);
  r.at(i) = 1;
  return r;
}

std::string format_root(const Root& r, const std::vector<int>& labels) {
  bool neg = false, pos = false;
  for (int c : r) {
    if (c < 0) neg = true;
    if (c > 0) pos = true;
  }
  if (!neg && !pos) return "0";
  if (neg && pos) {
    std::ostringstream os;
    os << '[';
    for (size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
    os << ']';
    return os.str();
  }
  std::string out = neg ? "-" : "";
  for (size_t k = 0; k < r.size(); ++k) {
    int c = std::abs(r[k]);
    if (c == 0) continue;
    out += std::to_string(labels.empty() ? static_cast<int>(k) + 1 : labels[k]);
    if (c > 9)
      out += "^{" + std::to_string(c) + "}";
    else if (c > 1)
      out += "^" + std::to_string(c);
  }
  return out;
}

std::string format_root(const Root& r) { return format_root(r, {}); }

Root parse_root(const std::string& s, int theta) {
  Root r(theta, 0);
  size_t k = 0;
  int sign = 1;
  if (k < s.size() && s[k] == '-') {
    sign = -1;
    ++k;
  }
  if (k == s.size()) throw Error(ErrorCode::ParseError, "empty root '" + s + "'");
  while (k < s.size()) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw Error(ErrorCode::ParseError, "bad root '" + s + "'");
    int idx = s[k++] - '0';
    if (idx < 1 || idx > theta) throw Error(ErrorCode::ParseError, "root index out of range in '" + s + "'");
    int e = 1;
    if (k < s.size() && s[k] == '^') {
      ++k;
      bool brace = k < s.size() && s[k] == '{';
      if (brace) ++k;
      size_t start = k;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])) && (brace || k == start)) ++k;
      if (k == start) throw Error(ErrorCode::ParseError, "missing exponent in '" + s + "'");
      e = std::stoi(s.substr(start, k - start));
      if (brace) {
        if (k >= s.size() || s[k] != '}') throw Error(ErrorCode::ParseError, "unclosed brace in '" + s + "'");
        ++k;
      }
    }
    r[idx - 1] += sign * e;
  }
  return r;
}

std::string format_roots(const RootSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& r : s) {
    out += (first ? "" : ", ") + format_root(r);
    first = false;
  }
  return out + "}";
}

bool ContragredientDatum::is_lie_algebra() const {
  return std::all_of(parity.begin(), parity.end(), [](int x) { return x == 1; });
}

void ContragredientDatum::validate() const {
  if (!field) throw Error(ErrorCode::ValidationError, "datum has no field");
  const auto n = static_cast<std::size_t>(theta());
  if (n == 0) throw Error(ErrorCode::ValidationError, "rank must be positive");
  if (A.rows() != n || A.cols() != n)
    throw Error(ErrorCode::ValidationError, "matrix size does not match parity length");
  if (!A.field()->same_as(*field)) throw Error(ErrorCode::ValidationError, "matrix field differs from datum field");
  for (std::size_t i = 0; i < n; ++i) {
    if (parity[i] != 1 && parity[i] != -1)
      throw Error(ErrorCode::ValidationError, "parity entry " + std::to_string(i + 1) + " is not +1/-1");
    if (A(i, i) != 0 && A(i, i) != field->from_int(2))
      throw Error(ErrorCode::ValidationError, "diagonal entry a_" + std::to_string(i + 1) + std::to_string(i + 1) +
                                                  " is not 0 or 2");
    for (std::size_t j = 0; j < n; ++j)
      if ((A(i, j) == 0) != (A(j, i) == 0))
        throw Error(ErrorCode::ValidationError, "a_ij = 0 must hold iff a_ji = 0 (i=" + std::to_string(i + 1) +
                                                    ", j=" + std::to_string(j + 1) + ")");
  }
}

ContragredientDatum make_datum(const Field& f, const std::vector<std::vector<long long>>& a,
                               const std::vector<int>& parity) {
  ContragredientDatum d{f, Matrix::from_ints(f, a), parity};
  d.validate();
  return d;
}

ContragredientDatum normalize_rows(const ContragredientDatum& d) {
  ContragredientDatum r = d;
  const FieldContext& F = *d.field;
  const std::size_t n = d.A.rows();
  for (std::size_t j = 0; j < n; ++j) {
    Elt s = 0;
    if (d.A(j, j) != 0) {
      s = F.div(F.from_int(2), d.A(j, j));
    } else {
      for (std::size_t k = 0; k < n && s == 0; ++k)
        if (d.A(j, k) != 0) s = F.inv(d.A(j, k));
      if (s == 0) continue;
    }
    for (std::size_t k = 0; k < n; ++k) r.A.at(j, k) = F.mul(s, d.A(j, k));
  }
  return r;
}

bool same_node(const ContragredientDatum& a, const ContragredientDatum& b) {
  return a.parity == b.parity && normalize_rows(a).A == normalize_rows(b).A;
}

IntMatrix cartan_matrix_of(const ContragredientDatum& d) {
  const FieldContext& F = *d.field;
  const int n = d.theta(), p = F.p();
  IntMatrix C(n, std::vector<int>(n, 0));
  const Elt two = F.from_int(2);
  for (int i = 0; i < n; ++i) {
    const Elt aii = d.A(i, i);
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        C[i][j] = 2;
        continue;
      }
      const Elt aij = d.A(i, j);
      if (aii == two) {
        if (F.in_prime_field(aij)) {
          int t = F.nonpositive_lift(aij);
          C[i][j] = (d.parity[i] == -1 && (t % 2 != 0)) ? t - p : t;
        } else {
          C[i][j] = 1 - ((3 - d.parity[i]) / 2) * p;
        }
      } else if (aii == 0) {
        if (aij == 0)
          C[i][j] = 0;
        else
          C[i][j] = d.parity[i] == 1 ? 1 - p : -1;
      } else {
        throw Error(ErrorCode::UnsupportedEntry, "diagonal entry outside {0, 2}");
      }
    }
  }
  return C;
}

CartanGraphNode make_node(const ContragredientDatum& d) { return {d, cartan_matrix_of(d)}; }

ContragredientDatum reflect_datum(const ContragredientDatum& d, int i) {
  const FieldContext& F = *d.field;
  const int n = d.theta();
  if (i < 0 || i >= n) throw Error(ErrorCode::InvalidArgument, "reflection index out of range");
  const IntMatrix C = cartan_matrix_of(d);
  auto c = [&](int a, int b) { return F.from_int(C[a][b]); };
  const Matrix& A = d.A;
  ContragredientDatum r = d;
  for (int j = 0; j < n; ++j) {
    const bool odd_power = (C[i][j] % 2 != 0);
    r.parity[j] = d.parity[j] * ((d.parity[i] == -1 && odd_power) ? -1 : 1);
  }
  for (int k = 0; k < n; ++k) r.A.at(i, k) = F.sub(F.mul(c(i, k), A(i, i)), A(i, k));
  for (int j = 0; j < n; ++j) {
    if (j == i || A(i, j) == 0) continue;
    r.A.at(j, i) = F.mul(A(j, i), F.sub(F.mul(c(i, j), A(i, i)), A(i, j)));
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      Elt v = F.mul(F.mul(c(i, j), c(i, k)), F.mul(A(j, i), A(i, i)));
      v = F.sub(v, F.mul(c(i, j), F.mul(A(j, i), A(i, k))));
      v = F.sub(v, F.mul(c(i, k), F.mul(A(j, i), A(i, j))));
      v = F.add(v, F.mul(A(i, j), A(j, k)));
      r.A.at(j, k) = v;
    }
  }
  return normalize_rows(r);
}

Root reflect_root(const IntMatrix& C, int i, const Root& r) {
  Root out = r;
  int s = 0;
  for (size_t j = 0; j < r.size(); ++j) s += C[i][j] * r[j];
  out[i] -= s;
  return out;
}

IntMatrix reflection_matrix(const IntMatrix& C, int i) {
  const int n = static_cast<int>(C.size());
  IntMatrix S(n, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) {
    S[j][j] = 1;
    S[i][j] -= C[i][j];
  }
  return S;
}

WeylGroupoidOrbit weyl_orbit(const ContragredientDatum& d, std::size_t cap) {
  d.validate();
  WeylGroupoidOrbit orb;
  const int n = d.theta();
  auto find = [&](const ContragredientDatum& x) -> std::size_t {
    for (std::size_t k = 0; k < orb.nodes.size(); ++k)
      if (same_node(orb.nodes[k].datum, x)) return k;
    return orb.nodes.size();
  };
  orb.nodes.push_back(make_node(normalize_rows(d)));
  orb.target.emplace_back(n, 0);
  for (std::size_t x = 0; x < orb.nodes.size(); ++x) {
    for (int i = 0; i < n; ++i) {
      ContragredientDatum y = reflect_datum(orb.nodes[x].datum, i);
      std::size_t k = find(y);
      if (k == orb.nodes.size()) {
        if (orb.nodes.size() >= cap)
          throw Error(ErrorCode::OrbitCapExceeded, "Weyl groupoid orbit exceeds " + std::to_string(cap) + " nodes");
        orb.nodes.push_back(make_node(y));
        orb.target.emplace_back(n, 0);
      }
      orb.target[x][i] = k;
    }
  }
  return orb;
}

namespace {

// Closure of per-node seed sets under transport along all arrows.
std::vector<std::set<Root>> transport_closure(const WeylGroupoidOrbit& orbit, std::vector<std::set<Root>> sets,
                                              std::size_t root_cap) {
  const int n = orbit.theta();
  std::deque<std::pair<std::size_t, Root>> work;
  for (std::size_t x = 0; x < sets.size(); ++x)
    for (const auto& r : sets[x]) work.emplace_back(x, r);
  while (!work.empty()) {
    auto [x, r] = work.front();
    work.pop_front();
    for (int i = 0; i < n; ++i) {
      const std::size_t y = orbit.target[x][i];
      Root s = reflect_root(orbit.nodes[x].C, i, r);
      if (sets[y].insert(s).second) {
        if (sets[y].size() > 2 * root_cap)
          throw Error(ErrorCode::InfiniteRootSystem, "root closure exceeds " + std::to_string(root_cap) + " roots");
        work.emplace_back(y, std::move(s));
      }
    }
  }
  return sets;
}

RootSet positive_part(const std::set<Root>& s) {
  RootSet out;
  for (const auto& r : s)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) out.insert(r);
  return out;
}

}  // namespace

RootSet odd_nondegenerate(const WeylGroupoidOrbit& orbit, std::size_t base, std::size_t root_cap) {
  const int n = orbit.theta();
  std::vector<std::set<Root>> seeds(orbit.nodes.size());
  for (std::size_t x = 0; x < orbit.nodes.size(); ++x) {
    const auto& d = orbit.nodes[x].datum;
    for (int i = 0; i < n; ++i)
      if (d.A(i, i) != 0 && d.parity[i] == -1) {
        Root r = simple_root(n, i);
        seeds[x].insert(r);
        for (auto& c : r) c = -c;
        seeds[x].insert(r);
      }
  }
  return positive_part(transport_closure(orbit, std::move(seeds), root_cap).at(base));
}

RootSystemBundle positive_roots(const WeylGroupoidOrbit& orbit, std::size_t base, std::size_t root_cap) {
  const int n = orbit.theta();
  std::vector<std::set<Root>> seeds(orbit.nodes.size());
  for (auto& s : seeds)
    for (int i = 0; i < n; ++i) {
      Root r = simple_root(n, i);
      s.insert(r);
      r[i] = -1;
      s.insert(r);
    }
  auto all = transport_closure(orbit, std::move(seeds), root_cap);
  RootSystemBundle b;
  b.theta = n;
  b.p = orbit.nodes.at(base).datum.field->p();
  b.C = orbit.nodes[base].C;
  b.delta_plus = positive_part(all[base]);
  for (const auto& r : all[base]) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
    bool nonpos = std::all_of(r.begin(), r.end(), [](int c) { return c <= 0; });
    if (!nonneg && !nonpos) throw Error(ErrorCode::InfiniteRootSystem, "mixed-sign real root " + format_root(r));
  }
  b.odd_nd = odd_nondegenerate(orbit, base, root_cap);
  b.nabla_plus = full_roots(b);
  b.finite = true;
  return b;
}

RootSet full_roots(const RootSystemBundle& b) {
  RootSet out = b.delta_plus;
  for (Root r : b.odd_nd) {
    for (auto& c : r) c *= 2;
    out.insert(r);
  }
  return out;
}

RootSystemBundle root_system(const ContragredientDatum& d) { return positive_roots(weyl_orbit(d)); }

const AlphaString* StringPartition::string_of(const Root& r) const {
  for (const auto& s : strings) {
    bool ok = true;
    int k = -1;
    for (size_t t = 0; t < r.size(); ++t) {
      int diff = r[t] - s.generator[t];
      if (static_cast<int>(t) == i) {
        k = diff;
      } else if (diff != 0) {
        ok = false;
        break;
      }
    }
    if (ok && k >= 0 && k < s.length) return &s;
  }
  return nullptr;
}

int StringPartition::length_of_string_containing(const Root& r) const {
  const AlphaString* s = string_of(r);
  return s ? s->length : 0;
}

StringPartition alpha_strings(const RootSystemBundle& b, int i) {
  if (i < 0 || i >= b.theta) throw Error(ErrorCode::InvalidArgument, "string index out of range");
  StringPartition sp;
  sp.i = i;
  sp.p = b.p;
  const Root ai = simple_root(b.theta, i);
  for (const auto& beta : b.delta_plus) {
    if (beta == ai) continue;
    Root prev = beta;
    prev[i] -= 1;
    if (b.delta_plus.count(prev)) continue;
    int len = 0;
    Root cur = beta;
    while (b.delta_plus.count(cur)) {
      ++len;
      cur[i] += 1;
    }
    sp.strings.push_back({beta, len});
    sp.multiplicity[len] += 1;
    if (len < b.p) sp.delta_min.insert(beta);
  }
  return sp;
}

Root project_out(const Root& r, int i) {
  Root out;
  for (size_t k = 0; k < r.size(); ++k)
    if (static_cast<int>(k) != i) out.push_back(r[k]);
  return out;
}

Root primitive_part(const Root& r) {
  int g = 0;
  for (int c : r) g = std::gcd(g, std::abs(c));
  if (g == 0) throw Error(ErrorCode::InvalidArgument, "gcd of the zero vector");
  Root out = r;
  for (auto& c : out) c /= g;
  return out;
}

RootSet parabolic_restrict(const RootSystemBundle& b, int i) {
  RootSet out;
  for (const auto& beta : b.delta_plus) {
    Root pr = project_out(beta, i);
    if (std::all_of(pr.begin(), pr.end(), [](int c) { return c == 0; })) continue;
    Root q = primitive_part(pr);
    out.insert(q);
    for (auto& c : q) c = -c;
    out.insert(q);
  }
  return out;
}

}  // namespace veralg
