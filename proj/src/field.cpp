#include "veralg/field.hpp"

#include <sstream>

#include "veralg/error.hpp"

namespace veralg {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<long long>;  // low-to-high, residues mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, long long p) {
  trim(a);
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    long long lead = a.back();
    size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

bool has_root(const Poly& f, long long p) {
  for (long long x = 0; x < p; ++x) {
    long long v = 0;
    for (size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

bool has_quadratic_factor(const Poly& f, long long p) {
  for (long long b = 0; b < p; ++b)
    for (long long c = 0; c < p; ++c)
      if (poly_mod(f, Poly{c, b, 1}, p).empty()) return true;
  return false;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long long modinv(long long a, long long p) {
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return ((t % p) + p) % p;
}

}  // namespace

FieldContext::FieldContext(int p, std::vector<int> ext_poly) : p_(p), k_(1), q_(p), poly_(std::move(ext_poly)) {
  if (poly_.empty()) return;
  k_ = static_cast<int>(poly_.size()) - 1;
  q_ = 1;
  for (int i = 0; i < k_; ++i) q_ *= static_cast<std::uint32_t>(p_);

  Poly m(poly_.begin(), poly_.end());
  auto to_poly = [&](Elt a) {
    Poly r(k_, 0);
    for (int i = 0; i < k_; ++i) {
      r[i] = a % p_;
      a /= p_;
    }
    return r;
  };
  auto to_code = [&](const Poly& r) {
    Elt v = 0;
    for (size_t i = r.size(); i-- > 0;) v = v * p_ + static_cast<Elt>(r[i]);
    return v;
  };
  auto slow_mul = [&](Elt a, Elt b) {
    Poly x = to_poly(a), y = to_poly(b), z(2 * k_, 0);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p_;
    return to_code(poly_mod(z, m, p_));
  };
  auto slow_pow = [&](Elt a, long long e) {
    Elt r = 1;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  const long long n = static_cast<long long>(q_) - 1;
  const auto factors = prime_factors(n);
  Elt g = 0;
  for (Elt cand = 2; cand < q_; ++cand) {
    bool ok = true;
    for (long long r : factors)
      if (slow_pow(cand, n / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = cand;
      break;
    }
  }
  if (q_ == 2) g = 1;
  exp_.assign(n, 0);
  log_.assign(q_, 0);
  Elt cur = 1;
  for (long long e = 0; e < n; ++e) {
    exp_[e] = cur;
    log_[cur] = static_cast<std::uint32_t>(e);
    cur = slow_mul(cur, g);
  }
}

Elt FieldContext::add(Elt a, Elt b) const {
  if (k_ == 1) {
    Elt s = a + b;
    return s >= static_cast<Elt>(p_) ? s - p_ : s;
  }
  Elt r = 0, base = 1;
  for (int i = 0; i < k_; ++i) {
    Elt d = a % p_ + b % p_;
    if (d >= static_cast<Elt>(p_)) d -= p_;
    r += d * base;
    base *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Elt FieldContext::neg(Elt a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Elt r = 0, base = 1;
  for (int i = 0; i < k_; ++i) {
    Elt d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * base;
    base *= p_;
    a /= p_;
  }
  return r;
}

Elt FieldContext::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt FieldContext::mul(Elt a, Elt b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return static_cast<Elt>((static_cast<std::uint64_t>(a) * b) % p_);
  std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
  const std::uint64_t n = q_ - 1;
  if (e >= n) e -= n;
  return exp_[e];
}

Elt FieldContext::inv(Elt a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  if (k_ == 1) return static_cast<Elt>(modinv(a, p_));
  const std::uint32_t n = q_ - 1;
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : n - l];
}

Elt FieldContext::pow(Elt a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Elt r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elt FieldContext::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return static_cast<Elt>(r);
}

Elt FieldContext::from_coeffs(const std::vector<long long>& c) const {
  if (static_cast<int>(c.size()) > k_)
    throw Error(ErrorCode::InvalidArgument, "coefficient tuple longer than extension degree");
  Elt v = 0;
  for (size_t i = c.size(); i-- > 0;) v = v * p_ + from_int(c[i]);
  return v;
}

std::vector<int> FieldContext::coeffs(Elt a) const {
  std::vector<int> r(k_);
  for (int i = 0; i < k_; ++i) {
    r[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return r;
}

int FieldContext::nonpositive_lift(Elt a) const {
  if (!in_prime_field(a)) throw Error(ErrorCode::UnsupportedEntry, "element outside the prime field");
  return a == 0 ? 0 : static_cast<int>(a) - p_;
}

int FieldContext::centered_lift(Elt a) const {
  if (!in_prime_field(a)) throw Error(ErrorCode::UnsupportedEntry, "element outside the prime field");
  int v = static_cast<int>(a);
  return 2 * v > p_ ? v - p_ : v;
}

std::string FieldContext::format(Elt a) const {
  if (k_ == 1) return std::to_string(a);
  auto c = coeffs(a);
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < k_; ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

Field make_field(int p, std::optional<std::vector<int>> ext_poly) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= 46341) throw Error(ErrorCode::InvalidArgument, "characteristic too large");
  std::vector<int> poly;
  if (ext_poly && !ext_poly->empty()) {
    poly = *ext_poly;
    for (auto& c : poly) c = ((c % p) + p) % p;
    const int k = static_cast<int>(poly.size()) - 1;
    if (k < 2 || poly.back() != 1)
      throw Error(ErrorCode::InvalidArgument, "extension polynomial must be monic of degree >= 2");
    if (k > 4) throw Error(ErrorCode::InvalidArgument, "extension degree above 4 is not supported");
    long long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > (1LL << 22)) throw Error(ErrorCode::InvalidArgument, "field too large for table arithmetic");
    Poly f(poly.begin(), poly.end());
    if (has_root(f, p) || (k == 4 && has_quadratic_factor(f, p)))
      throw Error(ErrorCode::ReduciblePolynomial, "extension polynomial is reducible over F_" + std::to_string(p));
  }
  return std::make_shared<const FieldContext>(p, std::move(poly));
}

}  // namespace veralg
