#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace veralg {

// Raw element code. For F_{p^k} the code is sum c_i p^i over the residue
// vector (c_0, ..., c_{k-1}); it only means something next to its context.
using Elt = std::uint32_t;

class FieldContext {
 public:
  // ext_poly is low-to-high and monic; empty means the prime field.
  FieldContext(int p, std::vector<int> ext_poly);

  int p() const { return p_; }
  int degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  const std::vector<int>& ext_poly() const { return poly_; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, long long e) const;

  Elt from_int(long long n) const;
  Elt from_coeffs(const std::vector<long long>& c) const;
  std::vector<int> coeffs(Elt a) const;
  bool in_prime_field(Elt a) const { return a < static_cast<Elt>(p_); }
  // Integer in [1-p, 0] congruent to a prime-field element.
  int nonpositive_lift(Elt a) const;
  // Integer in (-p/2, p/2] congruent to a prime-field element.
  int centered_lift(Elt a) const;
  std::string format(Elt a) const;

  bool same_as(const FieldContext& o) const { return p_ == o.p_ && poly_ == o.poly_; }

 private:
  int p_;
  int k_;
  std::uint32_t q_;
  std::vector<int> poly_;
  std::vector<Elt> exp_;       // exp_[n] = g^n, n in [0, q-1)
  std::vector<std::uint32_t> log_;
  std::vector<Elt> pinv_;      // prime field inverses
};

using Field = std::shared_ptr<const FieldContext>;

// Throws NotPrime, ReduciblePolynomial, or InvalidArgument (degree > 4).
Field make_field(int p, std::optional<std::vector<int>> ext_poly = std::nullopt);

bool is_prime(long long n);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field f, Elt v) : f_(std::move(f)), v_(v) {}
  static FieldElement of_int(const Field& f, long long n) { return {f, f->from_int(n)}; }

  const Field& field() const { return f_; }
  Elt raw() const { return v_; }
  std::vector<int> coeffs() const { return f_->coeffs(v_); }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const { return {f_, f_->add(v_, o.v_)}; }
  FieldElement operator-(const FieldElement& o) const { return {f_, f_->sub(v_, o.v_)}; }
  FieldElement operator-() const { return {f_, f_->neg(v_)}; }
  FieldElement operator*(const FieldElement& o) const { return {f_, f_->mul(v_, o.v_)}; }
  FieldElement operator/(const FieldElement& o) const { return {f_, f_->div(v_, o.v_)}; }
  FieldElement inverse() const { return {f_, f_->inv(v_)}; }
  bool operator==(const FieldElement& o) const { return v_ == o.v_; }
  bool operator!=(const FieldElement& o) const { return v_ != o.v_; }
  std::string str() const { return f_->format(v_); }

 private:
  Field f_;
  Elt v_ = 0;
};

}  // namespace veralg
