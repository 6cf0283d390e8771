#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "veralg/roots.hpp"

namespace veralg {

struct BasisElement {
  enum class Kind { E, H, F };
  Kind kind;
  Root degree;      // negative for f-side, zero for h
  int parity;       // +1 even, -1 odd
  int slot;         // h: index k; e/f: copy index inside its degree
  std::string label;
};

// g'(A, p) with the Chevalley basis {e_b, h_k, f_b}. Basis order: e-side by
// ascending root order, then h_1..h_theta, then the f-side in the same order.
// f_b := (-1)^{ht b} omega(e_b), so f_{(ad e_i)^k e_j} = (ad f_i)^k f_j.
class GradedLieAlgebra {
 public:
  const ContragredientDatum& datum() const { return datum_; }
  const RootSystemBundle& bundle() const { return bundle_; }
  const Field& field() const { return datum_.field; }
  int theta() const { return datum_.theta(); }
  std::size_t dim() const { return basis_.size(); }
  // (even, odd) dimensions.
  std::pair<std::size_t, std::size_t> sdim() const;
  const std::vector<BasisElement>& basis() const { return basis_; }
  // Degrees of the positive part with their dimensions.
  const std::map<Root, std::size_t, RootLess>& positive_dims() const { return pos_dims_; }

  std::optional<std::size_t> find_e(const Root& deg, int slot = 0) const;
  std::optional<std::size_t> find_f(const Root& deg, int slot = 0) const;
  std::size_t e(const Root& deg) const;
  std::size_t f(const Root& deg) const;
  std::size_t e(int i) const { return e(simple_root(theta(), i)); }
  std::size_t f(int i) const { return f(simple_root(theta(), i)); }
  std::size_t h(int k) const { return h_offset_ + static_cast<std::size_t>(k); }

  Vec unit(std::size_t idx) const;
  Vec zero() const { return Vec(dim(), 0); }
  const Matrix& ad(std::size_t idx) const { return ad_[idx]; }
  Matrix ad_of(const Vec& x) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  Vec bracket(std::size_t a, std::size_t b) const { return ad_[a].col(b); }
  const Matrix& omega() const { return omega_; }
  Vec chevalley(const Vec& x) const { return omega_.apply(x); }
  // Parity of a homogeneous vector; throws InvalidArgument if x mixes parities. Zero is even.
  int parity_of(const Vec& x) const;
  std::string format(const Vec& x) const;

  // xi_beta(h_k) = sum_m beta_m a_km.
  Elt xi(const Root& beta, int k) const;

 private:
  friend GradedLieAlgebra build_lie(const ContragredientDatum&, const RootSystemBundle&);
  ContragredientDatum datum_;
  RootSystemBundle bundle_;
  std::vector<BasisElement> basis_;
  std::map<Root, std::size_t, RootLess> pos_dims_;
  std::map<Root, std::size_t, RootLess> e_offset_;
  std::size_t h_offset_ = 0, f_base_ = 0;
  std::vector<Matrix> ad_;
  Matrix omega_;
};

// Throws DimensionMismatch when a graded piece disagrees with nabla_+, NonTerminating
// when heights run past the root system.
GradedLieAlgebra build_lie(const ContragredientDatum& d, const RootSystemBundle& b);
GradedLieAlgebra build_lie(const ContragredientDatum& d);

Matrix ad_matrix(const GradedLieAlgebra& g, const Vec& x);

// Even-supersymmetric invariant form: B(x,y) = (-1)^{|x||y|} B(y,x),
// B([x,y],z) = B(x,[y,z]), B(g_a, g_b) = 0 unless a + b = 0, and B(e_j, f_j) = 1
// for the first index j of every connected component of the Dynkin diagram.
// Throws NoInvariantForm or DegenerateForm.
Matrix invariant_form(const GradedLieAlgebra& g);
Elt form_value(const Matrix& B, const Vec& x, const Vec& y);

struct PbwReport {
  bool applicable = false;
  std::size_t basis_checked = 0;
  std::size_t random_checked = 0;
  std::vector<std::string> violations;
};

// p = 3: [x,[x,x]] = 0 for odd basis vectors and random odd combinations.
// p = 2: [x,x] = 0 for even basis vectors and random even combinations.
PbwReport pbw_lowchar_check(const GradedLieAlgebra& g, std::size_t samples = 50, unsigned seed = 1);

struct LieCheckReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Super antisymmetry and super Jacobi. Exhaustive over basis triples when dim <= exhaustive_limit,
// otherwise random_triples sampled triples.
LieCheckReport check_lie_axioms(const GradedLieAlgebra& g, std::size_t exhaustive_limit = 60,
                                std::size_t random_triples = 10000);
// omega maps g_a to g_{-a}, respects brackets, and omega^2 = (-1)^{|x|}.
LieCheckReport check_chevalley(const GradedLieAlgebra& g);
// (ad e_i)^p = (ad f_i)^p = 0 for every i.
LieCheckReport check_derivation_order(const GradedLieAlgebra& g);

}  // namespace veralg
