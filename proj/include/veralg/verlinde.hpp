#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "veralg/alphap.hpp"
#include "veralg/lie.hpp"

namespace veralg {

// A surviving summand L_m of (g', e_i), m < p.
struct SSSummand {
  NamedBlock::Kind kind;
  std::string name;       // provenance block, e.g. "M_{1^22}", "S", "h~_2"
  std::size_t block = 0;  // index into StringDecomposition::blocks
  std::size_t size = 0;
  Root degree;            // in Z^{theta-1}
  int side = 0;           // +1 (M), 0 (S, h~), -1 (N)
  Root root;              // ambient string generator for M/N
  int j = -1;             // index of h~_j
  int parity = 1;         // parity of the generator in g
  Vec gen;
};

class SSLieAlgebra {
 public:
  int p = 0, theta = 0, i = 0;
  GradedLieAlgebra g;
  StringDecomposition strings;
  std::vector<SSSummand> summands;
  // Tensor decompositions keyed by (size_a, size_b).
  std::map<std::pair<std::size_t, std::size_t>, TensorDecomposition> tensors;
  // (a, b, tensor summand) -> nonzero scalars against target summands. Only tensor
  // summands of size < p appear.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Elt>>> cells;
  // Nonzero leading coefficients landing on surviving blocks of a different size.
  std::size_t cross_terms = 0;

  const TensorDecomposition& tensor(std::size_t a, std::size_t b) const;
  Elt cell(std::size_t a, std::size_t b, std::size_t s, std::size_t target) const;
  // The unique tensor summand of a (x) b of size n; throws InvalidArgument otherwise.
  std::size_t tensor_summand(std::size_t a, std::size_t b, std::size_t n) const;
  Elt cell_by_size(std::size_t a, std::size_t b, std::size_t n, std::size_t target) const;

  std::optional<std::size_t> find(const std::string& name) const;
  // Summands with the given size and degree, in table order.
  std::vector<std::size_t> with_label(std::size_t m, const Root& degree) const;
  // Original indices of the restricted coordinates.
  std::vector<int> degree_labels() const;
  std::string format_degree(const Root& degree) const;
  // "L_2^{(1)}"
  std::string label(std::size_t s) const;
  // (count of even labels, count of odd labels) when p = 3 (L_1 even, L_2 odd).
  std::pair<std::size_t, std::size_t> sdim_p3() const;
};

// Generators keyed by block name replace the default string generators.
using GeneratorOverrides = std::map<std::string, Vec>;

// Requires a_ii = 2 with p_i even (NotSL2Node) and (ad e_i)^p = 0 (DerivationOrderViolation).
SSLieAlgebra semisimplify_lie(const GradedLieAlgebra& g, int i, const GeneratorOverrides& overrides = {});

// Rescales the generator of `target` so that cell (a, b, size n, target) equals value,
// then recomputes the table. Throws DegenerateCase when the cell is zero.
SSLieAlgebra gauge(const SSLieAlgebra& ss, std::size_t a, std::size_t b, std::size_t n, std::size_t target,
                   Elt value);

struct IGoodVerdict {
  Root beta;
  bool good = false;
  bool vacuous = false;  // height 1
  std::optional<std::pair<Root, Root>> witness;
};

IGoodVerdict is_i_good(const Root& beta, const StringPartition& sp, const RootSystemBundle& b);

struct SSRootData {
  int i = 0;
  RootSet nabla_plus;   // pi_i(Delta_{+,min})
  RootSet delta_plus;   // multiples removed
  RootSet multiples;    // nabla_plus minus delta_plus
  std::vector<IGoodVerdict> i_good;
  bool all_good = false;
  RootSet parabolic_set;  // positive part of the parabolic restriction
  // Compared only when every root is i-good.
  std::optional<bool> parabolic_matches;

  RootSet nabla() const;  // both signs
};

SSRootData ss_root_data(const RootSystemBundle& b, const StringPartition& sp);

// Restricted roots printed with the ambient indices, coordinate i deleted.
std::string format_restricted(const Root& r, int i);
std::string format_restricted(const RootSet& s, int i);

// Closure of the rank-one summands M_{alpha_j}, N_{alpha_j} and the degree-zero part.
struct GenerationReport {
  bool generated = false;
  std::vector<std::size_t> unreachable;  // summand indices outside the closure
};
GenerationReport generated_by_rank_one(const SSLieAlgebra& ss);

struct InducedForm {
  Matrix values;  // summand x summand
  bool nondegenerate = false;
  bool degree_paired = false;
  bool symmetric = false;  // B(b,a) = (-1)^{m-1} (-1)^{|a||b|} B(a,b)
};
// Throws DegenerateInducedForm when the induced pairing is singular.
InducedForm induced_form(const SSLieAlgebra& ss, const Matrix& B);

struct OperadicReport {
  std::size_t pairs_checked = 0, triples_checked = 0;
  bool exhaustive = false;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
// Antisymmetry and Jacobi on representatives of the surviving part, projected along
// the size-p blocks.
OperadicReport operadic_check(const SSLieAlgebra& ss, std::size_t exhaustive_limit = 24,
                              std::size_t random_triples = 4000);

struct RecognitionResult {
  std::vector<int> indices;  // original indices in I-bar
  Matrix B;                  // raw b_jk from the formula
  Matrix B_normalized;       // rows rescaled as in normalize_rows
  std::vector<int> parity;
  std::vector<Elt> f_rescale;  // f-bar_j multiplied by these so [e_j, f_j] = h_j
  std::pair<std::size_t, std::size_t> ss_sdim, built_sdim;
};
// Integer entries of a normalized matrix: diagonal-2 rows use nonpositive lifts off the
// diagonal, other rows the centered lift.
std::vector<std::vector<int>> lift_normalized(const Matrix& B);

// p = 3 only. Throws PreconditionNotGood, RelationFailure, DimensionMismatch.
RecognitionResult recognize_p3(const SSLieAlgebra& ss);

}  // namespace veralg
