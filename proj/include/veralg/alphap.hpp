#pragma once

#include <map>
#include <string>
#include <vector>

#include "veralg/lie.hpp"
#include "veralg/matrix.hpp"

namespace veralg {

// A summand L_m of a Rep(alpha_p) module: basis {gen, t gen, ..., t^{m-1} gen}.
struct CyclicBlock {
  std::size_t size = 0;
  Vec gen;
};

struct AlphaPModule {
  Field field;
  int p = 0;
  Matrix t;
  std::vector<CyclicBlock> blocks;

  std::size_t dim() const { return t.rows(); }
  // Columns t^k gen for every block in order.
  Matrix basis_matrix() const;
  // Offset of block b inside basis_matrix().
  std::size_t offset(std::size_t b) const;
  // Sizes sorted descending.
  std::vector<std::size_t> sizes() const;
};

// Checks t^p = 0 and that the blocks form a cyclic decomposition; throws
// NotNilpotentOrderP or InvalidArgument.
AlphaPModule make_module(const Matrix& t, int p, std::vector<CyclicBlock> blocks);

// Jordan decomposition of a nilpotent t with t^p = 0. If grade is given (one label
// per coordinate, with t mapping each label class into a single class), generators are
// homogeneous. Blocks are sorted by size descending, then by grade class.
AlphaPModule jordan_blocks(const Matrix& t, int p, const std::vector<int>* grade = nullptr);

// Jordan type from ranks of powers, independent of any generator choice.
std::vector<std::size_t> jordan_type(const Matrix& t);

// ---- tensor products ----------------------------------------------------------

struct TensorSummand {
  std::size_t size = 0;
  Vec gen;  // coordinates on v_k (x) w_l, index (k-1)*b + (l-1)
  bool from_table = false;
};

struct TensorDecomposition {
  std::size_t a = 0, b = 0;
  int p = 0;
  std::vector<TensorSummand> summands;
  AlphaPModule module;  // t (x) 1 + 1 (x) t on the ab-dimensional space
};

// The nilpotent operator t (x) 1 + 1 (x) t on L_a (x) L_b.
Matrix tensor_t(const Field& f, std::size_t a, std::size_t b);
// Decomposition of L_a (x) L_b over F_p. Fixed generators for the pairs (2,2), (3,3),
// (4,4), (3,2), (3,4); elsewhere the homogeneous kernel choice with leading coefficient 1.
TensorDecomposition tensor_decompose(std::size_t a, std::size_t b, const Field& f);
// Formats a tensor generator, e.g. "3 v1*w3 - 4 v2*w2 + 3 v3*w1".
std::string format_tensor(const Field& f, std::size_t b, const Vec& gen);

// Fusion rule L_i (x) L_j in Ver_p, as an ascending list of labels.
std::vector<int> fusion(int i, int j, int p);

// ---- semisimplification -------------------------------------------------------

struct VerpLabel {
  int m = 0;
  std::size_t block = 0;  // index into the source module
};

struct VerpObject {
  int p = 0;
  std::vector<VerpLabel> labels;
  // Labels sorted ascending.
  std::vector<int> multiset() const;
};

VerpObject semisimplify_object(const AlphaPModule& m);

struct VerpHom {
  int p = 0;
  std::vector<std::size_t> src_blocks, tgt_blocks;  // surviving block indices
  // scalars(r, s): coefficient of the generator of target block tgt_blocks[r] in the
  // image of the generator of source block src_blocks[s]; zero unless sizes agree.
  Matrix scalars;
  std::size_t cross_terms = 0;  // nonzero leading coefficients between different sizes
};

// Throws NotEquivariant if f t_src != t_tgt f.
VerpHom semisimplify_hom(const Matrix& f, const AlphaPModule& src, const AlphaPModule& tgt);
// The equivariant map sending each source generator to the given image (which must be
// killed by t^size).
Matrix equivariant_map(const AlphaPModule& src, const AlphaPModule& tgt, const std::vector<Vec>& images);

// ---- (g', e_i) ----------------------------------------------------------------

struct NamedBlock {
  enum class Kind { M, N, S, H, HE, F };  // HE = <h> (+) k e_i, F = <f_i> (+) k h_i (a_ii = 0)
  Kind kind;
  std::string name;
  Root root;       // string generator for M/N
  int j = -1;      // index for H blocks
  std::size_t size = 0;
  Vec gen;
};

struct StringDecomposition {
  int i = 0;
  std::vector<NamedBlock> blocks;
  AlphaPModule module;  // t = ad e_i with the named blocks, in the same order
  std::map<std::size_t, std::size_t> multiplicity;
};

// Named cyclic decomposition of (g', e_i). Strings run over the degrees of g'.
// Throws DegenerateCase (a_ii = 0 and every a_ji = 0) or InvalidArgument (a_ii not 0 or 2).
StringDecomposition string_decomposition(const GradedLieAlgebra& g, int i);

// Prediction of the Jordan type of ad e_i from string lengths alone.
std::vector<std::size_t> predicted_jordan_type(const GradedLieAlgebra& g, int i);

}  // namespace veralg
