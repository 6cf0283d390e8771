#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "veralg/matrix.hpp"

namespace veralg {

using Root = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

// Height-then-reverse-lexicographic order, so 1 < 2 < 12 < 1^22 < 12^2.
struct RootLess {
  bool operator()(const Root& a, const Root& b) const;
};
using RootSet = std::set<Root, RootLess>;

int height(const Root& r);
Root simple_root(int theta, int i);
// Compact notation: 1^22 for 2a_1 + a_2; braces for exponents above 9.
std::string format_root(const Root& r);
// labels[k] replaces k+1 as the printed index (used for restricted roots).
std::string format_root(const Root& r, const std::vector<int>& labels);
Root parse_root(const std::string& s, int theta);
std::string format_roots(const RootSet& s);

struct ContragredientDatum {
  Field field;
  Matrix A;
  std::vector<int> parity;  // +1 even, -1 odd

  int theta() const { return static_cast<int>(parity.size()); }
  bool is_lie_algebra() const;
  // Throws ValidationError naming the failing invariant.
  void validate() const;
};

ContragredientDatum make_datum(const Field& f, const std::vector<std::vector<long long>>& a,
                               const std::vector<int>& parity);

// Divides every row with a_jj != 0 by a_jj/2; a row with a_jj = 0 is scaled so its
// first nonzero entry is 1.
ContragredientDatum normalize_rows(const ContragredientDatum& d);
bool same_node(const ContragredientDatum& a, const ContragredientDatum& b);

struct CartanGraphNode {
  ContragredientDatum datum;
  IntMatrix C;
};

IntMatrix cartan_matrix_of(const ContragredientDatum& d);
CartanGraphNode make_node(const ContragredientDatum& d);
ContragredientDatum reflect_datum(const ContragredientDatum& d, int i);
// s_i for the Cartan matrix C: a_j -> a_j - c_ij a_i.
Root reflect_root(const IntMatrix& C, int i, const Root& r);
IntMatrix reflection_matrix(const IntMatrix& C, int i);

struct WeylGroupoidOrbit {
  std::vector<CartanGraphNode> nodes;   // nodes[0] is the normalized start datum
  std::vector<std::vector<std::size_t>> target;  // target[x][i] = r_i(x)
  int theta() const { return nodes.empty() ? 0 : nodes[0].datum.theta(); }
};

WeylGroupoidOrbit weyl_orbit(const ContragredientDatum& d, std::size_t cap = 1024);

struct RootSystemBundle {
  int theta = 0;
  int p = 0;
  RootSet delta_plus;
  RootSet odd_nd;      // positive part
  RootSet nabla_plus;
  bool finite = false;
  IntMatrix C;         // Cartan matrix at the base node
};

RootSystemBundle positive_roots(const WeylGroupoidOrbit& orbit, std::size_t base = 0,
                                std::size_t root_cap = 4096);
RootSet odd_nondegenerate(const WeylGroupoidOrbit& orbit, std::size_t base = 0,
                          std::size_t root_cap = 4096);
RootSet full_roots(const RootSystemBundle& b);
RootSystemBundle root_system(const ContragredientDatum& d);

struct AlphaString {
  Root generator;
  int length = 0;
};

struct StringPartition {
  int i = 0;
  int p = 0;
  std::vector<AlphaString> strings;  // ordered by generator
  std::map<int, int> multiplicity;   // a_j
  RootSet delta_min;                 // generators of strings shorter than p

  const AlphaString* string_of(const Root& r) const;
  int length_of_string_containing(const Root& r) const;
};

StringPartition alpha_strings(const RootSystemBundle& b, int i);

// pi_i deletes coordinate i.
Root project_out(const Root& r, int i);
// beta / gcd(beta); throws InvalidArgument for the zero vector.
Root primitive_part(const Root& r);
// { primitive_part(pi_i(a)) : a in Delta, a != +-alpha_i }, both signs.
RootSet parabolic_restrict(const RootSystemBundle& b, int i);

}  // namespace veralg
