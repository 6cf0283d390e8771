#pragma once

#include <string>
#include <vector>

#include "veralg/roots.hpp"

namespace fx {

using namespace veralg;

inline ContragredientDatum lie(int p, const std::vector<std::vector<long long>>& a) {
  return make_datum(make_field(p), a, std::vector<int>(a.size(), 1));
}

inline ContragredientDatum a2(int p = 7) { return lie(p, {{2, -1}, {-1, 2}}); }
inline ContragredientDatum b2(int p = 7) { return lie(p, {{2, -2}, {-1, 2}}); }
inline ContragredientDatum g2(int p = 7) { return lie(p, {{2, -3}, {-1, 2}}); }
inline ContragredientDatum b3(int p = 7) { return lie(p, {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}); }
inline ContragredientDatum c3(int p = 7) { return lie(p, {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}); }
inline ContragredientDatum f4(int p = 7) {
  return lie(p, {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
}
inline ContragredientDatum br3_a1() { return lie(3, {{2, -1, 0}, {-1, 2, -1}, {0, 1, 0}}); }
inline ContragredientDatum br3_a2() { return lie(3, {{2, -1, 0}, {-2, 2, -1}, {0, 1, 0}}); }

inline ContragredientDatum brj23() { return make_datum(make_field(3), {{0, 1}, {1, 0}}, {1, -1}); }
inline ContragredientDatum brj25() { return make_datum(make_field(5), {{2, -3}, {1, 0}}, {1, -1}); }

// a is the class of x in F_9 = F_3[x]/(x^2+1), which lies outside F_3.
// flipped = false: rows (2, -1), (a, 2); flipped = true: rows (2, a), (-1, 2).
inline ContragredientDatum brown(bool flipped = true) {
  Field f = make_field(3, std::vector<int>{1, 0, 1});
  ContragredientDatum d{f, Matrix::from_ints(f, {{2, -1}, {0, 2}}), {1, 1}};
  if (flipped) d.A = Matrix::from_ints(f, {{2, 0}, {-1, 2}});
  const Elt a = f->from_coeffs({0, 1});
  if (flipped)
    d.A.at(0, 1) = a;
  else
    d.A.at(1, 0) = a;
  d.validate();
  return d;
}

inline RootSet roots_of(const std::vector<std::string>& names, int theta) {
  RootSet s;
  for (const auto& n : names) s.insert(parse_root(n, theta));
  return s;
}

}  // namespace fx
