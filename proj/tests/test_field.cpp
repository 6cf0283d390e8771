#include <functional>
#include <random>

#include "doctest.h"
#include "veralg/error.hpp"
#include "veralg/matrix.hpp"

using namespace veralg;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("make_field accepts primes and irreducible polynomials") {
  auto f9 = make_field(3, std::vector<int>{1, 0, 1});
  CHECK(f9->order() == 9);
  CHECK(f9->degree() == 2);
  auto f5 = make_field(5);
  CHECK(f5->order() == 5);
  CHECK(code_of([] { make_field(4); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { make_field(5, std::vector<int>{1, 0, 1}); }) == ErrorCode::ReduciblePolynomial);
  // x^4 + 1 over F_3 factors as (x^2+x+2)(x^2+2x+2) with no roots.
  CHECK(code_of([] { make_field(3, std::vector<int>{1, 0, 0, 0, 1}); }) == ErrorCode::ReduciblePolynomial);
  CHECK(make_field(2, std::vector<int>{1, 1, 0, 0, 1})->order() == 16);
  CHECK(code_of([] { make_field(3, std::vector<int>{1, 0, 2}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("exhaustive inverses in F_9 and F_25") {
  for (auto f : {make_field(3, std::vector<int>{1, 0, 1}), make_field(5, std::vector<int>{2, 0, 1})}) {
    for (Elt a = 1; a < f->order(); ++a) CHECK(f->mul(a, f->inv(a)) == 1);
    CHECK(code_of([&] { f->inv(0); }) == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (auto f : {make_field(7), make_field(3, std::vector<int>{1, 0, 1}), make_field(2, std::vector<int>{1, 1, 1}),
                 make_field(5, std::vector<int>{2, 0, 1}), make_field(3, std::vector<int>{1, 2, 0, 1})}) {
    std::uniform_int_distribution<Elt> d(0, f->order() - 1);
    for (int t = 0; t < 300; ++t) {
      Elt a = d(rng), b = d(rng), c = d(rng);
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, f->neg(a)) == 0);
    }
  }
}

TEST_CASE("prime-field lifts") {
  auto f = make_field(5);
  CHECK(f->nonpositive_lift(0) == 0);
  CHECK(f->nonpositive_lift(1) == -4);
  CHECK(f->nonpositive_lift(4) == -1);
  CHECK(f->centered_lift(3) == -2);
  auto f9 = make_field(3, std::vector<int>{1, 0, 1});
  CHECK(code_of([&] { f9->nonpositive_lift(3); }) == ErrorCode::UnsupportedEntry);
  CHECK(f9->format(f9->from_coeffs({1, 2})) == "(1,2)");
}

TEST_CASE("kernel examples") {
  auto f5 = make_field(5), f3 = make_field(3);
  CHECK(kernel(Matrix(f5, 3, 3)).size() == 3);
  CHECK(kernel(Matrix::identity(f3, 2)).empty());
  auto k = kernel(Matrix::from_ints(f5, {{1, 2}, {2, 4}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec{3, 1});
}

TEST_CASE("solve examples") {
  auto f3 = make_field(3);
  Vec b{2, 1};
  CHECK(solve(Matrix::identity(f3, 2), b) == b);
  CHECK_FALSE(solve(Matrix(f3, 2, 2), Vec{1, 0}).has_value());
  auto x = solve(Matrix::from_ints(f3, {{2, 1}, {1, 1}}), Vec{1, 0});
  REQUIRE(x.has_value());
  CHECK(*x == Vec{1, 2});
  CHECK(code_of([&] { solve(Matrix::identity(f3, 2), Vec{1}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("rank plus nullity on random matrices") {
  std::mt19937 rng(11);
  int count = 0;
  for (int p : {3, 5, 7}) {
    auto f = make_field(p);
    std::uniform_int_distribution<int> dim(1, 6), ent(0, p - 1), sparse(0, 2);
    for (int t = 0; t < 70; ++t, ++count) {
      Matrix m(f, dim(rng), dim(rng));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = sparse(rng) ? ent(rng) : 0;
      auto ker = kernel(m);
      CHECK(rank(m) + ker.size() == m.cols());
      for (const auto& v : ker) CHECK(vec_is_zero(m.apply(v)));
      CHECK(rref(rref(m)) == rref(m));
    }
  }
  CHECK(count >= 200);
}

TEST_CASE("inverse and span tracker") {
  auto f = make_field(7);
  Matrix m = Matrix::from_ints(f, {{1, 2, 0}, {0, 1, 3}, {4, 0, 1}});
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix::identity(f, 3));
  CHECK_FALSE(inverse(Matrix::from_ints(f, {{1, 2}, {2, 4}})).has_value());

  SpanTracker st(f, 3);
  CHECK(st.insert({1, 2, 0}));
  CHECK(st.insert({0, 1, 1}));
  CHECK_FALSE(st.insert({2, 5, 1}));
  auto c = st.coordinates({3, 0, 1});
  REQUIRE(c.has_value());
  Vec back = vec_add(*f, vec_scale(*f, (*c)[0], st.vectors()[0]), vec_scale(*f, (*c)[1], st.vectors()[1]));
  CHECK(back == Vec{3, 0, 1});
  CHECK_FALSE(st.contains({0, 0, 1}));
}
