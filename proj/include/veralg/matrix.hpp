#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "veralg/field.hpp"

namespace veralg {

using Vec = std::vector<Elt>;

// Dense row-major matrix over a FieldContext.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_ints(Field f, const std::vector<std::vector<long long>>& rows);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return f_; }

  Elt operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Elt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  FieldElement entry(std::size_t i, std::size_t j) const { return {f_, (*this)(i, j)}; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_col(std::size_t j, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Elt c) const;
  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  Matrix power(unsigned e) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Field f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elt> a_;
};

// Reduced row echelon form by first-nonzero pivoting; pivot columns returned.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
// Basis of the null space: one vector per free column, with a 1 there.
std::vector<Vec> kernel(const Matrix& m);
// Some x with m x = b, or nullopt. Throws DimensionMismatch.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

// Vector helpers over a context.
Vec vec_add(const FieldContext& f, const Vec& a, const Vec& b);
Vec vec_sub(const FieldContext& f, const Vec& a, const Vec& b);
Vec vec_scale(const FieldContext& f, Elt c, const Vec& a);
void vec_axpy(const FieldContext& f, Elt c, const Vec& x, Vec& y);  // y += c x
bool vec_is_zero(const Vec& a);

// Incrementally built list of independent vectors with coordinate lookup.
class SpanTracker {
 public:
  SpanTracker(Field f, std::size_t dim) : f_(std::move(f)), dim_(dim) {}
  // Adds v if it is independent of the vectors kept so far; returns whether it was kept.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const { return coordinates(v).has_value(); }
  // Coordinates of v in terms of the kept vectors, in insertion order.
  std::optional<Vec> coordinates(const Vec& v) const;
  std::size_t size() const { return kept_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& vectors() const { return kept_; }

 private:
  // Reduces v in place; returns the combination over kept_ that was subtracted.
  Vec reduce(Vec& v) const;

  Field f_;
  std::size_t dim_;
  std::vector<Vec> kept_;
  std::vector<Vec> echelon_;      // echelon rows, pivot entry normalized to 1
  std::vector<std::size_t> pivot_;
  std::vector<Vec> combo_;        // echelon_[r] = sum combo_[r][k] kept_[k]
};

}  // namespace veralg
