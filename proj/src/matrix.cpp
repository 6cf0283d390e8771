#include "veralg/matrix.hpp"

#include "veralg/error.hpp"

namespace veralg {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(Field f, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f->from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(std::move(f), rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "column length");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  Matrix r(f_, rows_, o.cols_);
  const FieldContext& F = *f_;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Elt a = (*this)(i, k);
      if (a == 0) continue;
      const Elt* orow = &o.a_[k * o.cols_];
      Elt* rrow = &r.a_[i * o.cols_];
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (orow[j]) rrow[j] = F.add(rrow[j], F.mul(a, orow[j]));
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  Matrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = f_->add(a_[k], o.a_[k]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  Matrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = f_->sub(a_[k], o.a_[k]);
  return r;
}

Matrix Matrix::scaled(Elt c) const {
  Matrix r = *this;
  for (auto& x : r.a_) x = f_->mul(c, x);
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  Vec r(rows_, 0);
  const FieldContext& F = *f_;
  for (std::size_t i = 0; i < rows_; ++i) {
    Elt s = 0;
    const Elt* row = &a_[i * cols_];
    for (std::size_t j = 0; j < cols_; ++j)
      if (row[j] && v[j]) s = F.add(s, F.mul(row[j], v[j]));
    r[i] = s;
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::power(unsigned e) const {
  if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "power of non-square matrix");
  Matrix r = identity(f_, rows_);
  for (unsigned k = 0; k < e; ++k) r = r * (*this);
  return r;
}

bool Matrix::is_zero() const {
  for (Elt x : a_)
    if (x) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
  Matrix r = m;
  const FieldContext& F = *m.field();
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r.cols() && row < r.rows(); ++c) {
    std::size_t sel = row;
    while (sel < r.rows() && r(sel, c) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(row, j));
    Elt inv = F.inv(r(row, c));
    for (std::size_t j = 0; j < r.cols(); ++j) r.at(row, j) = F.mul(inv, r(row, j));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, c) == 0) continue;
      Elt fac = r(i, c);
      for (std::size_t j = 0; j < r.cols(); ++j)
        if (r(row, j)) r.at(i, j) = F.sub(r(i, j), F.mul(fac, r(row, j)));
    }
    piv.push_back(c);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return r;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::vector<Vec> kernel(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix r = rref(m, &piv);
  const FieldContext& F = *m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = F.neg(r(k, free));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> piv;
  Matrix r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r(k, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  Matrix r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = r(i, n + j);
  return out;
}

Vec vec_add(const FieldContext& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = f.add(a[k], b[k]);
  return r;
}

Vec vec_sub(const FieldContext& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = f.sub(a[k], b[k]);
  return r;
}

Vec vec_scale(const FieldContext& f, Elt c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = f.mul(c, a[k]);
  return r;
}

void vec_axpy(const FieldContext& f, Elt c, const Vec& x, Vec& y) {
  if (c == 0) return;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k]) y[k] = f.add(y[k], f.mul(c, x[k]));
}

bool vec_is_zero(const Vec& a) {
  for (Elt x : a)
    if (x) return false;
  return true;
}

Vec SpanTracker::reduce(Vec& v) const {
  const FieldContext& F = *f_;
  Vec combo(kept_.size(), 0);
  for (std::size_t r = 0; r < echelon_.size(); ++r) {
    Elt c = v[pivot_[r]];
    if (c == 0) continue;
    vec_axpy(F, F.neg(c), echelon_[r], v);
    for (std::size_t k = 0; k < combo_[r].size(); ++k)
      if (combo_[r][k]) combo[k] = F.add(combo[k], F.mul(c, combo_[r][k]));
  }
  return combo;
}

bool SpanTracker::insert(const Vec& v) {
  if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "span tracker vector length");
  const FieldContext& F = *f_;
  Vec w = v;
  Vec combo = reduce(w);
  std::size_t piv = 0;
  while (piv < dim_ && w[piv] == 0) ++piv;
  if (piv == dim_) return false;
  // w = v - sum combo_k kept_k, so w / w[piv] expresses through kept_ plus v.
  Elt inv = F.inv(w[piv]);
  Vec row = vec_scale(F, inv, w);
  Vec c(kept_.size() + 1, 0);
  for (std::size_t k = 0; k < combo.size(); ++k) c[k] = F.neg(F.mul(inv, combo[k]));
  c[kept_.size()] = inv;
  // Keep previous echelon rows reduced at the new pivot.
  for (std::size_t r = 0; r < echelon_.size(); ++r) {
    combo_[r].push_back(0);
    Elt e = echelon_[r][piv];
    if (e == 0) continue;
    vec_axpy(F, F.neg(e), row, echelon_[r]);
    vec_axpy(F, F.neg(e), c, combo_[r]);
  }
  kept_.push_back(v);
  echelon_.push_back(std::move(row));
  pivot_.push_back(piv);
  combo_.push_back(std::move(c));
  return true;
}

std::optional<Vec> SpanTracker::coordinates(const Vec& v) const {
  if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "span tracker vector length");
  Vec w = v;
  Vec combo = reduce(w);
  if (!vec_is_zero(w)) return std::nullopt;
  return combo;
}

}  // namespace veralg
