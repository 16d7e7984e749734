#include "spinstat/matrix.hpp"

#include <algorithm>

namespace spinstat {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const Scalar> entries) {
  ExactMatrix m(entries.size(), entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) m(k, k) = entries[k];
  return m;
}

ExactMatrix ExactMatrix::column(std::span<const Scalar> v) {
  ExactMatrix m(v.size(), 1);
  for (std::size_t k = 0; k < v.size(); ++k) m(k, 0) = v[k];
  return m;
}

ExactMatrix ExactMatrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  ExactMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector ExactMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Vector ExactMatrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix ExactMatrix::conj() const {
  ExactMatrix t = *this;
  for (auto& x : t.data_) x = x.conj();
  return t;
}

ExactMatrix ExactMatrix::adjoint() const { return transpose().conj(); }

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool ExactMatrix::is_real() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_real(); });
}

bool ExactMatrix::is_imaginary() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Scalar& s) { return s.is_imaginary(); });
}

Scalar ExactMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  Scalar t;
  for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
  return t;
}

ExactMatrix ExactMatrix::submatrix(std::span<const std::size_t> rows,
                                   std::span<const std::size_t> cols) const {
  ExactMatrix s(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = (*this)(rows[r], cols[c]);
  return s;
}

ExactMatrix ExactMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                               std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw DimensionError("block out of range");
  ExactMatrix b(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) b(r, c) = (*this)(row0 + r, col0 + c);
  return b;
}

void ExactMatrix::set_block(std::size_t row0, std::size_t col0, const ExactMatrix& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) {
    throw DimensionError("block out of range");
  }
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(row0 + r, col0 + c) = b(r, c);
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionError("matrix difference shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  ExactMatrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Scalar& y = b(k, c);
        if (!y.is_zero()) p(r, c) += x * y;
      }
    }
  }
  return p;
}

Vector operator*(const ExactMatrix& a, std::span<const Scalar> v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c)
      if (!a(r, c).is_zero() && !v[c].is_zero()) out[r] += a(r, c) * v[c];
  return out;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

ExactMatrix direct_sum(std::span<const ExactMatrix> blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  ExactMatrix s(rows, cols);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    s.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return s;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace spinstat
