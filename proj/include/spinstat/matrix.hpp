#pragma once

#include "spinstat/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace spinstat {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of Gaussian rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ExactMatrix diagonal(std::span<const Scalar> entries);
  /// Column matrix from a vector.
  static ExactMatrix column(std::span<const Scalar> v);
  /// Matrix whose columns are the given vectors (all the same length).
  static ExactMatrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;

  ExactMatrix transpose() const;
  ExactMatrix conj() const;
  ExactMatrix adjoint() const;

  bool is_zero() const;
  bool is_real() const;
  bool is_imaginary() const;
  Scalar trace() const;

  /// Principal or general submatrix picking the listed rows and columns.
  ExactMatrix submatrix(std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols) const;
  ExactMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                    std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const ExactMatrix& b);

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const Scalar& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator-(ExactMatrix a) { return a *= Scalar(-1); }
  friend ExactMatrix operator*(ExactMatrix a, const Scalar& s) { return a *= s; }
  friend ExactMatrix operator*(const Scalar& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend Vector operator*(const ExactMatrix& a, std::span<const Scalar> v);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  const std::vector<Scalar>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
/// Block-diagonal direct sum.
ExactMatrix direct_sum(std::span<const ExactMatrix> blocks);
/// AB - BA.
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

bool is_zero_vector(std::span<const Scalar> v);

}  // namespace spinstat
