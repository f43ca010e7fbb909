#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "acnet/errors.hpp"

namespace acnet {

using Complex = std::complex<double>;

/// Dense row-major matrix over double or std::complex<double>.
/// Transpose never conjugates: the Laplace and response matrices of this
/// domain are complex symmetric, not Hermitian.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T value = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  static Matrix ones(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, T{1});
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != m.cols_) throw ShapeError("from_rows: ragged row list");
      std::size_t j = 0;
      for (const T& x : row) m(i, j++) = x;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Largest entry magnitude (the max-norm used by every tolerance).
  double max_norm() const {
    double m = 0.0;
    for (const T& x : data_) m = std::max(m, std::abs(x));
    return m;
  }

  bool is_finite() const {
    for (const T& x : data_) {
      if constexpr (std::is_same_v<T, double>) {
        if (!std::isfinite(x)) return false;
      } else {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
      }
    }
    return true;
  }

  std::vector<T> row_sums() const {
    std::vector<T> sums(rows_, T{});
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) sums[i] += (*this)(i, j);
    return sums;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "add");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "subtract");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw ShapeError("multiply: inner dimensions disagree (" + shape_of(a) + " * " + shape_of(b) + ")");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        T sum{};
        for (std::size_t k = 0; k < a.cols_; ++k) sum += a(i, k) * b(k, j);
        r(i, j) = sum;
      }
    return r;
  }

  friend Matrix operator*(T s, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = s * a.data_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, T s) { return s * a; }

  bool operator==(const Matrix&) const = default;

 private:
  static std::string shape_of(const Matrix& m) {
    return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
  }

  static void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw ShapeError(std::string(op) + ": shapes disagree (" + shape_of(a) + " vs " + shape_of(b) + ")");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;
using ComplexVector = std::vector<Complex>;

inline ComplexMatrix to_complex(const RealMatrix& re) {
  ComplexMatrix m(re.rows(), re.cols());
  for (std::size_t i = 0; i < re.rows(); ++i)
    for (std::size_t j = 0; j < re.cols(); ++j) m(i, j) = Complex(re(i, j), 0.0);
  return m;
}

inline ComplexMatrix to_complex(const RealMatrix& re, const RealMatrix& im) {
  if (re.rows() != im.rows() || re.cols() != im.cols())
    throw ShapeError("to_complex: real and imaginary parts have different shapes");
  ComplexMatrix m(re.rows(), re.cols());
  for (std::size_t i = 0; i < re.rows(); ++i)
    for (std::size_t j = 0; j < re.cols(); ++j) m(i, j) = Complex(re(i, j), im(i, j));
  return m;
}

inline RealMatrix real_part(const ComplexMatrix& m) {
  RealMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).real();
  return r;
}

inline RealMatrix imag_part(const ComplexMatrix& m) {
  RealMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).imag();
  return r;
}

inline ComplexVector multiply(const ComplexMatrix& m, const ComplexVector& v) {
  if (m.cols() != v.size()) throw ShapeError("multiply: vector length does not match column count");
  ComplexVector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex sum{};
    for (std::size_t j = 0; j < m.cols(); ++j) sum += m(i, j) * v[j];
    r[i] = sum;
  }
  return r;
}

inline double max_abs(const ComplexVector& v) {
  double m = 0.0;
  for (const Complex& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace acnet
