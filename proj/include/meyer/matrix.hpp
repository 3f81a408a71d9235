#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "meyer/errors.hpp"
#include "meyer/numeric.hpp"

namespace meyer {

// Dense row-major matrix over an exact scalar type (Int or Rat). Values are
// immutable in practice: operations return fresh matrices, and nothing in
// the library mutates a matrix it did not create.
template <typename T>
class Mat {
 public:
  Mat() = default;

  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_)
        throw DimensionMismatch("matrix rows must all have the same length");
      for (const auto& e : row) data_.push_back(e);
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const Mat&) const = default;

  bool is_square() const { return rows_ == cols_; }

  bool is_zero() const {
    for (const auto& e : data_)
      if (e != 0) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator+(const Mat& o) const {
    require_same_shape(o);
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
  }

  Mat operator-(const Mat& o) const {
    require_same_shape(o);
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
  }

  Mat operator-() const {
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
    return r;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_)
      throw DimensionMismatch("matrix product: inner dimensions disagree");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size())
      throw DimensionMismatch("matrix-vector product: dimensions disagree");
    std::vector<T> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }

 private:
  void require_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("matrix sum: shapes disagree");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rational(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

// Exactness check included: a non-integral entry is a logic error at the
// call sites that use this.
inline IntMat to_integer(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j)))
        throw Error("expected an integer matrix entry, got " + to_string(m(i, j)));
      r(i, j) = numerator(m(i, j));
    }
  return r;
}

// Nonnegative power by repeated squaring.
template <typename T>
Mat<T> pow(Mat<T> base, unsigned long long e) {
  if (!base.is_square()) throw DimensionMismatch("matrix power needs a square matrix");
  Mat<T> acc = Mat<T>::identity(base.rows());
  while (e > 0) {
    if (e & 1ULL) acc = acc * base;
    e >>= 1ULL;
    if (e > 0) base = base * base;
  }
  return acc;
}

template <typename T>
std::string to_string(const Mat<T>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ' ';
      os << to_string(m(i, j));
    }
    if (i + 1 < m.rows()) os << '\n';
  }
  return os.str();
}

}  // namespace meyer
