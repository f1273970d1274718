#pragma once

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "osgm/error.hpp"
#include "osgm/polynomial.hpp"
#include "osgm/rational.hpp"

namespace osgm {

/// Dense row-major matrix.
///
/// Row convention: row i is the image of the i-th basis vector, so a map
/// acts on row vectors from the right (v -> v * M) and "first f, then g"
/// is the product M_f * M_g.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& one) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!osgm::is_zero(x)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw ValidationError("matrix shapes " + a.shape() + " and " + b.shape() + " are not conformable");
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (osgm::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (osgm::is_zero(bkj)) continue;
          c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k) {
      if (!(a.data_[k] == b.data_[k])) return false;
    }
    return true;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw ValidationError("matrix shapes " + shape() + " and " + o.shape() + " differ");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolynomialMatrix = Matrix<Polynomial>;

inline RationalMatrix scaled(RationalMatrix m, const Rational& s) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (auto& x : m.row(i)) x *= s;
  return m;
}

inline PolynomialMatrix to_polynomial(const RationalMatrix& m, std::size_t nvars) {
  PolynomialMatrix p(m.rows(), m.cols(), Polynomial(nvars));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = Polynomial(nvars, m(i, j));
  return p;
}

/// Substitutes y = point in every entry.
inline RationalMatrix evaluate(const PolynomialMatrix& m, std::span<const Rational> point) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& p = m(i, j);
      if (!p.is_zero() && p.nvars() != point.size()) {
        throw ValidationError("weight vector has " + std::to_string(point.size()) + " entries, expected " +
                              std::to_string(p.nvars()));
      }
      r(i, j) = p.evaluate(point);
    }
  return r;
}

/// Applies a variable substitution to every entry.
inline PolynomialMatrix substitute(const PolynomialMatrix& m, std::span<const Polynomial> images) {
  PolynomialMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).substitute(images);
  return r;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string s;
      if constexpr (std::is_same_v<T, Rational>) {
        s = m(i, j).get_str();
      } else {
        s = m(i, j).to_string();
      }
      width[j] = std::max(width[j], s.size());
      cells[i * m.cols() + j] = std::move(s);
    }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& s = cells[i * m.cols() + j];
      os << (j ? "  " : " ") << std::string(width[j] - s.size(), ' ') << s;
    }
    os << " ]\n";
  }
  return os;
}

}  // namespace osgm
