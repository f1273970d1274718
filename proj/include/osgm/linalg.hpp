#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "osgm/matrix.hpp"
#include "osgm/rational.hpp"

namespace osgm {

using Vector = std::vector<Rational>;

/// Reduced row echelon form of a rational matrix: the nonzero rows only,
/// each with a leading 1 in column pivots[i] and zeros above and below it.
struct Echelon {
  RationalMatrix rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

inline Echelon row_reduce(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  RationalMatrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return {std::move(out), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& m) { return row_reduce(m).rank(); }

inline RationalMatrix from_rows(std::span<const Vector> rows, std::size_t width) {
  RationalMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) throw ValidationError("vectors of different lengths");
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

inline std::vector<Vector> to_rows(const RationalMatrix& m) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
  return out;
}

/// Basis of {v : v * m = 0} (row vectors feeding the map), each vector scaled
/// so that its first nonzero entry is 1.
inline std::vector<Vector> kernel_basis(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  Echelon e = row_reduce(m.transpose());
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows(i, f);
    for (const auto& x : v) {
      if (!is_zero(x)) {
        Rational lead = x;
        for (auto& y : v) y /= lead;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// A subspace of Q^n kept in reduced echelon form; reduce() returns the
/// canonical coset representative (zero in every pivot coordinate).
class Subspace {
 public:
  explicit Subspace(std::size_t dim) : dim_(dim), echelon_{RationalMatrix(0, dim), {}} {}
  Subspace(std::span<const Vector> spanning, std::size_t dim) : dim_(dim) {
    echelon_ = row_reduce(from_rows(spanning, dim));
  }

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return echelon_.rank(); }
  const Echelon& echelon() const { return echelon_; }

  Vector reduce(Vector v) const {
    if (v.size() != dim_) throw ValidationError("vector length does not match subspace");
    for (std::size_t i = 0; i < echelon_.pivots.size(); ++i) {
      Rational f = v[echelon_.pivots[i]];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * echelon_.rows(i, j);
    }
    return v;
  }

  bool contains(const Vector& v) const {
    auto r = reduce(v);
    for (const auto& x : r) {
      if (!is_zero(x)) return false;
    }
    return true;
  }

  /// Coefficients of v in the echelon basis, or nullopt if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const {
    if (!contains(v)) return std::nullopt;
    Vector c;
    for (auto p : echelon_.pivots) c.push_back(v[p]);
    return c;
  }

 private:
  std::size_t dim_;
  Echelon echelon_;
};

inline Vector coset_reduce(const Vector& v, std::span<const Vector> subspace_basis) {
  return Subspace(subspace_basis, v.size()).reduce(v);
}

/// Row vector times matrix.
inline Vector row_times(const Vector& v, const RationalMatrix& m) {
  if (v.size() != m.rows()) throw ValidationError("vector/matrix size mismatch");
  Vector out(m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (is_zero(v[i])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

inline bool is_zero_vector(const Vector& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

}  // namespace osgm
