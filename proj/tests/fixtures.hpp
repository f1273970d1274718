#pragma once

#include <random>
#include <string>
#include <vector>

#include "osgm/arrangement.hpp"
#include "osgm/error.hpp"
#include "osgm/matrix.hpp"
#include "osgm/polynomial.hpp"

namespace osgm::testing {

inline Vector row(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// u1, u1-1, u2, u2-1, u1-u2
inline Arrangement selberg() {
  return Arrangement(2, {row({0, 1, 0}), row({-1, 1, 0}), row({0, 0, 1}), row({-1, 0, 1}), row({0, 1, -1})});
}

/// Lines 3, 4, 5 of the Selberg arrangement collapsed onto u2 = 0.
inline Arrangement selberg_degenerate() {
  return Arrangement(2, {row({0, 1, 0}), row({-1, 1, 0}), row({0, 0, 1}), row({0, 0, 1}), row({0, 0, 1})});
}

/// Rows (1, j, j^2) on a conic through the row at infinity: no three dependent.
inline Arrangement generic_lines() {
  return Arrangement(2, {row({1, 1, 1}), row({1, 2, 4}), row({1, 3, 9}), row({1, 4, 16}), row({1, 5, 25})});
}

/// Matrix entry notation: "0", "y3", "-y45" (y_J = sum y_j).
inline Polynomial y_entry(std::size_t n, const std::string& text) {
  if (text == "0") return Polynomial(n);
  std::size_t pos = 0;
  Rational sign = 1;
  if (text[0] == '-') {
    sign = -1;
    pos = 1;
  }
  if (text[pos] != 'y') throw std::invalid_argument("bad entry " + text);
  Polynomial p(n);
  for (std::size_t i = pos + 1; i < text.size(); ++i) p += Polynomial::variable(n, text[i] - '1');
  return p * sign;
}

inline PolynomialMatrix y_matrix(std::size_t n, const std::vector<std::vector<std::string>>& rows) {
  PolynomialMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), Polynomial(n));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = y_entry(n, rows[i][j]);
  return m;
}

inline Rational random_rational(std::mt19937_64& rng, long range = 9, long den_range = 7) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, den_range);
  return ratio(num(rng), den(rng));
}

/// Nonzero with numerator and denominator in a wide range.
inline Rational generic_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 997);
  std::uniform_int_distribution<long> den(1, 97);
  std::bernoulli_distribution neg(0.5);
  return ratio(neg(rng) ? -num(rng) : num(rng), den(rng));
}

inline RationalMatrix generic_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = generic_rational(rng);
  return m;
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double zero_rate = 0.2) {
  std::bernoulli_distribution zero(zero_rate);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = zero(rng) ? Rational(0) : random_rational(rng);
  return m;
}

/// Random essential arrangement with integer entries in [-small, small];
/// small entries make coincidences and parallels likely.
inline Arrangement random_arrangement(std::mt19937_64& rng, int n, int ell, long small = 1) {
  std::uniform_int_distribution<long> d(-small, small);
  while (true) {
    std::vector<Vector> rows;
    for (int j = 0; j < n; ++j) {
      Vector r;
      for (int k = 0; k <= ell; ++k) r.emplace_back(d(rng));
      rows.push_back(r);
    }
    try {
      return Arrangement(ell, rows);
    } catch (const ValidationError&) {
    }
  }
}

}  // namespace osgm::testing
