#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "osgm/error.hpp"
#include "osgm/linalg.hpp"
#include "osgm/polynomial.hpp"
#include "osgm/rational.hpp"
#include "osgm/subset.hpp"

using namespace osgm;
using namespace osgm::testing;

namespace {

// Fraction-free (Bareiss) elimination on an integer copy of the matrix.
std::size_t bareiss_rank(const RationalMatrix& m) {
  mpz_class common = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) common = lcm(common, m(i, j).get_den());
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational x = m(i, j) * common;
      a[i][j] = x.get_num();
    }
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> v;
  std::size_t w = 0;
  for (auto r : rows) {
    v.push_back(row(r));
    w = r.size();
  }
  return from_rows(v, w);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), ratio(1, 2));
  EXPECT_EQ(parse_rational(" -4 "), Rational(-4));
  EXPECT_EQ(parse_rational("+2/3"), ratio(2, 3));
  EXPECT_EQ(to_string(ratio(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5");
}

TEST(Rational, ParseErrors) {
  EXPECT_THROW(parse_rational("1/0"), ValidationError);
  EXPECT_THROW(parse_rational(""), ValidationError);
  EXPECT_THROW(parse_rational("1/-2"), ValidationError);
  EXPECT_THROW(parse_rational("0.5"), ValidationError);
  EXPECT_THROW(parse_rational("abc"), ValidationError);
  EXPECT_THROW(parse_rational("1//2"), ValidationError);
}

TEST(Rational, NonnegativeInteger) {
  EXPECT_TRUE(is_nonnegative_integer(Rational(0)));
  EXPECT_TRUE(is_nonnegative_integer(ratio(6, 3)));
  EXPECT_FALSE(is_nonnegative_integer(Rational(-1)));
  EXPECT_FALSE(is_nonnegative_integer(ratio(1, 2)));
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(mat({{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(rank(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 3u);
  EXPECT_EQ(rank(RationalMatrix(3, 4)), 0u);
  EXPECT_EQ(rank(RationalMatrix(0, 4)), 0u);
}

TEST(Rank, AgreesWithFractionFreeElimination) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + trial % 5;
    std::size_t c = 1 + (trial / 5) % 7;
    auto m = random_matrix(rng, r, c, 0.4);
    if (trial % 3 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * ratio(2, 3) - m(r / 2, j);
    }
    EXPECT_EQ(rank(m), bareiss_rank(m)) << m;
  }
}

TEST(Kernel, RankNullityAndLeftAnnihilation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_matrix(rng, 2 + trial % 5, 1 + trial % 4, 0.5);
    auto k = kernel_basis(m);
    EXPECT_EQ(k.size() + rank(m), m.rows());
    for (const auto& v : k) EXPECT_TRUE(is_zero_vector(row_times(v, m)));
    if (!k.empty()) {
      EXPECT_EQ(rank(from_rows(k, m.rows())), k.size());
    }
  }
}

TEST(Kernel, Example) {
  auto k = kernel_basis(mat({{1, 1}, {1, 1}, {0, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], row({1, -1, 0}));
}

TEST(Subspace, CosetReduceIsCanonical) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto basis = to_rows(random_matrix(rng, 2, 5));
    Subspace w(basis, 5);
    auto v = to_rows(random_matrix(rng, 1, 5))[0];
    auto rv = w.reduce(v);
    EXPECT_EQ(w.reduce(rv), rv);
    Vector shifted = v;
    for (std::size_t j = 0; j < 5; ++j) shifted[j] += Rational(3) * basis[0][j] - basis[1][j];
    EXPECT_EQ(w.reduce(shifted), rv);
    Vector diff(5);
    for (std::size_t j = 0; j < 5; ++j) diff[j] = v[j] - rv[j];
    EXPECT_TRUE(w.contains(diff));
    EXPECT_EQ(coset_reduce(v, basis), rv);
  }
}

TEST(Subspace, Coordinates) {
  std::vector<Vector> basis = {row({1, 0, 1}), row({0, 1, 1})};
  Subspace w(basis, 3);
  auto c = w.coordinates(row({2, 3, 5}));
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, row({2, 3}));
  EXPECT_FALSE(w.coordinates(row({0, 0, 1})));
}

TEST(Polynomial, ArithmeticAndPrinting) {
  auto y1 = Polynomial::variable(5, 0);
  auto y5 = Polynomial::variable(5, 4);
  EXPECT_EQ((y1 + y5).to_string(), "y1 + y5");
  EXPECT_EQ((Polynomial::variable(5, 2) * Rational(-1)).to_string(), "-y3");
  auto p = (y1 + y5) * (y1 - y5);
  EXPECT_EQ(p, y1 * y1 - y5 * y5);
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_TRUE((y1 - y1).is_zero());
  EXPECT_EQ(Polynomial(5) + y1, y1);
}

TEST(Polynomial, Evaluate) {
  std::vector<Rational> lambda = {ratio(1, 2), ratio(1, 3), ratio(1, 5), ratio(1, 7), ratio(1, 11)};
  auto y45 = Polynomial::variable(5, 3) + Polynomial::variable(5, 4);
  EXPECT_EQ(y45.evaluate(lambda), ratio(18, 77));
  EXPECT_EQ(projective_variable(5, 6).evaluate(lambda), -(ratio(1, 2) + ratio(1, 3) + ratio(1, 5) +
                                                           ratio(1, 7) + ratio(1, 11)));
  EXPECT_THROW(y45.evaluate(std::vector<Rational>{1, 2}), ValidationError);
}

TEST(Polynomial, EvaluationIsARingMap) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> pt;
    for (int i = 0; i < 4; ++i) pt.push_back(random_rational(rng));
    std::vector<Rational> c1, c2;
    for (int i = 0; i < 4; ++i) {
      c1.push_back(random_rational(rng));
      c2.push_back(random_rational(rng));
    }
    auto a = Polynomial::linear_form(c1) + Polynomial(4, random_rational(rng));
    auto b = Polynomial::linear_form(c2) * Polynomial::linear_form(c1);
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    EXPECT_EQ((a + b).evaluate(pt), a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST(Polynomial, Substitute) {
  auto y1 = Polynomial::variable(2, 0);
  auto y2 = Polynomial::variable(2, 1);
  auto p = y1 * y1 + y2;
  std::vector<Polynomial> images = {y2, y1 + y2};
  EXPECT_EQ(p.substitute(images), y2 * y2 + y1 + y2);
}

TEST(Matrix, ProductAndIdentity) {
  std::mt19937_64 rng(9);
  auto a = random_matrix(rng, 3, 4);
  auto b = random_matrix(rng, 4, 2);
  auto c = random_matrix(rng, 2, 3);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(RationalMatrix::identity(3, Rational(1)) * a, a);
  EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
}

TEST(Matrix, EvaluateCommutesWithProduct) {
  std::mt19937_64 rng(13);
  const std::size_t n = 3;
  PolynomialMatrix a(2, 3, Polynomial(n)), b(3, 2, Polynomial(n));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      a(i, j) = Polynomial::variable(n, (i + j) % n) * random_rational(rng);
      b(j, i) = Polynomial::variable(n, (i * j) % n) + Polynomial(n, random_rational(rng));
    }
  std::vector<Rational> pt = {ratio(1, 2), Rational(-3), ratio(2, 7)};
  EXPECT_EQ(evaluate(a * b, pt), evaluate(a, pt) * evaluate(b, pt));
}

TEST(Subset, Basics) {
  Subset s{1, 3, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.to_string(), "135");
  EXPECT_EQ(s.min(), 1);
  EXPECT_EQ(s.max(), 5);
  EXPECT_TRUE(Subset({1, 5}).is_subset_of(s));
  EXPECT_EQ((s - Subset{3}), Subset({1, 5}));
  EXPECT_EQ(Subset({1, 10}).to_string(), "{1,10}");
  EXPECT_EQ(k_subsets(4, 2).size(), 6u);
  EXPECT_EQ(k_subsets(4, 2).front(), Subset({1, 2}));
  EXPECT_EQ(k_subsets(4, 2).back(), Subset({3, 4}));
}

TEST(Subset, Signs) {
  EXPECT_EQ(wedge_sign(Subset{2}, Subset{1}), -1);
  EXPECT_EQ(wedge_sign(Subset{1}, Subset{2}), 1);
  EXPECT_EQ(wedge_sign(Subset{1, 3}, Subset{2}), -1);
  EXPECT_EQ(wedge_sign(Subset{1, 3}, Subset{3}), 0);
  EXPECT_EQ(sort_sign({3, 1, 2}), 1);
  EXPECT_EQ(sort_sign({2, 1, 3}), -1);
  EXPECT_EQ(sort_sign({1, 1}), 0);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 5), 0);
}
