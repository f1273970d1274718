#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "osgm/arrangement.hpp"
#include "osgm/error.hpp"
#include "osgm/linalg.hpp"
#include "osgm/matrix.hpp"
#include "osgm/orlik_solomon.hpp"
#include "osgm/polynomial.hpp"
#include "osgm/rational.hpp"
#include "osgm/subset.hpp"

namespace osgm {

/// Rational weights lambda_1..lambda_n; lambda_{n+1} = -sum lambda_j.
class Weights {
 public:
  Weights() = default;
  explicit Weights(std::vector<Rational> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }

  Rational at_infinity() const {
    Rational s = 0;
    for (const auto& v : values_) s += v;
    return -s;
  }

  /// lambda_j for 1 <= j <= n+1.
  Rational operator[](int j) const {
    if (j == static_cast<int>(values_.size()) + 1) return at_infinity();
    if (j < 1 || j > static_cast<int>(values_.size())) throw ValidationError("weight index out of range");
    return values_[j - 1];
  }

  /// lambda_S = sum_{j in S} lambda_j.
  Rational sum(Subset s) const {
    Rational t = 0;
    for (int j : s.elements()) t += (*this)[j];
    return t;
  }

 private:
  std::vector<Rational> values_;
};

/// y_S = sum_{j in S} y_j with y_{n+1} = -(y_1 + ... + y_n).
inline Polynomial y_sum(Subset s, std::size_t n) {
  Polynomial p(n);
  for (int j : s.elements()) p += projective_variable(n, static_cast<std::size_t>(j));
  return p;
}

/// The Aomoto complex (A(T) (x) Q[y], a_y) in nbc bases.
///
/// differential(q) has shape |nbc_q| x |nbc_{q+1}| and row k is the nbc
/// expansion of a_y * a_{nbc_k} = sum_j y_j reduce(e_j e_{nbc_k}).
class AomotoComplex {
 public:
  explicit AomotoComplex(std::shared_ptr<const OrlikSolomonAlgebra> algebra) : algebra_(std::move(algebra)) {
    const int n = algebra_->n();
    const int ell = algebra_->ell();
    for (int q = 0; q < ell; ++q) {
      const auto& rows = algebra_->nbc_basis(q);
      PolynomialMatrix d(rows.size(), algebra_->nbc_basis(q + 1).size(), Polynomial(n));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int j = 1; j <= n; ++j) {
          int sign = wedge_sign(Subset{j}, rows[i]);
          if (sign == 0) continue;
          Polynomial yj = Polynomial::variable(n, j - 1) * Rational(sign);
          for (const auto& [t, c] : algebra_->reduce_monomial(rows[i].with(j))) {
            d(i, *algebra_->nbc_index(t)) += yj * c;
          }
        }
      }
      differentials_.push_back(std::move(d));
    }
  }

  explicit AomotoComplex(CombinatorialType type)
      : AomotoComplex(std::make_shared<const OrlikSolomonAlgebra>(std::move(type))) {}

  const OrlikSolomonAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const OrlikSolomonAlgebra> algebra_ptr() const { return algebra_; }
  int n() const { return algebra_->n(); }
  int ell() const { return algebra_->ell(); }
  const std::vector<Subset>& basis(int q) const { return algebra_->nbc_basis(q); }

  /// d^q : A^q -> A^{q+1}, 0 <= q < ell.
  const PolynomialMatrix& differential(int q) const {
    if (q < 0 || q >= ell()) throw ValidationError("differential degree " + std::to_string(q) + " outside [0, ell)");
    return differentials_[q];
  }

  RationalMatrix specialized_differential(int q, const Weights& w) const {
    check_weights(w);
    return evaluate(differential(q), w.values());
  }

  void check_weights(const Weights& w) const {
    if (static_cast<int>(w.size()) != n()) {
      throw ValidationError("expected " + std::to_string(n()) + " weights, got " + std::to_string(w.size()));
    }
  }

 private:
  std::shared_ptr<const OrlikSolomonAlgebra> algebra_;
  std::vector<PolynomialMatrix> differentials_;
};

/// The Koszul-type differential of A(G), the rank-ell truncated exterior
/// algebra on n generators: row e_T maps to sum_j y_j e_j e_T.
inline PolynomialMatrix koszul_differential(int n, int ell, int q) {
  if (q < 0 || q >= ell) throw ValidationError("differential degree outside [0, ell)");
  auto rows = k_subsets(n, q);
  auto cols = k_subsets(n, q + 1);
  PolynomialMatrix d(rows.size(), cols.size(), Polynomial(n));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 1; j <= n; ++j) {
      int sign = wedge_sign(Subset{j}, rows[i]);
      if (sign == 0) continue;
      auto pos = std::lower_bound(cols.begin(), cols.end(), rows[i].with(j), lex_less) - cols.begin();
      d(i, static_cast<std::size_t>(pos)) = Polynomial::variable(n, j - 1) * Rational(sign);
    }
  }
  return d;
}

/// H^q(A, a_lambda) in one degree.
///
/// Representatives are echelon-canonical: cocycles reduced against the
/// coboundary space and brought to reduced echelon form.
struct DegreeCohomology {
  int degree = 0;
  std::vector<Vector> representatives;
  Subspace coboundaries{0};
  Subspace representative_span{0};

  std::size_t dim() const { return representatives.size(); }

  /// Coordinates of the class of a cocycle in the representative basis.
  Vector class_of(const Vector& cocycle) const {
    Vector r = coboundaries.reduce(cocycle);
    auto c = representative_span.coordinates(r);
    if (!c) throw PreconditionError("vector is not a cocycle");
    return *c;
  }
};

struct CohomologyData {
  std::vector<DegreeCohomology> degrees;

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& h : degrees) d.push_back(h.dim());
    return d;
  }
};

/// Cohomology of the Orlik-Solomon complex (A(T), a_lambda).
inline CohomologyData os_cohomology(const AomotoComplex& complex, const Weights& w) {
  complex.check_weights(w);
  const int ell = complex.ell();
  CohomologyData out;
  for (int q = 0; q <= ell; ++q) {
    const std::size_t dim = complex.basis(q).size();
    std::vector<Vector> cocycles;
    if (q < ell) {
      cocycles = kernel_basis(complex.specialized_differential(q, w));
    } else {
      for (std::size_t i = 0; i < dim; ++i) {
        Vector e(dim, Rational(0));
        e[i] = 1;
        cocycles.push_back(std::move(e));
      }
    }
    DegreeCohomology h;
    h.degree = q;
    if (q > 0) {
      auto prev = complex.specialized_differential(q - 1, w);
      h.coboundaries = Subspace(to_rows(prev), dim);
    } else {
      h.coboundaries = Subspace(dim);
    }
    std::vector<Vector> reduced;
    for (auto& z : cocycles) reduced.push_back(h.coboundaries.reduce(z));
    h.representative_span = Subspace(reduced, dim);
    h.representatives = to_rows(h.representative_span.echelon().rows);
    out.degrees.push_back(std::move(h));
  }
  return out;
}

/// lambda lies in the resonance variety R^q_m: dim H^q(A, a_lambda) >= m.
inline bool in_resonance(const AomotoComplex& complex, const Weights& w, int q, int m) {
  if (q < 0 || q > complex.ell()) throw ValidationError("degree outside [0, ell]");
  if (m < 1) throw ValidationError("resonance depth m must be at least 1");
  return static_cast<int>(os_cohomology(complex, w).degrees[q].dim()) >= m;
}

/// The inequality list for the Selberg type: lambda_1..lambda_6 and
/// lambda_135, lambda_245, lambda_126, lambda_346 avoid Z_{>=0}.
inline bool selberg_nonresonant(const Weights& w) {
  if (w.size() != 5) throw ValidationError("Selberg weights have 5 entries");
  std::vector<Subset> sets = {Subset{1}, Subset{2}, Subset{3}, Subset{4}, Subset{5}, Subset{6},
                              Subset{1, 3, 5}, Subset{2, 4, 5}, Subset{1, 2, 6}, Subset{3, 4, 6}};
  for (Subset s : sets) {
    if (is_nonnegative_integer(w.sum(s))) return false;
  }
  return true;
}

/// Flats of the projective closure that carry a nonresonance condition:
/// every singleton of [n+1] and every closed dependent set with nonempty
/// projective intersection.
inline std::vector<Subset> resonance_flats(const CombinatorialType& t) {
  std::vector<Subset> out;
  for (int j = 1; j <= t.n() + 1; ++j) out.push_back(Subset{j});
  for (Subset s : t.dep_star_family(t.n() + 1)) {
    bool closed = true;
    for (int j = 1; j <= t.n() + 1 && closed; ++j) {
      if (!s.contains(j) && t.rank(s.with(j)) == t.rank(s)) closed = false;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

/// Sufficient (not necessary) condition for nonresonance: lambda_X avoids
/// Z_{>=0} on every flat from resonance_flats().
inline bool generic_nonresonant(const CombinatorialType& t, const Weights& w) {
  if (static_cast<int>(w.size()) != t.n()) throw ValidationError("weight count does not match n");
  for (Subset s : resonance_flats(t)) {
    if (is_nonnegative_integer(w.sum(s))) return false;
  }
  return true;
}

}  // namespace osgm
