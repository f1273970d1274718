#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osgm/aomoto.hpp"
#include "osgm/arrangement.hpp"
#include "osgm/error.hpp"
#include "osgm/linalg.hpp"
#include "osgm/matrix.hpp"
#include "osgm/orlik_solomon.hpp"
#include "osgm/polynomial.hpp"
#include "osgm/rational.hpp"
#include "osgm/subset.hpp"

namespace osgm {

/// Permutation of [n+1]; image(i) for 1 <= i <= n+1.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v]) throw ValidationError("not a bijection");
      seen[v] = true;
    }
  }
  static Permutation identity(int size) {
    std::vector<int> im(size);
    for (int i = 0; i < size; ++i) im[i] = i + 1;
    return Permutation(std::move(im));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i - 1); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

 private:
  std::vector<int> images_;
};

/// sigma_S: i -> s_i for i <= |S|, and [n+1] - [|S|] onto [n+1] - S in
/// increasing order.
inline Permutation sigma_for(Subset s, int n) {
  if (!s.is_subset_of(Subset::range(n + 1))) throw ValidationError("set outside [n+1]");
  std::vector<int> im = s.elements();
  for (int j = 1; j <= n + 1; ++j) {
    if (!s.contains(j)) im.push_back(j);
  }
  return Permutation(std::move(im));
}

/// Graded R-linear endomorphism of a truncated Aomoto complex, one square
/// polynomial matrix per degree 0..ell (row convention).
struct ChainEndomorphism {
  int n = 0;
  int ell = 0;
  std::vector<std::vector<Subset>> bases;
  std::vector<PolynomialMatrix> blocks;

  static ChainEndomorphism zero_on_exterior(int n, int ell) {
    ChainEndomorphism e;
    e.n = n;
    e.ell = ell;
    for (int q = 0; q <= ell; ++q) {
      e.bases.push_back(k_subsets(n, q));
      auto d = e.bases.back().size();
      e.blocks.emplace_back(d, d, Polynomial(static_cast<std::size_t>(n)));
    }
    return e;
  }

  const PolynomialMatrix& block(int q) const {
    if (q < 0 || q > ell) throw ValidationError("degree outside [0, ell]");
    return blocks[q];
  }

  bool is_zero() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.is_zero(); });
  }

  ChainEndomorphism& add_scaled(const ChainEndomorphism& o, const Rational& c) {
    for (int q = 0; q <= ell; ++q) {
      for (std::size_t i = 0; i < blocks[q].rows(); ++i)
        for (std::size_t j = 0; j < blocks[q].cols(); ++j) {
          if (!o.blocks[q](i, j).is_zero()) blocks[q](i, j) += o.blocks[q](i, j) * c;
        }
    }
    return *this;
  }

  RationalMatrix specialize(int q, const Weights& w) const { return evaluate(block(q), w.values()); }

  friend bool operator==(const ChainEndomorphism& a, const ChainEndomorphism& b) {
    return a.n == b.n && a.ell == b.ell && a.bases == b.bases && a.blocks == b.blocks;
  }
};

/// The exterior part of phi_sigma on A(G): per degree, the constant matrix
/// with row e_T = sigma(e_t1) ... sigma(e_tp), where
/// sigma(e_i) = E_sigma(i) - E_sigma(n+1) and E_{n+1} = 0.
inline std::vector<RationalMatrix> exterior_action(const Permutation& sigma, int n, int ell) {
  if (sigma.size() != n + 1) throw ValidationError("permutation must act on [n+1]");
  const int at_inf = sigma(n + 1);
  auto generator = [&](int i) {
    Combination<Rational> g;
    int target = sigma(i);
    if (target != n + 1) accumulate(g, Subset{target}, Rational(1));
    if (at_inf != n + 1) accumulate(g, Subset{at_inf}, Rational(-1));
    return g;
  };
  std::vector<RationalMatrix> out;
  for (int q = 0; q <= ell; ++q) {
    auto basis = k_subsets(n, q);
    RationalMatrix m(basis.size(), basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
      Combination<Rational> image;
      image.emplace(Subset(), Rational(1));
      for (int i : basis[r].elements()) image = wedge(image, generator(i), ell);
      for (const auto& [t, c] : image) {
        auto pos = std::lower_bound(basis.begin(), basis.end(), t, lex_less) - basis.begin();
        m(r, static_cast<std::size_t>(pos)) = c;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

/// Coefficient part of phi_sigma: y_i -> y_sigma(i), y_{n+1} = -sum y_j.
inline std::vector<Polynomial> variable_images(const Permutation& sigma, int n) {
  std::vector<Polynomial> im;
  for (int i = 1; i <= n; ++i) im.push_back(projective_variable(n, sigma(i)));
  return im;
}

/// phi_sigma on the Aomoto complex of the general position type. It is
/// semilinear: a row vector v with polynomial entries maps to
/// sigma_y(v) * exterior[q].
struct SigmaAction {
  Permutation sigma;
  std::vector<RationalMatrix> exterior;
  std::vector<Polynomial> variables;

  SigmaAction(Permutation s, int n, int ell)
      : sigma(std::move(s)), exterior(exterior_action(sigma, n, ell)), variables(variable_images(sigma, n)) {}

  /// Rows of m are elements of A^q(G) (x) R; returns their images.
  PolynomialMatrix apply(int q, const PolynomialMatrix& m) const {
    auto n = variables.size();
    return substitute(m, variables) * to_polynomial(exterior.at(q), n);
  }
};

inline SigmaAction sigma_action(const Permutation& sigma, int n, int ell) { return SigmaAction(sigma, n, ell); }

/// omega~_{S0} for S0 = [q+1]:
///   e_T -> y_j d e_(j,T)   when |T| = q and S0 = {j} u T, j in [n];
///   e_T -> e_y d e_T       when T = S0;
///   0 otherwise.
inline ChainEndomorphism omega_tilde_base(int size, int n, int ell) {
  auto e = ChainEndomorphism::zero_on_exterior(n, ell);
  const int q = size - 1;
  const Subset s0 = Subset::range(size);
  if (s0.contains(n + 1)) return e;  // no T within [n] completes S0 with j in [n]
  auto row_of = [&](int p, Subset t) {
    return static_cast<std::size_t>(std::lower_bound(e.bases[p].begin(), e.bases[p].end(), t, lex_less) -
                                    e.bases[p].begin());
  };
  const auto nn = static_cast<std::size_t>(n);
  if (q <= ell) {
    for (int j : s0.elements()) {
      Subset t = s0.without(j);
      std::vector<int> tuple{j};
      for (int x : t.elements()) tuple.push_back(x);
      Polynomial yj = Polynomial::variable(nn, j - 1);
      auto r = row_of(q, t);
      for (const auto& [u, c] : boundary(tuple)) e.blocks[q](r, row_of(q, u)) += yj * c;
    }
  }
  if (q + 1 <= ell) {
    auto d = boundary(s0.elements());
    auto r = row_of(q + 1, s0);
    for (int i = 1; i <= n; ++i) {
      Polynomial yi = Polynomial::variable(nn, i - 1);
      for (const auto& [u, c] : d) {
        int sign = wedge_sign(Subset{i}, u);
        if (sign == 0) continue;
        e.blocks[q + 1](r, row_of(q + 1, u.with(i))) += yi * Rational(c * sign);
      }
    }
  }
  return e;
}

/// omega~_S = phi_sigma o omega~_{S0} o phi_sigma^{-1} for a permutation
/// sending [|S|] onto S in order.
inline ChainEndomorphism omega_tilde_with(Subset s, const Permutation& sigma, int n, int ell) {
  const int k = s.size();
  auto el = s.elements();
  for (int i = 1; i <= k; ++i) {
    if (sigma(i) != el[i - 1]) throw ValidationError("permutation does not send [|S|] onto S in order");
  }
  auto base = omega_tilde_base(k, n, ell);
  if (base.is_zero()) return base;
  SigmaAction forward(sigma, n, ell);
  SigmaAction backward(sigma.inverse(), n, ell);
  const auto nn = static_cast<std::size_t>(n);
  for (int q = 0; q <= ell; ++q) {
    if (base.blocks[q].is_zero()) continue;
    base.blocks[q] = to_polynomial(backward.exterior[q], nn) * forward.apply(q, base.blocks[q]);
  }
  return base;
}

inline ChainEndomorphism omega_tilde(Subset s, int n, int ell) {
  if (s.size() < 2) throw ValidationError("omega~_S needs |S| >= 2");
  if (!s.is_subset_of(Subset::range(n + 1))) throw ValidationError("set outside [n+1]");
  return omega_tilde_with(s, sigma_for(s, n), n, ell);
}

/// Weighted sum of omega~_K. Sets with |K| > ell+1 are identically zero on
/// the truncation and are skipped.
inline ChainEndomorphism omega_tilde_sum(const std::vector<std::pair<Subset, int>>& terms, int n, int ell) {
  auto e = ChainEndomorphism::zero_on_exterior(n, ell);
  for (const auto& [k, m] : terms) {
    if (m == 0 || k.size() > ell + 1) continue;
    e.add_scaled(omega_tilde(k, n, ell), Rational(m));
  }
  return e;
}

/// Terms of omega~(S, r): K in Dep(T(S,r))* with weight m_K(S, r).
inline std::vector<std::pair<Subset, int>> pencil_terms(Subset s, int r, int n, int ell) {
  auto pencil = CombinatorialType::pencil(n, ell, s, r);
  std::vector<std::pair<Subset, int>> terms;
  for (Subset k : pencil.dep_star_family(ell + 1)) terms.emplace_back(k, pencil.multiplicity(k));
  return terms;
}

/// Terms of omega~(T', T): K in Dep(T') - Dep(T) with weight m_K(T').
inline std::vector<std::pair<Subset, int>> degeneration_terms(const CombinatorialType& coarse,
                                                              const CombinatorialType& fine) {
  if (coarse.n() != fine.n() || coarse.ell() != fine.ell()) throw ValidationError("types have different (n, ell)");
  std::vector<std::pair<Subset, int>> terms;
  for (Subset k : coarse.dependent_family(coarse.n() + 1)) {
    if (!fine.is_dependent(k)) throw PreconditionError("Dep(T) is not contained in Dep(T'): set " + k.to_string());
  }
  for (Subset k : fine.dependent_family(fine.ell() + 1)) {
    if (!coarse.is_dependent(k)) terms.emplace_back(k, fine.multiplicity(k));
  }
  return terms;
}

inline ChainEndomorphism omega_tilde_pencil(Subset s, int r, int n, int ell) {
  return omega_tilde_sum(pencil_terms(s, r, n, ell), n, ell);
}

inline ChainEndomorphism omega_tilde_degeneration(const CombinatorialType& coarse, const CombinatorialType& fine) {
  return omega_tilde_sum(degeneration_terms(coarse, fine), coarse.n(), coarse.ell());
}

/// Induced endomorphism of A(T) (x) R: omega(a_T) = p(e(e_T)) on nbc
/// monomials. Throws PreconditionError when e does not preserve the ideal
/// I(T), checked as the identity W P = P L W P in every degree.
inline ChainEndomorphism induce_on_type(const ChainEndomorphism& e, const OrlikSolomonAlgebra& algebra) {
  if (e.n != algebra.n() || e.ell != algebra.ell()) throw ValidationError("endomorphism and type have different (n, ell)");
  const auto nn = static_cast<std::size_t>(e.n);
  ChainEndomorphism out;
  out.n = e.n;
  out.ell = e.ell;
  for (int q = 0; q <= e.ell; ++q) {
    auto p = to_polynomial(algebra.projection(q), nn);
    auto l = to_polynomial(algebra.lift(q), nn);
    auto wp = e.blocks[q] * p;
    auto induced = l * wp;
    if (!(wp == p * induced)) {
      throw PreconditionError("invalid covering datum: endomorphism does not preserve the Orlik-Solomon ideal in degree " +
                              std::to_string(q));
    }
    out.bases.push_back(algebra.nbc_basis(q));
    out.blocks.push_back(std::move(induced));
  }
  return out;
}

/// Checks d^q omega^{q+1} = omega^q d^q for every degree.
inline bool commutes_with(const ChainEndomorphism& e, const std::vector<PolynomialMatrix>& differentials) {
  for (int q = 0; q + 1 <= e.ell; ++q) {
    if (!(differentials.at(q) * e.blocks[q + 1] == e.blocks[q] * differentials.at(q))) return false;
  }
  return true;
}

inline std::vector<PolynomialMatrix> koszul_differentials(int n, int ell) {
  std::vector<PolynomialMatrix> d;
  for (int q = 0; q < ell; ++q) d.push_back(koszul_differential(n, ell, q));
  return d;
}

inline std::vector<PolynomialMatrix> differentials_of(const AomotoComplex& c) {
  std::vector<PolynomialMatrix> d;
  for (int q = 0; q < c.ell(); ++q) d.push_back(c.differential(q));
  return d;
}

/// Omega^q: the endomorphism of H^q(A(T), a_lambda) induced by the
/// specialized omega^q, as a matrix on the representative basis of `h`.
inline RationalMatrix gm_endomorphism(const ChainEndomorphism& induced, const DegreeCohomology& h, const Weights& w) {
  auto omega = induced.specialize(h.degree, w);
  RationalMatrix out(h.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    auto coords = h.class_of(row_times(h.representatives[i], omega));
    for (std::size_t j = 0; j < h.dim(); ++j) out(i, j) = coords[j];
  }
  return out;
}

struct PrincipalDependence {
  Subset support;
  int r = 0;

  friend bool operator==(const PrincipalDependence&, const PrincipalDependence&) = default;
};

/// Dep(T(S, r))* within Dep(T')*.
inline bool pencil_contained(Subset s, int r, const CombinatorialType& fine) {
  const int ell = fine.ell();
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << (fine.n() + 1)); ++m) {
    Subset k(m);
    if (k.size() < 2) continue;
    int rk = pencil_rank(k, s, r, ell);
    if (rk < k.size() && rk <= ell && !fine.in_dep_star(k)) return false;
  }
  return true;
}

/// The pair (S, r) attached to a degeneration T -> T': r is the least
/// minimal pencil rank over Dep(T', T)*, and S is the unique set among
/// those attaining it that contains all the others.
inline PrincipalDependence principal_dependence(const CombinatorialType& coarse, const CombinatorialType& fine) {
  if (coarse.n() != fine.n() || coarse.ell() != fine.ell()) throw ValidationError("types have different (n, ell)");
  std::vector<Subset> relative;
  for (Subset k : fine.dep_star_family(fine.n() + 1)) {
    if (!coarse.in_dep_star(k)) relative.push_back(k);
  }
  for (Subset k : coarse.dep_star_family(coarse.n() + 1)) {
    if (!fine.in_dep_star(k)) throw PreconditionError("Dep(T)* is not contained in Dep(T')*: set " + k.to_string());
  }
  if (relative.empty()) throw PreconditionError("Dep(T', T)* is empty: no degeneration");
  std::vector<std::pair<Subset, int>> ranked;
  int best = 0;
  for (Subset si : relative) {
    int upper = std::min(fine.ell(), si.size() - 1);
    for (int r = 1; r <= upper; ++r) {
      if (pencil_contained(si, r, fine)) {
        ranked.emplace_back(si, r);
        if (best == 0 || r < best) best = r;
        break;
      }
    }
  }
  if (best == 0) throw PreconditionError("no pencil type T(S_i, r_i) fits inside Dep(T')*");
  std::vector<Subset> candidates;
  for (const auto& [si, r] : ranked) {
    if (r == best) candidates.push_back(si);
  }
  for (Subset s : candidates) {
    if (std::all_of(candidates.begin(), candidates.end(), [&](Subset c) { return c.is_subset_of(s); })) {
      return {s, best};
    }
  }
  throw PreconditionError("principal dependence is not unique: no candidate contains all others at r=" +
                          std::to_string(best));
}

struct EigenspaceDims {
  long long zero = 0;
  long long lambda_s = 0;

  friend bool operator==(const EigenspaceDims&, const EigenspaceDims&) = default;
};

/// Dimensions of the 0- and lambda_S-eigenspaces of omega~^q(S, r) on A^q(G).
inline EigenspaceDims eigenspace_dims(int n, int s, int r, int q, int ell) {
  if (r < 1 || r > std::min(ell, s - 1)) throw ValidationError("r outside [1, min(ell, s-1)]");
  if (q < 0 || q > ell) throw ValidationError("degree outside [0, ell]");
  if (s > n) throw ValidationError("s exceeds n");
  EigenspaceDims d;
  for (int p = 0; p <= r; ++p) d.zero += binomial(s, p) * binomial(n - s, q - p);
  d.zero -= binomial(s - 1, r) * binomial(n - s, q - r);
  for (int p = r + 1; p <= std::min(q, s); ++p) d.lambda_s += binomial(s, p) * binomial(n - s, q - p);
  d.lambda_s += binomial(s - 1, r) * binomial(n - s, q - r);
  return d;
}

struct SpectrumCheck {
  bool passed = true;
  std::string witness;  ///< first failing entry, empty on success
};

/// M (M - y_S I) = 0 in every degree, as a polynomial identity.
inline SpectrumCheck spectrum_check(const ChainEndomorphism& e, Subset s) {
  auto ys = y_sum(s, static_cast<std::size_t>(e.n));
  for (int q = 0; q <= e.ell; ++q) {
    const auto& m = e.blocks[q];
    auto shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= ys;
    auto prod = m * shifted;
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) {
        if (!prod(i, j).is_zero()) {
          return {false, "degree " + std::to_string(q) + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") = " + prod(i, j).to_string()};
        }
      }
  }
  return {};
}

/// M (M - lambda_S I) = 0 for a specialized matrix; when lambda_S != 0 and
/// an expected lambda_S-eigenspace dimension is given, also rank M = it.
inline SpectrumCheck spectrum_check(const RationalMatrix& m, const Rational& lambda_s,
                                    std::optional<long long> expected_rank = std::nullopt) {
  auto shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda_s;
  auto prod = m * shifted;
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j) {
      if (!is_zero(prod(i, j))) {
        return {false, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + prod(i, j).get_str()};
      }
    }
  if (expected_rank && !is_zero(lambda_s)) {
    auto rk = static_cast<long long>(rank(m));
    if (rk != *expected_rank) {
      return {false, "rank " + std::to_string(rk) + " != expected " + std::to_string(*expected_rank)};
    }
  }
  return {};
}

/// Summary for one degree of Omega: dimensions of kernel and image, and
/// whether Omega (Omega - lambda_S) = 0 held. `applicable` is false when
/// lambda_S = 0 and the spectrum statement says nothing.
struct SpectrumReport {
  Rational lambda_s;
  long long d0 = 0;
  long long ds = 0;
  bool verified = false;
  bool applicable = true;
};

inline SpectrumReport spectrum_report(const RationalMatrix& omega, const Rational& lambda_s) {
  SpectrumReport rep;
  rep.lambda_s = lambda_s;
  auto rk = static_cast<long long>(rank(omega));
  rep.ds = rk;
  rep.d0 = static_cast<long long>(omega.rows()) - rk;
  rep.verified = spectrum_check(omega, lambda_s).passed;
  rep.applicable = !is_zero(lambda_s);
  return rep;
}

}  // namespace osgm
