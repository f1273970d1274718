#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "osgm/arrangement.hpp"
#include "osgm/error.hpp"
#include "osgm/linalg.hpp"
#include "osgm/matrix.hpp"
#include "osgm/polynomial.hpp"
#include "osgm/rational.hpp"
#include "osgm/subset.hpp"

namespace osgm {

/// Formal combination of exterior monomials e_S (S sorted) with
/// coefficients in C (Rational or Polynomial). Zero coefficients are never
/// stored.
template <class C>
using Combination = std::map<Subset, C, SubsetOrder>;

template <class C>
void accumulate(Combination<C>& x, Subset s, const C& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = x.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) x.erase(it);
  }
}

template <class C>
int degree_of(const Combination<C>& x) {
  if (x.empty()) return 0;
  int d = x.begin()->first.size();
  for (const auto& [s, c] : x) {
    if (s.size() != d) throw ValidationError("element is not homogeneous");
  }
  return d;
}

/// Exterior product in E (no reduction); terms of degree > max_degree drop.
template <class C>
Combination<C> wedge(const Combination<C>& x, const Combination<C>& y, int max_degree) {
  Combination<C> out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      int sign = wedge_sign(a, b);
      if (sign == 0 || (a | b).size() > max_degree) continue;
      C c = ca * cb;
      if (sign < 0) c = -c;
      accumulate(out, a | b, c);
    }
  }
  return out;
}

/// Boundary of an ordered tuple: sum_p (-1)^(p-1) e_{tuple without entry p},
/// each term rewritten in sorted order.
inline Combination<Rational> boundary(const std::vector<int>& tuple) {
  Combination<Rational> out;
  for (std::size_t p = 0; p < tuple.size(); ++p) {
    std::vector<int> rest;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i != p) rest.push_back(tuple[i]);
    }
    int sign = sort_sign(rest);
    if (sign == 0) continue;
    if (p % 2) sign = -sign;
    accumulate(out, Subset::from_elements(rest), Rational(sign));
  }
  return out;
}

/// Orlik-Solomon algebra A(T) = E / I(T) of a combinatorial type, truncated
/// at degree ell, with its nbc basis and straightening reduction.
///
/// Hyperplanes are ordered as given; the hyperplane at infinity is last and
/// carries no generator. A set S within [n] is a circuit when its affine
/// flat is nonempty, it is dependent, and each proper subset is
/// independent; nbc monomials are the sets with nonempty flat containing no
/// broken circuit.
class OrlikSolomonAlgebra {
 public:
  explicit OrlikSolomonAlgebra(CombinatorialType type) : type_(std::move(type)) {
    const int n = type_.n();
    const int ell = type_.ell();
    for (int q = 2; q <= std::min(n, ell + 1); ++q) {
      for (Subset s : k_subsets(n, q)) {
        if (is_circuit(s)) {
          circuits_.push_back(s);
          Subset broken = s.without(s.min());
          broken_.push_back(broken);
          circuit_min_.emplace(broken.bits(), s.min());
        }
      }
    }
    std::sort(broken_.begin(), broken_.end(), lex_less);
    broken_.erase(std::unique(broken_.begin(), broken_.end()), broken_.end());

    exterior_.resize(ell + 1);
    nbc_.resize(ell + 1);
    for (int q = 0; q <= ell; ++q) {
      exterior_[q] = k_subsets(n, q);
      for (Subset s : exterior_[q]) {
        if (type_.affine_intersection_empty(s)) continue;
        bool has_broken = std::any_of(broken_.begin(), broken_.end(), [&](Subset b) { return b.is_subset_of(s); });
        if (!has_broken) {
          nbc_index_.emplace(s.bits(), nbc_[q].size());
          nbc_[q].push_back(s);
        }
      }
      for (Subset s : exterior_[q]) compute_reduction(s);
    }
  }

  const CombinatorialType& type() const { return type_; }
  int n() const { return type_.n(); }
  int ell() const { return type_.ell(); }

  /// Circuits within [n], by size then lex.
  const std::vector<Subset>& circuits() const { return circuits_; }
  /// Broken circuits in lex order.
  const std::vector<Subset>& broken_circuits() const { return broken_; }

  const std::vector<Subset>& nbc_basis(int q) const {
    check_degree(q);
    return nbc_[q];
  }
  /// All q-subsets of [n]: the monomial basis of E^q = A^q(G).
  const std::vector<Subset>& exterior_basis(int q) const {
    check_degree(q);
    return exterior_[q];
  }
  std::size_t betti(int q) const { return nbc_basis(q).size(); }

  long long euler_characteristic() const {
    long long chi = 0;
    for (int q = 0; q <= ell(); ++q) chi += (q % 2 ? -1 : 1) * static_cast<long long>(betti(q));
    return chi;
  }

  std::optional<std::size_t> nbc_index(Subset s) const {
    auto it = nbc_index_.find(s.bits());
    if (it == nbc_index_.end()) return std::nullopt;
    return it->second;
  }

  /// Image of e_S in A(T) in nbc coordinates (zero above degree ell).
  const Combination<Rational>& reduce_monomial(Subset s) const {
    static const Combination<Rational> kZero;
    if (s.max() > n()) throw ValidationError("monomial " + s.to_string() + " outside [n]");
    if (s.size() > ell()) return kZero;
    return memo_.at(s.bits());
  }

  /// Quotient map A(G) -> A(T) on any combination.
  template <class C>
  Combination<C> reduce(const Combination<C>& x) const {
    Combination<C> out;
    for (const auto& [s, c] : x) {
      for (const auto& [t, k] : reduce_monomial(s)) accumulate(out, t, C(c * k));
    }
    return out;
  }

  /// Product in A(T); degrees above ell truncate to zero.
  template <class C>
  Combination<C> multiply(const Combination<C>& x, const Combination<C>& y) const {
    return reduce(wedge(x, y, ell()));
  }

  /// Matrix of the projection p: A^q(G) -> A^q(T): row U is reduce(e_U).
  RationalMatrix projection(int q) const {
    check_degree(q);
    RationalMatrix p(exterior_[q].size(), nbc_[q].size());
    for (std::size_t i = 0; i < exterior_[q].size(); ++i) {
      for (const auto& [t, c] : reduce_monomial(exterior_[q][i])) p(i, *nbc_index(t)) = c;
    }
    return p;
  }

  /// Inclusion of nbc monomials into A^q(G): row k is e_{nbc_k}.
  RationalMatrix lift(int q) const {
    check_degree(q);
    RationalMatrix l(nbc_[q].size(), exterior_[q].size());
    for (std::size_t k = 0; k < nbc_[q].size(); ++k) {
      auto pos = std::lower_bound(exterior_[q].begin(), exterior_[q].end(), nbc_[q][k], lex_less);
      l(k, static_cast<std::size_t>(pos - exterior_[q].begin())) = 1;
    }
    return l;
  }

 private:
  void check_degree(int q) const {
    if (q < 0 || q > ell()) throw ValidationError("degree " + std::to_string(q) + " outside [0, ell]");
  }

  bool is_circuit(Subset s) const {
    if (type_.affine_intersection_empty(s)) return false;
    if (type_.rank(s) != s.size() - 1) return false;
    for (int j : s.elements()) {
      if (type_.rank(s.without(j)) != s.size() - 1) return false;
    }
    return true;
  }

  const Combination<Rational>& compute_reduction(Subset s) {
    if (auto it = memo_.find(s.bits()); it != memo_.end()) return it->second;
    Combination<Rational> out;
    if (!type_.affine_intersection_empty(s)) {
      if (nbc_index(s)) {
        out.emplace(s, Rational(1));
      } else {
        out = straighten(s);
      }
    }
    return memo_.emplace(s.bits(), std::move(out)).first->second;
  }

  // Rewrites the lex-smallest broken circuit B in S through the relation
  // d e_(k,B) = 0, i.e. e_B = sum_i (-1)^(i+1) e_(k, B - b_i). Each new
  // monomial replaces an index by a smaller one.
  Combination<Rational> straighten(Subset s) {
    auto it = std::find_if(broken_.begin(), broken_.end(), [&](Subset b) { return b.is_subset_of(s); });
    if (it == broken_.end()) {
      throw PreconditionError("monomial " + s.to_string() + " has nonempty flat, no broken circuit, and is not nbc");
    }
    Subset b = *it;
    int k = circuit_min_.at(b.bits());
    Subset rest = s - b;
    int outer = wedge_sign(b, rest);
    Combination<Rational> out;
    if (rest.contains(k)) return out;
    auto el = b.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
      Subset term = b.without(el[i]).with(k);
      int sign = outer * (i % 2 ? -1 : 1) * wedge_sign(term, rest);
      for (const auto& [t, c] : compute_reduction(term | rest)) accumulate(out, t, Rational(c * sign));
    }
    return out;
  }

  CombinatorialType type_;
  std::vector<Subset> circuits_;
  std::vector<Subset> broken_;
  std::unordered_map<std::uint32_t, int> circuit_min_;
  std::vector<std::vector<Subset>> exterior_;
  std::vector<std::vector<Subset>> nbc_;
  std::unordered_map<std::uint32_t, std::size_t> nbc_index_;
  std::unordered_map<std::uint32_t, Combination<Rational>> memo_;
};

}  // namespace osgm
