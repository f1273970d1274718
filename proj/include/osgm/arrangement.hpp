#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "osgm/error.hpp"
#include "osgm/linalg.hpp"
#include "osgm/rational.hpp"
#include "osgm/subset.hpp"

namespace osgm {

/// Affine arrangement of n hyperplanes in C^ell, H_j = { b_j0 + sum_k b_jk u_k = 0 }.
///
/// Row j (1-based) of the projective closure is (b_j0, ..., b_jell); the
/// hyperplane at infinity is the implicit row n+1 = (1, 0, ..., 0).
class Arrangement {
 public:
  static constexpr int kMaxHyperplanes = 19;

  Arrangement(int ell, std::vector<Vector> rows) : ell_(ell), rows_(std::move(rows)) {
    if (ell_ < 1) throw ValidationError("ambient dimension must be at least 1");
    if (static_cast<int>(rows_.size()) < ell_) {
      throw ValidationError("an essential arrangement in dimension " + std::to_string(ell_) +
                            " needs at least " + std::to_string(ell_) + " hyperplanes");
    }
    if (static_cast<int>(rows_.size()) > kMaxHyperplanes) {
      throw ValidationError("at most " + std::to_string(kMaxHyperplanes) + " hyperplanes are supported");
    }
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (static_cast<int>(rows_[j].size()) != ell_ + 1) {
        throw ValidationError("row " + std::to_string(j + 1) + ": expected " + std::to_string(ell_ + 1) +
                              " entries, got " + std::to_string(rows_[j].size()));
      }
      if (std::all_of(rows_[j].begin() + 1, rows_[j].end(), [](const Rational& x) { return is_zero(x); })) {
        throw ValidationError("row " + std::to_string(j + 1) + ": linear part is zero, not a hyperplane");
      }
    }
    RationalMatrix linear(rows_.size(), ell_);
    for (std::size_t j = 0; j < rows_.size(); ++j)
      for (int k = 0; k < ell_; ++k) linear(j, k) = rows_[j][k + 1];
    if (static_cast<int>(osgm::rank(linear)) != ell_) throw ValidationError("arrangement is not essential");
  }

  int ell() const { return ell_; }
  int n() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vector>& rows() const { return rows_; }

  /// Row j of the projective closure, 1 <= j <= n+1.
  Vector projective_row(int j) const {
    if (j == n() + 1) {
      Vector v(ell_ + 1, Rational(0));
      v[0] = 1;
      return v;
    }
    if (j < 1 || j > n()) throw ValidationError("hyperplane index " + std::to_string(j) + " out of range");
    return rows_[j - 1];
  }

  /// N_S: rows of the projective closure indexed by S.
  RationalMatrix submatrix(Subset s) const {
    auto el = s.elements();
    RationalMatrix m(el.size(), ell_ + 1);
    for (std::size_t i = 0; i < el.size(); ++i) {
      auto row = projective_row(el[i]);
      for (int k = 0; k <= ell_; ++k) m(i, k) = row[k];
    }
    return m;
  }

  int rank_of(Subset s) const { return static_cast<int>(osgm::rank(submatrix(s))); }

  /// True when the affine hyperplanes indexed by s (s within [n]) have no
  /// common point: the linear part of N_s has smaller rank than N_s.
  bool affine_intersection_empty(Subset s) const {
    if (s.empty()) return false;
    auto full = submatrix(s);
    RationalMatrix linear(full.rows(), ell_);
    for (std::size_t i = 0; i < full.rows(); ++i)
      for (int k = 0; k < ell_; ++k) linear(i, k) = full(i, k + 1);
    return osgm::rank(linear) < osgm::rank(full);
  }

 private:
  int ell_;
  std::vector<Vector> rows_;
};

/// Closed-form rank of N_K in a generic realization of the pencil type
/// T(S, r): the rows indexed by S span an r-dimensional space, every other
/// row is generic.
inline int pencil_rank(Subset k, Subset s, int r, int ell) {
  int inside = (k & s).size();
  int outside = (k - s).size();
  return std::min(ell + 1, std::min(inside, r) + outside);
}

inline void check_pencil_parameters(Subset s, int r, int ell, int n) {
  if (s.empty() || s.max() > n + 1) throw ValidationError("pencil support must lie in [n+1]");
  int upper = std::min(ell, s.size() - 1);
  if (r < 1 || r > upper) {
    throw ValidationError("pencil rank r=" + std::to_string(r) + " outside [1, " + std::to_string(upper) + "]");
  }
}

/// m_K(S, r) = |K| - rank N_K in type T(S, r).
inline int multiplicity_pencil(Subset k, Subset s, int r, int ell, int n) {
  check_pencil_parameters(s, r, ell, n);
  if (k.max() > n + 1) throw ValidationError("set outside [n+1]");
  return k.size() - pencil_rank(k, s, r, ell);
}

/// Combinatorial type of an arrangement with n hyperplanes in C^ell,
/// carried as the rank function of the rows of its projective closure
/// (a matroid on [n+1]). The dependent family Dep(T) and everything the
/// Orlik-Solomon construction needs are read off this table.
class CombinatorialType {
 public:
  static CombinatorialType from_realization(const Arrangement& a) {
    CombinatorialType t(a.n(), a.ell());
    t.realized_ = true;
    t.fill_ranks([&](Subset s) { return a.rank_of(s) == s.size(); });
    return t;
  }

  /// T(S, r) via its generic pencil realization.
  static CombinatorialType pencil(int n, int ell, Subset s, int r) {
    check_shape(n, ell);
    check_pencil_parameters(s, r, ell, n);
    CombinatorialType t(n, ell);
    t.realized_ = false;
    for (std::uint32_t m = 0; m < t.rank_.size(); ++m) t.rank_[m] = static_cast<std::int8_t>(pencil_rank(Subset(m), s, r, ell));
    t.validate_matroid(/*require_essential=*/false);
    return t;
  }

  /// User-asserted type: sets of size 2..ell+1 listed in `dependent` are
  /// dependent, all other sets of size <= ell+1 independent, larger sets
  /// dependent. The family must be consistent with a matroid of rank ell+1;
  /// realizability is not checked, so the type is flagged unverified.
  static CombinatorialType from_dependent_sets(int n, int ell, const std::vector<Subset>& dependent) {
    check_shape(n, ell);
    std::vector<bool> dep(std::size_t{1} << (n + 1), false);
    for (Subset s : dependent) {
      if (s.max() > n + 1 || s.size() < 2) throw ValidationError("dependent set " + s.to_string() + " is invalid");
      dep[s.bits()] = true;
    }
    CombinatorialType t(n, ell);
    t.realized_ = false;
    t.fill_ranks([&](Subset s) { return !dep[s.bits()]; });
    for (Subset s : dependent) {
      if (!t.is_dependent(s)) throw ValidationError("inconsistent dependent family");
    }
    t.validate_matroid();
    return t;
  }

  int n() const { return n_; }
  int ell() const { return ell_; }
  /// True when the type was computed from an explicit realization matrix.
  bool realized() const { return realized_; }
  Subset ground_set() const { return Subset::range(n_ + 1); }
  Subset affine_set() const { return Subset::range(n_); }

  int rank(Subset s) const {
    check_in_ground_set(s);
    return rank_[s.bits()];
  }

  bool is_dependent(Subset s) const { return s.size() >= 2 && rank(s) < s.size(); }

  /// Dependent with nonempty projective intersection (rank N_S <= ell).
  bool in_dep_star(Subset s) const { return is_dependent(s) && rank(s) <= ell_; }

  int multiplicity(Subset s) const { return s.size() - rank(s); }

  /// For s within [n]: the affine flat of s is empty, i.e. its projective
  /// intersection lies inside the hyperplane at infinity.
  bool affine_intersection_empty(Subset s) const {
    if (s.empty()) return false;
    if (s.contains(n_ + 1)) throw ValidationError("affine intersection is defined for subsets of [n]");
    return rank(s.with(n_ + 1)) == rank(s);
  }

  std::vector<Subset> dependent_subsets(int q) const {
    check_size(q);
    std::vector<Subset> out;
    for (Subset s : k_subsets(n_ + 1, q)) {
      if (is_dependent(s)) out.push_back(s);
    }
    return out;
  }

  std::vector<Subset> dep_star(int q) const {
    check_size(q);
    std::vector<Subset> out;
    for (Subset s : k_subsets(n_ + 1, q)) {
      if (in_dep_star(s)) out.push_back(s);
    }
    return out;
  }

  /// Dep(T) restricted to sizes 2..max_size, by size then lex.
  std::vector<Subset> dependent_family(int max_size) const {
    std::vector<Subset> out;
    for (int q = 2; q <= std::min(max_size, n_ + 1); ++q) {
      auto d = dependent_subsets(q);
      out.insert(out.end(), d.begin(), d.end());
    }
    return out;
  }

  std::vector<Subset> dep_star_family(int max_size) const {
    std::vector<Subset> out;
    for (int q = 2; q <= std::min(max_size, n_ + 1); ++q) {
      auto d = dep_star(q);
      out.insert(out.end(), d.begin(), d.end());
    }
    return out;
  }

 private:
  CombinatorialType(int n, int ell) : n_(n), ell_(ell), rank_(std::size_t{1} << (n + 1), 0) {}

  static void check_shape(int n, int ell) {
    if (ell < 1 || n < ell || n > Arrangement::kMaxHyperplanes) {
      throw ValidationError("unsupported shape n=" + std::to_string(n) + ", ell=" + std::to_string(ell));
    }
  }

  void check_size(int q) const {
    if (q < 2 || q > n_ + 1) throw ValidationError("subset size " + std::to_string(q) + " outside [2, n+1]");
  }

  void check_in_ground_set(Subset s) const {
    if (!s.is_subset_of(ground_set())) throw ValidationError("subset " + s.to_string() + " outside [n+1]");
  }

  // rank(S) = |S| when S is independent, otherwise the largest rank of a
  // maximal proper subset. Only sets of size <= ell+1 all of whose
  // hyperplane-deleted subsets are independent need a direct test.
  template <class IndependentTest>
  void fill_ranks(IndependentTest&& independent) {
    for (std::uint32_t m = 1; m < rank_.size(); ++m) {
      Subset s(m);
      int best = 0;
      bool all_sub_independent = true;
      for (int j : s.elements()) {
        int r = rank_[s.without(j).bits()];
        best = std::max(best, r);
        if (r != s.size() - 1) all_sub_independent = false;
      }
      if (all_sub_independent && s.size() <= ell_ + 1 && independent(s)) {
        rank_[m] = static_cast<std::int8_t>(s.size());
      } else {
        rank_[m] = static_cast<std::int8_t>(best);
      }
    }
    if (rank_.back() != ell_ + 1) throw ValidationError("type is not essential: rank of [n+1] is not ell+1");
  }

  // Unit increase and local submodularity characterize matroid rank functions.
  // Pencil types with few hyperplanes need not be essential.
  void validate_matroid(bool require_essential = true) const {
    const int ground = n_ + 1;
    for (std::uint32_t m = 0; m < rank_.size(); ++m) {
      for (int a = 1; a <= ground; ++a) {
        if (Subset(m).contains(a)) continue;
        std::uint32_t ma = m | (1u << (a - 1));
        int step = rank_[ma] - rank_[m];
        if (step < 0 || step > 1) throw ValidationError("dependent family is not a matroid (unit increase)");
        for (int b = a + 1; b <= ground; ++b) {
          if (Subset(m).contains(b)) continue;
          std::uint32_t mb = m | (1u << (b - 1));
          if (rank_[ma] + rank_[mb] < rank_[ma | mb] + rank_[m]) {
            throw ValidationError("dependent family is not a matroid (submodularity)");
          }
        }
      }
    }
    if (require_essential && rank_.back() != ell_ + 1) {
      throw ValidationError("type is not essential: rank of [n+1] is not ell+1");
    }
  }

  int n_;
  int ell_;
  bool realized_ = false;
  std::vector<std::int8_t> rank_;
};

/// Free-function forms of the type queries.
inline std::vector<Subset> dependent_subsets(const Arrangement& a, int q) {
  return CombinatorialType::from_realization(a).dependent_subsets(q);
}

inline int multiplicity(Subset s, const Arrangement& a) {
  if (s.empty()) throw ValidationError("multiplicity of the empty set");
  return s.size() - a.rank_of(s);
}

/// Dep* graded by size (2..n+1); empty sizes omitted.
inline std::map<int, std::vector<Subset>> dep_star(const CombinatorialType& t) {
  std::map<int, std::vector<Subset>> out;
  for (int q = 2; q <= t.n() + 1; ++q) {
    auto d = t.dep_star(q);
    if (!d.empty()) out.emplace(q, std::move(d));
  }
  return out;
}

enum class TypeOrder {
  equal,
  t1_finer,  ///< Dep(t1) is a proper subset of Dep(t2) (t2 is more degenerate)
  t2_finer,
  incomparable,
};

inline std::string to_string(TypeOrder o) {
  switch (o) {
    case TypeOrder::equal: return "equal";
    case TypeOrder::t1_finer: return "t1_finer";
    case TypeOrder::t2_finer: return "t2_finer";
    case TypeOrder::incomparable: return "incomparable";
  }
  return "?";
}

/// Inclusion comparison of dependent families. Whether one type covers the
/// other is not decided.
inline TypeOrder compare_types(const CombinatorialType& t1, const CombinatorialType& t2) {
  if (t1.n() != t2.n() || t1.ell() != t2.ell()) throw ValidationError("types have different (n, ell)");
  bool sub12 = true;
  bool sub21 = true;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << (t1.n() + 1)); ++m) {
    bool d1 = t1.is_dependent(Subset(m));
    bool d2 = t2.is_dependent(Subset(m));
    if (d1 && !d2) sub12 = false;
    if (d2 && !d1) sub21 = false;
  }
  if (sub12 && sub21) return TypeOrder::equal;
  if (sub12) return TypeOrder::t1_finer;
  if (sub21) return TypeOrder::t2_finer;
  return TypeOrder::incomparable;
}

}  // namespace osgm
