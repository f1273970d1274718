#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "osgm/error.hpp"
#include "osgm/rational.hpp"

namespace osgm {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, y_1 > y_2 > ... ; greater monomials sort first.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    auto da = std::accumulate(a.begin(), a.end(), 0u);
    auto db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse polynomial with exact rational coefficients in y_1..y_n.
///
/// No zero coefficient is ever stored. A polynomial with no terms is zero;
/// a zero polynomial built with nvars() == 0 is compatible with any variable
/// count, which lets default-constructed entries act as additive identities
/// inside matrices.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, GrlexDescending>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, const Rational& c) : nvars_(nvars) {
    if (!osgm::is_zero(c)) terms_.emplace(Exponents(nvars, 0), c);
  }

  static Polynomial variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw ValidationError("variable index out of range");
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }

  /// sum_j coeffs[j] * y_{j+1}
  static Polynomial linear_form(std::span<const Rational> coeffs) {
    Polynomial p(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (osgm::is_zero(coeffs[j])) continue;
      Exponents e(coeffs.size(), 0);
      e[j] = 1;
      p.terms_.emplace(std::move(e), coeffs[j]);
    }
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
  }

  /// Adds c * y^e. Exponent length must match nvars().
  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw ValidationError("exponent length does not match variable count");
    if (osgm::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (osgm::is_zero(it->second)) terms_.erase(it);
    }
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    adopt_nvars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    adopt_nvars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (osgm::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.nvars_ ? a.nvars_ : b.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.nvars_ != b.nvars_) throw ValidationError("polynomial variable counts differ");
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Substitutes y_j = values[j].
  Rational evaluate(std::span<const Rational> values) const {
    if (!is_zero() && values.size() != nvars_) {
      throw ValidationError("evaluation point has " + std::to_string(values.size()) +
                            " coordinates, polynomial has " + std::to_string(nvars_) + " variables");
    }
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational m = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (unsigned k = 0; k < e[i]; ++k) m *= values[i];
      }
      total += m;
    }
    return total;
  }

  /// Substitutes y_j = images[j] (polynomials in a common variable set).
  Polynomial substitute(std::span<const Polynomial> images) const {
    if (is_zero()) return *this;
    if (images.size() != nvars_) throw ValidationError("substitution has wrong arity");
    std::size_t target = images.empty() ? 0 : images[0].nvars();
    for (const auto& img : images) target = std::max(target, img.nvars());
    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
      Polynomial m(target, c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (unsigned k = 0; k < e[i]; ++k) m *= images[i];
      }
      r += m;
    }
    return r;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool constant = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
      Rational mag = abs(c);
      if (first) {
        if (sgn(c) < 0) out += "-";
      } else {
        out += sgn(c) < 0 ? " - " : " + ";
      }
      first = false;
      if (constant || mag != 1) {
        out += mag.get_str();
        if (!constant) out += "*";
      }
      bool need_star = false;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (need_star) out += "*";
        out += "y" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
        need_star = true;
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void adopt_nvars(const Polynomial& o) {
    if (nvars_ == o.nvars_ || o.is_zero()) return;
    if (nvars_ == 0 && is_zero()) {
      nvars_ = o.nvars_;
      return;
    }
    throw ValidationError("polynomial variable counts differ");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// y_{n+1} = -(y_1 + ... + y_n); index is 1-based over [n+1].
inline Polynomial projective_variable(std::size_t n, std::size_t index) {
  if (index >= 1 && index <= n) return Polynomial::variable(n, index - 1);
  if (index != n + 1) throw ValidationError("variable index out of range");
  std::vector<Rational> coeffs(n, Rational(-1));
  return Polynomial::linear_form(coeffs);
}

}  // namespace osgm
