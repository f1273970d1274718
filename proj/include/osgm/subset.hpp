#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "osgm/error.hpp"

namespace osgm {

/// Finite subset of {1, ..., 31}, stored as a bit mask (element i <-> bit i-1).
class Subset {
 public:
  static constexpr int kMaxElement = 31;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}
  Subset(std::initializer_list<int> elements) {
    for (int e : elements) *this = with(e);
  }
  static Subset from_elements(const std::vector<int>& elements) {
    Subset s;
    for (int e : elements) s = s.with(e);
    return s;
  }
  /// {1, ..., k}
  static Subset range(int k) { return Subset(k >= 32 ? ~0u : ((1u << k) - 1u)); }

  constexpr std::uint32_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int i) const { return i >= 1 && i <= kMaxElement && ((bits_ >> (i - 1)) & 1u); }
  int min() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
  int max() const { return bits_ ? 32 - std::countl_zero(bits_) : 0; }

  Subset with(int i) const {
    if (i < 1 || i > kMaxElement) throw ValidationError("subset element " + std::to_string(i) + " out of range");
    return Subset(bits_ | (1u << (i - 1)));
  }
  Subset without(int i) const { return contains(i) ? Subset(bits_ & ~(1u << (i - 1))) : *this; }

  bool is_subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// Number of elements of *this strictly greater than i.
  int count_above(int i) const { return i >= 32 ? 0 : std::popcount(bits_ >> i); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;

  /// "135" when every element is a single digit, "{1,10,12}" otherwise.
  std::string to_string() const {
    auto el = elements();
    bool compact = !el.empty() && el.back() <= 9;
    std::string s = compact ? "" : "{";
    for (std::size_t k = 0; k < el.size(); ++k) {
      if (!compact && k) s += ",";
      s += std::to_string(el[k]);
    }
    if (!compact) s += "}";
    return s;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Lexicographic comparison of the sorted element tuples.
inline bool lex_less(Subset a, Subset b) {
  auto x = a.elements();
  auto y = b.elements();
  return x < y;
}

/// Orders by cardinality, then lexicographically; the basis order used
/// throughout (within one degree it is plain lex order).
struct SubsetOrder {
  bool operator()(Subset a, Subset b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  }
};

/// All k-subsets of {1, ..., n} in lex order.
inline std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(Subset::from_elements(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// Sign of e_A * e_B relative to e_{A u B} in the exterior algebra;
/// 0 when A and B meet.
inline int wedge_sign(Subset a, Subset b) {
  if (a.intersects(b)) return 0;
  int inversions = 0;
  for (int x : b.elements()) inversions += a.count_above(x);
  return inversions % 2 ? -1 : 1;
}

/// Sign that sorts an index tuple, 0 on a repeated index.
inline int sort_sign(const std::vector<int>& tuple) {
  int inversions = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) return 0;
      if (tuple[i] > tuple[j]) ++inversions;
    }
  return inversions % 2 ? -1 : 1;
}

inline long long binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace osgm
