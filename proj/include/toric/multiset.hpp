#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "toric/value_set.hpp"

namespace toric {

/// Integer multiset kept in non-decreasing order; may be empty.
class Multiset {
public:
  Multiset() = default;
  explicit Multiset(std::vector<Int> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
  }
  Multiset(std::initializer_list<Int> items) : Multiset(std::vector<Int>(items)) {}

  const std::vector<Int>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  Int sum() const {
    Int total = 0;
    for (Int x : items_) total = checked_add(total, x);
    return total;
  }

  bool contains(Int x) const { return std::binary_search(items_.begin(), items_.end(), x); }

  auto operator<=>(const Multiset&) const = default;

private:
  std::vector<Int> items_;
};

/// (cardinality, sum) of a monomial's exponent multiset.
struct Bidegree {
  Int q;
  Int c;
  bool operator==(const Bidegree&) const = default;
};

inline Bidegree bidegree(const Multiset& p) { return {static_cast<Int>(p.size()), p.sum()}; }

/// m(P) = sum_i i*x_i over the sorted items, 1-based.  Among multisets of
/// equal size and sum it grows as P spreads out.
inline Int spread_m(const Multiset& p) {
  Int total = 0;
  Int i = 1;
  for (Int x : p.items()) total = checked_add(total, checked_mul(i++, x));
  return total;
}

/// Reverse-weighted companion sum_i (p+1-i)*x_i; shrinks as the multiset
/// spreads out.
inline Int spread_m_tilde(const Multiset& d) {
  Int total = 0;
  Int w = static_cast<Int>(d.size());
  for (Int x : d.items()) total = checked_add(total, checked_mul(w--, x));
  return total;
}

inline Multiset add(const Multiset& p, const Multiset& q) {
  std::vector<Int> merged;
  merged.reserve(p.size() + q.size());
  std::merge(p.items().begin(), p.items().end(), q.items().begin(), q.items().end(),
             std::back_inserter(merged));
  return Multiset(std::move(merged));
}

/// Multiplicity-wise difference; q must be contained in p.
inline Multiset subtract(const Multiset& p, const Multiset& q) {
  std::vector<Int> out;
  out.reserve(p.size());
  auto qi = q.items().begin();
  for (Int x : p.items()) {
    if (qi != q.items().end() && *qi == x) {
      ++qi;
    } else if (qi != q.items().end() && *qi < x) {
      throw std::invalid_argument("subtrahend is not contained in the multiset");
    } else {
      out.push_back(x);
    }
  }
  if (qi != q.items().end()) throw std::invalid_argument("subtrahend is not contained in the multiset");
  return Multiset(std::move(out));
}

inline bool intersects(const Multiset& p, const Multiset& q) {
  auto pi = p.items().begin();
  auto qi = q.items().begin();
  while (pi != p.items().end() && qi != q.items().end()) {
    if (*pi == *qi) return true;
    if (*pi < *qi)
      ++pi;
    else
      ++qi;
  }
  return false;
}

inline std::vector<Int> support(const Multiset& p) {
  std::vector<Int> out(p.items());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool supported_by(const Multiset& p, const ValueSet& v) {
  for (Int x : support(p))
    if (!v.contains(x)) return false;
  return true;
}

inline Multiset negate(const Multiset& p) {
  std::vector<Int> out(p.items());
  for (Int& x : out) x = checked_sub(0, x);
  return Multiset(std::move(out));
}

}  // namespace toric
