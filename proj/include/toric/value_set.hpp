#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = std::int64_t;

// A state that the termination arguments rule out.  Reaching one of these
// means an implementation bug, never bad input; callers should not catch it.
struct invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

/// Strictly increasing finite set of integer exponents {a_1 < ... < a_n}.
class ValueSet {
public:
  explicit ValueSet(std::vector<Int> values) : elems_(std::move(values)) {
    if (elems_.size() < 2) throw std::invalid_argument("value set needs at least 2 values");
    for (std::size_t i = 1; i < elems_.size(); ++i)
      if (elems_[i] <= elems_[i - 1])
        throw std::invalid_argument("value set must be strictly increasing without duplicates");
  }
  ValueSet(std::initializer_list<Int> values) : ValueSet(std::vector<Int>(values)) {}

  const std::vector<Int>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  Int min() const { return elems_.front(); }
  Int max() const { return elems_.back(); }

  bool contains(Int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

  /// Least element strictly greater than x; empty at the maximum.
  std::optional<Int> next_above(Int x) const {
    require_member(x);
    auto it = std::upper_bound(elems_.begin(), elems_.end(), x);
    if (it == elems_.end()) return std::nullopt;
    return *it;
  }

  /// Greatest element strictly less than x; empty at the minimum.
  std::optional<Int> next_below(Int x) const {
    require_member(x);
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    if (it == elems_.begin()) return std::nullopt;
    return *(it - 1);
  }

  /// {-v : v in V}.  Preserves the multiset of gaps.
  ValueSet reflect() const {
    std::vector<Int> neg(elems_.rbegin(), elems_.rend());
    for (auto& v : neg) v = checked_sub(0, v);
    return ValueSet(std::move(neg));
  }

  bool operator==(const ValueSet&) const = default;

private:
  void require_member(Int x) const {
    if (!contains(x))
      throw std::invalid_argument("value " + std::to_string(x) + " is not in the value set");
  }

  std::vector<Int> elems_;
};

/// Successive differences of a ValueSet together with the two largest, r >= s.
struct GapProfile {
  std::vector<Int> gaps;
  Int r;  // largest gap
  Int s;  // second-largest gap (one copy of r removed)
};

inline GapProfile gap_profile(const ValueSet& v) {
  if (v.size() < 3) throw std::invalid_argument("need at least two gaps");
  GapProfile gp;
  gp.gaps.reserve(v.size() - 1);
  const auto& e = v.elements();
  for (std::size_t i = 1; i < e.size(); ++i) gp.gaps.push_back(checked_sub(e[i], e[i - 1]));
  std::vector<Int> sorted = gp.gaps;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  gp.r = sorted[0];
  gp.s = sorted[1];
  return gp;
}

/// V rewritten as {scale*v + offset : v in V'} with min(V') = 0 and the
/// successive differences of V' coprime.
struct NormalizedValueSet {
  ValueSet values;
  Int scale;
  Int offset;
};

inline NormalizedValueSet normalize(const ValueSet& v) {
  const auto& e = v.elements();
  Int g = 0;
  for (std::size_t i = 1; i < e.size(); ++i) g = std::gcd(g, checked_sub(e[i], e[i - 1]));
  const Int offset = v.min();
  std::vector<Int> scaled;
  scaled.reserve(e.size());
  for (Int x : e) scaled.push_back(checked_sub(x, offset) / g);
  return {ValueSet(std::move(scaled)), g, offset};
}

}  // namespace toric
