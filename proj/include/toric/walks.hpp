#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toric/multiset.hpp"
#include "toric/pi_complex.hpp"
#include "toric/value_set.hpp"

namespace toric {

/// One jump: a not-yet-moved element of the working block sent to the
/// adjacent allowed position.
struct JumpStep {
  Int moved;
  bool upward;
  Int landing;
  Int offset;  // running sum offset after this jump
};

struct ExpansionTrace {
  std::vector<JumpStep> steps;
  std::vector<Int> offsets;                      // s_0 .. s_t, offsets[0] == 0
  std::pair<std::size_t, std::size_t> repeat;    // (j, l), offsets[j] == offsets[l]
  std::vector<Multiset> intermediates;           // C_0 .. C_t
};

struct ExpansionResult {
  Multiset expanded;
  ExpansionTrace trace;
};

namespace detail {

// Remove one copy of `from` and insert `to`, keeping the vector sorted.
inline void replace_one(std::vector<Int>& items, Int from, Int to) {
  items.erase(std::lower_bound(items.begin(), items.end(), from));
  items.insert(std::upper_bound(items.begin(), items.end(), to), to);
}

inline std::optional<std::size_t> earlier_match(const std::vector<Int>& offsets, Int value) {
  for (std::size_t j = 0; j + 1 < offsets.size(); ++j)
    if (offsets[j] == value) return j;
  return std::nullopt;
}

}  // namespace detail

/// One run of the offset-pigeonhole jump procedure on a block C of size r+s
/// that avoids both extremes of V.  Produces C' of the same size and sum with
/// m(A + C') > m(A + C), together with the full trace.
inline ExpansionResult expansion_step(const ValueSet& v, const Multiset& a, const Multiset& c) {
  const GapProfile gp = gap_profile(v);
  const Int window = checked_add(gp.r, gp.s);
  if (static_cast<Int>(c.size()) != window)
    throw std::invalid_argument("block must have exactly r+s elements");
  if (!supported_by(c, v) || !supported_by(a, v))
    throw std::invalid_argument("multiset has values outside the value set");
  if (c.contains(v.min()) || c.contains(v.max()))
    throw std::invalid_argument("block may not contain an extreme of the value set");

  ExpansionTrace trace;
  trace.offsets.push_back(0);
  trace.intermediates.push_back(c);
  std::vector<Int> active = c.items();  // originals not yet moved
  std::vector<Int> cur = c.items();
  bool found = false;
  for (Int i = 1; i <= window && !found; ++i) {
    const Int prev = trace.offsets.back();
    Int moved;
    bool upward;
    if (prev <= 0) {
      moved = active.back();
      active.pop_back();
      upward = true;
    } else {
      moved = active.front();
      active.erase(active.begin());
      upward = false;
    }
    const auto landing = upward ? v.next_above(moved) : v.next_below(moved);
    if (!landing)
      throw invariant_violation("jump fell off the value set despite the extreme-free block");
    detail::replace_one(cur, moved, *landing);
    const Int off = checked_add(prev, checked_sub(*landing, moved));
    trace.steps.push_back({moved, upward, *landing, off});
    trace.offsets.push_back(off);
    trace.intermediates.push_back(Multiset(cur));
    if (auto j = detail::earlier_match(trace.offsets, off)) {
      trace.repeat = {*j, trace.offsets.size() - 1};
      found = true;
    }
  }
  if (!found)
    throw invariant_violation("no repeated offset among r+s+1 running offsets");

  // replay jumps j+1 .. l on the original block
  std::vector<Int> out = c.items();
  for (std::size_t k = trace.repeat.first; k < trace.repeat.second; ++k)
    detail::replace_one(out, trace.steps[k].moved, trace.steps[k].landing);
  Multiset expanded(std::move(out));
  if (expanded.sum() != c.sum() || expanded.size() != c.size())
    throw invariant_violation("replay changed the block's bidegree");
  if (spread_m(add(a, expanded)) <= spread_m(add(a, c)))
    throw invariant_violation("replay failed to spread the multiset out");
  return {std::move(expanded), std::move(trace)};
}

struct WalkResult {
  Multiset meeting;             // Q, intersecting both endpoints
  std::vector<Multiset> chain;  // from P to Q, consecutive members intersecting
};

/// Repeated expansion with a fixed held part until the walk meets `target`.
/// Requires both extremes of P + target to lie in target.
inline WalkResult multiple_expansion(const ValueSet& v, const Multiset& p, const Multiset& target,
                                     Int anchor) {
  if (!p.contains(anchor)) throw std::invalid_argument("anchor must belong to the starting multiset");
  if (!supported_by(p, v) || !supported_by(target, v))
    throw std::invalid_argument("multiset has values outside the value set");
  if (intersects(p, target)) return {p, {p}};

  const GapProfile gp = gap_profile(v);
  const Int window = checked_add(gp.r, gp.s);
  const Bidegree deg = bidegree(p);
  if (bidegree(target) != deg) throw std::invalid_argument("multisets must share a bidegree");
  if (deg.q <= window) throw std::invalid_argument("cardinality must exceed r+s");
  const Int hi = std::max(p.items().back(), target.items().back());
  const Int lo = std::min(p.items().front(), target.items().front());
  if (!target.contains(hi) || !target.contains(lo))
    throw std::invalid_argument("both extremes of P + P' must lie in P'");

  // held part: the anchor plus the largest remaining elements of P
  std::vector<Int> rest = p.items();
  rest.erase(std::lower_bound(rest.begin(), rest.end(), anchor));
  std::vector<Int> held{anchor};
  while (static_cast<Int>(held.size()) < deg.q - window) {
    held.push_back(rest.back());
    rest.pop_back();
  }
  const Multiset fixed_part{std::vector<Int>(held)};
  Multiset block(std::move(rest));

  std::vector<Multiset> chain{p};
  // m strictly increases per round and ranges over at most q(q+1)/2*(max-min)
  // integers, so this cap cannot trip for a correct implementation
  const Int cap =
      checked_add(checked_mul(checked_mul(deg.q, deg.q + 1) / 2, checked_sub(v.max(), v.min())), 2);
  for (Int round = 0; round < cap; ++round) {
    block = expansion_step(v, fixed_part, block).expanded;
    Multiset next = add(fixed_part, block);
    chain.push_back(next);
    if (intersects(next, target)) return {next, std::move(chain)};
  }
  throw invariant_violation("expansion walk failed to reach the target within the round cap");
}

/// The four-way split used by the size argument: X = elements of B below all
/// of B', X' = elements of B' above all of B, Y and Y' the remainders.
struct FourSplit {
  Multiset x;
  Multiset y;
  Multiset x_prime;
  Multiset y_prime;
};

inline FourSplit split_for_size_lemma(const Multiset& b, const Multiset& b_prime) {
  if (b.empty() || b_prime.empty()) throw std::invalid_argument("split requires non-empty multisets");
  const Int lo_prime = b_prime.items().front();
  const Int hi = b.items().back();
  std::vector<Int> x, y, xp, yp;
  for (Int t : b.items()) (t < lo_prime ? x : y).push_back(t);
  for (Int t : b_prime.items()) (t > hi ? xp : yp).push_back(t);
  return {Multiset(std::move(x)), Multiset(std::move(y)), Multiset(std::move(xp)),
          Multiset(std::move(yp))};
}

struct CrissCrossDiagnostics {
  bool reflected = false;
  std::vector<Int> tangled_spread;  // m-tilde of Y at the start of each round
};

namespace detail {

struct CrissCrossSideResult {
  bool success = false;
  Multiset meeting;
  std::vector<Multiset> chain;
  std::vector<Int> tangled_spread;
};

// One orientation of the criss-cross walk.  Any failure (pool exhaustion,
// falling off the value set, cap trip) is reported, not thrown; the caller
// retries the reflected orientation.
inline CrissCrossSideResult run_criss_cross_side(const ValueSet& v, const Multiset& p,
                                                 const Multiset& p_prime, Int window,
                                                 Int round_cap) {
  const Int f = p.items().front();
  const Int f_prime = p_prime.items().back();
  Multiset b = subtract(p, Multiset{f});
  const Multiset b_prime = subtract(p_prime, Multiset{f_prime});

  CrissCrossSideResult res;
  res.chain.push_back(p);
  for (Int round = 0; round < round_cap; ++round) {
    const FourSplit sp = split_for_size_lemma(b, b_prime);
    res.tangled_spread.push_back(spread_m_tilde(sp.y));

    std::vector<Int> active_x = sp.x.items();
    std::vector<Int> active_y = sp.y.items();
    std::vector<Int> offsets{0};
    std::vector<JumpStep> steps;
    std::optional<std::pair<std::size_t, std::size_t>> repeat;
    std::vector<Int> cur = b.items();
    while (!repeat) {
      if (static_cast<Int>(offsets.size()) > window + 1) return res;
      const Int prev = offsets.back();
      Int moved;
      bool upward;
      if (prev <= 0) {
        if (!active_x.empty()) {
          moved = active_x.back();
          active_x.pop_back();
        } else if (!active_y.empty()) {
          moved = active_y.back();
          active_y.pop_back();
        } else {
          return res;
        }
        upward = true;
      } else {
        if (active_y.empty()) return res;
        moved = active_y.front();
        active_y.erase(active_y.begin());
        upward = false;
      }
      const auto landing = upward ? v.next_above(moved) : v.next_below(moved);
      if (!landing) return res;
      replace_one(cur, moved, *landing);
      const Int off = checked_add(prev, checked_sub(*landing, moved));
      steps.push_back({moved, upward, *landing, off});
      offsets.push_back(off);
      if (auto j = earlier_match(offsets, off)) repeat = {{*j, offsets.size() - 1}};
    }

    std::vector<Int> nb = b.items();
    for (std::size_t k = repeat->first; k < repeat->second; ++k)
      replace_one(nb, steps[k].moved, steps[k].landing);
    Multiset moved_block(std::move(nb));
    if (moved_block.sum() != b.sum() || moved_block.size() != b.size())
      throw invariant_violation("criss-cross replay changed the block's bidegree");
    b = std::move(moved_block);

    Multiset next = add(b, Multiset{f});
    res.chain.push_back(next);
    if (intersects(next, p_prime)) {
      res.success = true;
      res.meeting = next;
      return res;
    }
  }
  return res;
}

}  // namespace detail

/// Walk from P towards P' when the extremes of P + P' are split: the maximum
/// in P', the minimum in P.  Tries the direct orientation under a round cap,
/// then the reflected one; at least one terminates.
inline WalkResult criss_cross(const ValueSet& v, const Multiset& p, const Multiset& p_prime,
                              CrissCrossDiagnostics* diag = nullptr) {
  if (!supported_by(p, v) || !supported_by(p_prime, v))
    throw std::invalid_argument("multiset has values outside the value set");
  if (intersects(p, p_prime)) return {p, {p}};

  const GapProfile gp = gap_profile(v);
  const Int window = checked_add(gp.r, gp.s);
  const Bidegree deg = bidegree(p);
  if (bidegree(p_prime) != deg) throw std::invalid_argument("multisets must share a bidegree");
  if (deg.q <= window) throw std::invalid_argument("cardinality must exceed r+s");
  const Int hi = std::max(p.items().back(), p_prime.items().back());
  const Int lo = std::min(p.items().front(), p_prime.items().front());
  if (!p_prime.contains(hi) || !p.contains(lo))
    throw std::invalid_argument("expected max(P+P') in P' and min(P+P') in P");

  const Int round_cap =
      checked_mul(checked_mul(static_cast<Int>(v.size()), deg.q), checked_mul(window, window));

  auto direct = detail::run_criss_cross_side(v, p, p_prime, window, round_cap);
  if (direct.success) {
    if (diag) *diag = {false, std::move(direct.tangled_spread)};
    return {std::move(direct.meeting), std::move(direct.chain)};
  }

  // reflected orientation: negate everything and swap the roles of P and P'
  const ValueSet vr = v.reflect();
  auto mirrored =
      detail::run_criss_cross_side(vr, negate(p_prime), negate(p), window, round_cap);
  if (mirrored.success) {
    Multiset meeting = negate(mirrored.meeting);
    if (diag) *diag = {true, std::move(mirrored.tangled_spread)};
    // the mirrored chain runs from P'; meeting intersects P, so a two-member
    // chain suffices on this side
    return {meeting, {p, meeting}};
  }
  throw invariant_violation("criss-cross walk failed in both orientations");
}

/// Chain of multisets in Pi_(q,c) with consecutive nonempty intersections,
/// witnessing that x and y lie in one component.
struct WalkCertificate {
  std::vector<Multiset> chain;
  Int x = 0;
  Int y = 0;
  Bidegree degree{0, 0};
};

inline bool verify_certificate(const ValueSet& v, const WalkCertificate& cert) {
  try {
    if (cert.chain.empty()) return false;
    for (const Multiset& m : cert.chain) {
      if (!supported_by(m, v)) return false;
      if (bidegree(m) != cert.degree) return false;
    }
    for (std::size_t i = 1; i < cert.chain.size(); ++i)
      if (!intersects(cert.chain[i - 1], cert.chain[i])) return false;
    return cert.chain.front().contains(cert.x) && cert.chain.back().contains(cert.y);
  } catch (...) {
    return false;
  }
}

inline WalkCertificate connect(const PiFamily& fam, Int x, Int y) {
  const ValueSet& v = fam.values;
  const GapProfile gp = gap_profile(v);
  if (fam.degree.q <= checked_add(gp.r, gp.s))
    throw std::invalid_argument("cardinality must exceed r+s");

  const Multiset* p = nullptr;
  const Multiset* p_prime = nullptr;
  for (const Multiset& m : fam.members) {
    if (!p && m.contains(x)) p = &m;
    if (!p_prime && m.contains(y)) p_prime = &m;
    if (p && p_prime) break;
  }
  if (!p) throw std::invalid_argument("x is not a vertex of the complex");
  if (!p_prime) throw std::invalid_argument("y is not a vertex of the complex");

  WalkCertificate cert;
  cert.x = x;
  cert.y = y;
  cert.degree = fam.degree;

  auto push = [&](const Multiset& m) {
    if (cert.chain.empty() || cert.chain.back() != m) cert.chain.push_back(m);
  };

  if (*p == *p_prime) {
    push(*p);
  } else if (intersects(*p, *p_prime)) {
    push(*p);
    push(*p_prime);
  } else {
    const Int hi = std::max(p->items().back(), p_prime->items().back());
    const Int lo = std::min(p->items().front(), p_prime->items().front());
    const bool hi_in_prime = p_prime->contains(hi);
    const bool lo_in_prime = p_prime->contains(lo);
    if (hi_in_prime && lo_in_prime) {
      WalkResult wr = multiple_expansion(v, *p, *p_prime, x);
      for (const Multiset& m : wr.chain) push(m);
      push(*p_prime);
    } else if (!hi_in_prime && !lo_in_prime) {
      WalkResult wr = multiple_expansion(v, *p_prime, *p, y);
      push(*p);
      for (auto it = wr.chain.rbegin(); it != wr.chain.rend(); ++it) push(*it);
    } else if (hi_in_prime) {
      WalkResult wr = criss_cross(v, *p, *p_prime);
      for (const Multiset& m : wr.chain) push(m);
      push(*p_prime);
    } else {
      WalkResult wr = criss_cross(v, *p_prime, *p);
      push(*p);
      for (auto it = wr.chain.rbegin(); it != wr.chain.rend(); ++it) push(*it);
    }
  }

  if (!verify_certificate(v, cert))
    throw invariant_violation("constructed certificate failed verification");
  return cert;
}

inline WalkCertificate connect(const ValueSet& v, Int q, Int c, Int x, Int y) {
  return connect(enumerate_pi(v, q, c), x, y);
}

}  // namespace toric
