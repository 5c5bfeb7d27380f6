#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/multiset.hpp"
#include "toric/pi_complex.hpp"
#include "toric/rank.hpp"
#include "toric/value_set.hpp"

namespace toric {

/// z^plus - z^minus with both sides of the same bidegree.
struct Binomial {
  Multiset plus;
  Multiset minus;
  Bidegree degree;
};

struct GeneratorEntry {
  Int q;
  Int c;
  Int component_count;  // k
  Int generator_count;  // k - 1
  std::vector<Binomial> binomials;
};

struct GeneratorReport {
  Int bound;  // r+s of the gcd-normalized value set; 0 for the zero ideal
  bool zero_ideal = false;
  std::vector<GeneratorEntry> entries;  // sorted by (q, c)
};

struct RankResult {
  Int dim_ideal;       // dim I_(q,c)
  Int dim_lower;       // dim I^<_(q,c)
  Int min_gen_count;   // difference
};

/// r+s of the gcd-normalized value set; 0 when the normalized set has only
/// two elements (the ideal is zero).
inline Int degree_bound(const ValueSet& v) {
  const NormalizedValueSet norm = normalize(v);
  if (norm.values.size() == 2) return 0;
  const GapProfile gp = gap_profile(norm.values);
  return checked_add(gp.r, gp.s);
}

/// Per-bidegree detection of minimal generators by component count, with
/// deterministic representative binomials.  Bidegrees are reported in the raw
/// coordinates of v; the scan depth comes from the normalized bound.
inline GeneratorReport generator_bidegrees(const ValueSet& v) {
  GeneratorReport report;
  report.bound = degree_bound(v);
  report.zero_ideal = (v.size() == 2);
  if (report.zero_ideal) return report;

  for (Int q = 2; q <= report.bound; ++q) {
    const auto [c_lo, c_hi] = feasible_c_range(v, q);
    for (Int c = c_lo; c <= c_hi; ++c) {
      const PiFamily fam = enumerate_pi(v, q, c);
      const ComponentStructure cs = components(fam);
      if (cs.component_count < 2) continue;

      GeneratorEntry entry{q, c, cs.component_count, cs.component_count - 1, {}};
      const Multiset& base = fam.members.front();
      const Int base_component = cs.member_component.front();
      std::vector<Int> seen{base_component};
      for (std::size_t i = 1; i < fam.members.size(); ++i) {
        const Int comp = cs.member_component[i];
        if (std::find(seen.begin(), seen.end(), comp) != seen.end()) continue;
        seen.push_back(comp);
        entry.binomials.push_back({fam.members[i], base, fam.degree});
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

/// Exact-rank computation of dim I_(q,c) and dim I^<_(q,c) from the spanning
/// descriptions: all differences of coordinate vectors, and differences over
/// intersecting pairs only.
inline RankResult rank_oracle(const PiFamily& fam) {
  const std::size_t n = fam.members.size();
  if (n == 0) return {0, 0, 0};

  auto difference_row = [](std::size_t i, std::size_t j) {
    IntegerRowBasis::SparseRow row{{i, 1}, {j, -1}};
    if (i > j) std::swap(row[0], row[1]);
    return row;
  };

  // The all-pairs spanning set collapses to consecutive differences by
  // telescoping, e_i - e_j = sum of e_k - e_{k+1}; the rank itself still
  // comes from elimination.  Every difference row is orthogonal to the
  // all-ones vector, so n-1 is a hard ceiling and streaming can stop there.
  IntegerRowBasis full(n);
  for (std::size_t j = 1; j < n && full.rank() < static_cast<Int>(n) - 1; ++j)
    full.insert_sparse(difference_row(j - 1, j));

  // Differences over intersecting pairs: two members intersect exactly when
  // they share a value of V, so the pair set is the union over values of
  // all pairs within that value's member group, and each group's pairwise
  // differences telescope the same way.
  IntegerRowBasis lower(n);
  for (Int value : fam.values.elements()) {
    std::vector<std::size_t> group;
    for (std::size_t i = 0; i < n; ++i)
      if (fam.members[i].contains(value)) group.push_back(i);
    for (std::size_t g = 1; g < group.size() && lower.rank() < static_cast<Int>(n) - 1; ++g)
      lower.insert_sparse(difference_row(group[g - 1], group[g]));
    if (lower.rank() == static_cast<Int>(n) - 1) break;
  }

  return {full.rank(), lower.rank(), full.rank() - lower.rank()};
}

inline RankResult rank_oracle(const ValueSet& v, Int q, Int c) {
  return rank_oracle(enumerate_pi(v, q, c));
}

struct TheoremCheck {
  bool pass = true;
  std::optional<std::pair<Int, Int>> counterexample;  // (q, c) of the first failure
  Int cells_checked = 0;
};

/// Sweeps connectivity for q in (r+s, r+s+extra] over every feasible c, on
/// the raw value set and on its gcd-normalization.  A failure indicates an
/// implementation bug, never a flaw in the bound.
inline TheoremCheck verify_main_theorem(const ValueSet& v, Int extra) {
  if (v.size() < 3) throw std::invalid_argument("need at least three values");
  if (extra < 0) throw std::invalid_argument("extra must be non-negative");

  TheoremCheck result;
  auto sweep = [&](const ValueSet& w) {
    const GapProfile gp = gap_profile(w);
    const Int bound = checked_add(gp.r, gp.s);
    for (Int q = bound + 1; q <= checked_add(bound, extra) && result.pass; ++q) {
      const auto [c_lo, c_hi] = feasible_c_range(w, q);
      for (Int c = c_lo; c <= c_hi; ++c) {
        ++result.cells_checked;
        if (!is_connected(w, q, c)) {
          result.pass = false;
          result.counterexample = {q, c};
          break;
        }
      }
    }
  };
  sweep(v);
  if (result.pass) sweep(normalize(v).values);
  return result;
}

/// Renders z^plus - z^minus with variables z_1..z_n indexed by position in v.
inline std::string render_binomial(const Binomial& b, const ValueSet& v) {
  if (b.plus == b.minus) throw std::invalid_argument("binomial sides must differ");
  if (!supported_by(b.plus, v) || !supported_by(b.minus, v))
    throw std::invalid_argument("binomial support outside the value set");

  auto monomial = [&](const Multiset& m) {
    if (m.empty()) return std::string("1");
    std::string out;
    const auto& e = v.elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
      Int mult = 0;
      for (Int x : m.items())
        if (x == e[i]) ++mult;
      if (mult == 0) continue;
      if (!out.empty()) out += "*";
      out += "z" + std::to_string(i + 1);
      if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
  };
  return monomial(b.plus) + " - " + monomial(b.minus);
}

}  // namespace toric
