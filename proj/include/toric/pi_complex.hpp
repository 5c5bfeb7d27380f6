#pragma once

#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

#include "toric/multiset.hpp"
#include "toric/value_set.hpp"

namespace toric {

/// All multisets with support in V, cardinality q and sum c, in
/// item-lexicographic order.
struct PiFamily {
  ValueSet values;
  Bidegree degree;
  std::vector<Multiset> members;
};

inline PiFamily enumerate_pi(const ValueSet& v, Int q, Int c) {
  if (q < 0) throw std::invalid_argument("cardinality must be non-negative");
  // overflow guard on the largest partial sums the search can touch
  checked_mul(q, std::max(std::abs(v.min()), std::abs(v.max())));

  PiFamily fam{v, Bidegree{q, c}, {}};
  const auto& e = v.elements();
  std::vector<Int> cur;
  cur.reserve(static_cast<std::size_t>(q));

  auto rec = [&](auto&& self, std::size_t idx, Int rem, Int target) -> void {
    if (rem == 0) {
      if (target == 0) fam.members.push_back(Multiset(cur));
      return;
    }
    if (idx == e.size()) return;
    // remaining values lie in [e[idx], e.back()]
    if (target < rem * e[idx] || target > rem * e.back()) return;
    for (Int mult = rem; mult >= 0; --mult) {
      for (Int k = 0; k < mult; ++k) cur.push_back(e[idx]);
      self(self, idx + 1, rem - mult, target - mult * e[idx]);
      for (Int k = 0; k < mult; ++k) cur.pop_back();
    }
  };
  rec(rec, 0, q, c);
  return fam;
}

/// Component decomposition of the complex generated by member supports.
/// Component ids are the smallest vertex of each component; members with
/// empty support (only possible at q = 0) carry the sentinel id -1 and do
/// not contribute a component.
struct ComponentStructure {
  std::vector<Int> vertex_set;
  std::map<Int, Int> component_of;
  Int component_count = 0;  // k
  std::vector<Int> member_component;
};

inline ComponentStructure components(const PiFamily& fam) {
  ComponentStructure cs;
  std::map<Int, std::size_t> index_of;
  for (const Multiset& m : fam.members)
    for (Int x : support(m)) index_of.emplace(x, 0);
  std::size_t next = 0;
  for (auto& [vtx, idx] : index_of) {
    cs.vertex_set.push_back(vtx);
    idx = next++;
  }

  std::vector<std::size_t> parent(cs.vertex_set.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  for (const Multiset& m : fam.members) {
    auto sup = support(m);
    for (std::size_t i = 1; i < sup.size(); ++i) unite(index_of[sup[i - 1]], index_of[sup[i]]);
  }

  // id of a component = its smallest vertex (vertex_set is ascending)
  std::map<std::size_t, Int> root_id;
  for (std::size_t i = 0; i < cs.vertex_set.size(); ++i)
    root_id.emplace(find(i), cs.vertex_set[i]);
  for (std::size_t i = 0; i < cs.vertex_set.size(); ++i)
    cs.component_of[cs.vertex_set[i]] = root_id[find(i)];
  cs.component_count = static_cast<Int>(root_id.size());

  cs.member_component.reserve(fam.members.size());
  for (const Multiset& m : fam.members) {
    if (m.empty())
      cs.member_component.push_back(-1);
    else
      cs.member_component.push_back(cs.component_of[m.items().front()]);
  }
  return cs;
}

inline ComponentStructure components(const ValueSet& v, Int q, Int c) {
  return components(enumerate_pi(v, q, c));
}

inline bool is_connected(const ValueSet& v, Int q, Int c) {
  return components(v, q, c).component_count <= 1;
}

/// Every nonempty family with cardinality q has its sum in this closed range.
inline std::pair<Int, Int> feasible_c_range(const ValueSet& v, Int q) {
  if (q < 0) throw std::invalid_argument("cardinality must be non-negative");
  return {checked_mul(q, v.min()), checked_mul(q, v.max())};
}

}  // namespace toric
