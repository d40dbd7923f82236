#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <vector>

#include "coxanc/coxeter_system.hpp"
#include "coxanc/group_table.hpp"

namespace coxanc::oracle {

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Closed-form orders of the finite irreducible types.
inline std::uint64_t classical_order(const SystemComponent& c) {
  const int n = c.rank;
  switch (c.family) {
    case 'A': return factorial(n + 1);
    case 'B': return (std::uint64_t{1} << n) * factorial(n);
    case 'D': return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'H': return n == 3 ? 120 : 14400;
    case 'I': return 2 * static_cast<std::uint64_t>(c.dihedral_label);
  }
  return 0;
}

inline std::uint64_t classical_order(const SystemSpec& s) {
  std::uint64_t order = 1;
  for (const auto& c : s.components) order *= classical_order(c);
  return order;
}

// Distances from the identity in the right Cayley graph, using only the
// right multiplication table.
inline std::vector<int> cayley_distances(const GroupTable& t) {
  std::vector<int> dist(t.order(), -1);
  std::queue<ElementId> q;
  dist[kIdentity] = 0;
  q.push(kIdentity);
  while (!q.empty()) {
    ElementId w = q.front();
    q.pop();
    for (Generator i = 0; i < t.rank(); ++i) {
      ElementId x = t.right_mul(w, i);
      if (dist[x] == -1) {
        dist[x] = dist[w] + 1;
        q.push(x);
      }
    }
  }
  return dist;
}

// Product via the right multiplication table only: u * (word of v).
inline ElementId slow_multiply(const GroupTable& t, ElementId u, ElementId v) {
  for (Generator g : t.canonical_reduced_word(v)) u = t.right_mul(u, g);
  return u;
}

inline ElementId slow_inverse(const GroupTable& t, ElementId w) {
  Word word = t.canonical_reduced_word(w);
  std::reverse(word.begin(), word.end());
  return t.element_from_word(word);
}

// {u : l(u) + l(u^{-1} w) = l(w)} by scanning the whole group.
inline std::vector<ElementId> brute_force_prefixes(const GroupTable& t,
                                                   const std::vector<int>& dist, ElementId w) {
  std::vector<ElementId> out;
  for (ElementId u = 0; u < t.order(); ++u) {
    ElementId rest = slow_multiply(t, slow_inverse(t, u), w);
    if (dist[u] + dist[rest] == dist[w]) out.push_back(u);
  }
  return out;
}

inline bool slow_is_involution(const GroupTable& t, ElementId w) {
  return w != kIdentity && slow_multiply(t, w, w) == kIdentity;
}

// Maximal-length involution prefixes from the brute-force scan.
inline std::vector<ElementId> brute_force_ancestors(const GroupTable& t,
                                                    const std::vector<int>& dist, ElementId w) {
  std::vector<ElementId> inv;
  for (ElementId u : brute_force_prefixes(t, dist, w)) {
    if (slow_is_involution(t, u)) inv.push_back(u);
  }
  int longest = 0;
  for (ElementId u : inv) longest = std::max(longest, dist[u]);
  std::erase_if(inv, [&](ElementId u) { return dist[u] != longest; });
  return inv;
}

// Involution length of every element from the brute-force ancestors,
// processed by increasing length; -1 where some step is ambiguous.
inline std::vector<int> brute_force_ilen(const GroupTable& t, const std::vector<int>& dist) {
  std::vector<ElementId> by_length(t.order());
  std::iota(by_length.begin(), by_length.end(), ElementId{0});
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](ElementId a, ElementId b) { return dist[a] < dist[b]; });
  std::vector<int> ilen(t.order(), -1);
  ilen[kIdentity] = 0;
  for (ElementId w : by_length) {
    if (w == kIdentity) continue;
    auto anc = brute_force_ancestors(t, dist, w);
    if (anc.size() != 1) continue;
    ElementId rest = slow_multiply(t, slow_inverse(t, anc.front()), w);
    if (ilen[rest] >= 0) ilen[w] = ilen[rest] + 1;
  }
  return ilen;
}

// Smallest k admitting a proper k-colouring, by trying every assignment.
inline int brute_force_chromatic(const CoxeterGraph& g) {
  for (int k = 1; k <= g.n; ++k) {
    std::vector<int> color(g.n, 0);
    while (true) {
      bool proper = true;
      for (int a = 0; a < g.n && proper; ++a)
        for (int b = a + 1; b < g.n && proper; ++b)
          if (g.adjacent(a, b) && color[a] == color[b]) proper = false;
      if (proper) return k;
      int pos = 0;
      while (pos < g.n && ++color[pos] == k) color[pos++] = 0;
      if (pos == g.n) break;
    }
  }
  return g.n;
}

// Every simple path is an initial run of some vertex permutation.
inline int brute_force_longest_path(const CoxeterGraph& g) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = g.n > 0 ? 1 : 0;
  do {
    int run = 1;
    while (run < g.n && g.adjacent(perm[run - 1], perm[run])) ++run;
    best = std::max(best, run);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Standard types of rank <= max_rank (dihedral labels 3..max_dihedral).
inline std::vector<std::string> standard_types(int max_rank, int max_dihedral) {
  std::vector<std::string> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 2; n <= max_rank; ++n) out.push_back("B" + std::to_string(n));
  for (int n = 4; n <= max_rank; ++n) out.push_back("D" + std::to_string(n));
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back("E" + std::to_string(n));
  if (max_rank >= 4) out.push_back("F4");
  for (int n = 3; n <= std::min(4, max_rank); ++n) out.push_back("H" + std::to_string(n));
  for (int m = 3; m <= max_dihedral; ++m) out.push_back("I2(" + std::to_string(m) + ")");
  return out;
}

}  // namespace coxanc::oracle
