#include "coxanc/graph_analysis.hpp"

#include <algorithm>
#include <string>

#include "coxanc/error.hpp"

namespace coxanc {

namespace {

void check_guard(const CoxeterGraph& g) {
  if (g.n > kGraphVertexGuard) {
    throw Error(ErrorKind::TooLarge, "graph has " + std::to_string(g.n) +
                                         " vertices; limit is " +
                                         std::to_string(kGraphVertexGuard));
  }
}

bool color_from(const CoxeterGraph& g, int v, int k, std::vector<int>& color) {
  if (v == g.n) return true;
  // Symmetry breaking: vertex v may open at most one new colour.
  int used = 0;
  for (int u = 0; u < v; ++u) used = std::max(used, color[u] + 1);
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool ok = true;
    for (Generator u : g.adjacency[v].members()) {
      if (u < v && color[u] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v] = c;
    if (color_from(g, v + 1, k, color)) return true;
  }
  color[v] = -1;
  return false;
}

int longest_from(const CoxeterGraph& g, Generator v, VertexSet visited) {
  int best = 1;
  for (Generator u : g.adjacency[v].minus(visited).members()) {
    VertexSet next = visited;
    next.insert(u);
    best = std::max(best, 1 + longest_from(g, u, next));
  }
  return best;
}

}  // namespace

Coloring chromatic_number(const CoxeterGraph& g) {
  check_guard(g);
  Coloring out;
  if (g.n == 0) return out;
  std::vector<int> color(g.n, -1);
  for (int k = 1; k <= g.n; ++k) {
    if (!color_from(g, 0, k, color)) continue;
    out.colors = k;
    out.classes.assign(k, VertexSet{});
    for (int v = 0; v < g.n; ++v) out.classes[color[v]].insert(v);
    return out;
  }
  return out;  // unreachable: n colours always suffice
}

int longest_path_order(const CoxeterGraph& g) {
  check_guard(g);
  int best = 0;
  for (Generator v = 0; v < g.n; ++v) {
    VertexSet start;
    start.insert(v);
    best = std::max(best, longest_from(g, v, start));
    if (best == g.n) break;
  }
  return best;
}

bool is_bipartite(const CoxeterGraph& g) {
  std::vector<int> side(g.n, -1);
  for (Generator root = 0; root < g.n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::vector<Generator> stack{root};
    while (!stack.empty()) {
      Generator v = stack.back();
      stack.pop_back();
      for (Generator u : g.adjacency[v].members()) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

VertexSet extend_to_maximal_independent(const CoxeterGraph& g, VertexSet s) {
  if (!g.independent(s)) {
    throw Error(ErrorKind::NotIndependent, "vertex set " + s.to_string() + " contains an edge");
  }
  for (Generator v = 0; v < g.n; ++v) {
    if (!s.contains(v) && (g.adjacency[v] & s).empty()) s.insert(v);
  }
  return s;
}

CoxeterGraph induced_subgraph(const CoxeterGraph& g, VertexSet keep) {
  std::vector<Generator> kept = keep.members();
  CoxeterGraph h;
  h.n = static_cast<int>(kept.size());
  h.adjacency.assign(h.n, VertexSet{});
  h.labels.assign(h.n, std::vector<Bond>(h.n, 2));
  for (int a = 0; a < h.n; ++a) {
    for (int b = 0; b < h.n; ++b) {
      h.labels[a][b] = g.labels[kept[a]][kept[b]];
      if (g.adjacent(kept[a], kept[b])) h.adjacency[a].insert(b);
    }
  }
  return h;
}

}  // namespace coxanc
