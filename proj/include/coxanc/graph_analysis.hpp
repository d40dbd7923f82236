#pragma once

#include <vector>

#include "coxanc/coxeter_system.hpp"
#include "coxanc/vertex_set.hpp"

namespace coxanc {

// Exact algorithms on small Coxeter graphs. All of them refuse graphs with
// more than kGraphVertexGuard vertices (TooLarge).
constexpr int kGraphVertexGuard = 16;

struct Coloring {
  int colors = 0;
  // One independent class per colour; classes are listed by their smallest
  // vertex.
  std::vector<VertexSet> classes;
};

// Iterative deepening over k = 1, 2, ... with backtracking; vertices are
// coloured in ascending order and always take the least admissible colour,
// so the witness is deterministic.
Coloring chromatic_number(const CoxeterGraph& g);

// Number of vertices on a longest simple path (an isolated vertex counts 1).
int longest_path_order(const CoxeterGraph& g);

bool is_bipartite(const CoxeterGraph& g);

// Adds every eligible vertex in ascending index order. Throws NotIndependent
// if s already contains an edge.
VertexSet extend_to_maximal_independent(const CoxeterGraph& g, VertexSet s);

// Graph induced on `keep`, with vertices renumbered 0..|keep|-1 in ascending
// order of their original index.
CoxeterGraph induced_subgraph(const CoxeterGraph& g, VertexSet keep);

}  // namespace coxanc
