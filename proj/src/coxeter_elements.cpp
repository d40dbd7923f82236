#include "coxanc/coxeter_elements.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "coxanc/error.hpp"

namespace coxanc {

VertexSet EdgeOrientation::predecessors(Generator v) const {
  VertexSet p;
  for (Generator u = 0; u < static_cast<Generator>(successors.size()); ++u) {
    if (successors[u].contains(v)) p.insert(u);
  }
  return p;
}

std::uint64_t EdgeOrientation::key() const {
  std::uint64_t k = 0;
  int bit = 0;
  const int n = graph->n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!graph->adjacent(i, j)) continue;
      if (bit >= 64) throw Error(ErrorKind::TooLarge, "more than 64 edges in the Coxeter graph");
      if (successors[i].contains(j)) k |= std::uint64_t{1} << bit;
      ++bit;
    }
  }
  return k;
}

EdgeOrientation orientation_of(const CoxeterGraph& g, const CoxeterElementWord& c) {
  const int n = g.n;
  std::vector<int> position(n, -1);
  if (static_cast<int>(c.ordering.size()) != n) {
    throw Error(ErrorKind::BadLetter, "a Coxeter element uses each of the " + std::to_string(n) +
                                          " generators exactly once");
  }
  for (int p = 0; p < n; ++p) {
    Generator v = c.ordering[p];
    if (v < 0 || v >= n || position[v] != -1) {
      throw Error(ErrorKind::BadLetter, "ordering is not a permutation of the generators");
    }
    position[v] = p;
  }
  EdgeOrientation o;
  o.graph = &g;
  o.successors.assign(n, VertexSet{});
  o.topological = c.ordering;
  for (Generator v = 0; v < n; ++v) {
    for (Generator u : g.adjacency[v].members()) {
      if (position[v] < position[u]) o.successors[v].insert(u);
    }
  }
  return o;
}

VertexSet coxeter_descents(const EdgeOrientation& o) {
  VertexSet heads;
  for (VertexSet s : o.successors) heads = heads | s;
  return VertexSet::all(static_cast<int>(o.successors.size())).minus(heads);
}

namespace {

std::vector<int> depths(const EdgeOrientation& o) {
  std::vector<int> depth(o.successors.size(), 1);
  for (Generator v : o.topological) {
    for (Generator u : o.successors[v].members()) depth[u] = std::max(depth[u], depth[v] + 1);
  }
  return depth;
}

}  // namespace

std::vector<VertexSet> coxeter_ancestor_decomposition(const EdgeOrientation& o) {
  std::vector<int> depth = depths(o);
  int layers = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
  std::vector<VertexSet> out(layers);
  for (Generator v = 0; v < static_cast<Generator>(depth.size()); ++v) out[depth[v] - 1].insert(v);
  return out;
}

int path_length(const EdgeOrientation& o) {
  std::vector<int> depth = depths(o);
  return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

MinIlenWitness min_ilen_coxeter_element(const CoxeterGraph& g) {
  if (g.n > kGraphVertexGuard) {
    throw Error(ErrorKind::TooLarge, "graph has " + std::to_string(g.n) + " vertices");
  }
  MinIlenWitness out;
  VertexSet remaining = VertexSet::all(g.n);
  while (!remaining.empty()) {
    std::vector<Generator> original = remaining.members();
    CoxeterGraph sub = induced_subgraph(g, remaining);
    Coloring coloring = chromatic_number(sub);
    VertexSet peeled = extend_to_maximal_independent(sub, coloring.classes.front());
    for (Generator v : peeled.members()) {
      out.element.ordering.push_back(original[v]);
      remaining.erase(original[v]);
    }
    ++out.ilen;
  }
  return out;
}

std::vector<DistinctCoxeterElement> distinct_coxeter_elements(const CoxeterGraph& g) {
  if (g.n > kSpectrumRankGuard) {
    throw Error(ErrorKind::TooLarge, "enumerating Coxeter elements is limited to rank " +
                                         std::to_string(kSpectrumRankGuard));
  }
  std::vector<DistinctCoxeterElement> out;
  std::unordered_set<std::uint64_t> seen;
  CoxeterElementWord c;
  c.ordering.resize(g.n);
  std::iota(c.ordering.begin(), c.ordering.end(), 0);
  do {
    EdgeOrientation o = orientation_of(g, c);
    if (!seen.insert(o.key()).second) continue;
    int ilen = path_length(o);
    out.push_back({c, std::move(o), ilen});
  } while (std::next_permutation(c.ordering.begin(), c.ordering.end()));
  return out;
}

std::map<int, std::uint64_t> ilen_spectrum(const CoxeterGraph& g) {
  std::map<int, std::uint64_t> tally;
  for (const auto& e : distinct_coxeter_elements(g)) ++tally[e.ilen];
  return tally;
}

}  // namespace coxanc
