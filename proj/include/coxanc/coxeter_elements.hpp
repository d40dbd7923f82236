#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "coxanc/coxeter_system.hpp"
#include "coxanc/graph_analysis.hpp"

namespace coxanc {

// Order in which the generators appear in a Coxeter element; a permutation
// of 0..n-1.
struct CoxeterElementWord {
  std::vector<Generator> ordering;
};

// Every edge of the Coxeter graph directed from the generator that appears
// first to the one that appears later. Two orderings give the same Coxeter
// element exactly when their orientations agree.
struct EdgeOrientation {
  const CoxeterGraph* graph = nullptr;
  // successors[v]: heads of edges leaving v.
  std::vector<VertexSet> successors;
  // A topological order (the ordering that produced the orientation).
  std::vector<Generator> topological;

  VertexSet predecessors(Generator v) const;
  // One bit per edge {i<j}, set when the edge points i -> j; edges are
  // enumerated in lexicographic order.
  std::uint64_t key() const;

  friend bool operator==(const EdgeOrientation& a, const EdgeOrientation& b) {
    return a.successors == b.successors;
  }
};

// Throws BadLetter if the ordering is not a permutation of the vertices.
EdgeOrientation orientation_of(const CoxeterGraph& g, const CoxeterElementWord& c);

// Sources of the orientation; these are the left descents of the element.
VertexSet coxeter_descents(const EdgeOrientation& o);

// Layer i holds the vertices whose longest incoming directed path has
// exactly i+1 vertices. Layer 0 is coxeter_descents(o).
std::vector<VertexSet> coxeter_ancestor_decomposition(const EdgeOrientation& o);

// Vertex count of a longest directed path.
int path_length(const EdgeOrientation& o);

struct MinIlenWitness {
  CoxeterElementWord element;
  int ilen = 0;
};

// Peels an inclusion-maximal independent set (grown from the first class of
// an optimal colouring) and recurses on the remaining generators.
MinIlenWitness min_ilen_coxeter_element(const CoxeterGraph& g);

constexpr int kSpectrumRankGuard = 9;

struct DistinctCoxeterElement {
  CoxeterElementWord representative;  // lexicographically least ordering
  EdgeOrientation orientation;
  int ilen = 0;
};

// All Coxeter elements, one per commutation class, in order of their least
// representative ordering. Throws TooLarge above kSpectrumRankGuard.
std::vector<DistinctCoxeterElement> distinct_coxeter_elements(const CoxeterGraph& g);

// ilen -> number of distinct Coxeter elements with that ilen.
std::map<int, std::uint64_t> ilen_spectrum(const CoxeterGraph& g);

}  // namespace coxanc
