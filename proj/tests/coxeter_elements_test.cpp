#include <set>

#include "coxanc/coxeter_elements.hpp"
#include "coxanc/error.hpp"
#include "coxanc/weak_order.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coxanc;

namespace {

CoxeterGraph graph(const std::string& d) { return graph_of(build_matrix(parse_spec(d))); }

CoxeterElementWord ordering(std::initializer_list<int> one_based) {
  CoxeterElementWord c;
  for (int g : one_based) c.ordering.push_back(g - 1);
  return c;
}

std::vector<VertexSet> layers(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<VertexSet> out;
  for (auto s : sets) out.push_back(VertexSet::from_one_based(s));
  return out;
}

}  // namespace

TEST_CASE("orientation_of") {
  CoxeterGraph a3 = graph("A3");
  EdgeOrientation forward = orientation_of(a3, ordering({1, 2, 3}));
  CHECK(forward.successors == std::vector<VertexSet>{VertexSet{1}, VertexSet{2}, VertexSet{}});
  EdgeOrientation inward = orientation_of(a3, ordering({1, 3, 2}));
  CHECK(inward.successors == std::vector<VertexSet>{VertexSet{1}, VertexSet{}, VertexSet{1}});
  CHECK(inward == orientation_of(a3, ordering({3, 1, 2})));
  CHECK_FALSE(inward == forward);

  CoxeterGraph empty = graph("A1xA1xA1");
  for (VertexSet s : orientation_of(empty, ordering({2, 3, 1})).successors) CHECK(s.empty());

  CHECK_THROWS_AS(orientation_of(a3, ordering({1, 2})), Error);
  CHECK_THROWS_AS(orientation_of(a3, ordering({1, 1, 2})), Error);
}

TEST_CASE("coxeter_descents") {
  CHECK(coxeter_descents(orientation_of(graph("A6"), ordering({6, 3, 2, 1, 4, 5}))) ==
        VertexSet::from_one_based({3, 6}));
  CHECK(coxeter_descents(orientation_of(graph("A3"), ordering({1, 2, 3}))) == VertexSet{0});
  CHECK(coxeter_descents(orientation_of(graph("A1xA1xA1"), ordering({1, 2, 3}))) ==
        VertexSet::all(3));
}

TEST_CASE("coxeter_ancestor_decomposition and path_length") {
  EdgeOrientation a6 = orientation_of(graph("A6"), ordering({6, 3, 2, 1, 4, 5}));
  CHECK(coxeter_ancestor_decomposition(a6) == layers({{3, 6}, {2, 4}, {1, 5}}));
  CHECK(path_length(a6) == 3);

  EdgeOrientation d4 = orientation_of(graph("D4"), ordering({1, 2, 3, 4}));
  CHECK(coxeter_ancestor_decomposition(d4) == layers({{1}, {2}, {3, 4}}));

  EdgeOrientation flat = orientation_of(graph("A1xA1xA1"), ordering({3, 1, 2}));
  CHECK(coxeter_ancestor_decomposition(flat) == layers({{1, 2, 3}}));
  CHECK(path_length(flat) == 1);

  for (int n = 1; n <= 8; ++n) {
    CoxeterElementWord c;
    for (int g = 0; g < n; ++g) c.ordering.push_back(g);
    CHECK(path_length(orientation_of(graph("A" + std::to_string(n)), c)) == n);
  }
}

TEST_CASE("layers: first layer is the descent set, every layer independent") {
  for (const char* d : {"A5", "D5", "E6", "F4", "H4", "B4xA2"}) {
    CAPTURE(d);
    CoxeterGraph g = graph(d);
    for (const auto& e : distinct_coxeter_elements(g)) {
      auto ls = coxeter_ancestor_decomposition(e.orientation);
      CHECK(ls.front() == coxeter_descents(e.orientation));
      CHECK(static_cast<int>(ls.size()) == path_length(e.orientation));
      VertexSet all;
      for (VertexSet l : ls) {
        CHECK(g.independent(l));
        CHECK((all & l).empty());
        all = all | l;
      }
      CHECK(all == VertexSet::all(g.n));
      CHECK(g.independent(coxeter_descents(e.orientation)));
    }
  }
}

TEST_CASE("min_ilen_coxeter_element") {
  CHECK(min_ilen_coxeter_element(graph("A7")).ilen == 2);
  CHECK(min_ilen_coxeter_element(graph("E8")).ilen == 2);
  CHECK(min_ilen_coxeter_element(graph("A1xA1xA1")).ilen == 1);
  MinIlenWitness tri = min_ilen_coxeter_element(graph("U3"));
  CHECK(tri.ilen == 3);
  CHECK(oracle::brute_force_chromatic(graph("U3")) == 3);

  MinIlenWitness a5 = min_ilen_coxeter_element(graph("A5"));
  CHECK(a5.element.ordering == std::vector<Generator>{0, 2, 4, 1, 3});

  for (const char* d : {"A6", "D6", "E7", "U4", "B3xU3", "H4"}) {
    CAPTURE(d);
    CoxeterGraph g = graph(d);
    MinIlenWitness w = min_ilen_coxeter_element(g);
    CHECK(path_length(orientation_of(g, w.element)) == w.ilen);
    CHECK(w.ilen == chromatic_number(g).colors);
  }
}

TEST_CASE("ilen_spectrum") {
  CHECK(ilen_spectrum(graph("A2")) == std::map<int, std::uint64_t>{{2, 2}});
  CHECK(ilen_spectrum(graph("A1xA1")) == std::map<int, std::uint64_t>{{1, 1}});
  auto d4 = ilen_spectrum(graph("D4"));
  CHECK(d4.begin()->first == 2);
  CHECK(d4.rbegin()->first == 3);

  for (const char* d : {"A5", "D6", "E6", "U4", "B2xA3"}) {
    CAPTURE(d);
    CoxeterGraph g = graph(d);
    auto s = ilen_spectrum(g);
    CHECK(s.begin()->first == oracle::brute_force_chromatic(g));
    CHECK(s.rbegin()->first == oracle::brute_force_longest_path(g));
  }
  CHECK_THROWS_AS(ilen_spectrum(graph("A10")), Error);
}

TEST_CASE("distinct Coxeter elements agree with group-table ids") {
  for (const char* d : {"A4", "B3", "D4", "H3", "A2xA2"}) {
    CAPTURE(d);
    GroupTable t = build_group_table(build_matrix(parse_spec(d)));
    CoxeterGraph g = graph(d);
    auto elements = distinct_coxeter_elements(g);
    std::set<ElementId> ids;
    for (const auto& e : elements) ids.insert(t.element_from_word(e.representative.ordering));
    CHECK(ids.size() == elements.size());

    // Every ordering lands on the id of its orientation class.
    std::map<std::uint64_t, ElementId> by_key;
    for (const auto& e : elements) by_key[e.orientation.key()] = t.element_from_word(e.representative.ordering);
    CoxeterElementWord c;
    for (int v = 0; v < g.n; ++v) c.ordering.push_back(v);
    do {
      CHECK(by_key.at(orientation_of(g, c).key()) == t.element_from_word(c.ordering));
    } while (std::next_permutation(c.ordering.begin(), c.ordering.end()));

    // One Coxeter number per group.
    std::set<int> orders;
    for (ElementId id : ids) orders.insert(t.element_order(id));
    CHECK(orders.size() == 1);
  }
}

TEST_CASE("graph layers match the group-table decomposition") {
  for (const char* d : {"A4", "B4", "D4", "F4", "H3", "I2(7)"}) {
    CAPTURE(d);
    GroupTable t = build_group_table(build_matrix(parse_spec(d)));
    CoxeterGraph g = graph(d);
    for (const auto& e : distinct_coxeter_elements(g)) {
      ElementId w = t.element_from_word(e.representative.ordering);
      auto dec = std::get<AncestorDecomposition>(ancestor_decomposition(t, w));
      auto ls = coxeter_ancestor_decomposition(e.orientation);
      REQUIRE(ls.size() == dec.factors.size());
      for (std::size_t i = 0; i < ls.size(); ++i) {
        CHECK(t.element_from_word(ls[i].members()) == dec.factors[i]);
      }
      CHECK(std::get<int>(involution_length(t, w)) == path_length(e.orientation));
      CHECK(t.left_descents(w) == coxeter_descents(e.orientation));
    }
  }
}
