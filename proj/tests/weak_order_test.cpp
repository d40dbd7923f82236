#include "coxanc/error.hpp"
#include "coxanc/weak_order.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coxanc;

namespace {

GroupTable table(const std::string& d) { return build_group_table(build_matrix(parse_spec(d))); }

ElementId eval(const GroupTable& t, const std::string& one_based) {
  return t.element_from_word(parse_word(one_based, t.rank()));
}

std::vector<ElementId> ids(const GroupTable& t, std::initializer_list<const char*> words) {
  std::vector<ElementId> out;
  for (const char* w : words) out.push_back(eval(t, w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> factors_of(const DecompositionOutcome& d) {
  REQUIRE(std::holds_alternative<AncestorDecomposition>(d));
  return std::get<AncestorDecomposition>(d).factors;
}

std::vector<ElementId> in_order(const GroupTable& t, std::initializer_list<const char*> words) {
  std::vector<ElementId> out;
  for (const char* w : words) out.push_back(eval(t, w));
  return out;
}

}  // namespace

TEST_CASE("is_prefix") {
  GroupTable a2 = table("A2");
  for (ElementId w = 0; w < a2.order(); ++w) {
    CHECK(is_prefix(a2, kIdentity, w));
    CHECK(is_prefix(a2, w, w));
  }
  CHECK_FALSE(is_prefix(a2, eval(a2, "2"), eval(a2, "1,2")));
  CHECK(is_prefix(a2, eval(a2, "1"), eval(a2, "1,2")));
}

TEST_CASE("prefixes") {
  GroupTable a2 = table("A2");
  CHECK(prefixes(a2, kIdentity).members == std::vector<ElementId>{kIdentity});
  CHECK(prefixes(a2, a2.longest_element()).members.size() == 6);
  CHECK(prefixes(a2, eval(a2, "1,2")).members == ids(a2, {"", "1", "1,2"}));
}

TEST_CASE("involution_prefixes") {
  GroupTable a2 = table("A2");
  CHECK(involution_prefixes(a2, eval(a2, "2")).members == ids(a2, {"2"}));
  CHECK(involution_prefixes(a2, a2.longest_element()).members == ids(a2, {"1", "2", "1,2,1"}));
  CHECK(involution_prefixes(a2, kIdentity).members.empty());
  CHECK(involution_prefixes(a2, kIdentity).involutions_only);
}

TEST_CASE("ancestors and ancestor") {
  GroupTable a2 = table("A2");
  CHECK(ancestors(a2, eval(a2, "1,2")).members == ids(a2, {"1"}));
  CHECK(std::get<ElementId>(ancestor(a2, eval(a2, "1,2"))) == eval(a2, "1"));
  CHECK_THROWS_AS(ancestors(a2, kIdentity), Error);
  CHECK_THROWS_AS(ancestor(a2, kIdentity), Error);
  CHECK_THROWS_AS(ancestor_decomposition(a2, kIdentity), Error);

  GroupTable b3 = table("B3");
  for (ElementId w = 1; w < b3.order(); ++w) {
    if (b3.is_involution(w)) CHECK(std::get<ElementId>(ancestor(b3, w)) == w);
  }

  GroupTable a6 = table("A6");
  ElementId w = eval(a6, "6,3,2,1,4,5");
  CHECK(ancestors(a6, w).members == ids(a6, {"3,6"}));
  CHECK(std::get<ElementId>(ancestor(a6, w)) == eval(a6, "3,6"));
}

TEST_CASE("ancestor decomposition: worked examples") {
  GroupTable a6 = table("A6");
  ElementId w = eval(a6, "6,3,2,1,4,5");
  CHECK(factors_of(ancestor_decomposition(a6, w)) == in_order(a6, {"3,6", "2,4", "1,5"}));
  CHECK(std::get<int>(involution_length(a6, w)) == 3);
  CHECK(factors_of(suffix_ancestor_decomposition(a6, w)) == in_order(a6, {"3", "2,4,6", "1,5"}));

  GroupTable a3 = table("A3");
  CHECK(factors_of(ancestor_decomposition(a3, eval(a3, "1,2,3"))) == in_order(a3, {"1", "2", "3"}));

  GroupTable a2 = table("A2");
  CHECK(factors_of(ancestor_decomposition(a2, a2.longest_element())) ==
        std::vector<ElementId>{a2.longest_element()});
  CHECK(factors_of(suffix_ancestor_decomposition(a2, eval(a2, "1,2"))) == in_order(a2, {"1", "2"}));
  CHECK(std::get<int>(involution_length(a2, kIdentity)) == 0);
  CHECK(std::get<int>(involution_length(a2, eval(a2, "2"))) == 1);
}

TEST_CASE("BFS prefixes equal the whole-group scan") {
  for (const char* d : {"A3", "B3", "H3", "I2(6)", "A1xA2"}) {
    CAPTURE(d);
    GroupTable t = table(d);
    std::vector<int> dist = oracle::cayley_distances(t);
    for (ElementId w = 0; w < t.order(); ++w) {
      CHECK(prefixes(t, w).members == oracle::brute_force_prefixes(t, dist, w));
      if (w != kIdentity) {
        CHECK(ancestors(t, w).members == oracle::brute_force_ancestors(t, dist, w));
      }
    }
    CHECK(prefixes(t, t.longest_element()).members.size() == t.order());
  }
}

TEST_CASE("decomposition invariants") {
  for (const char* d : {"A4", "B3", "D4", "H3", "I2(8)"}) {
    CAPTURE(d);
    GroupTable t = table(d);
    for (ElementId w = 1; w < t.order(); ++w) {
      CHECK_FALSE(ancestors(t, w).members.empty());
      auto outcome = ancestor_decomposition(t, w);
      REQUIRE(std::holds_alternative<AncestorDecomposition>(outcome));
      const auto& dec = std::get<AncestorDecomposition>(outcome);
      ElementId product = kIdentity;
      int total = 0;
      for (ElementId f : dec.factors) {
        CHECK(t.is_involution(f));
        product = t.multiply(product, f);
        total += t.length(f);
      }
      CHECK(product == w);
      CHECK(total == t.length(w));
      CHECK(dec.ilen() <= t.length(w));
      // Factor i is the ancestor of factor_i ... factor_k.
      ElementId tail = w;
      for (ElementId f : dec.factors) {
        CHECK(std::get<ElementId>(ancestor(t, tail)) == f);
        tail = t.multiply(f, tail);
      }
      // Suffix decomposition is the reversed prefix decomposition of w^{-1}.
      auto suffix = std::get<AncestorDecomposition>(suffix_ancestor_decomposition(t, w));
      auto inverse = std::get<AncestorDecomposition>(ancestor_decomposition(t, t.inverse(w)));
      std::reverse(inverse.factors.begin(), inverse.factors.end());
      CHECK(suffix.factors == inverse.factors);
      ElementId suffix_product = kIdentity;
      for (ElementId f : suffix.factors) suffix_product = t.multiply(suffix_product, f);
      CHECK(suffix_product == w);
    }
  }
}

TEST_CASE("prefix sets carry their invariants") {
  GroupTable d4 = table("D4");
  for (ElementId w = 0; w < d4.order(); w += 5) {
    PrefixSet p = involution_prefixes(d4, w);
    CHECK(p.owner == w);
    for (ElementId u : p.members) {
      CHECK(d4.is_involution(u));
      CHECK(d4.length(u) + d4.length(d4.multiply(d4.inverse(u), w)) == d4.length(w));
    }
    // D(w) = ipref(w) intersected with the generators.
    VertexSet generators_in_ipref;
    for (ElementId u : p.members)
      if (d4.length(u) == 1) generators_in_ipref.insert(d4.canonical_reduced_word(u).front());
    CHECK(generators_in_ipref == d4.left_descents(w));
  }
}
