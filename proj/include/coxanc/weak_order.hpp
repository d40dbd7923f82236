#pragma once

#include <variant>
#include <vector>

#include "coxanc/group_table.hpp"

namespace coxanc {

// Prefix sets of an element in the (left) weak order.
struct PrefixSet {
  ElementId owner = kIdentity;
  std::vector<ElementId> members;  // ascending ids
  bool involutions_only = false;
};

// w = upr_1 ... upr_k with additive lengths; ilen() is k.
struct AncestorDecomposition {
  ElementId owner = kIdentity;
  std::vector<ElementId> factors;

  int ilen() const { return static_cast<int>(factors.size()); }
};

// |A(w)| > 1: the element violates the ancestor property. Not an error.
struct Ambiguity {
  ElementId owner = kIdentity;
  std::vector<ElementId> witnesses;  // all maximal-length involution prefixes
};

using AncestorOutcome = std::variant<ElementId, Ambiguity>;
using DecompositionOutcome = std::variant<AncestorDecomposition, Ambiguity>;
using IlenOutcome = std::variant<int, Ambiguity>;

bool is_prefix(const GroupTable& t, ElementId u, ElementId w);

// Breadth-first expansion of the interval [1, w]: from a prefix u with
// residual u^{-1}w, each left descent s of the residual gives the prefix us.
PrefixSet prefixes(const GroupTable& t, ElementId w);
PrefixSet involution_prefixes(const GroupTable& t, ElementId w);

// Throws IdentityHasNoAncestor for the identity.
PrefixSet ancestors(const GroupTable& t, ElementId w);
AncestorOutcome ancestor(const GroupTable& t, ElementId w);
DecompositionOutcome ancestor_decomposition(const GroupTable& t, ElementId w);
// Factors of the prefix decomposition of w^{-1}, reversed.
DecompositionOutcome suffix_ancestor_decomposition(const GroupTable& t, ElementId w);

// 0 for the identity.
IlenOutcome involution_length(const GroupTable& t, ElementId w);

}  // namespace coxanc
