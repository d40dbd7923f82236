#include "coxanc/weak_order.hpp"

#include <algorithm>

#include "coxanc/error.hpp"

namespace coxanc {

namespace {

void require_non_identity(ElementId w) {
  if (w == kIdentity) {
    throw Error(ErrorKind::IdentityHasNoAncestor, "the identity has no ancestor");
  }
}

}  // namespace

bool is_prefix(const GroupTable& t, ElementId u, ElementId w) {
  return t.length(u) + t.length(t.multiply(t.inverse(u), w)) == t.length(w);
}

PrefixSet prefixes(const GroupTable& t, ElementId w) {
  PrefixSet out;
  out.owner = w;
  // Each layer holds (prefix, residual) pairs of one length.
  std::vector<std::pair<ElementId, ElementId>> layer{{kIdentity, w}};
  while (!layer.empty()) {
    std::vector<std::pair<ElementId, ElementId>> next;
    for (auto [u, residual] : layer) {
      out.members.push_back(u);
      for (Generator s : t.left_descents(residual).members()) {
        next.emplace_back(t.right_mul(u, s), t.left_mul(residual, s));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer = std::move(next);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

PrefixSet involution_prefixes(const GroupTable& t, ElementId w) {
  PrefixSet out = prefixes(t, w);
  std::erase_if(out.members, [&](ElementId u) { return !t.is_involution(u); });
  out.involutions_only = true;
  return out;
}

PrefixSet ancestors(const GroupTable& t, ElementId w) {
  require_non_identity(w);
  PrefixSet out = involution_prefixes(t, w);
  int longest = 0;
  for (ElementId u : out.members) longest = std::max(longest, t.length(u));
  std::erase_if(out.members, [&](ElementId u) { return t.length(u) != longest; });
  return out;
}

AncestorOutcome ancestor(const GroupTable& t, ElementId w) {
  PrefixSet a = ancestors(t, w);
  if (a.members.size() == 1) return a.members.front();
  return Ambiguity{w, std::move(a.members)};
}

DecompositionOutcome ancestor_decomposition(const GroupTable& t, ElementId w) {
  require_non_identity(w);
  AncestorDecomposition d;
  d.owner = w;
  for (ElementId rest = w; rest != kIdentity;) {
    AncestorOutcome a = ancestor(t, rest);
    if (auto* amb = std::get_if<Ambiguity>(&a)) return std::move(*amb);
    ElementId factor = std::get<ElementId>(a);
    d.factors.push_back(factor);
    rest = t.multiply(factor, rest);
  }
  return d;
}

DecompositionOutcome suffix_ancestor_decomposition(const GroupTable& t, ElementId w) {
  DecompositionOutcome out = ancestor_decomposition(t, t.inverse(w));
  if (auto* d = std::get_if<AncestorDecomposition>(&out)) {
    std::reverse(d->factors.begin(), d->factors.end());
    d->owner = w;
  }
  return out;
}

IlenOutcome involution_length(const GroupTable& t, ElementId w) {
  if (w == kIdentity) return 0;
  DecompositionOutcome d = ancestor_decomposition(t, w);
  if (auto* amb = std::get_if<Ambiguity>(&d)) return std::move(*amb);
  return std::get<AncestorDecomposition>(d).ilen();
}

}  // namespace coxanc
