#include "coxanc/group_table.hpp"

#include <bit>
#include <charconv>
#include <string>
#include <unordered_map>

#include "coxanc/error.hpp"

namespace coxanc {

GroupTable::GroupTable(const RootSystem& roots, std::uint64_t order_guard)
    : rank_(roots.rank()), positive_roots_(roots.positive_count), matrix_(roots.matrix) {
  const int n = rank_;
  const int size = roots.size();
  const int npos = roots.positive_count;

  // Elements are identified by the images of the simple roots; full root
  // permutations are kept only while the table is being built.
  std::vector<RootId> perms(size);
  for (int k = 0; k < size; ++k) perms[k] = static_cast<RootId>(k);
  std::unordered_map<std::string, ElementId> ids;
  auto key_of = [n](const RootId* images) {
    return std::string(reinterpret_cast<const char*>(images), n * sizeof(RootId));
  };
  ids.emplace(key_of(perms.data()), kIdentity);
  std::vector<std::uint16_t> depth{0};

  std::vector<RootId> key(n);
  for (std::size_t w = 0; w < depth.size(); ++w) {
    for (Generator i = 0; i < n; ++i) {
      const RootId* pw = perms.data() + w * size;
      const std::vector<RootId>& si = roots.reflect[i];
      for (int j = 0; j < n; ++j) key[j] = pw[si[j]];
      auto [it, inserted] = ids.try_emplace(key_of(key.data()), static_cast<ElementId>(depth.size()));
      if (inserted) {
        if (depth.size() >= order_guard) {
          throw Error(ErrorKind::OrderGuardExceeded,
                      "group has more than " + std::to_string(order_guard) + " elements");
        }
        depth.push_back(static_cast<std::uint16_t>(depth[w] + 1));
        perms.resize(perms.size() + size);
        pw = perms.data() + w * size;
        RootId* out = perms.data() + (depth.size() - 1) * size;
        for (int beta = 0; beta < size; ++beta) out[beta] = pw[si[beta]];
      }
      right_.push_back(it->second);
    }
  }

  const std::size_t order = depth.size();
  length_.resize(order);
  inverse_.resize(order);
  left_descent_.resize(order);
  right_descent_.resize(order);
  left_.resize(order * n);
  for (std::size_t w = 0; w < order; ++w) {
    const RootId* pw = perms.data() + w * size;
    int inversions = 0;
    std::uint32_t rdesc = 0;
    std::uint32_t ldesc = 0;
    for (int beta = 0; beta < npos; ++beta) {
      if (!roots.is_positive(pw[beta])) ++inversions;
    }
    for (int j = 0; j < n; ++j) {
      if (!roots.is_positive(pw[j])) rdesc |= 1u << j;
    }
    // w^{-1}(a_j) is the root beta with w(beta) = a_j.
    for (int beta = 0; beta < size; ++beta) {
      if (pw[beta] < n) {
        key[pw[beta]] = static_cast<RootId>(beta);
        if (!roots.is_positive(static_cast<RootId>(beta))) ldesc |= 1u << pw[beta];
      }
    }
    length_[w] = static_cast<std::uint16_t>(inversions);
    right_descent_[w] = rdesc;
    left_descent_[w] = ldesc;
    inverse_[w] = ids.at(key_of(key.data()));
  }
  for (std::size_t w = 0; w < order; ++w) {
    for (Generator i = 0; i < n; ++i) {
      left_[w * n + i] = inverse_[right_mul(inverse_[w], i)];
    }
  }

  // Root-sign rules must agree with the combinatorial length.
  for (std::size_t w = 0; w < order; ++w) {
    auto id = static_cast<ElementId>(w);
    bool ok = length_[w] == depth[w];
    for (Generator i = 0; i < n && ok; ++i) {
      int right_len = length(right_mul(id, i));
      int left_len = length(left_mul(id, i));
      ok = std::abs(right_len - length(id)) == 1 && std::abs(left_len - length(id)) == 1 &&
           has_left_descent(id, i) == (left_len < length(id)) &&
           right_descents(id).contains(i) == (right_len < length(id));
    }
    if (!ok) {
      throw Error(ErrorKind::NumericalInstability,
                  "length/descent audit failed at element " + std::to_string(w));
    }
  }
}

ElementId GroupTable::element_from_word(std::span<const Generator> word) const {
  ElementId w = kIdentity;
  for (Generator g : word) {
    if (g < 0 || g >= rank_) {
      throw Error(ErrorKind::BadLetter, "letter " + std::to_string(g + 1) +
                                            " outside 1.." + std::to_string(rank_));
    }
    w = right_mul(w, g);
  }
  return w;
}

Word GroupTable::canonical_reduced_word(ElementId w) const {
  Word word;
  word.reserve(length(w));
  while (w != kIdentity) {
    Generator g = std::countr_zero(left_descent_[w]);
    word.push_back(g);
    w = left_mul(w, g);
  }
  return word;
}

ElementId GroupTable::multiply(ElementId u, ElementId v) const {
  // u * v = u * s_1 ... s_k where s_1...s_k is any word for v; peel v from
  // the left to avoid materialising the word.
  while (v != kIdentity) {
    Generator g = std::countr_zero(left_descent_[v]);
    u = right_mul(u, g);
    v = left_mul(v, g);
  }
  return u;
}

bool GroupTable::is_involution(ElementId w) const {
  return w != kIdentity && inverse_[w] == w;
}

int GroupTable::element_order(ElementId w) const {
  int k = 1;
  for (ElementId p = w; p != kIdentity; p = multiply(p, w)) ++k;
  return k;
}

VertexSet GroupTable::support(ElementId w) const {
  VertexSet s;
  for (Generator g : canonical_reduced_word(w)) s.insert(g);
  return s;
}

GroupTable build_group_table(const CoxeterMatrix& m, std::uint64_t order_guard, int root_cap) {
  return GroupTable(build_root_system(m, root_cap), order_guard);
}

Word parse_word(std::string_view text, int rank) {
  Word word;
  if (text.empty()) return word;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int letter = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), letter);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorKind::BadLetter, "cannot parse letter '" + std::string(item) + "'");
    }
    if (letter < 1 || letter > rank) {
      throw Error(ErrorKind::BadLetter, "letter " + std::to_string(letter) + " outside 1.." +
                                            std::to_string(rank));
    }
    word.push_back(letter - 1);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return word;
}

std::string format_word(std::span<const Generator> word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(word[k] + 1);
  }
  return out;
}

}  // namespace coxanc
