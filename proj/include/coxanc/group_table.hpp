#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coxanc/root_system.hpp"
#include "coxanc/vertex_set.hpp"

namespace coxanc {

using ElementId = std::uint32_t;
constexpr ElementId kIdentity = 0;

// Sequence of 0-based generator indices.
using Word = std::vector<Generator>;

constexpr std::uint64_t kDefaultOrderGuard = 1'000'000;

// Full multiplication data for a finite Coxeter group.
//
// Ids follow breadth-first order from the identity under right
// multiplication, which is length order with ties broken by the
// lexicographically least reduced word. The table is immutable once built
// and safe to share between threads.
class GroupTable {
 public:
  // Throws OrderGuardExceeded once more than `order_guard` elements appear.
  explicit GroupTable(const RootSystem& roots,
                      std::uint64_t order_guard = kDefaultOrderGuard);

  int rank() const { return rank_; }
  std::size_t order() const { return length_.size(); }
  int positive_root_count() const { return positive_roots_; }
  const CoxeterMatrix& matrix() const { return matrix_; }

  int length(ElementId w) const { return length_[w]; }
  ElementId inverse(ElementId w) const { return inverse_[w]; }
  // w * s_i
  ElementId right_mul(ElementId w, Generator i) const { return right_[w * rank_ + i]; }
  // s_i * w
  ElementId left_mul(ElementId w, Generator i) const { return left_[w * rank_ + i]; }
  VertexSet left_descents(ElementId w) const { return VertexSet(left_descent_[w]); }
  VertexSet right_descents(ElementId w) const { return VertexSet(right_descent_[w]); }
  bool has_left_descent(ElementId w, Generator i) const { return (left_descent_[w] >> i) & 1u; }

  ElementId longest_element() const { return static_cast<ElementId>(order() - 1); }

  // Left-to-right evaluation of any word; throws BadLetter for letters
  // outside 0..rank-1.
  ElementId element_from_word(std::span<const Generator> word) const;
  // Lexicographically least reduced word, peeled off via the least left
  // descent at each step.
  Word canonical_reduced_word(ElementId w) const;

  ElementId multiply(ElementId u, ElementId v) const;
  bool is_involution(ElementId w) const;
  int element_order(ElementId w) const;
  VertexSet support(ElementId w) const;

 private:
  int rank_ = 0;
  int positive_roots_ = 0;
  CoxeterMatrix matrix_;
  std::vector<ElementId> right_;
  std::vector<ElementId> left_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint16_t> length_;
  std::vector<std::uint32_t> left_descent_;
  std::vector<std::uint32_t> right_descent_;
};

// Builds the root system and the table in one step.
GroupTable build_group_table(const CoxeterMatrix& m,
                             std::uint64_t order_guard = kDefaultOrderGuard,
                             int root_cap = kDefaultRootCap);

// 1-based comma-separated rendering/parsing: "6,3,2,1,4,5" <-> {5,2,1,0,3,4}.
// parse_word throws BadLetter on malformed input or letters outside 1..rank.
Word parse_word(std::string_view text, int rank);
std::string format_word(std::span<const Generator> word);

}  // namespace coxanc
