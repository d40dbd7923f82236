#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace coxanc {

// Generator index, 0-based internally. Everything printed for users is 1-based.
using Generator = int;

constexpr int kMaxRank = 32;

// Subset of the generators of a Coxeter system, stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Generator> members) {
    for (Generator g : members) insert(g);
  }

  static VertexSet from_one_based(std::initializer_list<int> members) {
    VertexSet s;
    for (int g : members) s.insert(g - 1);
    return s;
  }
  static constexpr VertexSet all(int n) {
    return VertexSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }

  constexpr bool contains(Generator g) const { return (bits_ >> g) & 1u; }
  constexpr void insert(Generator g) { bits_ |= std::uint32_t{1} << g; }
  constexpr void erase(Generator g) { bits_ &= ~(std::uint32_t{1} << g); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }

  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

  // Ascending order.
  std::vector<Generator> members() const {
    std::vector<Generator> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // "{1, 3}" with 1-based labels.
  std::string to_string() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace coxanc
