#pragma once

#include <span>
#include <vector>

#include "coxanc/vertex_set.hpp"

namespace coxanc {

// Element of the universal Coxeter group U_n (every m_ij infinite) in its
// unique reduced form: no two adjacent letters are equal.
class FreeWord {
 public:
  static constexpr std::size_t kLengthGuard = 10'000;

  FreeWord() = default;
  // Throws BadLetter for letters outside 0..rank-1 or equal neighbours, and
  // WordTooLong above kLengthGuard.
  FreeWord(int rank, std::vector<Generator> letters);

  // Reduces an arbitrary word by cancelling equal neighbours.
  static FreeWord reduce(int rank, std::span<const Generator> letters);

  int rank() const { return rank_; }
  const std::vector<Generator>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_palindrome() const;
  bool is_involution() const { return !empty() && is_palindrome(); }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_ = 0;
  std::vector<Generator> letters_;
};

// (s_1 s_2 ... s_n)^k, reduced.
FreeWord universal_coxeter_power(int rank, int k);

FreeWord ug_multiply(const FreeWord& a, const FreeWord& b);

// Palindromic nonempty initial segments, shortest first.
std::vector<FreeWord> ug_involution_prefixes(const FreeWord& w);

// Strips the longest palindromic initial segment until nothing is left.
// Throws EmptyWord for the identity.
std::vector<FreeWord> ug_ancestor_decomposition(const FreeWord& w);

}  // namespace coxanc
