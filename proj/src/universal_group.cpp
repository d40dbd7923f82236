#include "coxanc/universal_group.hpp"

#include <algorithm>
#include <string>

#include "coxanc/error.hpp"

namespace coxanc {

namespace {

void check_length(std::size_t length) {
  if (length > FreeWord::kLengthGuard) {
    throw Error(ErrorKind::WordTooLong, "word of length " + std::to_string(length) +
                                            " exceeds " + std::to_string(FreeWord::kLengthGuard));
  }
}

bool palindromic(std::span<const Generator> s) {
  return std::equal(s.begin(), s.begin() + s.size() / 2, s.rbegin());
}

// Manacher radii over the interleaved sequence, so that any segment can be
// tested for being a palindrome in constant time.
class PalindromeRadii {
 public:
  explicit PalindromeRadii(std::span<const Generator> s) : radius_(2 * s.size() + 1, 0) {
    // Position 2k+1 is letter k; even positions are separators.
    const auto m = static_cast<std::ptrdiff_t>(radius_.size());
    auto at = [&](std::ptrdiff_t p) { return p % 2 == 0 ? Generator{-1} : s[p / 2]; };
    std::ptrdiff_t centre = 0;
    std::ptrdiff_t right = 0;
    for (std::ptrdiff_t p = 0; p < m; ++p) {
      std::ptrdiff_t r = p < right ? std::min(right - p, radius_[2 * centre - p]) : 0;
      while (p - r - 1 >= 0 && p + r + 1 < m && at(p - r - 1) == at(p + r + 1)) ++r;
      radius_[p] = r;
      if (p + r > right) {
        centre = p;
        right = p + r;
      }
    }
  }

  // Segment [begin, end) of the original sequence.
  bool palindrome(std::size_t begin, std::size_t end) const {
    return static_cast<std::size_t>(radius_[begin + end]) >= end - begin;
  }

 private:
  std::vector<std::ptrdiff_t> radius_;
};

}  // namespace

FreeWord::FreeWord(int rank, std::vector<Generator> letters)
    : rank_(rank), letters_(std::move(letters)) {
  check_length(letters_.size());
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (letters_[k] < 0 || letters_[k] >= rank_) {
      throw Error(ErrorKind::BadLetter, "letter " + std::to_string(letters_[k] + 1) +
                                            " outside 1.." + std::to_string(rank_));
    }
    if (k > 0 && letters_[k] == letters_[k - 1]) {
      throw Error(ErrorKind::BadLetter, "adjacent equal letters at position " + std::to_string(k));
    }
  }
}

FreeWord FreeWord::reduce(int rank, std::span<const Generator> letters) {
  std::vector<Generator> stack;
  for (Generator g : letters) {
    if (!stack.empty() && stack.back() == g) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return FreeWord(rank, std::move(stack));
}

bool FreeWord::is_palindrome() const { return palindromic(letters_); }

FreeWord universal_coxeter_power(int rank, int k) {
  if (rank < 1 || k < 0) throw Error(ErrorKind::RankOutOfRange, "need rank >= 1 and k >= 0");
  check_length(static_cast<std::size_t>(rank) * static_cast<std::size_t>(k));
  std::vector<Generator> letters;
  for (int rep = 0; rep < k; ++rep)
    for (Generator g = 0; g < rank; ++g) letters.push_back(g);
  return FreeWord::reduce(rank, letters);
}

FreeWord ug_multiply(const FreeWord& a, const FreeWord& b) {
  std::vector<Generator> joined = a.letters();
  std::size_t from = 0;
  while (!joined.empty() && from < b.length() && joined.back() == b.letters()[from]) {
    joined.pop_back();
    ++from;
  }
  check_length(joined.size() + b.length() - from);
  joined.insert(joined.end(), b.letters().begin() + static_cast<std::ptrdiff_t>(from),
                b.letters().end());
  return FreeWord(std::max(a.rank(), b.rank()), std::move(joined));
}

std::vector<FreeWord> ug_involution_prefixes(const FreeWord& w) {
  std::vector<FreeWord> out;
  std::span<const Generator> all(w.letters());
  for (std::size_t len = 1; len <= all.size(); ++len) {
    if (palindromic(all.first(len))) {
      out.emplace_back(w.rank(), std::vector<Generator>(all.begin(), all.begin() + len));
    }
  }
  return out;
}

std::vector<FreeWord> ug_ancestor_decomposition(const FreeWord& w) {
  if (w.empty()) throw Error(ErrorKind::EmptyWord, "the identity has no ancestor decomposition");
  const std::span<const Generator> all(w.letters());
  const PalindromeRadii radii(all);
  std::vector<FreeWord> factors;
  for (std::size_t start = 0; start < all.size();) {
    std::size_t end = all.size();
    while (!radii.palindrome(start, end)) --end;
    factors.emplace_back(w.rank(), std::vector<Generator>(all.begin() + start, all.begin() + end));
    start = end;
  }
  return factors;
}

}  // namespace coxanc
