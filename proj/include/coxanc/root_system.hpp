#pragma once

#include <cstdint>
#include <vector>

#include "coxanc/coxeter_system.hpp"

namespace coxanc {

using RootId = std::uint16_t;

struct Root {
  std::vector<double> coords;  // in the basis of simple roots
  bool positive = true;
  RootId id = 0;
};

// Finite root system in the standard geometric representation, where
// B(a_i, a_j) = -cos(pi / m_ij) and -1 for infinite bonds.
//
// Ids 0..N-1 are the positive roots, with the simple roots first (id i is
// a_i); id N + k is the negative of root k.
struct RootSystem {
  CoxeterMatrix matrix;
  int positive_count = 0;
  std::vector<Root> roots;
  // reflect[i][beta] = id of s_i(beta), for all 2N roots.
  std::vector<std::vector<RootId>> reflect;

  int rank() const { return matrix.rank(); }
  int size() const { return 2 * positive_count; }
  bool is_positive(RootId id) const { return id < positive_count; }
  RootId negate(RootId id) const {
    return static_cast<RootId>(id < positive_count ? id + positive_count : id - positive_count);
  }
};

constexpr double kRootSnapTolerance = 1e-8;
constexpr int kDefaultRootCap = 4096;

// Closes the simple roots under the simple reflections. Throws NotFinite once
// more than `cap` roots appear, and NumericalInstability when a reflected
// root cannot be identified unambiguously or the generator permutations fail
// the combinatorial audit (bijective involutions with (s_i s_j)^m_ij = 1 of
// exact order m_ij).
RootSystem build_root_system(const CoxeterMatrix& m, int cap = kDefaultRootCap);

}  // namespace coxanc
