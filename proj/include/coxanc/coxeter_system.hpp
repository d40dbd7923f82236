#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxanc/vertex_set.hpp"

namespace coxanc {

// Bond label m_ij. The value 0 stands for infinity, both in memory and in
// matrix files.
using Bond = std::uint32_t;
constexpr Bond kInfiniteBond = 0;

class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  // Identity-diagonal matrix with every off-diagonal entry equal to 2.
  explicit CoxeterMatrix(int rank);

  int rank() const { return rank_; }
  Bond at(Generator i, Generator j) const { return m_[i * rank_ + j]; }
  void set(Generator i, Generator j, Bond m);

  // m_ij >= 3 or infinite.
  bool joined(Generator i, Generator j) const {
    Bond m = at(i, j);
    return i != j && (m == kInfiniteBond || m >= 3);
  }
  bool commute(Generator i, Generator j) const { return at(i, j) == 2; }

  // Throws InvalidMatrix unless the diagonal is 1 and off-diagonal entries
  // are symmetric and >= 2 (or infinite).
  void validate() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  int rank_ = 0;
  std::vector<Bond> m_;
};

// Line 1: n. Then the strict upper triangle row by row, whitespace separated,
// 0 meaning infinity.
CoxeterMatrix read_matrix(std::istream& in);
CoxeterMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix(std::ostream& out, const CoxeterMatrix& m);

struct SystemComponent {
  // Canonical tag, e.g. "A5", "I2(7)", "U3", "file:tri.cox".
  std::string tag;
  // 'A'..'I', 'U', or 'X' for an explicit matrix file.
  char family = 'A';
  int rank = 0;
  // Bond label for I2(m); 0 encodes infinity.
  Bond dihedral_label = 0;
  // Loaded at parse time for file components.
  std::optional<CoxeterMatrix> explicit_matrix;
};

struct SystemSpec {
  std::string descriptor;
  int rank = 0;
  std::vector<SystemComponent> components;
};

// TYPE := NAME RANK | "I2(" m ")" | TYPE "x" TYPE | "file:" PATH
// A "file:" component extends to the end of the descriptor.
SystemSpec parse_spec(std::string_view descriptor);

// Block-diagonal over the components, m_ij = 2 across blocks.
CoxeterMatrix build_matrix(const SystemSpec& spec);

struct CoxeterGraph {
  int n = 0;
  // adjacency[i] holds the neighbours of vertex i.
  std::vector<VertexSet> adjacency;
  // Bond labels, copied from the matrix; labels[i][j] is meaningful only
  // for adjacent vertices.
  std::vector<std::vector<Bond>> labels;

  bool adjacent(Generator i, Generator j) const { return adjacency[i].contains(j); }
  int edge_count() const;
  bool independent(VertexSet s) const;
  bool connected() const;

  static CoxeterGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
};

CoxeterGraph graph_of(const CoxeterMatrix& m);

}  // namespace coxanc
