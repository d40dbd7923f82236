#include "coxanc/coxeter_system.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "coxanc/error.hpp"

namespace coxanc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownType: return "UnknownType";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::NumericalInstability: return "NumericalInstability";
    case ErrorKind::OrderGuardExceeded: return "OrderGuardExceeded";
    case ErrorKind::BadLetter: return "BadLetter";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotIndependent: return "NotIndependent";
    case ErrorKind::IdentityHasNoAncestor: return "IdentityHasNoAncestor";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::WordTooLong: return "WordTooLong";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Generator g : members()) {
    if (!first) out += ", ";
    out += std::to_string(g + 1);
    first = false;
  }
  return out + "}";
}

CoxeterMatrix::CoxeterMatrix(int rank) : rank_(rank), m_(rank * rank, 2) {
  for (int i = 0; i < rank; ++i) m_[i * rank + i] = 1;
}

void CoxeterMatrix::set(Generator i, Generator j, Bond m) {
  m_[i * rank_ + j] = m;
  m_[j * rank_ + i] = m;
}

void CoxeterMatrix::validate() const {
  if (rank_ < 1 || rank_ > kMaxRank) {
    throw Error(ErrorKind::RankOutOfRange,
                "matrix rank " + std::to_string(rank_) + " outside 1.." +
                    std::to_string(kMaxRank));
  }
  for (int i = 0; i < rank_; ++i) {
    if (at(i, i) != 1) {
      throw Error(ErrorKind::InvalidMatrix,
                  "diagonal entry m[" + std::to_string(i + 1) + "][" +
                      std::to_string(i + 1) + "] is not 1");
    }
    for (int j = i + 1; j < rank_; ++j) {
      if (at(i, j) != at(j, i)) {
        throw Error(ErrorKind::InvalidMatrix, "matrix is not symmetric at (" +
                                                  std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1) + ")");
      }
      if (at(i, j) == 1) {
        throw Error(ErrorKind::InvalidMatrix,
                    "off-diagonal entry m[" + std::to_string(i + 1) + "][" +
                        std::to_string(j + 1) + "] must be >= 2 or 0 (infinity)");
      }
    }
  }
}

CoxeterMatrix read_matrix(std::istream& in) {
  long long n = 0;
  if (!(in >> n)) throw Error(ErrorKind::InvalidMatrix, "matrix file: missing rank");
  if (n < 1 || n > kMaxRank) {
    throw Error(ErrorKind::RankOutOfRange,
                "matrix file: rank " + std::to_string(n) + " outside 1.." +
                    std::to_string(kMaxRank));
  }
  CoxeterMatrix m(static_cast<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      long long v = 0;
      if (!(in >> v)) {
        throw Error(ErrorKind::InvalidMatrix, "matrix file: upper triangle truncated");
      }
      if (v < 0 || v == 1) {
        throw Error(ErrorKind::InvalidMatrix,
                    "matrix file: entry " + std::to_string(v) + " at (" +
                        std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") must be >= 2 or 0 (infinity)");
      }
      m.set(i, j, static_cast<Bond>(v));
    }
  }
  std::string rest;
  if (in >> rest) throw Error(ErrorKind::InvalidMatrix, "matrix file: trailing data");
  m.validate();
  return m;
}

CoxeterMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open matrix file " + path.string());
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const CoxeterMatrix& m) {
  out << m.rank() << '\n';
  for (int i = 0; i < m.rank(); ++i) {
    bool first = true;
    for (int j = i + 1; j < m.rank(); ++j) {
      if (!first) out << ' ';
      out << m.at(i, j);
      first = false;
    }
    if (i + 1 < m.rank()) out << '\n';
  }
  out << '\n';
}

namespace {

[[noreturn]] void out_of_range(std::string_view tag, std::string_view why) {
  throw Error(ErrorKind::RankOutOfRange,
              "type " + std::string(tag) + ": " + std::string(why));
}

int parse_positive(std::string_view digits, std::string_view tag) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorKind::UnknownType, "cannot parse type '" + std::string(tag) + "'");
  }
  return value;
}

SystemComponent parse_component(std::string_view tag) {
  SystemComponent c;
  if (tag.starts_with("file:")) {
    std::string path(tag.substr(5));
    if (path.empty()) throw Error(ErrorKind::UnknownType, "empty matrix file path");
    c.family = 'X';
    c.tag = "file:" + path;
    c.explicit_matrix = read_matrix_file(path);
    c.rank = c.explicit_matrix->rank();
    return c;
  }
  if (tag.starts_with("I2(")) {
    if (!tag.ends_with(")")) {
      throw Error(ErrorKind::UnknownType, "cannot parse type '" + std::string(tag) + "'");
    }
    std::string_view label = tag.substr(3, tag.size() - 4);
    c.family = 'I';
    c.rank = 2;
    if (label == "inf" || label == "oo" || label == "0") {
      c.dihedral_label = kInfiniteBond;
      c.tag = "I2(inf)";
    } else {
      int m = parse_positive(label, tag);
      if (m < 3) out_of_range(tag, "I2(m) requires m >= 3");
      c.dihedral_label = static_cast<Bond>(m);
      c.tag = "I2(" + std::to_string(m) + ")";
    }
    return c;
  }
  if (tag.empty()) throw Error(ErrorKind::UnknownType, "empty type in descriptor");
  char family = tag.front();
  if (std::string_view("ABDEFHU").find(family) == std::string_view::npos) {
    throw Error(ErrorKind::UnknownType, "unknown type '" + std::string(tag) + "'");
  }
  int n = parse_positive(tag.substr(1), tag);
  switch (family) {
    case 'A': if (n < 1) out_of_range(tag, "A_n requires n >= 1"); break;
    case 'B': if (n < 2) out_of_range(tag, "B_n requires n >= 2"); break;
    case 'D': if (n < 4) out_of_range(tag, "D_n requires n >= 4"); break;
    case 'E': if (n < 6 || n > 8) out_of_range(tag, "E_n requires 6 <= n <= 8"); break;
    case 'F': if (n != 4) out_of_range(tag, "only F4 exists"); break;
    case 'H': if (n < 3 || n > 4) out_of_range(tag, "H_n requires n = 3 or 4"); break;
    case 'U': if (n < 1) out_of_range(tag, "U_n requires n >= 1"); break;
  }
  if (n > kMaxRank) out_of_range(tag, "rank exceeds " + std::to_string(kMaxRank));
  c.family = family;
  c.rank = n;
  c.tag = std::string(1, family) + std::to_string(n);
  return c;
}

void fill_component(CoxeterMatrix& m, int offset, const SystemComponent& c) {
  auto bond = [&](int i, int j, Bond label) { m.set(offset + i, offset + j, label); };
  const int n = c.rank;
  switch (c.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, 3);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, i + 2 == n ? 4 : 3);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, 3);
      bond(n - 3, n - 1, 3);
      break;
    case 'E':
      // 1-3-4-5-...-n with 2 attached to 4.
      bond(0, 2, 3);
      bond(1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1, 3);
      break;
    case 'F':
      bond(0, 1, 3);
      bond(1, 2, 4);
      bond(2, 3, 3);
      break;
    case 'H':
      bond(0, 1, 5);
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, 3);
      break;
    case 'I':
      bond(0, 1, c.dihedral_label);
      break;
    case 'U':
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) bond(i, j, kInfiniteBond);
      break;
    case 'X':
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) bond(i, j, c.explicit_matrix->at(i, j));
      break;
  }
}

}  // namespace

SystemSpec parse_spec(std::string_view descriptor) {
  if (descriptor.empty()) throw Error(ErrorKind::UnknownType, "empty descriptor");
  SystemSpec spec;
  std::string_view rest = descriptor;
  while (!rest.empty()) {
    std::string_view tag;
    if (rest.starts_with("file:")) {
      tag = rest;
      rest = {};
    } else {
      std::size_t cut = rest.find('x');
      tag = rest.substr(0, cut);
      rest = cut == std::string_view::npos ? std::string_view{} : rest.substr(cut + 1);
      if (cut != std::string_view::npos && rest.empty()) {
        throw Error(ErrorKind::UnknownType, "dangling 'x' in descriptor");
      }
    }
    spec.components.push_back(parse_component(tag));
    spec.rank += spec.components.back().rank;
  }
  if (spec.rank > kMaxRank) {
    throw Error(ErrorKind::RankOutOfRange,
                "total rank " + std::to_string(spec.rank) + " exceeds " +
                    std::to_string(kMaxRank));
  }
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    if (i > 0) spec.descriptor += 'x';
    spec.descriptor += spec.components[i].tag;
  }
  return spec;
}

CoxeterMatrix build_matrix(const SystemSpec& spec) {
  CoxeterMatrix m(spec.rank);
  int offset = 0;
  for (const auto& c : spec.components) {
    fill_component(m, offset, c);
    offset += c.rank;
  }
  m.validate();
  return m;
}

int CoxeterGraph::edge_count() const {
  int twice = 0;
  for (VertexSet s : adjacency) twice += s.size();
  return twice / 2;
}

bool CoxeterGraph::independent(VertexSet s) const {
  for (Generator v : s.members()) {
    if (!(adjacency[v] & s).empty()) return false;
  }
  return true;
}

bool CoxeterGraph::connected() const {
  if (n == 0) return true;
  VertexSet seen{0};
  VertexSet frontier{0};
  while (!frontier.empty()) {
    VertexSet next;
    for (Generator v : frontier.members()) next = next | adjacency[v];
    frontier = next.minus(seen);
    seen = seen | frontier;
  }
  return seen == VertexSet::all(n);
}

CoxeterGraph CoxeterGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  CoxeterMatrix m(n);
  for (auto [a, b] : edges) m.set(a, b, 3);
  return graph_of(m);
}

CoxeterGraph graph_of(const CoxeterMatrix& m) {
  CoxeterGraph g;
  g.n = m.rank();
  g.adjacency.assign(g.n, VertexSet{});
  g.labels.assign(g.n, std::vector<Bond>(g.n, 2));
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) {
      g.labels[i][j] = m.at(i, j);
      if (m.joined(i, j)) g.adjacency[i].insert(j);
    }
  }
  return g;
}

}  // namespace coxanc
