#include "coxanc/root_system.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "coxanc/error.hpp"

namespace coxanc {

namespace {

// Distances between this and the snap tolerance mean two roots are neither
// clearly equal nor clearly distinct.
constexpr double kAmbiguityBand = 1e-4;

double bilinear(const CoxeterMatrix& m, Generator i, Generator j) {
  if (i == j) return 1.0;
  Bond b = m.at(i, j);
  if (b == kInfiniteBond) return -1.0;
  return -std::cos(std::numbers::pi / static_cast<double>(b));
}

class RootIndex {
 public:
  explicit RootIndex(std::vector<Root>& roots) : roots_(roots) {}

  // Returns the id of the root within tolerance of v, or -1.
  int find(const std::vector<double>& v) const {
    int hit = -1;
    for (const Root& r : roots_) {
      double dist = 0.0;
      for (std::size_t k = 0; k < v.size(); ++k) {
        dist = std::max(dist, std::abs(r.coords[k] - v[k]));
        if (dist > kAmbiguityBand) break;
      }
      if (dist <= kRootSnapTolerance) {
        if (hit != -1) {
          throw Error(ErrorKind::NumericalInstability,
                      "two roots lie within the snap tolerance of a reflected root");
        }
        hit = r.id;
      } else if (dist <= kAmbiguityBand) {
        throw Error(ErrorKind::NumericalInstability,
                    "reflected root is within " + std::to_string(dist) +
                        " of an existing root but outside the snap tolerance");
      }
    }
    return hit;
  }

 private:
  std::vector<Root>& roots_;
};

int permutation_order_of_product(const std::vector<RootId>& a, const std::vector<RootId>& b,
                                 int limit) {
  const std::size_t size = a.size();
  std::vector<RootId> power(size);
  for (std::size_t k = 0; k < size; ++k) power[k] = static_cast<RootId>(k);
  for (int order = 1; order <= limit; ++order) {
    bool identity = true;
    for (std::size_t k = 0; k < size; ++k) {
      power[k] = a[b[power[k]]];
      identity = identity && power[k] == k;
    }
    if (identity) return order;
  }
  return -1;
}

void audit(const RootSystem& rs) {
  const int n = rs.rank();
  const int size = rs.size();
  for (int i = 0; i < n; ++i) {
    const auto& p = rs.reflect[i];
    std::vector<bool> hit(size, false);
    for (int beta = 0; beta < size; ++beta) {
      if (p[beta] >= size || hit[p[beta]] || p[p[beta]] != beta) {
        throw Error(ErrorKind::NumericalInstability,
                    "generator " + std::to_string(i + 1) +
                        " does not act as an involutive permutation of the roots");
      }
      hit[p[beta]] = true;
      if (rs.negate(p[beta]) != p[rs.negate(static_cast<RootId>(beta))]) {
        throw Error(ErrorKind::NumericalInstability,
                    "generator " + std::to_string(i + 1) + " does not commute with negation");
      }
    }
    for (int j = i + 1; j < n; ++j) {
      Bond m = rs.matrix.at(i, j);
      int order = permutation_order_of_product(p, rs.reflect[j], static_cast<int>(m) + 1);
      if (m == kInfiniteBond || order != static_cast<int>(m)) {
        throw Error(ErrorKind::NumericalInstability,
                    "order of s_" + std::to_string(i + 1) + " s_" + std::to_string(j + 1) +
                        " on the roots is " + std::to_string(order) + ", expected " +
                        std::to_string(m));
      }
    }
  }
}

}  // namespace

RootSystem build_root_system(const CoxeterMatrix& m, int cap) {
  m.validate();
  const int n = m.rank();
  if (cap < 2 * n) {
    throw Error(ErrorKind::RankOutOfRange, "root cap must be at least twice the rank");
  }
  if (cap > std::numeric_limits<RootId>::max()) cap = std::numeric_limits<RootId>::max();

  std::vector<std::vector<double>> gram(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = bilinear(m, i, j);

  RootSystem rs;
  rs.matrix = m;
  std::vector<Root>& roots = rs.roots;
  for (int i = 0; i < n; ++i) {
    Root r;
    r.coords.assign(n, 0.0);
    r.coords[i] = 1.0;
    r.id = static_cast<RootId>(i);
    roots.push_back(std::move(r));
  }

  // Positive roots only: s_i permutes the positive roots other than a_i.
  std::vector<std::vector<int>> image(n);
  RootIndex index(roots);
  for (std::size_t at = 0; at < roots.size(); ++at) {
    for (int i = 0; i < n; ++i) {
      image[i].resize(roots.size(), -1);
      if (static_cast<int>(at) == i) continue;
      const std::vector<double>& beta = roots[at].coords;
      double pairing = 0.0;
      for (int k = 0; k < n; ++k) pairing += gram[i][k] * beta[k];
      std::vector<double> gamma = beta;
      gamma[i] -= 2.0 * pairing;
      for (double c : gamma) {
        if (c < -kRootSnapTolerance) {
          throw Error(ErrorKind::NumericalInstability,
                      "reflection of a positive root produced a mixed-sign vector");
        }
      }
      int id = index.find(gamma);
      if (id == -1) {
        if (2 * static_cast<int>(roots.size() + 1) > cap) {
          throw Error(ErrorKind::NotFinite,
                      "root system exceeds " + std::to_string(cap) +
                          " roots; the group is treated as infinite");
        }
        Root r;
        r.coords = std::move(gamma);
        r.id = static_cast<RootId>(roots.size());
        id = r.id;
        roots.push_back(std::move(r));
      }
      image[i][at] = id;
    }
  }

  const int npos = static_cast<int>(roots.size());
  rs.positive_count = npos;
  for (int k = 0; k < npos; ++k) {
    Root neg;
    neg.coords = roots[k].coords;
    for (double& c : neg.coords) c = -c;
    neg.positive = false;
    neg.id = static_cast<RootId>(npos + k);
    roots.push_back(std::move(neg));
  }

  rs.reflect.assign(n, std::vector<RootId>(2 * npos));
  for (int i = 0; i < n; ++i) {
    image[i].resize(npos, -1);
    for (int k = 0; k < npos; ++k) {
      RootId to = k == i ? static_cast<RootId>(npos + i) : static_cast<RootId>(image[i][k]);
      rs.reflect[i][k] = to;
      rs.reflect[i][rs.negate(static_cast<RootId>(k))] = rs.negate(to);
    }
  }
  audit(rs);
  return rs;
}

}  // namespace coxanc
