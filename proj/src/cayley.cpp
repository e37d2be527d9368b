#include "bhr/cayley.hpp"

#include "bhr/composition.hpp"
#include "bhr/error.hpp"

namespace bhr {

namespace {

int mod(int x, int v) { return ((x % v) + v) % v; }

}  // namespace

DifferenceMultiset difference_list(std::span<const int> vertices, int v) {
  if (v < 1) throw InvalidLength("order must be positive");
  DifferenceMultiset out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    int d = mod(vertices[i + 1] - vertices[i], v);
    if (d == 0) throw InvalidEdge("consecutive vertices coincide modulo " + std::to_string(v));
    ++out[d];
    ++out[v - d];
  }
  return out;
}

CayleyMultigraph::CayleyMultigraph(int v, DifferenceMultiset connection) : v_(v), connection_(std::move(connection)) {
  if (v < 1) throw InvalidLength("order must be positive");
  for (auto it = connection_.begin(); it != connection_.end();) {
    auto [g, m] = *it;
    if (g <= 0 || g >= v) throw InvalidLength("connection element " + std::to_string(g) + " outside Z_v \\ {0}");
    if (m < 0) throw InvalidLength("negative multiplicity");
    if (m == 0) {
      it = connection_.erase(it);
      continue;
    }
    auto mirror = connection_.find(v - g);
    if (mirror == connection_.end() || mirror->second != m)
      throw InvalidLength("connection is not symmetric at " + std::to_string(g));
    ++it;
  }
}

int CayleyMultigraph::size() const {
  int total = 0;
  for (auto [g, m] : connection_) total += m;
  return total;
}

int CayleyMultigraph::edge_multiplicity(int x, int y) const {
  if (x < 0 || y < 0 || x >= v_ || y >= v_ || x == y) throw InvalidEdge("no edge between " + std::to_string(x) + " and " + std::to_string(y));
  auto it = connection_.find(mod(x - y, v_));
  return it == connection_.end() ? 0 : it->second;
}

std::uint64_t CayleyMultigraph::edge_count() const {
  std::uint64_t total = 0;
  for (int x = 0; x < v_; ++x)
    for (int y = x + 1; y < v_; ++y) total += static_cast<std::uint64_t>(edge_multiplicity(x, y));
  return total;
}

CayleyMultigraph build_from_list(const EdgeLengthList& list) {
  const int v = list.order();
  DifferenceMultiset connection;
  for (auto [length, m] : list.counts()) {
    if (2 * length > v) throw InvalidLength("length " + std::to_string(length) + " exceeds floor(v/2) for v = " + std::to_string(v));
    connection[length] += m;
    connection[v - length] += m;
  }
  return CayleyMultigraph(v, std::move(connection));
}

std::vector<std::vector<int>> translate_orbit_edges(const PathRealization& path) {
  const int v = path.order();
  std::vector<std::vector<int>> edges(v, std::vector<int>(v, 0));
  for (int g = 0; g < v; ++g) {
    auto shifted = translate(path, g);
    for (std::size_t i = 0; i + 1 < shifted.size(); ++i) {
      int x = shifted[i], y = shifted[i + 1];
      ++edges[x][y];
      ++edges[y][x];
    }
  }
  return edges;
}

bool verify_decomposition(const PathRealization& path) {
  const int v = path.order();
  CayleyMultigraph graph(v, difference_list(path.vertices(), v));
  auto orbit = translate_orbit_edges(path);
  std::uint64_t orbit_total = 0;
  for (int x = 0; x < v; ++x) {
    for (int y = x + 1; y < v; ++y) {
      if (orbit[x][y] != graph.edge_multiplicity(x, y)) return false;
      orbit_total += static_cast<std::uint64_t>(orbit[x][y]);
    }
  }
  return orbit_total == static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(v - 1);
}

}  // namespace bhr
