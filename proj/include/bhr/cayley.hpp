#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "bhr/edge_list.hpp"
#include "bhr/path.hpp"

namespace bhr {

// Multiset over Z_v \ {0}: residue -> multiplicity.
using DifferenceMultiset = std::map<int, int>;

// Both x-y and y-x (mod v) for every consecutive pair.
DifferenceMultiset difference_list(std::span<const int> vertices, int v);

class CayleyMultigraph {
 public:
  // Throws InvalidLength unless the connection is symmetric and avoids 0.
  CayleyMultigraph(int v, DifferenceMultiset connection);

  int order() const { return v_; }
  const DifferenceMultiset& connection() const { return connection_; }
  int size() const;

  // Number of parallel edges joining x and y: the multiplicity of x-y in the
  // connection. For the self-paired residue v/2 that is the stored value,
  // which counts two per occurrence of v/2 in the source list.
  int edge_multiplicity(int x, int y) const;

  std::uint64_t edge_count() const;  // undirected, with multiplicity

 private:
  int v_;
  DifferenceMultiset connection_;
};

// L together with -L. Throws InvalidLength when a length exceeds floor(v/2).
CayleyMultigraph build_from_list(const EdgeLengthList& list);

// v x v undirected edge counts of the orbit {H + g : g in Z_v}.
std::vector<std::vector<int>> translate_orbit_edges(const PathRealization& path);

// True iff the translates of the path partition the edges of
// Cay[Z_v : difference_list(path)].
bool verify_decomposition(const PathRealization& path);

}  // namespace bhr
