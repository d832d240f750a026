#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "smallcover/polytope.hpp"

namespace smallcover {

// Generic height order on the vertices: an injective rank 0..f0-1 whose
// induced low-to-high edge orientation has a unique global source, a unique
// global sink, and exactly one local minimum and maximum on every facet
// cycle. These conditions are what the relation-extraction procedure needs;
// no geometry is involved.
struct VertexOrder {
  std::vector<int> rank;     // rank[v]
  std::vector<int> by_rank;  // inverse permutation

  int source() const { return by_rank.front(); }
  int sink() const { return by_rank.back(); }
  bool lower(int u, int v) const { return rank[u] < rank[v]; }
};

// Empty result means the ranks define a valid order for p.
std::vector<std::string> order_violations(const Polytope& p, const std::vector<int>& rank);

// Validating constructors. order_from_heights ranks by ascending height and
// rejects duplicates; order_from_ranks takes the permutation directly.
VertexOrder order_from_heights(const Polytope& p, const std::vector<double>& heights);
VertexOrder order_from_ranks(const Polytope& p, std::vector<int> rank);

// Deterministic backtracking search for a valid order (candidates in
// ascending vertex id). Throws InternalError when no order exists, which
// indicates a bug rather than a legitimate outcome.
VertexOrder default_order(const Polytope& p);

// Same search with the candidate order shuffled per level by the seed.
VertexOrder random_valid_order(const Polytope& p, std::uint64_t seed);

// Derived Morse data for a valid order.
//   index[v]        in-degree of v (= Morse index of the critical point)
//   parent_edge[v]  incoming edge with the lowest-rank tail; -1 at the source;
//                   for index-1 vertices this is the forced edge e_v
//   top_vertex[f]   rank-maximal vertex of the facet
//   shelling        facets by ascending top-vertex rank; the three facets
//                   containing the sink come last, ordered by facet id
struct MorseData {
  std::vector<int> index;
  std::vector<int> parent_edge;
  std::vector<int> top_vertex;
  std::vector<int> shelling;
  std::array<int, 4> index_counts{};
  int source = -1, sink = -1;

  std::vector<int> tree_edges() const;  // the parent edges (a spanning tree)
};

MorseData morse_data(const Polytope& p, const VertexOrder& ord);

// Order file format: {"rank": [r0, r1, ...]}, a permutation of 0..f0-1 in
// vertex order. Also accepts a pipeline bundle with an "order" key.
VertexOrder parse_order(const std::string& text, const Polytope& p);
std::string order_to_json(const VertexOrder& ord);

}  // namespace smallcover
