#pragma once

#include <array>
#include <string>
#include <vector>

namespace smallcover {

// An edge of a simple 3-polytope: endpoints with a < b and the two incident
// facets, sorted ascending.
struct Edge {
  int a = -1, b = -1;
  std::array<int, 2> facets{-1, -1};

  int other_vertex(int v) const { return v == a ? b : a; }
  int other_facet(int f) const { return f == facets[0] ? facets[1] : facets[0]; }
  bool has_vertex(int v) const { return v == a || v == b; }
};

// Combinatorial simple 3-polytope: facets as cyclically ordered vertex lists,
// with edge and vertex incidence derived on construction.
//
// Construction validates:
//   * every facet cycle has length >= 3 with no repeated vertex,
//   * every vertex lies in exactly 3 facets and 3 edges,
//   * every edge lies in exactly 2 facets,
//   * Euler (f0 - f1 + f2 = 2) and Dehn-Sommerville (8 - 4 f2 = f0 - 2 f1),
//   * the vertex-edge graph is connected,
//   * two distinct facets share at most one edge.
//
// Immutable after construction; all methods are const and thread-safe.
class Polytope {
 public:
  Polytope(int vertex_count, std::vector<std::vector<int>> facets);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int facet_count() const { return static_cast<int>(facets_.size()); }

  const std::vector<std::vector<int>>& facets() const { return facets_; }
  const std::vector<int>& facet(int f) const;
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const;

  // The three facets / edges / neighbor vertices at v, each sorted ascending.
  const std::array<int, 3>& facets_at(int v) const;
  const std::array<int, 3>& edges_at(int v) const;
  std::array<int, 3> neighbors(int v) const;

  int edge_between(int u, int v) const;  // edge id, or -1 when not adjacent
  int shared_edge(int f, int g) const;   // edge id, or -1 when facets disjoint
  bool adjacent_facets(int f, int g) const { return shared_edge(f, g) >= 0; }
  bool facet_has_vertex(int f, int v) const;

  std::array<int, 3> f_vector() const;  // (f0, f1, f2)
  std::array<int, 4> h_vector() const;  // (1, f2-3, f2-3, 1)

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<int>> facets_;
  std::vector<Edge> edges_;
  std::vector<std::array<int, 3>> vertex_facets_;
  std::vector<std::array<int, 3>> vertex_edges_;
  std::vector<int> edge_lookup_;  // vertex_count x vertex_count, -1 = none

  void build_incidence();
  void validate() const;
};

// A k-belt: cyclic facet sequence, consecutive members share an edge,
// non-consecutive members are disjoint, total intersection empty. Stored in
// canonical order (lexicographically minimal rotation/reflection).
struct Belt {
  std::vector<int> facets;
  bool operator==(const Belt&) const = default;
};

// All k-belts (k = 3 or 4), each reported once, sorted lexicographically.
std::vector<Belt> find_belts(const Polytope& p, int k);

// Flag iff not the simplex and no 3-belt exists.
bool is_flag(const Polytope& p);

// Flag without 4-belts.
bool is_pogorelov(const Polytope& p);

// Face-submanifold injectivity test for a facet: true iff the facet lies in
// no 3-belt. For an edge: true iff the two facets meeting the edge only at
// its endpoints are disjoint.
bool facet_injective(const Polytope& p, int f);
bool edge_injective(const Polytope& p, int e);

// Cut vertex v: the new triangle facet is appended as the last facet, the
// three cut vertices take the three highest ids (one per removed edge, in
// ascending order of the removed edge's id), and vertices above v shift
// down by one.
Polytope truncate_vertex(const Polytope& p, int v);

// Canonical builders with fixed numbering (documented in the README):
//   simplex        vertices 0..3, facet i omits vertex i
//   cube           vertex id = x + 2y + 4z, facets x=0,x=1,y=0,y=1,z=0,z=1
//   prism(n)       bottom 0..n-1, top n..2n-1; facets bottom, top, n quads
//   dodecahedron   four rings of five vertices (top cap, upper, lower, bottom)
//   permutohedron  vertices = permutations of (1,2,3,4) in lex order; facets
//                  indexed by proper position subsets, by size then lex
Polytope make_simplex();
Polytope make_cube();
Polytope make_prism(int n);
Polytope make_dodecahedron();
Polytope make_permutohedron();
Polytope build_shape(const std::string& shape);  // "simplex", "prism:5", ...

// Polytope file format: {"vertex_count": N, "facets": [[v0,v1,...], ...]}.
// Also accepts a pipeline bundle with the polytope under a "polytope" key.
Polytope parse_polytope(const std::string& text);
std::string polytope_to_json(const Polytope& p);

}  // namespace smallcover
