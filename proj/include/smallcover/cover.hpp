#pragma once

#include <array>
#include <vector>

#include "smallcover/charmap.hpp"
#include "smallcover/morse.hpp"
#include "smallcover/polytope.hpp"
#include "smallcover/presentation.hpp"

namespace smallcover {

// One of the two lifts of an edge e in M = P x Z_2^3 / ~. The lifts
// correspond to the cosets of G_e = <lambda(F), lambda(F')> (rank 2 by
// non-degeneracy, so exactly two); the label is the coset's minimal element,
// 0 for the subgroup itself. The edge circle M_e is lift 0 composed with the
// reverse of lift 1. Lift id = 2 * edge + lift.
struct LiftedEdge {
  int edge = -1;
  int lift = 0;  // 0 or 1
  Gf2 label = 0;
};

// One of the four 2-cells over a facet F: a coset of <lambda(F)>, labeled by
// its minimal element. The boundary traverses F's stored cycle once; each
// step crosses the unique lift of the edge whose G_e-coset contains the
// copy's coset.
struct FaceCopy {
  int facet = -1;
  Gf2 label = 0;
  struct Step {
    int edge = -1;
    int lift = 0;
    int tail = -1, head = -1;  // traversal direction along the facet cycle
  };
  std::vector<Step> boundary;
};

// The full edge/2-cell structure of the cover: 2 f1 lifted edges and
// 4 f2 face copies (vertices of M are in bijection with vertices of P).
struct CoverCells {
  std::vector<LiftedEdge> lifted;  // index = 2 * edge + lift
  std::vector<FaceCopy> copies;    // index = 4 * facet + coset position
};

CoverCells cover_cells(const Polytope& p, const CharMap& lam);
std::vector<LiftedEdge> lifted_edges(const Polytope& p, const CharMap& lam);
std::vector<FaceCopy> face_copies(const Polytope& p, const CharMap& lam);

// 2-skeleton presentation of pi_1(M): generators are the lifted edges minus
// the label-0 lifts of the spanning-tree edges (named e<edge>_<label>),
// relators are the 4 f2 face-copy boundary words. A lifted edge's canonical
// direction runs from the lower to the higher endpoint (by rank when an
// order is supplied, else by vertex id); traversing against it emits the
// inverse letter.
Presentation cw_presentation(const Polytope& p, const CharMap& lam,
                             const std::vector<int>& tree_edges,
                             const VertexOrder* ord = nullptr);

// The handle-decomposition presentation read off the canonical Heegaard
// splitting: generators s<facet>_<label> indexed by facet x coset of
// <lambda(F)> (the involution s_{F,g+lambda(F)} = s_{F,g}^-1 is applied
// eagerly), one 4-cycle relator per (edge, coset of G_e) after deduplication
// up to rotation and inversion, and trivializers for the three facets at v0.
Presentation wu_yu_presentation(const Polytope& p, const CharMap& lam, int v0);

// Heegaard genus bookkeeping for the canonical splitting and its reductions.
// N^{n,m} denotes the handlebody built from n balls and m 1-handles.
struct GenusReport {
  std::array<int, 2> face_handlebody{};      // (8, 4 f2)
  std::array<int, 2> skeleton_handlebody{};  // (f0, 2 f1)
  int reduced_genus = 0;                     // 4 (f2 - 3)
  int minimal_genus = 0;                     // f2 - 3
};
GenusReport heegaard_report(const Polytope& p);

}  // namespace smallcover
