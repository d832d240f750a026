#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smallcover/gf2.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

// Characteristic map: one nonzero Z_2^3 vector per facet (the columns of the
// characteristic matrix).
struct CharMap {
  std::vector<Gf2> colors;
  bool operator==(const CharMap&) const = default;
};

// Empty result means the map is valid: entries nonzero and, at every vertex,
// the three facet vectors linearly independent. Throws on length mismatch.
std::vector<std::string> charmap_violations(const Polytope& p, const CharMap& lam);
void require_valid_charmap(const Polytope& p, const CharMap& lam);

// True iff some nonzero functional phi has phi(lambda(F)) = 1 for every
// facet. Equivalent to the basis formulation of the orientability criterion;
// the equivalence is exercised against a brute-force basis search in tests.
bool is_orientable(const Polytope& p, const CharMap& lam);

// Deterministic backtracking search for a proper facet coloring using the
// given palette (lowest facet first, palette values in ascending order).
// Appends up to max_results distinct colorings.
std::vector<CharMap> find_proper_colorings(const Polytope& p,
                                           std::vector<Gf2> palette,
                                           std::size_t max_results);

// Proper coloring by {e1, e2, e3, e1+e2+e3}; any such coloring is a valid
// orientable characteristic map. Exists for every simple 3-polytope.
std::optional<CharMap> find_orientable_coloring(const Polytope& p);

// Proper coloring by {e1, e2, e3}; exists iff the polytope is 3-colorable.
std::optional<CharMap> find_linear_model_coloring(const Polytope& p);

// 3-colorable iff every facet is an even-gon.
bool is_linear_model_polytope(const Polytope& p);

// Induced characteristic map of the facet submanifold over facet F: for each
// boundary edge of F (in facet cycle order) the class of the neighboring
// facet's vector in Z_2^3 / <lambda(F)>, labeled by its minimal
// representative.
std::vector<Gf2> induced_map(const Polytope& p, const CharMap& lam, int f);

// Homeomorphism type of the face surface over a facet.
struct SurfaceType {
  bool orientable = false;
  int genus = 0;  // crosscap number when nonorientable
  bool operator==(const SurfaceType&) const = default;
};
SurfaceType face_surface_type(const Polytope& p, const CharMap& lam, int f);

// Restriction of a characteristic map to the truncation at vertex v: old
// facets keep their colors, the new triangle facet gets the XOR of the three
// colors at v (the unique non-degenerate choice).
CharMap truncation_charmap(const Polytope& p, const CharMap& lam, int v);

// CharMap file format: {"colors": [c0, c1, ...]} with entries 1..7 in facet
// order. Also accepts a pipeline bundle with a "colors" key.
CharMap parse_charmap(const std::string& text);
std::string charmap_to_json(const CharMap& lam);

}  // namespace smallcover
