#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "smallcover/abelian.hpp"
#include "smallcover/charmap.hpp"
#include "smallcover/cover.hpp"
#include "smallcover/morse.hpp"
#include "smallcover/presentation.hpp"

namespace smallcover {

enum class CertificateLevel { certified, heuristic };
std::string to_string(CertificateLevel level);

// Honesty record for the guided elimination: whether every step met its
// structural occurrence assertion and whether the leftover relators around
// the sink were verified freely trivial or only abelian-trivial.
struct MinimalCertificate {
  int eliminations = 0;
  int structural = 0;  // steps that found their relator among the facet's copies
  int fallbacks = 0;   // steps that needed a whole-presentation search
  int leftovers = 0;
  int leftovers_freely_trivial = 0;
  int leftovers_abelian_trivial = 0;
  std::array<int, 3> hom_checked{};  // post-check ran for Z2, Z2^2, Z2^3

  CertificateLevel level() const {
    return fallbacks == 0 && leftovers == leftovers_freely_trivial
               ? CertificateLevel::certified
               : CertificateLevel::heuristic;
  }
};

struct MinimalLimits {
  std::size_t max_relator_length = 10000;
  unsigned long long hom_check_cap = 2'000'000;  // per target, post-check only
};

// Balanced minimal presentation: one generator a<v> per index-1 vertex (the
// non-tree lift of its forced incoming edge e_v) and one relator r<F> per
// non-sink facet, produced by eliminating the interior lifts of each glued
// 4-copy disk in shelling order.
struct MinimalPresentation {
  Presentation pres;
  std::vector<int> generator_vertices;  // index-1 vertex per generator
  std::vector<int> relator_facets;      // facet per relator, in shelling order
  MinimalCertificate certificate;
  AbelianInvariants h1;
};

// Guided Morse elimination. The spanning tree is the parent tree of the
// order; relators start as the face-copy boundary words. Post-checks
// (hard InternalError on failure): generator and relator counts both equal
// f2 - 3, abelianization equal to the CW presentation's, and mod-2 rank
// f2 - 3. Hom counts to Z2, Z2^2, Z2^3 are compared against the CW
// presentation whenever the search fits the hom_check_cap budget.
MinimalPresentation minimal_presentation(const Polytope& p, const CharMap& lam,
                                         const VertexOrder& ord,
                                         const MinimalLimits& limits = {});

}  // namespace smallcover
