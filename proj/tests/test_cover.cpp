#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "smallcover/abelian.hpp"
#include "smallcover/cover.hpp"
#include "smallcover/errors.hpp"
#include "smallcover/homcount.hpp"
#include "test_support.hpp"

using namespace smallcover;
using namespace testsupport;

namespace {

const CharMap kSimplexMap{{1, 2, 4, 7}};
const CharMap kCubeLinear{{1, 1, 2, 2, 4, 4}};
const CharMap kPrism3Orientable{{1, 1, 2, 4, 7}};

AbelianInvariants inv(long long free_rank, std::vector<long> torsion) {
  AbelianInvariants out;
  out.free_rank = free_rank;
  for (long d : torsion) out.torsion.emplace_back(d);
  return out;
}

std::vector<int> bfs_tree(const Polytope& p) {
  std::vector<int> tree;
  std::vector<char> seen(p.vertex_count(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (int e : p.edges_at(v)) {
      int w = p.edge(e).other_vertex(v);
      if (seen[w]) continue;
      seen[w] = 1;
      tree.push_back(e);
      queue.push_back(w);
    }
  }
  return tree;
}

std::vector<std::pair<Polytope, CharMap>> corpus_with_colors() {
  std::vector<std::pair<Polytope, CharMap>> out;
  out.emplace_back(make_simplex(), kSimplexMap);
  out.emplace_back(make_cube(), kCubeLinear);
  out.emplace_back(make_prism(3), kPrism3Orientable);
  for (const Polytope& p : {make_prism(5), make_dodecahedron()}) {
    auto lam = find_orientable_coloring(p);
    REQUIRE(lam.has_value());
    out.emplace_back(p, *lam);
  }
  {
    Polytope p = make_permutohedron();
    auto lam = find_linear_model_coloring(p);
    REQUIRE(lam.has_value());
    out.emplace_back(std::move(p), *lam);
  }
  return out;
}

}  // namespace

TEST_CASE("lifted edges") {
  Polytope s = make_simplex();
  auto lifts = lifted_edges(s, kSimplexMap);
  CHECK(lifts.size() == 12);  // 2 f1

  // edge between the facets colored e1 and e2: G_e = {0, 1, 2, 3}, so the
  // second lift is labeled 4
  int e = s.shared_edge(0, 1);
  REQUIRE(e >= 0);
  CHECK(lifts[2 * e].label == 0);
  CHECK(lifts[2 * e + 1].label == 4);

  CHECK(lifted_edges(make_cube(), kCubeLinear).size() == 24);

  for (const auto& [p, lam] : corpus_with_colors()) {
    auto l = lifted_edges(p, lam);
    CHECK(static_cast<int>(l.size()) == 2 * p.edge_count());
    for (int i = 0; i < p.edge_count(); ++i) {
      CHECK(l[2 * i].label == 0);
      CHECK(l[2 * i + 1].label != 0);
    }
  }
}

TEST_CASE("face copies") {
  Polytope s = make_simplex();
  auto copies = face_copies(s, kSimplexMap);
  CHECK(copies.size() == 16);  // 4 facets x 4 cosets
  for (const FaceCopy& c : copies) CHECK(c.boundary.size() == 3);

  auto dod = make_dodecahedron();
  auto lam = find_orientable_coloring(dod);
  REQUIRE(lam.has_value());
  auto dc = face_copies(dod, *lam);
  CHECK(dc.size() == 48);
  for (const FaceCopy& c : dc) CHECK(c.boundary.size() == 5);

  SUBCASE("each lifted edge lies on exactly 4 copy boundaries") {
    for (const auto& [p, lam2] : corpus_with_colors()) {
      std::map<std::pair<int, int>, int> uses;
      for (const FaceCopy& c : face_copies(p, lam2))
        for (const auto& st : c.boundary) ++uses[{st.edge, st.lift}];
      CHECK(static_cast<int>(uses.size()) == 2 * p.edge_count());
      for (const auto& [lift, n] : uses) CHECK(n == 4);
    }
  }

  SUBCASE("the copy's coset determines each boundary lift") {
    for (const auto& [p, lam2] : corpus_with_colors())
      for (const FaceCopy& c : face_copies(p, lam2))
        for (const auto& st : c.boundary) {
          const Edge& ed = p.edge(st.edge);
          Gf2 a = lam2.colors[ed.facets[0]], b = lam2.colors[ed.facets[1]];
          CHECK((st.lift == 0) == (coset_min2(c.label, a, b) == 0));
        }
  }
}

TEST_CASE("cw presentation") {
  Polytope s = make_simplex();
  Presentation cw = cw_presentation(s, kSimplexMap, bfs_tree(s));
  CHECK(cw.gens.size() == 9);  // 2 f1 - f0 + 1
  CHECK(cw.relators.size() == 16);
  CHECK(abelianization(cw) == inv(0, {2}));  // RP^3

  Presentation cubecw = cw_presentation(make_cube(), kCubeLinear, bfs_tree(make_cube()));
  CHECK(cubecw.gens.size() == 17);
  CHECK(cubecw.relators.size() == 24);
  CHECK(abelianization(cubecw) == inv(3, {}));  // T^3

  Presentation pr = cw_presentation(make_prism(3), kPrism3Orientable,
                                    bfs_tree(make_prism(3)));
  CHECK(abelianization(pr) == inv(0, {2, 2}));  // RP^3 # RP^3

  SUBCASE("generator count is 4 f2 - 7 across the corpus") {
    for (const auto& [p, lam] : corpus_with_colors()) {
      Presentation c = cw_presentation(p, lam, bfs_tree(p));
      CHECK(static_cast<int>(c.gens.size()) == 4 * p.facet_count() - 7);
      CHECK(static_cast<int>(c.relators.size()) == 4 * p.facet_count());
      CHECK(abelianization(c).mod2_rank() == p.facet_count() - 3);
    }
  }

  SUBCASE("a bad tree is rejected") {
    CHECK_THROWS_WITH_AS(cw_presentation(s, kSimplexMap, {0, 1}),
                         doctest::Contains("not a tree"), ValidationError);
    // 3 edges around a triangle: right count, contains a cycle
    int e01 = s.edge_between(0, 1), e12 = s.edge_between(1, 2), e02 = s.edge_between(0, 2);
    CHECK_THROWS_WITH_AS(cw_presentation(s, kSimplexMap, {e01, e12, e02}),
                         doctest::Contains("not a tree"), ValidationError);
  }
}

TEST_CASE("wu-yu presentation") {
  Polytope s = make_simplex();
  Presentation wy = wu_yu_presentation(s, kSimplexMap, 0);
  CHECK(wy.gens.size() == 16);  // 4 per facet after the involution

  // twelve trivializers: one per coset symbol of the three facets at v0
  int trivializers = 0;
  for (const Word& w : wy.relators)
    if (w.size() == 1) ++trivializers;
  CHECK(trivializers == 12);

  // 4-cycle relators: one per (edge, coset of G_e)
  int quads = 0;
  for (const Word& w : wy.relators)
    if (w.size() == 4) ++quads;
  CHECK(quads == 2 * s.edge_count());

  CHECK(abelianization(wy) == inv(0, {2}));

  CHECK(abelianization(wu_yu_presentation(make_cube(), kCubeLinear, 0)) == inv(3, {}));
  CHECK(abelianization(wu_yu_presentation(make_cube(), kCubeLinear, 5)) == inv(3, {}));

  SUBCASE("agrees with the cw presentation across the corpus") {
    for (const auto& [p, lam] : corpus_with_colors()) {
      Presentation wy2 = wu_yu_presentation(p, lam, 0);
      Presentation cw2 = cw_presentation(p, lam, bfs_tree(p));
      CHECK(abelianization(wy2) == abelianization(cw2));
    }
  }

  SUBCASE("hom counts agree with cw on small instances") {
    Presentation cw = cw_presentation(s, kSimplexMap, bfs_tree(s));
    for (const std::string& t : {std::string("z2"), std::string("s3")}) {
      auto g = group_by_name(t);
      CHECK(count_homs(wy, g, 10'000'000ULL) == count_homs(cw, g, 10'000'000ULL));
    }
  }

  CHECK_THROWS_AS(wu_yu_presentation(s, kSimplexMap, 99), ValidationError);
}

TEST_CASE("wu-yu simplification stays within rank 4 for the simplex") {
  Polytope s = make_simplex();
  Presentation wy = wu_yu_presentation(s, kSimplexMap, 0);
  SimplifyResult r = simplify(wy);
  CHECK_FALSE(r.capped);
  CHECK(r.pres.gens.size() <= 4);
  CHECK(abelianization(r.pres) == inv(0, {2}));
}

TEST_CASE("heegaard genus report") {
  GenusReport d = heegaard_report(make_dodecahedron());
  CHECK(d.face_handlebody == std::array<int, 2>{8, 48});
  CHECK(d.skeleton_handlebody == std::array<int, 2>{20, 60});
  CHECK(d.reduced_genus == 36);
  CHECK(d.minimal_genus == 9);

  GenusReport s = heegaard_report(make_simplex());
  CHECK(s.reduced_genus == 4);
  CHECK(s.minimal_genus == 1);

  GenusReport p = heegaard_report(make_permutohedron());
  CHECK(p.reduced_genus == 44);
  CHECK(p.minimal_genus == 11);
}
