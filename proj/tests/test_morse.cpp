#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "smallcover/errors.hpp"
#include "smallcover/morse.hpp"
#include "test_support.hpp"

using namespace smallcover;
using namespace testsupport;

namespace {

std::vector<Polytope> corpus() {
  std::vector<Polytope> out;
  out.push_back(make_simplex());
  out.push_back(make_cube());
  for (int n = 3; n <= 6; ++n) out.push_back(make_prism(n));
  out.push_back(make_dodecahedron());
  out.push_back(make_permutohedron());
  return out;
}

}  // namespace

TEST_CASE("order_from_heights on the simplex") {
  Polytope s = make_simplex();
  VertexOrder ord = order_from_heights(s, {0, 1, 2, 3});
  MorseData md = morse_data(s, ord);
  CHECK(md.index == std::vector<int>{0, 1, 2, 3});
  CHECK(md.index_counts == std::array<int, 4>{1, 1, 1, 1});
  CHECK(md.source == 0);
  CHECK(md.sink == 3);
  CHECK(md.tree_edges().size() == 3);

  CHECK_THROWS_WITH_AS(order_from_heights(s, {0, 1, 1, 3}),
                       doctest::Contains("duplicate heights"), ValidationError);
  CHECK_THROWS_AS(order_from_heights(s, {0, 1, 2}), ValidationError);
}

TEST_CASE("two local minima in one facet are rejected") {
  // facet 4 of the cube is the cycle [0,1,3,2]; heights low,high,low,high
  // around it create a second local minimum (and a second global source)
  Polytope c = make_cube();
  std::vector<double> h{0, 5, 6, 1, 10, 11, 12, 13};
  CHECK_THROWS_AS(order_from_heights(c, h), ValidationError);

  std::vector<int> rank{0, 2, 3, 1, 4, 5, 6, 7};
  auto viol = order_violations(c, rank);
  bool facet_message = false;
  for (const auto& v : viol)
    if (v.find("local minima") != std::string::npos) facet_message = true;
  CHECK(facet_message);
}

TEST_CASE("default orders are valid with h-vector index counts") {
  for (const Polytope& p : corpus()) {
    VertexOrder ord = default_order(p);
    CHECK(order_violations(p, ord.rank).empty());
    MorseData md = morse_data(p, ord);
    auto h = p.h_vector();
    CHECK(md.index_counts == std::array<int, 4>{h[0], h[1], h[2], h[3]});
  }
  // determinism
  CHECK(default_order(make_dodecahedron()).rank ==
        default_order(make_dodecahedron()).rank);
}

TEST_CASE("index counts match the h-vector over many random valid orders") {
  for (const Polytope& p : corpus()) {
    auto h = p.h_vector();
    std::set<std::vector<int>> distinct;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      VertexOrder ord = random_valid_order(p, seed);
      CHECK(order_violations(p, ord.rank).empty());
      MorseData md = morse_data(p, ord);
      CHECK(md.index_counts == std::array<int, 4>{h[0], h[1], h[2], h[3]});
      distinct.insert(ord.rank);
    }
    CHECK(distinct.size() > 1);
  }
}

TEST_CASE("morse data structure") {
  for (const Polytope& p : corpus()) {
    VertexOrder ord = default_order(p);
    MorseData md = morse_data(p, ord);
    auto [f0, f1, f2] = p.f_vector();

    // every edge contributes its head exactly once
    int index_sum = 0;
    for (int v = 0; v < f0; ++v) index_sum += md.index[v];
    CHECK(index_sum == f1);

    // parent edges form a spanning tree with strictly decreasing rank
    CHECK(md.parent_edge[md.source] == -1);
    int tree_size = 0;
    for (int v = 0; v < f0; ++v) {
      if (v == md.source) continue;
      REQUIRE(md.parent_edge[v] >= 0);
      const Edge& e = p.edge(md.parent_edge[v]);
      CHECK(e.has_vertex(v));
      CHECK(ord.lower(e.other_vertex(v), v));
      ++tree_size;
    }
    CHECK(tree_size == f0 - 1);

    // top vertices of non-sink facets biject onto index-2 vertices
    std::set<int> tops;
    int sink_facets = 0;
    for (int f = 0; f < f2; ++f) {
      if (p.facet_has_vertex(f, md.sink)) {
        ++sink_facets;
        CHECK(md.top_vertex[f] == md.sink);
      } else {
        CHECK(md.index[md.top_vertex[f]] == 2);
        tops.insert(md.top_vertex[f]);
      }
    }
    CHECK(sink_facets == 3);
    CHECK(static_cast<int>(tops.size()) == f2 - 3);

    // shelling: ascending top rank, the three sink facets last by id
    for (int i = 0; i + 1 < f2; ++i) {
      int a = md.shelling[i], b = md.shelling[i + 1];
      int ra = ord.rank[md.top_vertex[a]], rb = ord.rank[md.top_vertex[b]];
      CHECK((ra < rb || (ra == rb && a < b)));
    }
    for (int i = f2 - 3; i < f2; ++i)
      CHECK(p.facet_has_vertex(md.shelling[i], md.sink));

    // the two incoming edges at an index-1 vertex: e_v is forced
    for (int v = 0; v < f0; ++v) {
      if (md.index[v] != 1) continue;
      int incoming = 0;
      for (int e : p.edges_at(v))
        if (ord.lower(p.edge(e).other_vertex(v), v)) ++incoming;
      CHECK(incoming == 1);
    }
  }
}

TEST_CASE("order file format") {
  Polytope s = make_simplex();
  VertexOrder ord = order_from_ranks(s, {0, 1, 2, 3});
  VertexOrder back = parse_order(order_to_json(ord), s);
  CHECK(back.rank == ord.rank);
  CHECK_THROWS_AS(parse_order(R"({"rank": [0, 1, 2]})", s), ValidationError);
  CHECK_THROWS_AS(parse_order(R"({"rank": [0, 1, 2, 2]})", s), ValidationError);
  CHECK_THROWS_AS(parse_order("{}", s), ValidationError);
}
