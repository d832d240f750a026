#include "smallcover/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"
#include "smallcover/errors.hpp"

namespace smallcover {

namespace {

std::string fmt_edge(int u, int v) {
  std::ostringstream os;
  os << "{" << std::min(u, v) << "," << std::max(u, v) << "}";
  return os.str();
}

}  // namespace

Polytope::Polytope(int vertex_count, std::vector<std::vector<int>> facets)
    : vertex_count_(vertex_count), facets_(std::move(facets)) {
  build_incidence();
  validate();
}

void Polytope::build_incidence() {
  if (vertex_count_ <= 0) throw ValidationError("vertex_count must be positive");

  for (int f = 0; f < facet_count(); ++f) {
    const auto& cyc = facets_[f];
    if (cyc.size() < 3)
      throw ValidationError("facet " + std::to_string(f) + ": facet cycle too short");
    std::set<int> seen;
    for (int v : cyc) {
      if (v < 0 || v >= vertex_count_)
        throw ValidationError("facet " + std::to_string(f) + " references vertex " +
                              std::to_string(v) + " out of range");
      if (!seen.insert(v).second)
        throw ValidationError("facet " + std::to_string(f) + " repeats vertex " +
                              std::to_string(v));
    }
  }

  edge_lookup_.assign(static_cast<std::size_t>(vertex_count_) * vertex_count_, -1);
  auto lookup = [&](int u, int v) -> int& {
    return edge_lookup_[static_cast<std::size_t>(u) * vertex_count_ + v];
  };

  for (int f = 0; f < facet_count(); ++f) {
    const auto& cyc = facets_[f];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      int e = lookup(u, v);
      if (e < 0) {
        e = static_cast<int>(edges_.size());
        edges_.push_back({std::min(u, v), std::max(u, v), {f, -1}});
        lookup(u, v) = lookup(v, u) = e;
      } else {
        Edge& ed = edges_[e];
        if (ed.facets[1] >= 0)
          throw ValidationError("edge " + fmt_edge(u, v) + " lies in more than 2 facets");
        ed.facets[1] = f;
        if (ed.facets[0] > ed.facets[1]) std::swap(ed.facets[0], ed.facets[1]);
      }
    }
  }

  std::vector<std::vector<int>> vf(vertex_count_), ve(vertex_count_);
  for (int f = 0; f < facet_count(); ++f)
    for (int v : facets_[f]) vf[v].push_back(f);
  for (int e = 0; e < edge_count(); ++e) {
    ve[edges_[e].a].push_back(e);
    ve[edges_[e].b].push_back(e);
  }

  vertex_facets_.resize(vertex_count_);
  vertex_edges_.resize(vertex_count_);
  for (int v = 0; v < vertex_count_; ++v) {
    if (ve[v].size() != 3)
      throw ValidationError("vertex " + std::to_string(v) + " has degree " +
                            std::to_string(ve[v].size()) + " (expected 3)");
    if (vf[v].size() != 3)
      throw ValidationError("vertex " + std::to_string(v) + " lies in " +
                            std::to_string(vf[v].size()) + " facets (expected 3)");
    std::sort(vf[v].begin(), vf[v].end());
    std::sort(ve[v].begin(), ve[v].end());
    std::copy(vf[v].begin(), vf[v].end(), vertex_facets_[v].begin());
    std::copy(ve[v].begin(), ve[v].end(), vertex_edges_[v].begin());
  }
}

void Polytope::validate() const {
  for (const Edge& e : edges_)
    if (e.facets[1] < 0)
      throw ValidationError("edge " + fmt_edge(e.a, e.b) + " lies in only one facet");

  int f0 = vertex_count_, f1 = edge_count(), f2 = facet_count();
  if (f0 - f1 + f2 != 2)
    throw ValidationError("Euler relation violated: f0 - f1 + f2 = " +
                          std::to_string(f0 - f1 + f2) + " (expected 2)");
  if (8 - 4 * f2 != f0 - 2 * f1)
    throw ValidationError("Dehn-Sommerville relation violated");

  // connectivity of the vertex-edge graph
  std::vector<char> seen(vertex_count_, 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int e : vertex_edges_[v]) {
      int w = edges_[e].other_vertex(v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        bfs.push(w);
      }
    }
  }
  if (reached != vertex_count_)
    throw ValidationError("vertex-edge graph is disconnected");

  std::map<std::pair<int, int>, int> pair_edges;
  for (const Edge& e : edges_) ++pair_edges[{e.facets[0], e.facets[1]}];
  for (const auto& [pr, n] : pair_edges)
    if (n > 1)
      throw ValidationError("facets " + std::to_string(pr.first) + " and " +
                            std::to_string(pr.second) + " share more than one edge");
}

const std::vector<int>& Polytope::facet(int f) const {
  if (f < 0 || f >= facet_count())
    throw ValidationError("invalid facet id " + std::to_string(f));
  return facets_[f];
}

const Edge& Polytope::edge(int e) const {
  if (e < 0 || e >= edge_count())
    throw ValidationError("invalid edge id " + std::to_string(e));
  return edges_[e];
}

const std::array<int, 3>& Polytope::facets_at(int v) const {
  if (v < 0 || v >= vertex_count_)
    throw ValidationError("invalid vertex id " + std::to_string(v));
  return vertex_facets_[v];
}

const std::array<int, 3>& Polytope::edges_at(int v) const {
  if (v < 0 || v >= vertex_count_)
    throw ValidationError("invalid vertex id " + std::to_string(v));
  return vertex_edges_[v];
}

std::array<int, 3> Polytope::neighbors(int v) const {
  const auto& es = edges_at(v);
  std::array<int, 3> nb{};
  for (int i = 0; i < 3; ++i) nb[i] = edges_[es[i]].other_vertex(v);
  std::sort(nb.begin(), nb.end());
  return nb;
}

int Polytope::edge_between(int u, int v) const {
  if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_ || u == v) return -1;
  return edge_lookup_[static_cast<std::size_t>(u) * vertex_count_ + v];
}

int Polytope::shared_edge(int f, int g) const {
  if (f == g) return -1;
  for (int e : {f, g})
    if (e < 0 || e >= facet_count())
      throw ValidationError("invalid facet id " + std::to_string(e));
  const auto& cyc = facets_[f];
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    int e = edge_between(cyc[i], cyc[(i + 1) % cyc.size()]);
    if (edges_[e].facets[0] == std::min(f, g) && edges_[e].facets[1] == std::max(f, g))
      return e;
  }
  return -1;
}

bool Polytope::facet_has_vertex(int f, int v) const {
  const auto& fs = facets_at(v);
  return std::find(fs.begin(), fs.end(), f) != fs.end();
}

std::array<int, 3> Polytope::f_vector() const {
  return {vertex_count_, edge_count(), facet_count()};
}

std::array<int, 4> Polytope::h_vector() const {
  int f2 = facet_count();
  std::array<int, 4> h{1, f2 - 3, f2 - 3, 1};
  if (h[0] + h[1] + h[2] + h[3] != vertex_count_)
    throw InternalError("h-vector does not sum to f0");
  return h;
}

// ---------------------------------------------------------------------------
// belts

namespace {

// Three pairwise adjacent facets meet in a common vertex iff some vertex has
// exactly this facet triple.
bool triple_has_common_vertex(const Polytope& p, int a, int b, int c) {
  std::array<int, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  for (int v = 0; v < p.vertex_count(); ++v)
    if (p.facets_at(v) == t) return true;
  return false;
}

}  // namespace

std::vector<Belt> find_belts(const Polytope& p, int k) {
  if (k != 3 && k != 4) throw ValidationError("belt length must be 3 or 4");
  std::vector<Belt> out;
  int m = p.facet_count();
  if (k == 3) {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        if (!p.adjacent_facets(a, b)) continue;
        for (int c = b + 1; c < m; ++c) {
          if (!p.adjacent_facets(a, c) || !p.adjacent_facets(b, c)) continue;
          if (triple_has_common_vertex(p, a, b, c)) continue;
          out.push_back({{a, b, c}});
        }
      }
  } else {
    // cycles (a, x, y, z) anchored at the minimal member, with x < z;
    // diagonally opposite facets must be disjoint (equivalently: not
    // adjacent, since facets sharing even a vertex share an edge).
    for (int a = 0; a < m; ++a)
      for (int x = a + 1; x < m; ++x) {
        if (!p.adjacent_facets(a, x)) continue;
        for (int z = x + 1; z < m; ++z) {
          if (!p.adjacent_facets(a, z) || p.adjacent_facets(x, z)) continue;
          for (int y = a + 1; y < m; ++y) {
            if (y == x || y == z) continue;
            if (!p.adjacent_facets(x, y) || !p.adjacent_facets(y, z)) continue;
            if (p.adjacent_facets(a, y)) continue;
            out.push_back({{a, x, y, z}});
          }
        }
      }
  }
  std::sort(out.begin(), out.end(),
            [](const Belt& l, const Belt& r) { return l.facets < r.facets; });
  return out;
}

bool is_flag(const Polytope& p) {
  if (p.facet_count() == 4) return false;  // the simplex
  return find_belts(p, 3).empty();
}

bool is_pogorelov(const Polytope& p) {
  return is_flag(p) && find_belts(p, 4).empty();
}

bool facet_injective(const Polytope& p, int f) {
  if (f < 0 || f >= p.facet_count())
    throw ValidationError("invalid facet id " + std::to_string(f));
  for (const Belt& b : find_belts(p, 3))
    if (std::find(b.facets.begin(), b.facets.end(), f) != b.facets.end()) return false;
  return true;
}

bool edge_injective(const Polytope& p, int e) {
  const Edge& ed = p.edge(e);
  // The facets transversal to e are the third facet at each endpoint.
  auto third = [&](int v) {
    for (int f : p.facets_at(v))
      if (f != ed.facets[0] && f != ed.facets[1]) return f;
    throw InternalError("endpoint without a third facet");
  };
  int fa = third(ed.a), fb = third(ed.b);
  // Any intersection of fa and fb lies outside e, so injectivity needs them
  // disjoint.
  return !p.adjacent_facets(fa, fb);
}

// ---------------------------------------------------------------------------
// truncation

Polytope truncate_vertex(const Polytope& p, int v) {
  if (v < 0 || v >= p.vertex_count())
    throw ValidationError("invalid vertex id " + std::to_string(v));

  auto renumber = [&](int w) { return w < v ? w : w - 1; };
  int base = p.vertex_count() - 1;  // first cut-vertex id after removing v

  const auto& ev = p.edges_at(v);  // ascending edge ids
  auto cut_vertex = [&](int e) {
    for (int i = 0; i < 3; ++i)
      if (ev[i] == e) return base + i;
    throw InternalError("edge not incident to truncated vertex");
  };

  std::vector<std::vector<int>> facets;
  facets.reserve(p.facet_count() + 1);
  for (int f = 0; f < p.facet_count(); ++f) {
    const auto& cyc = p.facet(f);
    std::vector<int> out;
    out.reserve(cyc.size() + 1);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (cyc[i] != v) {
        out.push_back(renumber(cyc[i]));
        continue;
      }
      int prev = cyc[(i + cyc.size() - 1) % cyc.size()];
      int next = cyc[(i + 1) % cyc.size()];
      out.push_back(cut_vertex(p.edge_between(prev, v)));
      out.push_back(cut_vertex(p.edge_between(v, next)));
    }
    facets.push_back(std::move(out));
  }
  facets.push_back({base, base + 1, base + 2});
  return Polytope(p.vertex_count() + 2, std::move(facets));
}

// ---------------------------------------------------------------------------
// builders

Polytope make_simplex() {
  return Polytope(4, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
}

Polytope make_cube() {
  // vertex id = x + 2y + 4z
  return Polytope(8, {{0, 2, 6, 4},    // x = 0
                      {1, 5, 7, 3},    // x = 1
                      {0, 4, 5, 1},    // y = 0
                      {2, 3, 7, 6},    // y = 1
                      {0, 1, 3, 2},    // z = 0
                      {4, 6, 7, 5}});  // z = 1
}

Polytope make_prism(int n) {
  if (n < 3) throw ValidationError("prism requires n >= 3");
  std::vector<std::vector<int>> facets;
  std::vector<int> bottom(n), top(n);
  std::iota(bottom.begin(), bottom.end(), 0);
  std::iota(top.begin(), top.end(), n);
  facets.push_back(bottom);
  facets.push_back(top);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    facets.push_back({i, j, n + j, n + i});
  }
  return Polytope(2 * n, std::move(facets));
}

Polytope make_dodecahedron() {
  // Rings: top cap v_i = i, upper u_i = 5+i, lower w_i = 10+i, bottom
  // b_i = 15+i (i mod 5). Edges: v_i v_{i+1}, v_i u_i, u_i w_i, u_i w_{i-1},
  // w_i b_i, b_i b_{i+1}.
  std::vector<std::vector<int>> facets;
  facets.push_back({0, 1, 2, 3, 4});
  for (int i = 0; i < 5; ++i) {
    int j = (i + 1) % 5;
    facets.push_back({i, j, 5 + j, 10 + i, 5 + i});
  }
  for (int i = 0; i < 5; ++i) {
    int j = (i + 1) % 5;
    facets.push_back({15 + i, 15 + j, 10 + j, 5 + j, 10 + i});
  }
  facets.push_back({15, 16, 17, 18, 19});
  return Polytope(20, std::move(facets));
}

namespace {

std::vector<std::array<int, 4>> all_permutations_1234() {
  std::array<int, 4> p{1, 2, 3, 4};
  std::vector<std::array<int, 4>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

Polytope make_permutohedron() {
  // Vertices: the 24 permutations of (1,2,3,4), ids in lexicographic order.
  // Two vertices are adjacent iff they differ by swapping the positions of
  // the values k and k+1. Facet F_S, for a proper position subset S, holds
  // the permutations whose positions in S carry exactly the values 1..|S|;
  // subsets are enumerated by size, then lexicographically.
  auto perms = all_permutations_1234();
  std::map<std::array<int, 4>, int> id;
  for (int i = 0; i < 24; ++i) id[perms[i]] = i;

  auto neighbors = [&](int i) {
    std::vector<int> out;
    for (int k = 1; k <= 3; ++k) {
      auto q = perms[i];
      int pk = -1, pk1 = -1;
      for (int pos = 0; pos < 4; ++pos) {
        if (q[pos] == k) pk = pos;
        if (q[pos] == k + 1) pk1 = pos;
      }
      std::swap(q[pk], q[pk1]);
      out.push_back(id.at(q));
    }
    return out;
  };

  std::vector<std::vector<int>> subsets;
  for (int size = 1; size <= 3; ++size)
    for (int mask = 0; mask < 16; ++mask) {
      std::vector<int> s;
      for (int pos = 0; pos < 4; ++pos)
        if (mask & (1 << pos)) s.push_back(pos);
      if (static_cast<int>(s.size()) == size) subsets.push_back(s);
    }

  std::vector<std::vector<int>> facets;
  for (const auto& s : subsets) {
    std::vector<int> members;
    for (int i = 0; i < 24; ++i) {
      int sum = 0;
      for (int pos : s) sum += perms[i][pos];
      int want = static_cast<int>(s.size()) * (static_cast<int>(s.size()) + 1) / 2;
      if (sum == want) members.push_back(i);
    }
    // walk the polygon: within the facet every member has exactly 2 neighbors
    std::vector<char> in(24, 0);
    for (int i : members) in[i] = 1;
    int start = *std::min_element(members.begin(), members.end());
    std::vector<int> cycle{start};
    int prev = -1, cur = start;
    do {
      std::vector<int> nb;
      for (int w : neighbors(cur))
        if (in[w] && w != prev) nb.push_back(w);
      int next = (cycle.size() == 1) ? *std::min_element(nb.begin(), nb.end()) : nb.at(0);
      prev = cur;
      cur = next;
      if (cur != start) cycle.push_back(cur);
    } while (cur != start);
    if (cycle.size() != members.size())
      throw InternalError("permutohedron facet walk failed");
    facets.push_back(std::move(cycle));
  }
  return Polytope(24, std::move(facets));
}

Polytope build_shape(const std::string& shape) {
  if (shape == "simplex") return make_simplex();
  if (shape == "cube") return make_cube();
  if (shape == "dodecahedron") return make_dodecahedron();
  if (shape == "permutohedron") return make_permutohedron();
  if (shape.rfind("prism:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(shape.substr(6));
    } catch (const std::exception&) {
      throw ValidationError("bad prism size in shape '" + shape + "'");
    }
    return make_prism(n);
  }
  throw ValidationError("unknown shape '" + shape + "'");
}

// ---------------------------------------------------------------------------
// file format

Polytope parse_polytope(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("polytope JSON: ") + e.what());
  }
  if (j.contains("polytope")) j = j.at("polytope");
  if (!j.is_object() || !j.contains("vertex_count") || !j.contains("facets"))
    throw ValidationError("polytope JSON: expected object with vertex_count and facets");
  try {
    int n = j.at("vertex_count").get<int>();
    auto facets = j.at("facets").get<std::vector<std::vector<int>>>();
    return Polytope(n, std::move(facets));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("polytope JSON: ") + e.what());
  }
}

std::string polytope_to_json(const Polytope& p) {
  nlohmann::ordered_json j;
  j["vertex_count"] = p.vertex_count();
  j["facets"] = p.facets();
  return j.dump();
}

}  // namespace smallcover
