#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "smallcover/charmap.hpp"
#include "smallcover/polytope.hpp"

// Test-only oracles, independent of the library code paths they check.
namespace testsupport {

using namespace smallcover;

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

inline bool facets_share_vertex(const Polytope& p, int f, int g) {
  for (int v = 0; v < p.vertex_count(); ++v) {
    const auto& fs = p.facets_at(v);
    bool has_f = std::find(fs.begin(), fs.end(), f) != fs.end();
    bool has_g = std::find(fs.begin(), fs.end(), g) != fs.end();
    if (has_f && has_g) return true;
  }
  return false;
}

// Direct check of the belt conditions on a candidate cyclic facet sequence.
inline bool is_belt_cycle(const Polytope& p, const std::vector<int>& cyc) {
  int k = static_cast<int>(cyc.size());
  if (std::set<int>(cyc.begin(), cyc.end()).size() != cyc.size()) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = (j - i == 1) || (i == 0 && j == k - 1);
      if (consecutive && p.shared_edge(cyc[i], cyc[j]) < 0) return false;
      if (!consecutive && facets_share_vertex(p, cyc[i], cyc[j])) return false;
    }
  if (k == 3) {  // common intersection must be empty
    for (int v = 0; v < p.vertex_count(); ++v) {
      const auto& fs = p.facets_at(v);
      std::set<int> have(fs.begin(), fs.end());
      if (have.count(cyc[0]) && have.count(cyc[1]) && have.count(cyc[2])) return false;
    }
  }
  return true;
}

inline std::vector<int> canonical_belt(std::vector<int> cyc) {
  std::vector<int> best;
  for (int refl = 0; refl < 2; ++refl) {
    for (std::size_t s = 0; s < cyc.size(); ++s) {
      std::vector<int> rot(cyc.begin() + s, cyc.end());
      rot.insert(rot.end(), cyc.begin(), cyc.begin() + s);
      if (best.empty() || rot < best) best = rot;
    }
    std::reverse(cyc.begin(), cyc.end());
  }
  return best;
}

// Brute-force belt enumeration over all facet k-subsets / cyclic orders.
inline std::vector<std::vector<int>> belts_bruteforce(const Polytope& p, int k) {
  std::set<std::vector<int>> found;
  int m = p.facet_count();
  if (k == 3) {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c)
          if (is_belt_cycle(p, {a, b, c})) found.insert(canonical_belt({a, b, c}));
  } else {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c)
          for (int d = c + 1; d < m; ++d)
            for (auto& cyc : std::vector<std::vector<int>>{
                     {a, b, c, d}, {a, b, d, c}, {a, c, b, d}})
              if (is_belt_cycle(p, cyc)) found.insert(canonical_belt(cyc));
  }
  return {found.begin(), found.end()};
}

// Combinatorial isomorphism by exhaustive vertex relabeling (small inputs
// only). The facet multiset is compared through canonical cycle forms.
inline std::set<std::vector<int>> facet_key(const Polytope& p, const std::vector<int>& relabel) {
  std::multiset<std::vector<int>> key;
  for (const auto& cyc : p.facets()) {
    std::vector<int> img;
    for (int v : cyc) img.push_back(relabel[v]);
    key.insert(canonical_belt(img));
  }
  return {key.begin(), key.end()};
}

inline bool isomorphic(const Polytope& a, const Polytope& b) {
  if (a.f_vector() != b.f_vector()) return false;
  std::multiset<std::size_t> sa, sb;
  for (const auto& c : a.facets()) sa.insert(c.size());
  for (const auto& c : b.facets()) sb.insert(c.size());
  if (sa != sb) return false;

  std::vector<int> id(b.vertex_count());
  std::iota(id.begin(), id.end(), 0);
  std::multiset<std::vector<int>> target;
  for (const auto& cyc : b.facets()) target.insert(canonical_belt(cyc));

  std::vector<int> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::multiset<std::vector<int>> key;
    for (const auto& cyc : a.facets()) {
      std::vector<int> img;
      for (int v : cyc) img.push_back(perm[v]);
      key.insert(canonical_belt(img));
    }
    if (key == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Randomized backtracking for a valid characteristic map (colors 1..7,
// shuffled per facet). Always terminates on valid inputs at corpus scale.
inline CharMap random_charmap(const Polytope& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Gf2> colors(p.facet_count(), 0);

  auto vertex_ok = [&](int v) {
    const auto& fs = p.facets_at(v);
    Gf2 a = colors[fs[0]], b = colors[fs[1]], c = colors[fs[2]];
    if (a && b && c) return gf2_basis(a, b, c);
    if (a && b && a == b) return false;
    if (a && c && a == c) return false;
    if (b && c && b == c) return false;
    return true;
  };

  auto rec = [&](auto&& self, int f) -> bool {
    if (f == p.facet_count()) return true;
    std::vector<Gf2> palette{1, 2, 3, 4, 5, 6, 7};
    std::shuffle(palette.begin(), palette.end(), rng);
    for (Gf2 c : palette) {
      colors[f] = c;
      bool ok = true;
      for (int v : p.facet(f))
        if (!vertex_ok(v)) {
          ok = false;
          break;
        }
      if (ok && self(self, f + 1)) return true;
    }
    colors[f] = 0;
    return false;
  };
  if (!rec(rec, 0)) throw std::runtime_error("random_charmap: search failed");
  return {colors};
}

// Random proper coloring from a fixed palette (shuffled backtracking).
inline CharMap random_proper_coloring(const Polytope& p, std::vector<Gf2> palette,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Gf2> colors(p.facet_count(), 0);
  std::vector<std::vector<int>> adj(p.facet_count());
  for (const Edge& e : p.edges()) {
    adj[e.facets[0]].push_back(e.facets[1]);
    adj[e.facets[1]].push_back(e.facets[0]);
  }
  auto rec = [&](auto&& self, int f) -> bool {
    if (f == p.facet_count()) return true;
    std::vector<Gf2> pal = palette;
    std::shuffle(pal.begin(), pal.end(), rng);
    for (Gf2 c : pal) {
      bool ok = true;
      for (int g : adj[f])
        if (g < f && colors[g] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      colors[f] = c;
      if (self(self, f + 1)) return true;
    }
    colors[f] = 0;
    return false;
  };
  if (!rec(rec, 0)) throw std::runtime_error("random_proper_coloring: search failed");
  return {colors};
}

// Orientability via explicit basis search: some basis {a,b,c} of Z_2^3 must
// give every facet color coordinate-sum 1.
inline bool orientable_by_basis_search(const Polytope& p, const CharMap& lam) {
  for (Gf2 a = 1; a <= 7; ++a)
    for (Gf2 b = 1; b <= 7; ++b)
      for (Gf2 c = 1; c <= 7; ++c) {
        if (!gf2_basis(a, b, c)) continue;
        std::map<Gf2, int> eps;
        for (int al = 0; al < 2; ++al)
          for (int be = 0; be < 2; ++be)
            for (int ga = 0; ga < 2; ++ga) {
              Gf2 x = static_cast<Gf2>((al ? a : 0) ^ (be ? b : 0) ^ (ga ? c : 0));
              eps[x] = (al + be + ga) % 2;
            }
        bool all_one = true;
        for (Gf2 color : lam.colors)
          if (eps.at(color) != 1) {
            all_one = false;
            break;
          }
        if (all_one) return true;
      }
  return false;
}

// All 168 invertible linear maps of Z_2^3, as images of (e1, e2, e3).
inline std::vector<std::array<Gf2, 3>> all_invertible_maps() {
  std::vector<std::array<Gf2, 3>> out;
  for (Gf2 a = 1; a <= 7; ++a)
    for (Gf2 b = 1; b <= 7; ++b)
      for (Gf2 c = 1; c <= 7; ++c)
        if (gf2_basis(a, b, c)) out.push_back({a, b, c});
  return out;
}

inline Gf2 apply_linear(const std::array<Gf2, 3>& m, Gf2 x) {
  Gf2 y = 0;
  if (x & 1) y ^= m[0];
  if (x & 2) y ^= m[1];
  if (x & 4) y ^= m[2];
  return y;
}

}  // namespace testsupport
