#include "smallcover/charmap.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "smallcover/errors.hpp"

namespace smallcover {

std::vector<std::string> charmap_violations(const Polytope& p, const CharMap& lam) {
  if (static_cast<int>(lam.colors.size()) != p.facet_count())
    throw ValidationError("characteristic map has " + std::to_string(lam.colors.size()) +
                          " entries for " + std::to_string(p.facet_count()) + " facets");
  std::vector<std::string> out;
  for (int f = 0; f < p.facet_count(); ++f) {
    if (lam.colors[f] == 0 || lam.colors[f] > 7)
      out.push_back("facet " + std::to_string(f) + " has invalid vector " +
                    std::to_string(lam.colors[f]));
  }
  if (!out.empty()) return out;
  for (int v = 0; v < p.vertex_count(); ++v) {
    const auto& fs = p.facets_at(v);
    if (!gf2_basis(lam.colors[fs[0]], lam.colors[fs[1]], lam.colors[fs[2]]))
      out.push_back("vertex " + std::to_string(v) + ": facet vectors of facets {" +
                    std::to_string(fs[0]) + "," + std::to_string(fs[1]) + "," +
                    std::to_string(fs[2]) + "} are dependent");
  }
  return out;
}

void require_valid_charmap(const Polytope& p, const CharMap& lam) {
  auto v = charmap_violations(p, lam);
  if (!v.empty()) throw ValidationError("invalid characteristic map: " + v.front());
}

bool is_orientable(const Polytope& p, const CharMap& lam) {
  require_valid_charmap(p, lam);
  for (Gf2 phi = 1; phi <= 7; ++phi) {
    bool ok = true;
    for (Gf2 c : lam.colors)
      if (!gf2_pairing(phi, c)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::vector<CharMap> find_proper_colorings(const Polytope& p, std::vector<Gf2> palette,
                                           std::size_t max_results) {
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  std::vector<CharMap> results;
  std::vector<Gf2> colors(p.facet_count(), 0);

  // adjacency lists once, for the propriety check
  std::vector<std::vector<int>> adj(p.facet_count());
  for (const Edge& e : p.edges()) {
    adj[e.facets[0]].push_back(e.facets[1]);
    adj[e.facets[1]].push_back(e.facets[0]);
  }

  auto rec = [&](auto&& self, int f) -> bool {
    if (f == p.facet_count()) {
      results.push_back({colors});
      return results.size() >= max_results;
    }
    for (Gf2 c : palette) {
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
  rec(rec, 0);
  return results;
}

std::optional<CharMap> find_orientable_coloring(const Polytope& p) {
  auto found = find_proper_colorings(p, {kE1, kE2, kE3, kE123}, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::optional<CharMap> find_linear_model_coloring(const Polytope& p) {
  auto found = find_proper_colorings(p, {kE1, kE2, kE3}, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

bool is_linear_model_polytope(const Polytope& p) {
  for (const auto& cyc : p.facets())
    if (cyc.size() % 2 != 0) return false;
  return true;
}

std::vector<Gf2> induced_map(const Polytope& p, const CharMap& lam, int f) {
  require_valid_charmap(p, lam);
  const auto& cyc = p.facet(f);
  std::vector<Gf2> out;
  out.reserve(cyc.size());
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    int e = p.edge_between(cyc[i], cyc[(i + 1) % cyc.size()]);
    int g = p.edge(e).other_facet(f);
    out.push_back(coset_min1(lam.colors[g], lam.colors[f]));
  }
  return out;
}

SurfaceType face_surface_type(const Polytope& p, const CharMap& lam, int f) {
  auto ind = induced_map(p, lam, f);
  int gon = static_cast<int>(ind.size());
  std::set<Gf2> values(ind.begin(), ind.end());
  if (values.size() == 2) {
    // a 2-valued induced map forces the polygon to be even
    if (gon % 2 != 0) throw InternalError("2-valued induced map on an odd polygon");
    return {true, (gon - 2) / 2};
  }
  return {false, gon - 2};
}

CharMap truncation_charmap(const Polytope& p, const CharMap& lam, int v) {
  require_valid_charmap(p, lam);
  const auto& fs = p.facets_at(v);
  CharMap out = lam;
  out.colors.push_back(static_cast<Gf2>(lam.colors[fs[0]] ^ lam.colors[fs[1]] ^
                                        lam.colors[fs[2]]));
  return out;
}

CharMap parse_charmap(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("colors JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("colors"))
    throw ValidationError("colors JSON: expected object with a colors array");
  try {
    auto vals = j.at("colors").get<std::vector<int>>();
    CharMap lam;
    for (int c : vals) {
      if (c < 1 || c > 7)
        throw ValidationError("colors JSON: entry " + std::to_string(c) +
                              " outside 1..7");
      lam.colors.push_back(static_cast<Gf2>(c));
    }
    return lam;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("colors JSON: ") + e.what());
  }
}

std::string charmap_to_json(const CharMap& lam) {
  nlohmann::ordered_json j;
  j["colors"] = std::vector<int>(lam.colors.begin(), lam.colors.end());
  return j.dump();
}

}  // namespace smallcover
