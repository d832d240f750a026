#include "smallcover/morse.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "json.hpp"
#include "smallcover/errors.hpp"

namespace smallcover {

namespace {

std::vector<int> inverse_permutation(const std::vector<int>& rank) {
  std::vector<int> inv(rank.size(), -1);
  for (std::size_t v = 0; v < rank.size(); ++v) inv[rank[v]] = static_cast<int>(v);
  return inv;
}

}  // namespace

std::vector<std::string> order_violations(const Polytope& p, const std::vector<int>& rank) {
  std::vector<std::string> out;
  int n = p.vertex_count();
  if (static_cast<int>(rank.size()) != n)
    return {"rank list has " + std::to_string(rank.size()) + " entries for " +
            std::to_string(n) + " vertices"};

  std::vector<char> used(n, 0);
  for (int r : rank) {
    if (r < 0 || r >= n) return {"rank " + std::to_string(r) + " out of range"};
    if (used[r]) return {"rank " + std::to_string(r) + " assigned twice"};
    used[r] = 1;
  }

  // unique global source and sink via index counts
  int sources = 0, sinks = 0;
  for (int v = 0; v < n; ++v) {
    int in = 0;
    for (int w : p.neighbors(v))
      if (rank[w] < rank[v]) ++in;
    if (in == 0) ++sources;
    if (in == 3) ++sinks;
  }
  if (sources != 1)
    out.push_back("not generic: " + std::to_string(sources) + " global sources");
  if (sinks != 1)
    out.push_back("not generic: " + std::to_string(sinks) + " global sinks");

  for (int f = 0; f < p.facet_count(); ++f) {
    const auto& cyc = p.facet(f);
    int k = static_cast<int>(cyc.size());
    int minima = 0, maxima = 0;
    for (int i = 0; i < k; ++i) {
      int v = cyc[i], l = cyc[(i + k - 1) % k], r = cyc[(i + 1) % k];
      if (rank[v] < rank[l] && rank[v] < rank[r]) ++minima;
      if (rank[v] > rank[l] && rank[v] > rank[r]) ++maxima;
    }
    if (minima != 1 || maxima != 1)
      out.push_back("facet " + std::to_string(f) + " has " + std::to_string(minima) +
                    " local minima and " + std::to_string(maxima) + " local maxima");
  }
  return out;
}

VertexOrder order_from_ranks(const Polytope& p, std::vector<int> rank) {
  auto bad = order_violations(p, rank);
  if (!bad.empty()) throw ValidationError("invalid vertex order: " + bad.front());
  VertexOrder ord;
  ord.by_rank = inverse_permutation(rank);
  ord.rank = std::move(rank);
  return ord;
}

VertexOrder order_from_heights(const Polytope& p, const std::vector<double>& heights) {
  if (static_cast<int>(heights.size()) != p.vertex_count())
    throw ValidationError("one height per vertex required");
  std::vector<int> by_rank(heights.size());
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::sort(by_rank.begin(), by_rank.end(),
            [&](int u, int v) { return heights[u] < heights[v]; });
  for (std::size_t i = 1; i < by_rank.size(); ++i)
    if (heights[by_rank[i - 1]] == heights[by_rank[i]])
      throw ValidationError("duplicate heights at vertices " +
                            std::to_string(by_rank[i - 1]) + " and " +
                            std::to_string(by_rank[i]));
  std::vector<int> rank(heights.size());
  for (std::size_t i = 0; i < by_rank.size(); ++i) rank[by_rank[i]] = static_cast<int>(i);
  return order_from_ranks(p, std::move(rank));
}

namespace {

// Grow a lower set one vertex at a time. Adding v is admissible iff
//   * v has a placed neighbor (unless v is first), so the source is unique;
//   * v is not the first placed vertex of a facet that already started
//     (unique local minimum per facet);
//   * when both facet-neighbors of v are placed, the facet is finished by v
//     (unique local maximum per facet);
//   * v does not close its whole neighborhood early (unique sink).
class OrderSearch {
 public:
  explicit OrderSearch(const Polytope& p) : p_(p), placed_(p.vertex_count(), 0) {
    facet_placed_.assign(p.facet_count(), 0);
  }

  bool admissible(int v, int depth) const {
    int placed_neighbors = 0;
    for (int w : p_.neighbors(v))
      if (placed_[w]) ++placed_neighbors;
    if (depth > 0 && placed_neighbors == 0) return false;
    if (placed_neighbors == 3 && depth != p_.vertex_count() - 1) return false;
    for (int f : p_.facets_at(v)) {
      const auto& cyc = p_.facet(f);
      int k = static_cast<int>(cyc.size());
      int pos = static_cast<int>(std::find(cyc.begin(), cyc.end(), v) - cyc.begin());
      int nl = cyc[(pos + k - 1) % k], nr = cyc[(pos + 1) % k];
      int in_facet = (placed_[nl] ? 1 : 0) + (placed_[nr] ? 1 : 0);
      if (in_facet == 0 && facet_placed_[f] > 0) return false;
      if (in_facet == 2 && facet_placed_[f] != k - 1) return false;
    }
    return true;
  }

  void place(int v) {
    placed_[v] = 1;
    for (int f : p_.facets_at(v)) ++facet_placed_[f];
    order_.push_back(v);
  }

  void unplace(int v) {
    placed_[v] = 0;
    for (int f : p_.facets_at(v)) --facet_placed_[f];
    order_.pop_back();
  }

  // candidates(depth) must return vertex ids to try, in the desired order
  template <typename Candidates>
  bool search(int depth, const Candidates& candidates) {
    if (depth == p_.vertex_count()) return true;
    for (int v : candidates(depth)) {
      if (placed_[v] || !admissible(v, depth)) continue;
      place(v);
      if (search(depth + 1, candidates)) return true;
      unplace(v);
    }
    return false;
  }

  const std::vector<int>& order() const { return order_; }

 private:
  const Polytope& p_;
  std::vector<char> placed_;
  std::vector<int> facet_placed_;
  std::vector<int> order_;
};

VertexOrder order_from_sequence(const Polytope& p, const std::vector<int>& seq) {
  std::vector<int> rank(p.vertex_count());
  for (std::size_t i = 0; i < seq.size(); ++i) rank[seq[i]] = static_cast<int>(i);
  return order_from_ranks(p, std::move(rank));
}

}  // namespace

VertexOrder default_order(const Polytope& p) {
  OrderSearch s(p);
  std::vector<int> ids(p.vertex_count());
  std::iota(ids.begin(), ids.end(), 0);
  if (!s.search(0, [&](int) { return ids; }))
    throw InternalError("no valid vertex order found");
  return order_from_sequence(p, s.order());
}

VertexOrder random_valid_order(const Polytope& p, std::uint64_t seed) {
  OrderSearch s(p);
  std::mt19937_64 rng(seed);
  // one shuffled candidate list per depth, fixed up front for determinism
  std::vector<std::vector<int>> lists(p.vertex_count());
  for (auto& l : lists) {
    l.resize(p.vertex_count());
    std::iota(l.begin(), l.end(), 0);
    std::shuffle(l.begin(), l.end(), rng);
  }
  if (!s.search(0, [&](int depth) { return lists[depth]; }))
    throw InternalError("no valid vertex order found");
  return order_from_sequence(p, s.order());
}

MorseData morse_data(const Polytope& p, const VertexOrder& ord) {
  MorseData md;
  int n = p.vertex_count();
  md.index.assign(n, 0);
  md.parent_edge.assign(n, -1);
  md.source = ord.source();
  md.sink = ord.sink();

  for (int v = 0; v < n; ++v) {
    int best_tail_rank = -1;
    for (int e : p.edges_at(v)) {
      int w = p.edge(e).other_vertex(v);
      if (!ord.lower(w, v)) continue;
      ++md.index[v];
      if (best_tail_rank < 0 || ord.rank[w] < best_tail_rank) {
        best_tail_rank = ord.rank[w];
        md.parent_edge[v] = e;
      }
    }
    ++md.index_counts[md.index[v]];
  }

  md.top_vertex.resize(p.facet_count());
  for (int f = 0; f < p.facet_count(); ++f) {
    const auto& cyc = p.facet(f);
    md.top_vertex[f] = *std::max_element(
        cyc.begin(), cyc.end(), [&](int u, int v) { return ord.lower(u, v); });
  }

  md.shelling.resize(p.facet_count());
  std::iota(md.shelling.begin(), md.shelling.end(), 0);
  std::sort(md.shelling.begin(), md.shelling.end(), [&](int f, int g) {
    int rf = ord.rank[md.top_vertex[f]], rg = ord.rank[md.top_vertex[g]];
    return rf != rg ? rf < rg : f < g;
  });
  return md;
}

std::vector<int> MorseData::tree_edges() const {
  std::vector<int> out;
  for (int e : parent_edge)
    if (e >= 0) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

VertexOrder parse_order(const std::string& text, const Polytope& p) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("order JSON: ") + e.what());
  }
  // standalone file: {"rank": [...]}; pipeline bundle: {"order": [...]}
  const char* key = j.is_object() && j.contains("rank") ? "rank" : "order";
  if (!j.is_object() || !j.contains(key))
    throw ValidationError("order JSON: expected object with a rank array");
  try {
    return order_from_ranks(p, j.at(key).get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("order JSON: ") + e.what());
  }
}

std::string order_to_json(const VertexOrder& ord) {
  nlohmann::ordered_json j;
  j["rank"] = ord.rank;
  return j.dump();
}

}  // namespace smallcover
