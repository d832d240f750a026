#include "smallcover/cover.hpp"

#include <algorithm>
#include <set>

#include "smallcover/errors.hpp"

namespace smallcover {

CoverCells cover_cells(const Polytope& p, const CharMap& lam) {
  require_valid_charmap(p, lam);
  CoverCells cells;

  cells.lifted.reserve(2 * p.edge_count());
  for (int e = 0; e < p.edge_count(); ++e) {
    const Edge& ed = p.edge(e);
    Gf2 a = lam.colors[ed.facets[0]], b = lam.colors[ed.facets[1]];
    Gf2 other = 7;  // minimal element outside G_e
    for (Gf2 g = 1; g <= 7; ++g)
      if (coset_min2(g, a, b) != 0) {
        other = g;
        break;
      }
    cells.lifted.push_back({e, 0, 0});
    cells.lifted.push_back({e, 1, other});
  }

  cells.copies.reserve(4 * p.facet_count());
  for (int f = 0; f < p.facet_count(); ++f) {
    Gf2 cf = lam.colors[f];
    std::set<Gf2> labels;
    for (Gf2 g = 0; g < 8; ++g) labels.insert(coset_min1(g, cf));
    const auto& cyc = p.facet(f);
    for (Gf2 label : labels) {
      FaceCopy copy;
      copy.facet = f;
      copy.label = label;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int tail = cyc[i], head = cyc[(i + 1) % cyc.size()];
        int e = p.edge_between(tail, head);
        const Edge& ed = p.edge(e);
        Gf2 a = lam.colors[ed.facets[0]], b = lam.colors[ed.facets[1]];
        int lift = coset_min2(label, a, b) == 0 ? 0 : 1;
        copy.boundary.push_back({e, lift, tail, head});
      }
      cells.copies.push_back(std::move(copy));
    }
  }
  return cells;
}

std::vector<LiftedEdge> lifted_edges(const Polytope& p, const CharMap& lam) {
  return cover_cells(p, lam).lifted;
}

std::vector<FaceCopy> face_copies(const Polytope& p, const CharMap& lam) {
  return cover_cells(p, lam).copies;
}

namespace {

void require_spanning_tree(const Polytope& p, const std::vector<int>& tree_edges) {
  if (static_cast<int>(tree_edges.size()) != p.vertex_count() - 1)
    throw ValidationError("not a tree: expected " + std::to_string(p.vertex_count() - 1) +
                          " edges, got " + std::to_string(tree_edges.size()));
  std::vector<int> root(p.vertex_count());
  for (std::size_t i = 0; i < root.size(); ++i) root[i] = static_cast<int>(i);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (int e : tree_edges) {
    const Edge& ed = p.edge(e);
    int ra = find(ed.a), rb = find(ed.b);
    if (ra == rb) throw ValidationError("not a tree: edge set contains a cycle");
    root[ra] = rb;
  }
}

}  // namespace

Presentation cw_presentation(const Polytope& p, const CharMap& lam,
                             const std::vector<int>& tree_edges, const VertexOrder* ord) {
  CoverCells cells = cover_cells(p, lam);
  require_spanning_tree(p, tree_edges);

  std::vector<char> in_tree(p.edge_count(), 0);
  for (int e : tree_edges) in_tree[e] = 1;

  Presentation pres;
  std::vector<int> gen_index(cells.lifted.size(), -1);
  for (std::size_t lid = 0; lid < cells.lifted.size(); ++lid) {
    const LiftedEdge& le = cells.lifted[lid];
    if (le.lift == 0 && in_tree[le.edge]) continue;
    gen_index[lid] = static_cast<int>(pres.gens.size());
    pres.gens.push_back("e" + std::to_string(le.edge) + "_" + std::to_string(le.label));
  }

  auto forward = [&](int tail, int head) {
    return ord ? ord->lower(tail, head) : tail < head;
  };

  for (const FaceCopy& copy : cells.copies) {
    Word w;
    for (const FaceCopy::Step& s : copy.boundary) {
      int g = gen_index[2 * s.edge + s.lift];
      if (g < 0) continue;
      w.push_back(letter(g, forward(s.tail, s.head) ? 1 : -1));
    }
    w = free_reduce(std::move(w));
    if (!w.empty()) pres.relators.push_back(std::move(w));
  }
  return pres;
}

Presentation wu_yu_presentation(const Polytope& p, const CharMap& lam, int v0) {
  require_valid_charmap(p, lam);
  if (v0 < 0 || v0 >= p.vertex_count())
    throw ValidationError("invalid base vertex " + std::to_string(v0));

  Presentation pres;
  // symbol per (facet, coset of <lambda(F)>), labeled by the coset minimum
  std::vector<std::array<int, 8>> sym(p.facet_count());
  for (auto& row : sym) row.fill(-1);
  for (int f = 0; f < p.facet_count(); ++f) {
    std::set<Gf2> labels;
    for (Gf2 g = 0; g < 8; ++g) labels.insert(coset_min1(g, lam.colors[f]));
    for (Gf2 label : labels) {
      sym[f][label] = static_cast<int>(pres.gens.size());
      pres.gens.push_back("s" + std::to_string(f) + "_" + std::to_string(label));
    }
  }
  // s_{F,g} resolved through the involution s_{F,g+lambda(F)} = s_{F,g}^-1
  auto resolve = [&](int f, Gf2 g, int sign) {
    Gf2 label = coset_min1(g, lam.colors[f]);
    if (g != label) sign = -sign;
    return letter(sym[f][label], sign);
  };

  std::set<Word> seen;
  for (int e = 0; e < p.edge_count(); ++e) {
    const Edge& ed = p.edge(e);
    int fa = ed.facets[0], fb = ed.facets[1];
    Gf2 ca = lam.colors[fa], cb = lam.colors[fb];
    std::set<Gf2> coset_reps;
    for (Gf2 g = 0; g < 8; ++g) coset_reps.insert(coset_min2(g, ca, cb));
    for (Gf2 g : coset_reps) {
      // the 4-cycle of glued face copies around the handle (e, [g])
      Word w{resolve(fa, g, 1), resolve(fb, static_cast<Gf2>(g ^ ca), 1),
             resolve(fa, static_cast<Gf2>(g ^ cb), -1), resolve(fb, g, -1)};
      w = free_reduce(std::move(w));
      if (w.empty()) continue;
      if (!seen.insert(canonical_cyclic(w)).second) continue;
      pres.relators.push_back(std::move(w));
    }
  }
  for (int f : p.facets_at(v0)) {
    std::set<Gf2> labels;
    for (Gf2 g = 0; g < 8; ++g) labels.insert(coset_min1(g, lam.colors[f]));
    for (Gf2 label : labels) pres.relators.push_back({letter(sym[f][label], 1)});
  }
  return pres;
}

GenusReport heegaard_report(const Polytope& p) {
  auto [f0, f1, f2] = p.f_vector();
  GenusReport r;
  r.face_handlebody = {8, 4 * f2};
  r.skeleton_handlebody = {f0, 2 * f1};
  r.reduced_genus = 4 * (f2 - 3);
  r.minimal_genus = f2 - 3;
  if (8 - 4 * f2 != f0 - 2 * f1)
    throw InternalError("handlebody Euler characteristics disagree");
  return r;
}

}  // namespace smallcover
