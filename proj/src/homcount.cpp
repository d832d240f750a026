#include "smallcover/homcount.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "smallcover/errors.hpp"

namespace smallcover {

FiniteGroupTable::FiniteGroupTable(std::string name_, int order_, std::vector<int> table_)
    : name(std::move(name_)), order(order_), table(std::move(table_)) {
  if (order <= 0 || static_cast<int>(table.size()) != order * order)
    throw ValidationError("group table: wrong size");
  for (int x : table)
    if (x < 0 || x >= order) throw ValidationError("group table: entry out of range");

  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw ValidationError("group table: no identity");

  inverse.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (mul(a, b) == identity && mul(b, a) == identity) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] < 0) throw ValidationError("group table: missing inverse");
  }

  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw ValidationError("group table: not associative");
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic group order must be positive");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteGroupTable("z" + std::to_string(n), n, std::move(t));
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& a,
                                                  const FiniteGroupTable& b) {
  int n = a.order * b.order;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  auto pack = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          t[pack(x1, y1) * n + pack(x2, y2)] = pack(a.mul(x1, x2), b.mul(y1, y2));
  return FiniteGroupTable(a.name + "x" + b.name, n, std::move(t));
}

FiniteGroupTable FiniteGroupTable::symmetric3() {
  // permutations of {0,1,2} in lexicographic order; product = composition
  std::array<std::array<int, 3>, 6> perms{{{0, 1, 2},
                                           {0, 2, 1},
                                           {1, 0, 2},
                                           {1, 2, 0},
                                           {2, 0, 1},
                                           {2, 1, 0}}};
  auto find = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    throw InternalError("s3: permutation lookup failed");
  };
  std::vector<int> t(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a * 6 + b] = find(c);
    }
  return FiniteGroupTable("s3", 6, std::move(t));
}

FiniteGroupTable group_by_name(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "s3") return FiniteGroupTable::symmetric3();
  if (!s.empty() && s[0] == 'z') {
    int n = 0, k = 1;
    auto caret = s.find('^');
    try {
      n = std::stoi(s.substr(1, caret == std::string::npos ? caret : caret - 1));
      if (caret != std::string::npos) k = std::stoi(s.substr(caret + 1));
    } catch (const std::exception&) {
      throw ValidationError("unknown group name '" + name + "'");
    }
    if (n < 1 || k < 1 || k > 6) throw ValidationError("unknown group name '" + name + "'");
    FiniteGroupTable g = FiniteGroupTable::cyclic(n);
    FiniteGroupTable out = g;
    for (int i = 1; i < k; ++i) out = FiniteGroupTable::direct_product(out, g);
    out.name = k == 1 ? s : "z" + std::to_string(n) + "^" + std::to_string(k);
    return out;
  }
  throw ValidationError("unknown group name '" + name + "'");
}

unsigned long long count_homs(const Presentation& pres, const FiniteGroupTable& h,
                              unsigned long long cap) {
  const int ngens = static_cast<int>(pres.gens.size());
  if (ngens == 0) return 1;

  // relators become checkable once their highest generator is assigned
  std::vector<std::vector<const Word*>> by_max(ngens);
  for (const Word& w : pres.relators) {
    int mx = -1;
    for (int l : w) mx = std::max(mx, gen_of(l));
    if (mx >= 0) by_max[mx].push_back(&w);
  }

  std::vector<int> img(ngens, -1);
  unsigned long long nodes = 0, count = 0;

  auto word_value = [&](const Word& w) {
    int v = h.identity;
    for (int l : w) {
      int g = img[gen_of(l)];
      v = h.mul(v, l > 0 ? g : h.inverse[g]);
    }
    return v;
  };

  auto rec = [&](auto&& self, int g) -> void {
    if (g == ngens) {
      ++count;
      return;
    }
    for (int v = 0; v < h.order; ++v) {
      if (++nodes > cap)
        throw CapExceeded("hom-count cap of " + std::to_string(cap) +
                          " assignments exceeded");
      img[g] = v;
      bool ok = true;
      for (const Word* w : by_max[g])
        if (word_value(*w) != h.identity) {
          ok = false;
          break;
        }
      if (ok) self(self, g + 1);
    }
    img[g] = -1;
  };
  rec(rec, 0);
  return count;
}

}  // namespace smallcover
