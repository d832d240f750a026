#include "smallcover/abelian.hpp"

#include <algorithm>
#include <sstream>

#include "smallcover/errors.hpp"

namespace smallcover {

int AbelianInvariants::mod2_rank() const {
  int r = static_cast<int>(free_rank);
  for (const mpz_class& d : torsion)
    if (mpz_even_p(d.get_mpz_t())) ++r;
  return r;
}

std::string AbelianInvariants::to_string() const {
  if (free_rank == 0 && torsion.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const mpz_class& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != cols)
      throw ValidationError("smith_diagonal: ragged matrix");

  std::vector<mpz_class> diag;
  int t = 0;
  while (t < rows && t < cols) {
    // pivot: minimal absolute nonzero value in the trailing submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        if (pi < 0 || cmp(abs(m[i][j]), abs(m[pi][pj])) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(m[t], m[pi]);
    if (pj != t)
      for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      mpz_class q = m[i][t] / m[t][t];  // truncated; remainder shrinks
      if (q != 0)
        for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      mpz_class q = m[t][j] / m[t][t];
      if (q != 0)
        for (int i = 0; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // re-pick a smaller pivot

    // enforce divisibility of the remaining block by the pivot
    bool divisible = true;
    for (int i = t + 1; i < rows && divisible; ++i)
      for (int j = t + 1; j < cols && divisible; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (int c = t; c < cols; ++c) m[t][c] += m[i][c];
          divisible = false;
        }
    if (!divisible) continue;

    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

AbelianInvariants abelianization(const Presentation& pres) {
  const std::size_t n = pres.gens.size();
  std::vector<std::vector<mpz_class>> m;
  m.reserve(pres.relators.size());
  for (const Word& w : pres.relators) {
    auto ev = exponent_vector(w, n);
    std::vector<mpz_class> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<long>(ev[j]);
    m.push_back(std::move(row));
  }
  auto diag = smith_diagonal(std::move(m));
  AbelianInvariants inv;
  inv.free_rank = static_cast<long long>(n) - static_cast<long long>(diag.size());
  for (const mpz_class& d : diag)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

AbelianInvariants direct_sum(const AbelianInvariants& x, const AbelianInvariants& y) {
  // recanonicalize the combined torsion via the SNF of a diagonal matrix
  std::vector<mpz_class> all;
  all.insert(all.end(), x.torsion.begin(), x.torsion.end());
  all.insert(all.end(), y.torsion.begin(), y.torsion.end());
  std::vector<std::vector<mpz_class>> m(all.size(),
                                        std::vector<mpz_class>(all.size(), 0));
  for (std::size_t i = 0; i < all.size(); ++i) m[i][i] = all[i];
  auto diag = smith_diagonal(std::move(m));
  AbelianInvariants out;
  out.free_rank = x.free_rank + y.free_rank;
  for (const mpz_class& d : diag)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

}  // namespace smallcover
