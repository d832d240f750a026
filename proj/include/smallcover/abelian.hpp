#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "smallcover/presentation.hpp"

namespace smallcover {

// Abelianized H1 data: free rank plus the torsion divisor chain
// d1 | d2 | ... with every di >= 2 (canonical Smith normal form).
struct AbelianInvariants {
  long long free_rank = 0;
  std::vector<mpz_class> torsion;

  bool operator==(const AbelianInvariants&) const = default;

  // free rank + number of even torsion factors
  int mod2_rank() const;

  // "Z^r + Z/d1 + Z/d2 + ..."; "0" for the trivial group
  std::string to_string() const;
};

// Diagonal of the Smith normal form: nonnegative divisor chain including
// leading 1s, one entry per nonzero invariant factor. Arbitrary-precision
// arithmetic throughout; rows/columns may be ragged-free rectangular.
std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m);

// Smith normal form of the relator exponent-sum matrix.
AbelianInvariants abelianization(const Presentation& pres);

// Invariants of the direct sum of two groups with the given invariants.
AbelianInvariants direct_sum(const AbelianInvariants& x, const AbelianInvariants& y);

}  // namespace smallcover
