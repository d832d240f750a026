#pragma once

#include <string>
#include <vector>

#include "smallcover/presentation.hpp"

namespace smallcover {

// Finite group given by its multiplication table; associativity, identity
// and inverses are verified on construction.
struct FiniteGroupTable {
  std::string name;
  int order = 0;
  std::vector<int> table;  // row-major: table[a * order + b] = a * b
  int identity = -1;
  std::vector<int> inverse;

  FiniteGroupTable(std::string name, int order, std::vector<int> table);

  int mul(int a, int b) const { return table[a * order + b]; }

  static FiniteGroupTable cyclic(int n);
  static FiniteGroupTable direct_product(const FiniteGroupTable& a,
                                         const FiniteGroupTable& b);
  static FiniteGroupTable symmetric3();
};

// Named targets: "z2", "z4", "z2^3", ..., and "s3".
FiniteGroupTable group_by_name(const std::string& name);

// Number of homomorphisms from the presented group to H, by deterministic
// backtracking with incremental relator checking. The cap bounds the number
// of explored assignments (search nodes), not the a-priori |H|^gens product;
// exceeding it throws CapExceeded.
unsigned long long count_homs(const Presentation& pres, const FiniteGroupTable& h,
                              unsigned long long cap);

}  // namespace smallcover
