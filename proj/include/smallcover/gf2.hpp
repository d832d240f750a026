#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>

namespace smallcover {

// Element of Z_2^3 encoded as an integer 0..7: bit i is the coefficient of
// e_{i+1}, addition is XOR. Characteristic-map entries are nonzero (1..7).
using Gf2 = std::uint8_t;

inline constexpr Gf2 kE1 = 1;
inline constexpr Gf2 kE2 = 2;
inline constexpr Gf2 kE3 = 4;
inline constexpr Gf2 kE123 = 7;

// Value phi(x) of the linear functional encoded by phi (same 0..7 encoding).
inline bool gf2_pairing(Gf2 phi, Gf2 x) {
  return (std::popcount(static_cast<unsigned>(phi & x)) & 1) != 0;
}

// Three vectors form a basis of Z_2^3 iff all nonzero, pairwise distinct and
// their sum is nonzero (those are all the nontrivial linear combinations).
inline bool gf2_basis(Gf2 a, Gf2 b, Gf2 c) {
  return a != 0 && b != 0 && c != 0 && a != b && a != c && b != c &&
         (a ^ b ^ c) != 0;
}

// Minimal representative of the coset g + <a>.
inline Gf2 coset_min1(Gf2 g, Gf2 a) {
  return std::min<Gf2>(g, static_cast<Gf2>(g ^ a));
}

// Minimal representative of the coset g + <a, b>.
inline Gf2 coset_min2(Gf2 g, Gf2 a, Gf2 b) {
  Gf2 m = g;
  m = std::min<Gf2>(m, static_cast<Gf2>(g ^ a));
  m = std::min<Gf2>(m, static_cast<Gf2>(g ^ b));
  m = std::min<Gf2>(m, static_cast<Gf2>(g ^ a ^ b));
  return m;
}

}  // namespace smallcover
