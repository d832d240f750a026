#pragma once

#include <cstddef>
#include <vector>

namespace smallcover {

// A word in a free group: letters are +(i+1) for generator i and -(i+1) for
// its inverse. Relators are words set equal to 1.
using Word = std::vector<int>;

inline int letter(int gen, int sign) { return sign > 0 ? gen + 1 : -(gen + 1); }
inline int gen_of(int l) { return (l > 0 ? l : -l) - 1; }

Word free_reduce(Word w);
Word cyclic_reduce(Word w);  // free-reduces first
Word inverse_word(const Word& w);

// Occurrences of the generator regardless of sign.
int occurrence_count(const Word& w, int gen);

// Replace every occurrence of the generator by the replacement word (its
// inverse for negative letters) and free-reduce.
Word substitute(const Word& w, int gen, const Word& replacement);

// Exponent-sum vector over the given number of generators.
std::vector<long long> exponent_vector(const Word& w, std::size_t ngens);

// Minimal representative over all rotations of the cyclic reduction and of
// its inverse; identifies relators up to rotation and inversion.
Word canonical_cyclic(const Word& w);

}  // namespace smallcover
