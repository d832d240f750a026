#include "smallcover/word.hpp"

#include <algorithm>

namespace smallcover {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + lo, w.begin() + hi);
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

int occurrence_count(const Word& w, int gen) {
  int n = 0;
  for (int l : w)
    if (gen_of(l) == gen) ++n;
  return n;
}

Word substitute(const Word& w, int gen, const Word& replacement) {
  Word out;
  Word inv = inverse_word(replacement);
  for (int l : w) {
    if (gen_of(l) != gen) {
      out.push_back(l);
      continue;
    }
    const Word& r = l > 0 ? replacement : inv;
    out.insert(out.end(), r.begin(), r.end());
  }
  return free_reduce(std::move(out));
}

std::vector<long long> exponent_vector(const Word& w, std::size_t ngens) {
  std::vector<long long> out(ngens, 0);
  for (int l : w) out[gen_of(l)] += l > 0 ? 1 : -1;
  return out;
}

Word canonical_cyclic(const Word& w) {
  Word c = cyclic_reduce(w);
  if (c.empty()) return c;
  Word best;
  for (const Word& base : {c, inverse_word(c)}) {
    for (std::size_t s = 0; s < base.size(); ++s) {
      Word rot(base.begin() + s, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + s);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

}  // namespace smallcover
