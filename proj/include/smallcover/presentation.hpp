#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "smallcover/word.hpp"

namespace smallcover {

// Finitely presented group. Relators are stored freely reduced; empty
// relators are not retained by the operations below.
struct Presentation {
  std::vector<std::string> gens;
  std::vector<Word> relators;
  bool operator==(const Presentation&) const = default;
};

// Text format:
//   file := line*; line := gens-line | rel-line | comment
//   gens-line := "gens:" name ("," name)*
//   rel-line  := "rel:" term+         term := name | name "^-1"
//   comment   := "#" any-text
Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& pres);

// Standard Tietze elimination: the generator must occur exactly once (with
// either sign) in the chosen relator. Removes the generator and the relator,
// substituting the solved word everywhere else.
Presentation tietze_eliminate(const Presentation& pres, int gen, int relator);

struct SimplifyLimits {
  std::size_t max_relator_length = 10000;
  int max_rounds = 10000;
};

struct SimplifyResult {
  Presentation pres;
  bool capped = false;  // a cap stopped simplification early; best-so-far
};

// Generic Tietze simplification: free/cyclic reduction, duplicate-relator
// removal, elimination of trivialized generators (length-1 relators) and of
// generators occurring exactly once in some relator (shortest such relator
// first). Deterministic and abelianization-preserving; a fixpoint, so
// idempotent.
SimplifyResult simplify(const Presentation& pres, const SimplifyLimits& limits = {});

}  // namespace smallcover
