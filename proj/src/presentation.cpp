#include "smallcover/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "smallcover/errors.hpp"

namespace smallcover {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation pres;
  std::map<std::string, int> index;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    auto fail = [&](const std::string& msg) {
      throw ValidationError("presentation line " + std::to_string(lineno) + ": " + msg);
    };
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("gens:", 0) == 0) {
      std::string rest = t.substr(5);
      std::string item;
      std::istringstream items(rest);
      while (std::getline(items, item, ',')) {
        std::string name = trim(item);
        if (!valid_name(name)) fail("bad generator name '" + name + "'");
        if (index.count(name)) fail("duplicate generator '" + name + "'");
        index[name] = static_cast<int>(pres.gens.size());
        pres.gens.push_back(name);
      }
      if (pres.gens.empty()) fail("empty generator list");
    } else if (t.rfind("rel:", 0) == 0) {
      std::istringstream terms(t.substr(4));
      Word w;
      std::string term;
      while (terms >> term) {
        int sign = 1;
        if (term.size() > 3 && term.ends_with("^-1")) {
          sign = -1;
          term = term.substr(0, term.size() - 3);
        }
        auto it = index.find(term);
        if (it == index.end())
          fail("unknown generator name '" + term + "'" +
               (pres.gens.empty() ? " (rel before any gens line)" : ""));
        w.push_back(letter(it->second, sign));
      }
      if (w.empty()) fail("empty relator");
      w = free_reduce(std::move(w));
      if (!w.empty()) pres.relators.push_back(std::move(w));
    } else {
      fail("expected 'gens:', 'rel:' or '#'");
    }
  }
  return pres;
}

std::string format_presentation(const Presentation& pres) {
  std::ostringstream os;
  if (pres.gens.empty()) {
    os << "# trivial presentation (no generators)\n";
    return os.str();
  }
  os << "gens:";
  for (std::size_t i = 0; i < pres.gens.size(); ++i)
    os << (i ? ", " : " ") << pres.gens[i];
  os << "\n";
  for (const Word& w : pres.relators) {
    os << "rel:";
    for (int l : w) {
      os << " " << pres.gens[gen_of(l)];
      if (l < 0) os << "^-1";
    }
    os << "\n";
  }
  return os.str();
}

namespace {

// Solve relator r (which contains gen exactly once) for gen. Rotating the
// relator is a free conjugation, so r = x^e t as a cyclic word gives
// x = t^-1 when e = +1 and x = t when e = -1.
Word solve_for(const Word& r, int gen) {
  std::size_t pos = 0;
  while (pos < r.size() && gen_of(r[pos]) != gen) ++pos;
  Word t(r.begin() + pos + 1, r.end());
  t.insert(t.end(), r.begin(), r.begin() + pos);
  return r[pos] > 0 ? inverse_word(t) : t;
}

Presentation drop_generator(const Presentation& pres, int gen, int relator,
                            const Word& replacement) {
  Presentation out;
  out.gens.reserve(pres.gens.size() - 1);
  for (std::size_t i = 0; i < pres.gens.size(); ++i)
    if (static_cast<int>(i) != gen) out.gens.push_back(pres.gens[i]);
  auto remap = [&](int l) {
    int g = gen_of(l);
    if (g > gen) --g;
    return l > 0 ? g + 1 : -(g + 1);
  };
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    if (static_cast<int>(i) == relator) continue;
    Word w = substitute(pres.relators[i], gen, replacement);
    if (w.empty()) continue;
    for (int& l : w) l = remap(l);
    out.relators.push_back(std::move(w));
  }
  return out;
}

}  // namespace

Presentation tietze_eliminate(const Presentation& pres, int gen, int relator) {
  if (gen < 0 || gen >= static_cast<int>(pres.gens.size()))
    throw ValidationError("tietze_eliminate: bad generator index");
  if (relator < 0 || relator >= static_cast<int>(pres.relators.size()))
    throw ValidationError("tietze_eliminate: bad relator index");
  const Word& r = pres.relators[relator];
  if (occurrence_count(r, gen) != 1)
    throw ValidationError("tietze_eliminate: generator '" + pres.gens[gen] +
                          "' does not occur exactly once in relator " +
                          std::to_string(relator));
  return drop_generator(pres, gen, relator, solve_for(r, gen));
}

SimplifyResult simplify(const Presentation& pres, const SimplifyLimits& limits) {
  SimplifyResult res{pres, false};
  Presentation& cur = res.pres;

  for (int round = 0; round < limits.max_rounds; ++round) {
    // cyclic reduction, empty-relator removal, duplicate removal
    std::vector<Word> cleaned;
    std::set<Word> seen;
    for (const Word& w : cur.relators) {
      Word c = cyclic_reduce(w);
      if (c.empty()) continue;
      if (!seen.insert(canonical_cyclic(c)).second) continue;
      cleaned.push_back(std::move(c));
    }
    bool changed = cleaned != cur.relators;
    cur.relators = std::move(cleaned);

    // best elimination candidate: generator occurring exactly once in some
    // relator, shortest relator first, then lowest relator index, then
    // earliest position
    int best_gen = -1, best_rel = -1;
    for (std::size_t i = 0; i < cur.relators.size(); ++i) {
      const Word& w = cur.relators[i];
      if (best_rel >= 0 && cur.relators[best_rel].size() <= w.size()) continue;
      for (int l : w) {
        int g = gen_of(l);
        if (occurrence_count(w, g) == 1) {
          best_gen = g;
          best_rel = static_cast<int>(i);
          break;
        }
      }
    }

    if (best_rel >= 0) {
      Word repl = solve_for(cur.relators[best_rel], best_gen);
      // growth check before committing
      for (std::size_t i = 0; i < cur.relators.size(); ++i) {
        if (static_cast<int>(i) == best_rel) continue;
        std::size_t occ = occurrence_count(cur.relators[i], best_gen);
        if (occ && cur.relators[i].size() + occ * repl.size() > limits.max_relator_length) {
          res.capped = true;
          return res;
        }
      }
      cur = drop_generator(cur, best_gen, best_rel, repl);
      changed = true;
    }

    if (!changed) return res;
  }
  res.capped = true;
  return res;
}

}  // namespace smallcover
