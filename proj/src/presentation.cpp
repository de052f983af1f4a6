#include "strat/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "strat/errors.hpp"

namespace strat {

namespace {

void check_generator_names(const std::vector<std::string>& gens) {
  std::unordered_set<std::string> seen;
  for (const auto& g : gens) {
    if (g.empty()) throw ValidationError("empty generator name");
    if (!seen.insert(g).second)
      throw ValidationError("duplicate generator name: " + g);
  }
}

void check_word_over(const Word& w, std::size_t rank, const char* what) {
  if (w.max_index() >= static_cast<int>(rank))
    throw ValidationError(std::string(what) +
                          " references a generator index out of range");
}

// Replace every occurrence of generator `gen` in `w` by `rep` (inverted for
// inverse letters).
Word substitute(const Word& w, int gen, const Word& rep) {
  std::vector<int> out;
  Word rep_inv = rep.inverse();
  for (int letter : w.letters()) {
    if (letter_index(letter) == gen) {
      const Word& r = letter > 0 ? rep : rep_inv;
      out.insert(out.end(), r.letters().begin(), r.letters().end());
    } else {
      out.push_back(letter);
    }
  }
  return Word(std::move(out));
}

// Drop generator `gen` from the alphabet, shifting higher indices down.
// All relators must already be free of it.
Word drop_generator(const Word& w, int gen) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int letter : w.letters()) {
    int idx = letter_index(letter);
    int shifted = idx > gen ? idx - 1 : idx;
    out.push_back(letter > 0 ? shifted + 1 : -(shifted + 1));
  }
  return Word(std::move(out));
}

// Canonical representative of a relator up to cyclic rotation and inversion:
// the least rotation of the word or its inverse, ordered so that positive
// letters beat inverse letters of the same generator.
Word cyclic_normal_form(const Word& w) {
  Word c = w.cyclically_reduced();
  if (c.empty()) return c;
  auto rank = [](int letter) {
    return 2 * letter_index(letter) + (letter < 0 ? 1 : 0);
  };
  auto less = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
      if (rank(a[i]) != rank(b[i])) return rank(a[i]) < rank(b[i]);
    return a.size() < b.size();
  };
  std::vector<int> best;
  for (const Word& base : {c, c.inverse()}) {
    const auto& ls = base.letters();
    for (std::size_t r = 0; r < ls.size(); ++r) {
      std::vector<int> rot(ls.begin() + static_cast<long>(r), ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<long>(r));
      if (best.empty() || less(rot, best)) best = rot;
    }
  }
  Word out(std::move(best));
  return out;
}

}  // namespace

GroupPresentation::GroupPresentation(std::vector<std::string> gens,
                                     std::vector<Word> rels) {
  check_generator_names(gens);
  generators = std::move(gens);
  for (auto& r : rels) {
    check_word_over(r, generators.size(), "relator");
    if (!r.empty()) relators.push_back(std::move(r));
  }
}

int GroupPresentation::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return static_cast<int>(i);
  return -1;
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int run = static_cast<int>(j - i);
    int exponent = ls[i] > 0 ? run : -run;
    if (!out.empty()) out += "*";
    out += names.at(static_cast<std::size_t>(letter_index(ls[i])));
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i = j;
  }
  return out;
}

std::string GroupPresentation::to_string() const {
  std::string out = "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += generators[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) out += ", ";
    out += render_word(relators[i], generators);
  }
  out += " >";
  return out;
}

GroupPresentation trivial_group() { return GroupPresentation({}, {}); }

GroupPresentation free_group(std::vector<std::string> gens) {
  return GroupPresentation(std::move(gens), {});
}

GroupPresentation free_product(const GroupPresentation& g,
                               const GroupPresentation& h) {
  std::vector<std::string> gens = g.generators;
  std::unordered_set<std::string> taken(gens.begin(), gens.end());
  for (const auto& name : h.generators) {
    std::string candidate = name;
    for (int k = 2; taken.count(candidate); ++k)
      candidate = name + "~" + std::to_string(k);
    taken.insert(candidate);
    gens.push_back(candidate);
  }
  std::vector<Word> rels = g.relators;
  int offset = static_cast<int>(g.generators.size());
  for (const auto& r : h.relators) {
    std::vector<int> shifted;
    shifted.reserve(r.size());
    for (int letter : r.letters()) {
      int idx = letter_index(letter) + offset;
      shifted.push_back(letter > 0 ? idx + 1 : -(idx + 1));
    }
    rels.emplace_back(std::move(shifted));
  }
  return GroupPresentation(std::move(gens), std::move(rels));
}

GroupPresentation quotient_by_normal_closure(const GroupPresentation& g,
                                             const std::vector<Word>& words) {
  std::vector<Word> rels = g.relators;
  for (const auto& w : words) {
    check_word_over(w, g.rank(), "quotient word");
    rels.push_back(w);
  }
  return GroupPresentation(g.generators, std::move(rels));
}

GroupPresentation tietze_simplify(const GroupPresentation& g, int passes,
                                  const std::vector<std::string>& keep_names) {
  std::vector<std::string> gens = g.generators;
  std::vector<Word> rels = g.relators;

  auto protected_gen = [&](int idx) {
    return std::find(keep_names.begin(), keep_names.end(),
                     gens[static_cast<std::size_t>(idx)]) != keep_names.end();
  };

  auto normalize = [&]() {
    std::vector<Word> out;
    std::set<Word> seen;
    for (const auto& r : rels) {
      Word n = cyclic_normal_form(r);
      if (n.empty()) continue;
      if (seen.insert(n).second) out.push_back(std::move(n));
    }
    rels = std::move(out);
  };

  auto eliminate = [&](int gen, const Word& replacement, std::size_t skip) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (i == skip) continue;
      Word s = substitute(rels[i], gen, replacement);
      out.push_back(drop_generator(s, gen));
    }
    rels = std::move(out);
    gens.erase(gens.begin() + gen);
  };

  for (int pass = 0; pass < passes; ++pass) {
    bool changed = false;
    normalize();

    // Length-1 relators pin a generator to the identity.
    for (bool again = true; again;) {
      again = false;
      for (std::size_t i = 0; i < rels.size(); ++i) {
        if (rels[i].size() == 1) {
          eliminate(letter_index(rels[i].letters()[0]), Word(), i);
          normalize();
          changed = again = true;
          break;
        }
      }
    }

    // A generator occurring exactly once in a relator can be solved for and
    // substituted away. Shortest defining relator first, then input order;
    // protected names are used only when no other candidate exists at all.
    for (bool again = true; again;) {
      again = false;
      std::vector<std::size_t> order(rels.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rels[a].size() < rels[b].size();
      });
      for (bool allow_protected : {false, true}) {
        for (std::size_t oi : order) {
          const auto& ls = rels[oi].letters();
          int chosen = -1;
          std::size_t pos = 0;
          for (std::size_t p = 0; p < ls.size() && chosen < 0; ++p) {
            int idx = letter_index(ls[p]);
            if (!allow_protected && protected_gen(idx)) continue;
            int count = 0;
            for (int l : ls) count += letter_index(l) == idx;
            if (count == 1) {
              chosen = idx;
              pos = p;
            }
          }
          if (chosen < 0) continue;
          // r = u g^e v = 1  =>  g = u^-1 v^-1 for e = +1, g = v u for e = -1.
          Word u(std::vector<int>(ls.begin(), ls.begin() + static_cast<long>(pos)));
          Word v(std::vector<int>(ls.begin() + static_cast<long>(pos) + 1, ls.end()));
          Word replacement = ls[pos] > 0 ? u.inverse() * v.inverse() : v * u;
          eliminate(chosen, replacement, oi);
          normalize();
          changed = again = true;
          break;
        }
        if (again) break;
      }
    }

    if (!changed) break;
  }
  return GroupPresentation(std::move(gens), std::move(rels));
}

GroupHom::GroupHom(GroupPresentation src, GroupPresentation tgt,
                   std::vector<Word> imgs)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
  if (images.size() != source.rank())
    throw ValidationError("homomorphism needs one image per source generator");
  for (const auto& w : images)
    check_word_over(w, target.rank(), "generator image");
}

Word GroupHom::apply(const Word& w) const {
  Word out;
  for (int letter : w.letters()) {
    const Word& img = images.at(static_cast<std::size_t>(letter_index(letter)));
    out = out * (letter > 0 ? img : img.inverse());
  }
  return out;
}

GroupHom identity_hom(const GroupPresentation& g) {
  std::vector<Word> imgs;
  for (std::size_t i = 0; i < g.rank(); ++i)
    imgs.push_back(Word::generator(static_cast<int>(i)));
  GroupHom h(g, g, std::move(imgs));
  h.status = GroupHom::Status::Verified;  // relators map to themselves
  return h;
}

}  // namespace strat
