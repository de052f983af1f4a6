#include "strat/perm.hpp"

#include <map>
#include <set>

#include "strat/errors.hpp"

namespace strat {

Perm perm_identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = b[static_cast<std::size_t>(a[i])];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

int perm_order(const Perm& p) {
  Perm acc = p;
  int n = 1;
  while (!perm_is_identity(acc)) {
    acc = perm_compose(acc, p);
    ++n;
  }
  return n;
}

Perm eval_word(const Word& w, const std::vector<Perm>& gen_images) {
  if (gen_images.empty()) return {};
  Perm acc = perm_identity(static_cast<int>(gen_images[0].size()));
  for (int letter : w.letters()) {
    const Perm& g = gen_images.at(static_cast<std::size_t>(letter_index(letter)));
    acc = perm_compose(acc, letter > 0 ? g : perm_inverse(g));
  }
  return acc;
}

std::vector<Perm> generated_subgroup(const std::vector<Perm>& gens,
                                     std::size_t cap) {
  int n = gens.empty() ? 1 : static_cast<int>(gens[0].size());
  std::set<Perm> seen;
  std::vector<Perm> elements;
  std::vector<Perm> frontier{perm_identity(n)};
  seen.insert(frontier[0]);
  elements.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Perm candidate = perm_compose(e, g);
        if (seen.insert(candidate).second) {
          elements.push_back(candidate);
          if (elements.size() > cap)
            throw TooLargeError("generated subgroup exceeds cap");
          next.push_back(std::move(candidate));
        }
      }
    frontier = std::move(next);
  }
  return elements;
}

std::vector<Perm> normal_closure(const std::vector<Perm>& seeds,
                                 const std::vector<Perm>& group_gens,
                                 std::size_t cap) {
  std::vector<Perm> group = generated_subgroup(group_gens, cap);
  std::set<Perm> closure;
  int n = group.empty() ? 1 : static_cast<int>(group[0].size());
  closure.insert(perm_identity(n));
  for (const auto& s : seeds)
    for (const auto& g : group)
      closure.insert(perm_compose(perm_compose(perm_inverse(g), s), g));
  // Close under multiplication until a fixed point.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Perm> current(closure.begin(), closure.end());
    for (const auto& a : current)
      for (const auto& b : current)
        if (closure.insert(perm_compose(a, b)).second) {
          if (closure.size() > cap)
            throw TooLargeError("normal closure exceeds cap");
          grew = true;
        }
  }
  return {closure.begin(), closure.end()};
}

CayleyWords cayley_words(const std::vector<Perm>& gens, std::size_t cap) {
  int n = gens.empty() ? 1 : static_cast<int>(gens[0].size());
  CayleyWords out;
  std::map<Perm, std::size_t> seen;
  out.elements.push_back(perm_identity(n));
  out.words.emplace_back();
  seen[out.elements[0]] = 0;
  for (std::size_t at = 0; at < out.elements.size(); ++at) {
    Perm base = out.elements[at];
    Word base_word = out.words[at];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      for (bool inverted : {false, true}) {
        Perm step = inverted ? perm_inverse(gens[gi]) : gens[gi];
        Perm candidate = perm_compose(base, step);
        if (seen.count(candidate)) continue;
        seen[candidate] = out.elements.size();
        out.elements.push_back(candidate);
        out.words.push_back(base_word *
                            Word::generator(static_cast<int>(gi), inverted));
        if (out.elements.size() > cap)
          throw TooLargeError("Cayley graph exceeds cap");
      }
    }
  }
  return out;
}

}  // namespace strat
