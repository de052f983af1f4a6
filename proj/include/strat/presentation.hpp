#pragma once

#include <string>
#include <vector>

#include "strat/word.hpp"

namespace strat {

// Finitely presented group: named generators, freely reduced relators.
// Empty relators are dropped at construction.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  GroupPresentation() = default;
  GroupPresentation(std::vector<std::string> gens, std::vector<Word> rels);

  std::size_t rank() const { return generators.size(); }
  // Index of a named generator, -1 if absent.
  int generator_index(const std::string& name) const;
  std::string to_string() const;

  bool operator==(const GroupPresentation&) const = default;
};

// "s^2*t^-1" style rendering; empty word renders as "1".
std::string render_word(const Word& w, const std::vector<std::string>& names);

GroupPresentation trivial_group();
GroupPresentation free_group(std::vector<std::string> gens);

// Disjoint union of generators and relators; colliding names from the right
// factor get a numeric "~k" suffix.
GroupPresentation free_product(const GroupPresentation& g, const GroupPresentation& h);

// G extended by the given words as relators: a presentation of G/<<words>>.
GroupPresentation quotient_by_normal_closure(const GroupPresentation& g,
                                             const std::vector<Word>& words);

// Isomorphism-preserving cleanup: relators freely and cyclically reduced and
// deduplicated, generators killed by length-1 relators removed, generators
// occurring exactly once in some relator eliminated by substitution.
// Substitution prefers eliminating generators outside keep_names, so
// distinguished names survive whenever the group allows it.
GroupPresentation tietze_simplify(const GroupPresentation& g, int passes = 10,
                                  const std::vector<std::string>& keep_names = {});

// Homomorphism given by generator images. Verified is only set after a
// completed coset enumeration of the target proved every source relator's
// image trivial (see verify_hom in cert.hpp).
struct GroupHom {
  enum class Status { Unverified, Verified };

  GroupPresentation source;
  GroupPresentation target;
  std::vector<Word> images;  // one word in the target per source generator
  Status status = Status::Unverified;

  GroupHom() = default;
  GroupHom(GroupPresentation src, GroupPresentation tgt, std::vector<Word> imgs);

  Word apply(const Word& w) const;
  bool verified() const { return status == Status::Verified; }
};

GroupHom identity_hom(const GroupPresentation& g);

}  // namespace strat
