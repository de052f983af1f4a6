#pragma once

#include <cstddef>
#include <vector>

#include "strat/word.hpp"

namespace strat {

// Permutation of {0..n-1} as an image vector; composition is "a then b".
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);
bool perm_is_identity(const Perm& p);
int perm_order(const Perm& p);

// Image of a word under generator images, letters applied left to right.
Perm eval_word(const Word& w, const std::vector<Perm>& gen_images);

// All elements of <gens>, breadth-first from the identity (deterministic
// order). Throws TooLargeError past the cap.
std::vector<Perm> generated_subgroup(const std::vector<Perm>& gens,
                                     std::size_t cap = 100000);

// Smallest subgroup containing `seeds` that is normal in <group_gens>:
// fixed-point iteration over conjugation and multiplication.
std::vector<Perm> normal_closure(const std::vector<Perm>& seeds,
                                 const std::vector<Perm>& group_gens,
                                 std::size_t cap = 100000);

// Shortest-word expressions for every element of <gens> over the generator
// alphabet, found by breadth-first search on the Cayley graph.
struct CayleyWords {
  std::vector<Perm> elements;  // BFS order, identity first
  std::vector<Word> words;     // words[i] evaluates to elements[i]
};
CayleyWords cayley_words(const std::vector<Perm>& gens,
                         std::size_t cap = 100000);

}  // namespace strat
