#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "strat/coset.hpp"
#include "strat/perm.hpp"
#include "strat/presentation.hpp"
#include "strat/smith.hpp"

namespace strat {

// Explicit budgets for the semi-decidable parts of the engine.
struct Effort {
  std::size_t max_cosets = 100000;
  int max_degree = 6;
  int tietze_passes = 10;
};

// A homomorphism into Sym(degree) with nontrivial image; satisfying every
// relator is re-checkable from the images alone.
struct PermWitness {
  int degree = 0;
  std::vector<Perm> images;  // one per generator
  std::size_t image_order = 0;
};

// Tri-state triviality evidence. The word problem is undecidable, so every
// verdict carries something independently checkable; Unknown is a legal
// outcome when the budget runs out.
struct TrivialityCertificate {
  enum class Verdict { Trivial, NonTrivial, Unknown };

  Verdict verdict = Verdict::Unknown;
  std::optional<std::size_t> coset_index;    // completed enumeration
  std::optional<AbelianInvariants> abelian;  // nontrivial invariants
  std::optional<PermWitness> witness;        // nontrivial finite image
  std::string note;

  bool trivial() const { return verdict == Verdict::Trivial; }
};

TrivialityCertificate is_trivial(const GroupPresentation& g,
                                 const Effort& effort = {});

// Order of the group when a coset enumeration over the trivial subgroup
// completes within budget.
std::optional<std::size_t> group_order(const GroupPresentation& g,
                                       std::size_t max_cosets);

// Upgrade a hom to Verified by checking every source relator's image in a
// faithful permutation representation of the target. Throws
// NotAHomomorphismError with the offending relator on disproof; leaves the
// hom Unverified when the target enumeration exceeds the budget.
GroupHom verify_hom(GroupHom phi, const Effort& effort = {});

}  // namespace strat
