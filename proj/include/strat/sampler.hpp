#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "strat/arith.hpp"
#include "strat/diagram.hpp"
#include "strat/fincat.hpp"
#include "strat/perm.hpp"
#include "strat/poset.hpp"

namespace strat {

// Deterministic RNG wrapper; bounded draws avoid the implementation-defined
// std distributions so streams are stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  std::size_t below(std::size_t n) { return n ? next() % n : 0; }
  int between(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1)));
  }
  bool chance(int num, int den) { return below(static_cast<std::size_t>(den)) < static_cast<std::size_t>(num); }

 private:
  std::mt19937_64 gen_;
};

FinitePoset random_poset(Rng& rng, int max_elements,
                         bool ensure_connected = false);

// Poset of objects fused with a group of morphisms: Hom(x, y) = G for x <= y
// with composition by multiplication. Trivial G gives the poset category, a
// one-element poset gives the delooping of G.
FiniteCategory random_category(Rng& rng, int max_objects);

// Small group diagram with random presentations and random edge words, for
// exercising colimit against the abelianized-pushout route.
GroupDiagram random_group_diagram(Rng& rng, int max_nodes, int max_gens);

// Named finite groups of order <= 24 with matching permutation realizations.
struct GroupRealization {
  std::string name;
  GroupPresentation presentation;
  std::vector<Perm> generator_perms;
  std::size_t order;
};

const std::vector<GroupRealization>& realization_pool();

// A Dedekind model sampled inside a concrete permutation realization, so the
// quotient order has a presentation-free ground truth.
struct SampledDedekind {
  DedekindModel model;
  const GroupRealization* realization;
  std::vector<std::vector<Word>> inertia_in_galois;  // images, per prime
};

SampledDedekind sample_dedekind(Rng& rng);

// |G| / |<<inertia images>>| computed entirely on the permutation side:
// conjugation closure by fixed-point iteration, no coset enumeration.
std::size_t oracle_quotient_order(const SampledDedekind& instance);

struct BatchOutcome {
  std::uint64_t instance_seed = 0;
  std::string group_name;
  std::size_t oracle_order = 0;
  FormulaReport report;
  bool match_with_oracle = false;
};

// Runs `count` sampled instances (seeded seed+i) and checks the pipeline
// against both the expected quotient and the permutation oracle. Instances
// fan out across worker threads; the result order is by instance index.
std::vector<BatchOutcome> dedekind_batch(std::uint64_t seed, std::size_t count,
                                         const Effort& effort);

}  // namespace strat
