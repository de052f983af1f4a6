#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strat/cert.hpp"
#include "strat/site.hpp"
#include "strat/smith.hpp"

namespace strat {

// Finite surrogate for the Galois data of a Dedekind domain: a group G_K, and
// per prime a decomposition group D_p with its inclusion into G_K and a set
// of inertia generators inside D_p.
struct PrimeData {
  std::string name;
  GroupPresentation decomposition;
  GroupHom inclusion;          // D_p -> G_K
  std::vector<Word> inertia;   // words over D_p's generators
};

struct DedekindModel {
  GroupPresentation galois;    // G_K
  std::vector<PrimeData> primes;
};

void check_model(const DedekindModel& m);  // shapes and distinct prime names

// Star poset {p_1, ..., p_n < eta}; stratum at eta is G_K, at p the quotient
// D_p/<<I_p>>, at {p<eta} the group D_p; the maps are the quotient map and
// the inclusion.
StratifiedSite build_site(const DedekindModel& m);

// G_K extended by the inclusion images of all inertia words: the quotient of
// G_K by the normal closure of the subgroup generated by all inertia groups.
GroupPresentation expected_pi1(const DedekindModel& m);

// Models the freedom in the choice of primes above p: replaces every
// inclusion by its conjugate c * incl(-) * c^-1 (c a word over G_K).
DedekindModel conjugate_inertia(const DedekindModel& m, const Word& c);

struct FormulaReport {
  enum class Outcome { Match, Mismatch, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  std::optional<std::size_t> pipeline_order;  // |classifying_pi1(site)|
  std::optional<std::size_t> expected_order;  // |expected_pi1|
  bool mutual_homs_verified = false;
  std::string detail;
};

// Per-instance check of the quotient formula: computes both routes, compares
// orders by coset enumeration, and verifies the canonical homomorphisms in
// both directions together with their composites on generators.
FormulaReport verify_formula(const DedekindModel& m, const Effort& effort = {});

// (Z/m)^x assembled from its CRT factors, one cyclic piece at a time; each
// factor carries a generator lifted to (Z/m)^x.
struct UnitGroupFactor {
  std::uint64_t prime;
  int exponent;
  std::uint64_t order;
  std::uint64_t generator;  // element of (Z/m)^x, congruent to 1 off p^a
};

struct CyclotomicLevel {
  std::uint64_t modulus = 0;
  std::vector<UnitGroupFactor> factors;

  static CyclotomicLevel build(std::uint64_t m);  // requires m >= 3
};

// Invariant factors of (Z/m)^x modulo the subgroup generated by the CRT
// factors at the given primes. Throws PrimeNotDividingError.
AbelianInvariants cyclotomic_quotient(std::uint64_t m,
                                      const std::vector<std::uint64_t>& ramified);

// Structure of (Z/n)^x by brute force: element order statistics, one prime
// at a time. Independent of the CRT route above; n = 1 and 2 give the
// trivial group.
AbelianInvariants unit_group_invariants_bruteforce(std::uint64_t n);

struct CyclotomicCheck {
  std::vector<std::uint64_t> ramified;
  std::uint64_t residual_modulus;  // m with the ramified parts removed
  AbelianInvariants quotient;
  AbelianInvariants oracle;
  bool consistent;
};

struct CyclotomicReport {
  bool all_consistent = true;
  std::vector<CyclotomicCheck> checks;  // one per subset of the support
};

// Every subset S of m's prime support: the quotient must match the unit
// group of Z/m_S computed by the brute-force route.
CyclotomicReport cyclotomic_consistency(std::uint64_t m);

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

}  // namespace strat
