#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "strat/presentation.hpp"

namespace strat {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

// Invariant factors d1 | d2 | ... of a finitely generated abelian group.
// Factors equal to 1 are dropped; each infinite cyclic summand contributes a
// trailing 0.
struct AbelianInvariants {
  std::vector<BigInt> factors;

  bool trivial() const { return factors.empty(); }
  bool finite() const;
  BigInt order() const;  // 0 when infinite
  std::string to_string() const;

  bool operator==(const AbelianInvariants&) const = default;
};

// Diagonal of the Smith normal form (nonzero entries first, divisibility
// chain enforced, all entries non-negative).
std::vector<BigInt> smith_diagonal(IntMatrix m);

// Invariants of Z^cols / (row space of m).
AbelianInvariants cokernel_invariants(const IntMatrix& m, std::size_t cols);

// Exponent-sum matrix of the relators, one row per relator.
IntMatrix relation_matrix(const GroupPresentation& g);

AbelianInvariants abelianization(const GroupPresentation& g);

}  // namespace strat
