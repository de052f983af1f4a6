#include "strat/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace strat {

bool AbelianInvariants::finite() const {
  return factors.empty() || factors.back() != 0;
}

BigInt AbelianInvariants::order() const {
  BigInt n = 1;
  for (const auto& d : factors) {
    if (d == 0) return 0;
    n *= d;
  }
  return n;
}

std::string AbelianInvariants::to_string() const {
  if (factors.empty()) return "trivial";
  std::string out = "(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ", ";
    out += factors[i].str();
  }
  return out + ")";
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

std::vector<BigInt> smith_diagonal(IntMatrix m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::vector<BigInt> diag;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero magnitude in the remaining block.
    std::size_t pr = t, pc = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 &&
            (!found || abs_big(m[i][j]) < abs_big(m[pr][pc]))) {
          pr = i;
          pc = j;
          found = true;
        }
    if (!found) break;
    std::swap(m[t], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

    for (bool dirty = true; dirty;) {
      dirty = false;
      // Clear the pivot column, re-pivoting on any nonzero remainder.
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          dirty = true;
        }
      }
      // Same for the pivot row.
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility fixup: the pivot must divide the rest of the block.
      for (std::size_t i = t + 1; i < rows && !dirty; ++i)
        for (std::size_t j = t + 1; j < cols && !dirty; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            dirty = true;
          }
    }
    if (m[t][t] < 0) m[t][t] = -m[t][t];
    diag.push_back(m[t][t]);
  }
  return diag;
}

AbelianInvariants cokernel_invariants(const IntMatrix& m, std::size_t cols) {
  std::vector<BigInt> diag = smith_diagonal(m);
  AbelianInvariants inv;
  for (const auto& d : diag)
    if (d > 1) inv.factors.push_back(d);
  std::size_t rank = diag.size();
  for (std::size_t i = rank; i < cols; ++i) inv.factors.push_back(0);
  return inv;
}

IntMatrix relation_matrix(const GroupPresentation& g) {
  IntMatrix m(g.relators.size(), std::vector<BigInt>(g.rank(), 0));
  for (std::size_t i = 0; i < g.relators.size(); ++i)
    for (int letter : g.relators[i].letters())
      m[i][static_cast<std::size_t>(letter_index(letter))] += letter > 0 ? 1 : -1;
  return m;
}

AbelianInvariants abelianization(const GroupPresentation& g) {
  return cokernel_invariants(relation_matrix(g), g.rank());
}

}  // namespace strat
