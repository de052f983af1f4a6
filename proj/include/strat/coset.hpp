#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "strat/presentation.hpp"

namespace strat {

// Closed coset table for a group G over a subgroup H. Rows are cosets (row 0
// is H), columns are the actions of each generator and its inverse. A closed
// table induces a permutation representation of G on the cosets; over the
// trivial subgroup that representation is regular, hence faithful.
class CosetTable {
 public:
  CosetTable(std::size_t ngens, std::vector<std::vector<int>> rows,
             std::size_t total_defined);

  std::size_t index() const { return rows_.size(); }
  std::size_t ngens() const { return ngens_; }
  // Cosets allocated over the whole enumeration, dead ones included.
  std::size_t total_defined() const { return total_defined_; }

  int apply_letter(int coset, int letter) const;
  int apply_word(int coset, const Word& w) const;
  std::vector<int> permutation(const Word& w) const;
  bool word_acts_trivially(const Word& w) const;

  // One representative word per coset, found by breadth-first search from
  // coset 0 (generators in index order, inverses after forward letters).
  std::vector<Word> coset_representatives() const;

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  bool operator==(const CosetTable&) const = default;

 private:
  std::size_t ngens_;
  std::vector<std::vector<int>> rows_;
  std::size_t total_defined_;
};

struct Overflow {
  std::size_t cosets_allocated = 0;
};

using TCResult = std::variant<CosetTable, Overflow>;

// HLT-style coset enumeration with lookahead. Deterministic: relators are
// scanned in input order, cosets in creation order, so identical inputs
// always produce identical tables. Overflow means the table would not close
// within max_cosets live cosets (possibly infinite index, possibly just a
// too-small budget).
TCResult todd_coxeter(const GroupPresentation& g,
                      const std::vector<Word>& subgroup_gens,
                      std::size_t max_cosets);

}  // namespace strat
