#pragma once

// Shared fixtures and test-only oracles. The oracles here intentionally
// avoid the library code paths they are used to check.

#include <vector>

#include "strat/diagram.hpp"
#include "strat/poset.hpp"
#include "strat/presentation.hpp"
#include "strat/smith.hpp"
#include "strat/word.hpp"

namespace testutil {

inline strat::Word w(std::vector<int> letters) {
  return strat::Word(std::move(letters));
}

inline strat::GroupPresentation s3() {
  using strat::Word;
  return strat::GroupPresentation(
      {"s", "t"}, {Word::generator(0).pow(2), Word::generator(1).pow(3),
                   (Word::generator(0) * Word::generator(1)).pow(2)});
}

inline strat::GroupPresentation cyclic(const std::string& name, int n) {
  return strat::GroupPresentation({name}, {strat::Word::generator(0).pow(n)});
}

// Independent route to the abelianization of a diagram colimit: assemble the
// abelianized diagram as one integer matrix (node relation blocks plus
// g - phi(g) rows per edge) and take its cokernel. Never calls colimit().
inline strat::AbelianInvariants abelianized_pushout(const strat::GroupDiagram& d) {
  std::vector<std::string> node_order = d.index.elements();
  std::map<std::string, std::size_t> offset;
  std::size_t total = 0;
  for (const auto& node : node_order) {
    offset[node] = total;
    total += d.nodes.at(node).rank();
  }

  strat::IntMatrix rows;
  auto exponent_row = [&](const strat::Word& word, const std::string& node) {
    std::vector<strat::BigInt> row(total, 0);
    for (int letter : word.letters())
      row[offset.at(node) + static_cast<std::size_t>(strat::letter_index(letter))] +=
          letter > 0 ? 1 : -1;
    return row;
  };

  for (const auto& node : node_order)
    for (const auto& r : d.nodes.at(node).relators)
      rows.push_back(exponent_row(r, node));

  for (const auto& [a, b] : d.index.covers()) {
    const std::string& lo = d.index.elements()[static_cast<std::size_t>(a)];
    const std::string& hi = d.index.elements()[static_cast<std::size_t>(b)];
    auto key = d.orientation == strat::GroupDiagram::Orientation::Covariant
                   ? std::make_pair(lo, hi)
                   : std::make_pair(hi, lo);
    const strat::GroupHom& phi = d.edges.at(key);
    for (std::size_t g = 0; g < phi.source.rank(); ++g) {
      std::vector<strat::BigInt> row(total, 0);
      row[offset.at(key.first) + g] += 1;
      for (int letter : phi.images[g].letters())
        row[offset.at(key.second) +
            static_cast<std::size_t>(strat::letter_index(letter))] -=
            letter > 0 ? 1 : -1;
      rows.push_back(std::move(row));
    }
  }
  return strat::cokernel_invariants(rows, total);
}

// All posets on n labeled elements whose order is compatible with the index
// order: every strict order arises this way for some labeling, which is
// enough for label-independent properties.
inline std::vector<strat::FinitePoset> exhaustive_posets(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  std::vector<strat::FinitePoset> out;
  for (std::size_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask & (1u << s))
        rel[static_cast<std::size_t>(slots[s].first)]
           [static_cast<std::size_t>(slots[s].second)] = true;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int k = 0; k < n && transitive; ++k)
        for (int j = 0; j < n && transitive; ++j)
          if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
              rel[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] &&
              !rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
            transitive = false;
    if (!transitive) continue;

    std::vector<std::string> elements;
    for (int i = 0; i < n; ++i) elements.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
        bool is_cover = true;
        for (int k = 0; k < n && is_cover; ++k)
          is_cover = !(rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                       rel[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
        if (is_cover)
          covers.emplace_back(elements[static_cast<std::size_t>(i)],
                              elements[static_cast<std::size_t>(j)]);
      }
    out.emplace_back(std::move(elements), std::move(covers));
  }
  return out;
}

// Multiset of H1 invariants, one entry per connected component.
inline std::vector<strat::AbelianInvariants> h1_by_component(
    const strat::FinitePoset& p) {
  std::vector<strat::AbelianInvariants> out;
  for (const auto& component : strat::connected_components(p)) {
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& [a, b] : p.covers()) {
      const std::string& lo = p.elements()[static_cast<std::size_t>(a)];
      const std::string& hi = p.elements()[static_cast<std::size_t>(b)];
      bool lo_in = std::find(component.begin(), component.end(), lo) != component.end();
      if (lo_in) covers.emplace_back(lo, hi);
    }
    strat::FinitePoset restricted(component, covers);
    out.push_back(strat::abelianization(strat::edge_path_group(
        strat::order_complex(restricted), component.front())));
  }
  std::sort(out.begin(), out.end(),
            [](const strat::AbelianInvariants& a, const strat::AbelianInvariants& b) {
              return a.factors < b.factors;
            });
  return out;
}

}  // namespace testutil
