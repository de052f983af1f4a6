#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strat/presentation.hpp"

namespace strat {

// Nonempty totally ordered subset of a poset, element ids in ascending order.
using Chain = std::vector<std::string>;

// Ascending member ids joined by "<": the canonical identifier of a chain,
// used as the element id in subdivision posets and as a stratum key.
std::string chain_key(const Chain& c);

// Finite strict partial order, ingested as a cover relation. The full order
// is derived by transitive closure at construction and cached; construction
// rejects cyclic covers and cover pairs implied by transitivity.
class FinitePoset {
 public:
  FinitePoset() = default;  // empty poset
  FinitePoset(std::vector<std::string> elements,
              std::vector<std::pair<std::string, std::string>> covers);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  int index_of(const std::string& id) const;  // -1 if absent
  bool contains(const std::string& id) const { return index_of(id) >= 0; }

  // Reflexive order: leq(a, a) is true.
  bool leq(int a, int b) const;
  bool leq(const std::string& a, const std::string& b) const;
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

 private:
  std::vector<std::string> elements_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<bool>> leq_;  // cached transitive closure
};

std::vector<std::string> maximal_elements(const FinitePoset& p);
std::vector<std::string> minimal_elements(const FinitePoset& p);

// Every pair has an upper (resp. lower) bound. Throws EmptyPosetError.
bool is_directed(const FinitePoset& p);
bool is_codirected(const FinitePoset& p);

// Partition by the equivalence generated by comparability.
std::vector<std::vector<std::string>> connected_components(const FinitePoset& p);

// Every connected component has exactly one minimal element (closed point).
bool is_w_local(const FinitePoset& p);

// All nonempty chains, deterministic order (by length, then lexicographic).
std::vector<Chain> all_chains(const FinitePoset& p);

// Poset of nonempty chains ordered by containment; element ids are chain
// keys. Covers are containments that add exactly one member.
FinitePoset subdivision(const FinitePoset& p);

// Nerve of the poset: simplices are the nonempty chains, grouped by
// dimension (simplices_by_dim[k] holds the (k+1)-element chains).
struct OrderComplex {
  std::vector<std::string> vertices;
  std::vector<std::vector<Chain>> simplices_by_dim;
};

OrderComplex order_complex(const FinitePoset& p);

// Edge-path presentation of the fundamental group of |K|: spanning tree by
// breadth-first search from the basepoint (neighbours in lexicographic id
// order), one generator per non-tree edge, one relator per triangle.
// Throws DisconnectedError when the basepoint's component is not all of K.
GroupPresentation edge_path_group(const OrderComplex& k,
                                  const std::string& basepoint);

std::optional<std::string> unique_maximum(const FinitePoset& p);

}  // namespace strat
