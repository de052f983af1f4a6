#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "strat/coset.hpp"
#include "strat/poset.hpp"

namespace strat {

// Explicit finite category: objects, morphisms, identities and a full
// composition table. Associativity, identity laws and the composability
// domain are checked exhaustively at construction, so every predicate below
// is a plain quantifier scan.
class FiniteCategory {
 public:
  struct MorphismData {
    std::string id;
    std::string src;
    std::string tgt;
  };

  FiniteCategory(std::vector<std::string> objects,
                 std::vector<MorphismData> morphisms,
                 std::vector<std::pair<std::string, std::string>> identities,
                 std::vector<std::array<std::string, 3>> compositions);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& morphism_id(int m) const;

  int src(int m) const { return src_[static_cast<std::size_t>(m)]; }
  int tgt(int m) const { return tgt_[static_cast<std::size_t>(m)]; }
  int identity_of(int obj) const { return identity_[static_cast<std::size_t>(obj)]; }

  // g after f; -1 when not composable.
  int compose(int g, int f) const;
  const std::vector<int>& hom_set(int x, int y) const;
  bool is_isomorphism(int m) const;

 private:
  std::vector<std::string> objects_;
  std::vector<MorphismData> morphisms_;
  std::vector<int> src_, tgt_, identity_;
  std::vector<std::vector<int>> comp_;      // comp_[g][f]
  std::vector<std::vector<std::vector<int>>> hom_;  // hom_[x][y]
};

std::optional<std::string> has_terminal(const FiniteCategory& c);
std::optional<std::string> has_initial(const FiniteCategory& c);
std::vector<std::string> weakly_terminal(const FiniteCategory& c);
std::vector<std::string> weakly_initial(const FiniteCategory& c);

// Nonempty, cocones for object pairs, coequalizing morphisms for parallel
// pairs (dually for cofiltered). Checked exhaustively.
bool is_filtered(const FiniteCategory& c);
bool is_cofiltered(const FiniteCategory& c);

// Checks the rigidity hypothesis (filtered, with a weakly terminal object t
// such that Hom(t, x) is empty for x != t and Hom(t, t) consists of
// isomorphisms) and, when it holds, that a terminal object indeed exists.
struct RigidityReport {
  bool hypothesis_holds = false;
  std::optional<std::string> witness;  // the weakly terminal object used
  bool conclusion_holds = false;
  bool counterexample = false;  // hypothesis true but no terminal object
};

RigidityReport rigidity_check(const FiniteCategory& c);

// One object, one morphism per group element, composition from the regular
// permutation representation of a completed coset table over the trivial
// subgroup. Throws TooLargeError past the cap.
FiniteCategory delooping(const CosetTable& regular, std::size_t cap = 720);

// Objects are elements, with exactly one morphism x -> y when x <= y.
FiniteCategory poset_as_category(const FinitePoset& p);

}  // namespace strat
