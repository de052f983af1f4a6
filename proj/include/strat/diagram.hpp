#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "strat/poset.hpp"
#include "strat/presentation.hpp"

namespace strat {

// Diagram of groups indexed by a finite poset. With Covariant orientation an
// edge hom runs along each cover a < b as G_a -> G_b; Contravariant runs the
// other way. Edge keys are (source node, target node) per that orientation.
struct GroupDiagram {
  enum class Orientation { Covariant, Contravariant };

  FinitePoset index;
  Orientation orientation = Orientation::Covariant;
  std::map<std::string, GroupPresentation> nodes;
  std::map<std::pair<std::string, std::string>, GroupHom> edges;
};

// Presentation of colim D: one generator per node generator (renamed with an
// "@node" suffix, except on keep_names_node), all node relators, plus one
// relator g * phi(g)^-1 per edge hom phi and source generator g. Throws
// MissingEdgeHomError when a cover pair lacks its hom.
GroupPresentation colimit(
    const GroupDiagram& d,
    const std::optional<std::string>& keep_names_node = std::nullopt);

}  // namespace strat
