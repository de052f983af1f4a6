#include "strat/diagram.hpp"

#include <unordered_map>
#include <unordered_set>

#include "strat/errors.hpp"

namespace strat {

GroupPresentation colimit(const GroupDiagram& d,
                          const std::optional<std::string>& keep_names_node) {
  // Generators in index-element order, then node generator order.
  std::vector<std::string> gens;
  std::unordered_map<std::string, int> offset;  // node -> first generator index
  std::unordered_set<std::string> taken;
  for (const auto& node : d.index.elements()) {
    auto it = d.nodes.find(node);
    if (it == d.nodes.end())
      throw ValidationError("diagram is missing the group at node " + node);
    offset[node] = static_cast<int>(gens.size());
    bool keep = keep_names_node && *keep_names_node == node;
    for (const auto& g : it->second.generators) {
      std::string name = keep ? g : g + "@" + node;
      if (!taken.insert(name).second)
        throw ValidationError("generator name collision in colimit: " + name);
      gens.push_back(name);
    }
  }

  auto shift = [](const Word& w, int by) {
    std::vector<int> out;
    out.reserve(w.size());
    for (int letter : w.letters()) {
      int idx = letter_index(letter) + by;
      out.push_back(letter > 0 ? idx + 1 : -(idx + 1));
    }
    return Word(std::move(out));
  };

  std::vector<Word> relators;
  for (const auto& node : d.index.elements())
    for (const auto& r : d.nodes.at(node).relators)
      relators.push_back(shift(r, offset.at(node)));

  for (const auto& [a, b] : d.index.covers()) {
    const std::string& lo = d.index.elements()[static_cast<std::size_t>(a)];
    const std::string& hi = d.index.elements()[static_cast<std::size_t>(b)];
    std::pair<std::string, std::string> key =
        d.orientation == GroupDiagram::Orientation::Covariant
            ? std::make_pair(lo, hi)
            : std::make_pair(hi, lo);
    auto it = d.edges.find(key);
    if (it == d.edges.end())
      throw MissingEdgeHomError("diagram is missing the edge hom " +
                                key.first + " -> " + key.second);
    const GroupHom& phi = it->second;
    int src_off = offset.at(key.first);
    int tgt_off = offset.at(key.second);
    for (std::size_t g = 0; g < phi.source.rank(); ++g)
      relators.push_back(
          shift(Word::generator(static_cast<int>(g)), src_off) *
          shift(phi.images[g], tgt_off).inverse());
  }

  return GroupPresentation(std::move(gens), std::move(relators));
}

}  // namespace strat
