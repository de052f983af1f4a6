#include "strat/site.hpp"

#include <algorithm>
#include <set>

#include "strat/errors.hpp"

namespace strat {

namespace {

std::set<std::string> chain_keys_of(const FinitePoset& base) {
  std::set<std::string> keys;
  for (const auto& c : all_chains(base)) keys.insert(chain_key(c));
  return keys;
}

}  // namespace

StratifiedSite site_from_diagram(
    const FinitePoset& base, std::map<std::string, GroupPresentation> strata,
    std::map<std::pair<std::string, std::string>, GroupHom> maps) {
  std::set<std::string> keys = chain_keys_of(base);
  for (const auto& [key, group] : strata)
    if (!keys.count(key))
      throw UnknownChainKeyError("stratum key is not a chain of the base: " +
                                 key);
  for (const auto& [key, hom] : maps)
    if (!keys.count(key.first) || !keys.count(key.second))
      throw UnknownChainKeyError("map key is not a pair of chains: " +
                                 key.first + " -> " + key.second);
  return StratifiedSite{base, std::move(strata), std::move(maps)};
}

SiteValidation validate_site(const StratifiedSite& s, const Effort& effort) {
  SiteValidation report;
  FinitePoset sub = subdivision(s.base);

  for (const auto& key : sub.elements())
    if (!s.strata.count(key))
      report.findings.push_back({true, "MissingStratum: no group for chain " + key});

  // One hom per cover containment, oriented big chain -> small chain.
  std::vector<std::pair<std::string, std::string>> wanted;
  for (const auto& [small, big] : sub.covers())
    wanted.emplace_back(sub.elements()[static_cast<std::size_t>(big)],
                        sub.elements()[static_cast<std::size_t>(small)]);
  for (const auto& key : wanted) {
    auto it = s.maps.find(key);
    if (it == s.maps.end()) {
      report.findings.push_back(
          {true, "MissingEdgeHom: " + key.first + " -> " + key.second});
      continue;
    }
    const GroupHom& phi = it->second;
    auto src = s.strata.find(key.first);
    auto tgt = s.strata.find(key.second);
    if (src == s.strata.end() || tgt == s.strata.end()) continue;
    if (phi.source != src->second || phi.target != tgt->second) {
      report.findings.push_back(
          {true, "EndpointMismatch: hom " + key.first + " -> " + key.second +
                     " does not match the strata"});
      continue;
    }
    try {
      GroupHom checked = verify_hom(phi, effort);
      if (!checked.verified())
        report.findings.push_back(
            {false, "Unverified: hom " + key.first + " -> " + key.second +
                        " (target enumeration over budget)"});
    } catch (const NotAHomomorphismError& e) {
      report.findings.push_back(
          {true, "NotAHomomorphism: " + key.first + " -> " + key.second +
                     ": " + e.what()});
    }
  }
  for (const auto& [key, hom] : s.maps)
    if (std::find(wanted.begin(), wanted.end(), key) == wanted.end())
      report.findings.push_back(
          {true, "UnexpectedMap: " + key.first + " -> " + key.second +
                     " is not a cover containment"});

  // Composite agreement across commuting containment squares: both cover
  // paths from a chain down to a two-smaller chain must agree on generators.
  for (const auto& big_key : sub.elements()) {
    int big = sub.index_of(big_key);
    for (const auto& small_key : sub.elements()) {
      int small = sub.index_of(small_key);
      if (big == small || !sub.leq(small, big)) continue;
      std::vector<std::pair<std::string, std::string>> paths;  // (big, via)
      std::vector<GroupHom> composites;
      for (const auto& mid_key : sub.elements()) {
        auto first = s.maps.find({big_key, mid_key});
        auto second = s.maps.find({mid_key, small_key});
        if (first == s.maps.end() || second == s.maps.end()) continue;
        std::vector<Word> images;
        for (std::size_t g = 0; g < first->second.source.rank(); ++g)
          images.push_back(second->second.apply(first->second.images[g]));
        composites.emplace_back(first->second.source, second->second.target,
                                std::move(images));
        paths.emplace_back(big_key, mid_key);
      }
      if (composites.size() < 2) continue;
      auto tgt = s.strata.find(small_key);
      if (tgt == s.strata.end()) continue;
      TCResult r = todd_coxeter(tgt->second, {}, effort.max_cosets);
      const auto* table = std::get_if<CosetTable>(&r);
      if (!table) {
        report.findings.push_back(
            {false, "Unverified: composite agreement " + big_key + " -> " +
                        small_key + " (target enumeration over budget)"});
        continue;
      }
      for (std::size_t i = 1; i < composites.size(); ++i)
        for (std::size_t g = 0; g < composites[0].images.size(); ++g) {
          Word difference = composites[0].images[g] *
                            composites[i].images[g].inverse();
          if (!table->word_acts_trivially(difference)) {
            report.findings.push_back(
                {true, "CompositeMismatch: paths " + big_key + " -> " +
                           small_key + " via " + paths[0].second + " and " +
                           paths[i].second + " disagree on generator " +
                           std::to_string(g)});
            break;
          }
        }
    }
  }
  return report;
}

std::size_t classifying_pi0(const StratifiedSite& s) {
  return connected_components(s.base).size();
}

GroupPresentation classifying_pi1(const StratifiedSite& s,
                                  const std::string& basepoint,
                                  const Effort& effort,
                                  bool override_index_check) {
  if (s.base.empty()) throw DisconnectedError("base poset is empty");
  if (!s.base.contains(basepoint))
    throw PreconditionError("basepoint is not an element of the base: " +
                            basepoint);
  if (connected_components(s.base).size() != 1)
    throw DisconnectedError("base poset is disconnected");

  if (!override_index_check) {
    // The colimit formula identifies pi1 of the classifying space with the
    // strict group colimit only over a simply connected index; the nerve of
    // the subdivision is homotopy equivalent to the nerve of the base, so
    // certify the base complex.
    GroupPresentation nerve_pi1 =
        edge_path_group(order_complex(s.base), basepoint);
    TrivialityCertificate cert = is_trivial(nerve_pi1, effort);
    if (cert.verdict == TrivialityCertificate::Verdict::NonTrivial)
      throw IndexNotSimplyConnectedError(
          "order complex of the base has nontrivial fundamental group (" +
          cert.note + ")");
    if (cert.verdict == TrivialityCertificate::Verdict::Unknown)
      throw BudgetError(
          "could not certify simple connectivity of the base complex: " +
          cert.note);
  }

  GroupDiagram d;
  d.index = subdivision(s.base);
  d.orientation = GroupDiagram::Orientation::Contravariant;
  for (const auto& key : d.index.elements()) {
    auto it = s.strata.find(key);
    if (it == s.strata.end())
      throw ValidationError("site is missing the stratum at chain " + key);
    d.nodes.emplace(key, it->second);
  }
  for (const auto& [small, big] : d.index.covers()) {
    std::pair<std::string, std::string> key{
        d.index.elements()[static_cast<std::size_t>(big)],
        d.index.elements()[static_cast<std::size_t>(small)]};
    auto it = s.maps.find(key);
    if (it == s.maps.end())
      throw MissingEdgeHomError("site is missing the map " + key.first +
                                " -> " + key.second);
    d.edges.emplace(key, it->second);
  }

  GroupPresentation raw = colimit(d, basepoint);
  auto basepoint_stratum = s.strata.find(basepoint);
  return tietze_simplify(raw, effort.tietze_passes,
                         basepoint_stratum->second.generators);
}

}  // namespace strat
