#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strat/cert.hpp"
#include "strat/diagram.hpp"
#include "strat/poset.hpp"
#include "strat/presentation.hpp"

namespace strat {

// Stratified site: a base poset, one group per nonempty chain of the base
// (keyed by chain key), and one restriction hom per cover containment of the
// subdivision, oriented from the larger chain's group to the smaller
// chain's group. Map keys are (big chain key, small chain key).
struct StratifiedSite {
  FinitePoset base;
  std::map<std::string, GroupPresentation> strata;
  std::map<std::pair<std::string, std::string>, GroupHom> maps;
};

// Raw constructor; every chain key is checked against the base, full
// validation is deferred to validate_site. Throws UnknownChainKeyError.
StratifiedSite site_from_diagram(
    const FinitePoset& base, std::map<std::string, GroupPresentation> strata,
    std::map<std::pair<std::string, std::string>, GroupHom> maps);

struct SiteFinding {
  bool hard = false;  // hard failures block acceptance, soft ones are warnings
  std::string detail;
};

struct SiteValidation {
  std::vector<SiteFinding> findings;

  bool accepted() const {
    for (const auto& f : findings)
      if (f.hard) return false;
    return true;
  }
  std::size_t warnings() const {
    std::size_t n = 0;
    for (const auto& f : findings) n += !f.hard;
    return n;
  }
};

// Reports missing strata or maps, hom disproofs, and composite
// disagreements across commuting containment squares. Budget-limited checks
// are recorded as warnings, never as hard failures.
SiteValidation validate_site(const StratifiedSite& s, const Effort& effort = {});

// Number of connected components of the base.
std::size_t classifying_pi0(const StratifiedSite& s);

// Fundamental group of the classifying space via the colimit of the group
// diagram over the subdivision of the base (contravariant over containment),
// Tietze-simplified. The basepoint picks the stratum whose generators keep
// their original names. Preconditions: connected base and a certified simply
// connected order complex of the base; the certificate requirement can be
// overridden explicitly.
GroupPresentation classifying_pi1(const StratifiedSite& s,
                                  const std::string& basepoint,
                                  const Effort& effort = {},
                                  bool override_index_check = false);

}  // namespace strat
