#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "strat/arith.hpp"
#include "strat/cert.hpp"
#include "strat/fincat.hpp"
#include "strat/poset.hpp"
#include "strat/site.hpp"
#include "strat/smith.hpp"

namespace strat {

using Json = nlohmann::ordered_json;

// Relator grammar: atoms are generator names, '^' takes an integer exponent
// (possibly negative), '*' concatenates, parentheses group, whitespace is
// ignored, "1" is the identity. Parse errors cite byte offsets.
Word parse_word(const std::string& text,
                const std::vector<std::string>& generators);

Json load_json_file(const std::string& path);

FinitePoset poset_from_json(const Json& j);
GroupPresentation group_from_json(const Json& j);
FiniteCategory category_from_json(const Json& j);
StratifiedSite site_from_json(const Json& j);
DedekindModel model_from_json(const Json& j);

Json poset_to_json(const FinitePoset& p);
Json group_to_json(const GroupPresentation& g);
Json invariants_to_json(const AbelianInvariants& inv);
Json certificate_to_json(const TrivialityCertificate& cert);

}  // namespace strat
