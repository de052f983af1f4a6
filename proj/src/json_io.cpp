#include "strat/json_io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "strat/errors.hpp"

namespace strat {

namespace {

bool is_name_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '^' && c != '*' &&
         c != '(' && c != ')';
}

// Recursive-descent parser for the relator grammar.
class WordParser {
 public:
  WordParser(const std::string& text, const std::vector<std::string>& gens)
      : text_(text), gens_(gens) {}

  Word parse() {
    Word w = expr();
    skip_space();
    if (pos_ < text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return w;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  Word expr() {
    Word w = factor();
    while (true) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      w = w * factor();
    }
    return w;
  }

  Word factor() {
    Word base = atom();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      return base.pow(integer());
    }
    return base;
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected an integer exponent", pos_);
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000) throw ParseError("exponent too large", start);
      ++pos_;
    }
    return negative ? -static_cast<int>(value) : static_cast<int>(value);
  }

  Word atom() {
    skip_space();
    if (peek() == '(') {
      std::size_t open = pos_;
      ++pos_;
      Word w = expr();
      skip_space();
      if (peek() != ')')
        throw ParseError("unbalanced parenthesis opened here", open);
      ++pos_;
      return w;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) throw ParseError("expected a generator name", pos_);
    std::string name = text_.substr(start, pos_ - start);
    if (name == "1") return Word();
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i] == name) return Word::generator(static_cast<int>(i));
    throw ParseError("unknown generator '" + name + "'", start);
  }

  const std::string& text_;
  const std::vector<std::string>& gens_;
  std::size_t pos_ = 0;
};

const Json& expect(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string(what) + " is missing field \"" + key +
                          "\"");
  return j.at(key);
}

std::string expect_string(const Json& j, const char* what) {
  if (!j.is_string())
    throw ValidationError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Word parse_word(const std::string& text,
                const std::vector<std::string>& generators) {
  return WordParser(text, generators).parse();
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(),
                     e.byte);
  }
}

FinitePoset poset_from_json(const Json& j) {
  const Json& elements = expect(j, "elements", "poset");
  const Json& covers = expect(j, "covers", "poset");
  if (!elements.is_array() || !covers.is_array())
    throw ValidationError("poset \"elements\" and \"covers\" must be arrays");
  std::vector<std::string> ids;
  for (const auto& e : elements) ids.push_back(expect_string(e, "poset element"));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2)
      throw ValidationError("each cover must be a pair [below, above]");
    pairs.emplace_back(expect_string(c[0], "cover member"),
                       expect_string(c[1], "cover member"));
  }
  return FinitePoset(std::move(ids), std::move(pairs));
}

GroupPresentation group_from_json(const Json& j) {
  const Json& gens = expect(j, "generators", "group");
  const Json& rels = expect(j, "relators", "group");
  if (!gens.is_array() || !rels.is_array())
    throw ValidationError("group \"generators\" and \"relators\" must be arrays");
  std::vector<std::string> names;
  for (const auto& g : gens) names.push_back(expect_string(g, "generator"));
  std::vector<Word> words;
  for (const auto& r : rels)
    words.push_back(parse_word(expect_string(r, "relator"), names));
  return GroupPresentation(std::move(names), std::move(words));
}

FiniteCategory category_from_json(const Json& j) {
  const Json& objects = expect(j, "objects", "category");
  const Json& morphisms = expect(j, "morphisms", "category");
  const Json& identities = expect(j, "identities", "category");
  const Json& compose = expect(j, "compose", "category");
  if (!objects.is_array() || !morphisms.is_array() ||
      !identities.is_object() || !compose.is_array())
    throw ValidationError("malformed category object");

  std::vector<std::string> objs;
  for (const auto& o : objects) objs.push_back(expect_string(o, "object"));
  std::vector<FiniteCategory::MorphismData> morphs;
  for (const auto& m : morphisms)
    morphs.push_back({expect_string(expect(m, "id", "morphism"), "morphism id"),
                      expect_string(expect(m, "src", "morphism"), "morphism src"),
                      expect_string(expect(m, "tgt", "morphism"), "morphism tgt")});
  std::vector<std::pair<std::string, std::string>> ids;
  for (const auto& [obj, morph] : identities.items())
    ids.emplace_back(obj, expect_string(morph, "identity morphism"));
  std::vector<std::array<std::string, 3>> comps;
  for (const auto& triple : compose) {
    if (!triple.is_array() || triple.size() != 3)
      throw ValidationError(
          "each compose entry must be a triple [f, g, h] meaning g o f = h");
    comps.push_back({expect_string(triple[0], "compose member"),
                     expect_string(triple[1], "compose member"),
                     expect_string(triple[2], "compose member")});
  }
  return FiniteCategory(std::move(objs), std::move(morphs), std::move(ids),
                        std::move(comps));
}

StratifiedSite site_from_json(const Json& j) {
  FinitePoset base = poset_from_json(expect(j, "poset", "site"));
  const Json& strata = expect(j, "strata", "site");
  const Json& maps = expect(j, "maps", "site");
  if (!strata.is_object() || !maps.is_object())
    throw ValidationError("site \"strata\" and \"maps\" must be objects");

  std::map<std::string, GroupPresentation> groups;
  for (const auto& [key, group] : strata.items())
    groups.emplace(key, group_from_json(group));

  std::map<std::pair<std::string, std::string>, GroupHom> homs;
  for (const auto& [key, mapping] : maps.items()) {
    std::size_t arrow = key.find(" -> ");
    if (arrow == std::string::npos)
      throw ValidationError("map key must look like \"<bigchain> -> "
                            "<smallchain>\": " +
                            key);
    std::string big = key.substr(0, arrow);
    std::string small = key.substr(arrow + 4);
    auto src = groups.find(big);
    auto tgt = groups.find(small);
    if (src == groups.end() || tgt == groups.end())
      throw ValidationError("map " + key + " references a missing stratum");
    if (!mapping.is_object())
      throw ValidationError("map " + key +
                            " must be an object {generator: word}");
    std::vector<Word> images(src->second.rank());
    std::vector<bool> given(src->second.rank(), false);
    for (const auto& [gen, word] : mapping.items()) {
      int idx = src->second.generator_index(gen);
      if (idx < 0)
        throw ValidationError("map " + key + " names unknown generator " + gen);
      images[static_cast<std::size_t>(idx)] =
          parse_word(expect_string(word, "generator image"),
                     tgt->second.generators);
      given[static_cast<std::size_t>(idx)] = true;
    }
    for (std::size_t i = 0; i < given.size(); ++i)
      if (!given[i])
        throw ValidationError("map " + key + " misses generator " +
                              src->second.generators[i]);
    homs.emplace(std::make_pair(big, small),
                 GroupHom(src->second, tgt->second, std::move(images)));
  }
  return site_from_diagram(base, std::move(groups), std::move(homs));
}

DedekindModel model_from_json(const Json& j) {
  DedekindModel model;
  model.galois = group_from_json(expect(j, "G_K", "model"));
  const Json& primes = expect(j, "primes", "model");
  if (!primes.is_array()) throw ValidationError("model \"primes\" must be an array");
  for (const auto& p : primes) {
    PrimeData prime;
    prime.name = expect_string(expect(p, "name", "prime"), "prime name");
    prime.decomposition = group_from_json(expect(p, "D", "prime"));
    const Json& incl = expect(p, "incl", "prime");
    if (!incl.is_object())
      throw ValidationError("prime \"incl\" must be an object {generator: word}");
    std::vector<Word> images(prime.decomposition.rank());
    std::vector<bool> given(prime.decomposition.rank(), false);
    for (const auto& [gen, word] : incl.items()) {
      int idx = prime.decomposition.generator_index(gen);
      if (idx < 0)
        throw ValidationError("incl at prime " + prime.name +
                              " names unknown generator " + gen);
      images[static_cast<std::size_t>(idx)] = parse_word(
          expect_string(word, "inclusion image"), model.galois.generators);
      given[static_cast<std::size_t>(idx)] = true;
    }
    for (std::size_t i = 0; i < given.size(); ++i)
      if (!given[i])
        throw ValidationError("incl at prime " + prime.name +
                              " misses generator " +
                              prime.decomposition.generators[i]);
    prime.inclusion =
        GroupHom(prime.decomposition, model.galois, std::move(images));
    const Json& inertia = expect(p, "inertia", "prime");
    if (!inertia.is_array())
      throw ValidationError("prime \"inertia\" must be an array of words");
    for (const auto& w : inertia)
      prime.inertia.push_back(parse_word(expect_string(w, "inertia word"),
                                         prime.decomposition.generators));
    model.primes.push_back(std::move(prime));
  }
  check_model(model);
  return model;
}

Json poset_to_json(const FinitePoset& p) {
  Json j;
  j["elements"] = p.elements();
  Json covers = Json::array();
  for (const auto& [a, b] : p.covers())
    covers.push_back({p.elements()[static_cast<std::size_t>(a)],
                      p.elements()[static_cast<std::size_t>(b)]});
  j["covers"] = covers;
  return j;
}

Json group_to_json(const GroupPresentation& g) {
  Json j;
  j["generators"] = g.generators;
  Json rels = Json::array();
  for (const auto& r : g.relators) rels.push_back(render_word(r, g.generators));
  j["relators"] = rels;
  return j;
}

Json invariants_to_json(const AbelianInvariants& inv) {
  Json factors = Json::array();
  for (const auto& d : inv.factors) {
    if (d <= BigInt(std::numeric_limits<std::int64_t>::max()))
      factors.push_back(static_cast<std::int64_t>(d));
    else
      factors.push_back(d.str());
  }
  return factors;
}

Json certificate_to_json(const TrivialityCertificate& cert) {
  Json j;
  switch (cert.verdict) {
    case TrivialityCertificate::Verdict::Trivial:
      j["verdict"] = "trivial";
      break;
    case TrivialityCertificate::Verdict::NonTrivial:
      j["verdict"] = "nontrivial";
      break;
    case TrivialityCertificate::Verdict::Unknown:
      j["verdict"] = "unknown";
      break;
  }
  if (cert.coset_index) j["coset_index"] = *cert.coset_index;
  if (cert.abelian) j["abelianization"] = invariants_to_json(*cert.abelian);
  if (cert.witness) {
    Json w;
    w["degree"] = cert.witness->degree;
    w["image_order"] = cert.witness->image_order;
    Json images = Json::array();
    for (const auto& p : cert.witness->images) images.push_back(p);
    w["images"] = images;
    j["witness"] = w;
  }
  j["note"] = cert.note;
  return j;
}

}  // namespace strat
