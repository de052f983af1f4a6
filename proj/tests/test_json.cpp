#include <doctest.h>

#include "helpers.hpp"
#include "strat/errors.hpp"
#include "strat/json_io.hpp"
#include "strat/sampler.hpp"

using strat::Json;
using strat::Word;

TEST_CASE("relator grammar") {
  std::vector<std::string> gens{"s", "t"};
  CHECK(strat::parse_word("s^2", gens) == testutil::w({1, 1}));
  CHECK(strat::parse_word("(s*t)^2", gens) == testutil::w({1, 2, 1, 2}));
  CHECK(strat::parse_word("s*t^-1", gens) == testutil::w({1, -2}));
  CHECK(strat::parse_word("  s * t ", gens) == testutil::w({1, 2}));
  CHECK(strat::parse_word("1", gens).empty());
  CHECK(strat::parse_word("s^0", gens).empty());
  CHECK(strat::parse_word("((s))^-1", gens) == testutil::w({-1}));
  CHECK(strat::parse_word("s*s^-1", gens).empty());
}

TEST_CASE("parse errors cite byte offsets") {
  std::vector<std::string> gens{"s", "t"};
  try {
    strat::parse_word("s*x", gens);
    FAIL("expected ParseError");
  } catch (const strat::ParseError& e) {
    CHECK(e.offset == 2);
  }
  try {
    strat::parse_word("(s*t", gens);
    FAIL("expected ParseError");
  } catch (const strat::ParseError& e) {
    CHECK(e.offset == 0);
  }
  try {
    strat::parse_word("s^x", gens);
    FAIL("expected ParseError");
  } catch (const strat::ParseError& e) {
    CHECK(e.offset == 2);
  }
  CHECK_THROWS_AS(strat::parse_word("s t", gens), strat::ParseError);
}

TEST_CASE("render and parse round-trip") {
  strat::Rng rng(83);
  std::vector<std::string> gens{"a", "b", "c"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> letters;
    int len = rng.between(0, 10);
    for (int i = 0; i < len; ++i) {
      int idx = rng.between(0, 2);
      letters.push_back(rng.chance(1, 2) ? idx + 1 : -(idx + 1));
    }
    Word w(std::move(letters));
    CHECK(strat::parse_word(strat::render_word(w, gens), gens) == w);
  }
}

TEST_CASE("poset json") {
  Json j = Json::parse(
      R"({"elements": ["p1","p2","eta"], "covers": [["p1","eta"],["p2","eta"]]})");
  auto p = strat::poset_from_json(j);
  CHECK(p.size() == 3);
  CHECK(strat::maximal_elements(p) == std::vector<std::string>{"eta"});

  Json cyc = Json::parse(R"({"elements": ["a","b"], "covers": [["a","b"],["b","a"]]})");
  CHECK_THROWS_WITH_AS(strat::poset_from_json(cyc), doctest::Contains("cycle"),
                       strat::ValidationError);

  Json redundant = Json::parse(
      R"({"elements": ["a","b","c"], "covers": [["a","b"],["b","c"],["a","c"]]})");
  CHECK_THROWS_WITH_AS(strat::poset_from_json(redundant),
                       doctest::Contains("transitivity"),
                       strat::ValidationError);

  CHECK(strat::poset_from_json(strat::poset_to_json(p)).elements() ==
        p.elements());
}

TEST_CASE("group json") {
  Json j = Json::parse(
      R"({"generators": ["s","t"], "relators": ["s^2","t^3","(s*t)^2"]})");
  auto g = strat::group_from_json(j);
  CHECK(g == testutil::s3());
  CHECK(strat::group_from_json(strat::group_to_json(g)) == g);

  CHECK_THROWS_AS(strat::group_from_json(Json::parse(R"({"generators": []})")),
                  strat::ValidationError);
}

TEST_CASE("category json") {
  Json j = Json::parse(R"({
    "objects": ["*"],
    "morphisms": [{"id": "e", "src": "*", "tgt": "*"},
                  {"id": "g", "src": "*", "tgt": "*"}],
    "identities": {"*": "e"},
    "compose": [["e","e","e"],["e","g","g"],["g","e","g"],["g","g","e"]]
  })");
  auto c = strat::category_from_json(j);
  CHECK(c.morphism_count() == 2);
  CHECK_FALSE(strat::has_terminal(c).has_value());

  Json broken = j;
  broken["compose"][2] = Json::array({"g", "e", "e"});  // e o g = e
  CHECK_THROWS_AS(strat::category_from_json(broken), strat::ValidationError);
}

TEST_CASE("site json") {
  Json j = Json::parse(R"({
    "poset": {"elements": ["p","eta"], "covers": [["p","eta"]]},
    "strata": {
      "p":     {"generators": ["d"], "relators": ["d^2","d"]},
      "eta":   {"generators": ["s","t"], "relators": ["s^2","t^3","(s*t)^2"]},
      "p<eta": {"generators": ["d"], "relators": ["d^2"]}
    },
    "maps": {"p<eta -> p": {"d": "d"}, "p<eta -> eta": {"d": "s"}}
  })");
  auto site = strat::site_from_json(j);
  CHECK(strat::validate_site(site).accepted());
  auto pi1 = strat::classifying_pi1(site, "eta");
  CHECK(strat::is_trivial(pi1).trivial());

  Json bad_key = j;
  bad_key["maps"]["p<eta => p"] = Json::object({{"d", "d"}});
  CHECK_THROWS_AS(strat::site_from_json(bad_key), strat::ValidationError);

  Json missing_gen = j;
  missing_gen["maps"]["p<eta -> p"] = Json::object();
  CHECK_THROWS_WITH_AS(strat::site_from_json(missing_gen),
                       doctest::Contains("misses generator"),
                       strat::ValidationError);
}

TEST_CASE("model json") {
  Json j = Json::parse(R"({
    "G_K": {"generators": ["s","t"], "relators": ["s^2","t^3","(s*t)^2"]},
    "primes": [{"name": "p",
                "D": {"generators": ["d"], "relators": ["d^2"]},
                "incl": {"d": "s"},
                "inertia": ["d"]}]
  })");
  auto model = strat::model_from_json(j);
  CHECK(model.primes.size() == 1);
  CHECK(strat::verify_formula(model).outcome ==
        strat::FormulaReport::Outcome::Match);

  Json bad = j;
  bad["primes"][0]["incl"] = Json::object({{"d", "nope"}});
  CHECK_THROWS_AS(strat::model_from_json(bad), strat::ParseError);
}

TEST_CASE("file loading") {
  CHECK_THROWS_AS(strat::load_json_file("/nonexistent/path.json"),
                  strat::IoError);
}
