#include <doctest.h>

#include "helpers.hpp"
#include "strat/cert.hpp"
#include "strat/errors.hpp"
#include "strat/fincat.hpp"
#include "strat/sampler.hpp"

using strat::FiniteCategory;
using strat::FinitePoset;
using strat::Word;

namespace {

FiniteCategory delooping_of_cyclic(int n) {
  auto table = strat::todd_coxeter(testutil::cyclic("a", n), {}, 1000);
  return strat::delooping(std::get<strat::CosetTable>(table));
}

}  // namespace

TEST_CASE("validation reports the offending data") {
  // identity law broken: e o g = e instead of g
  CHECK_THROWS_WITH_AS(
      FiniteCategory({"*"},
                     {{"e", "*", "*"}, {"g", "*", "*"}},
                     {{"*", "e"}},
                     {{"e", "e", "e"},
                      {"e", "g", "g"},
                      {"g", "e", "e"},
                      {"g", "g", "e"}}),
      doctest::Contains("identity law"), strat::ValidationError);

  // identity laws fine, associativity broken: a o (a o a) != (a o a) o a
  CHECK_THROWS_WITH_AS(
      FiniteCategory({"*"},
                     {{"e", "*", "*"}, {"a", "*", "*"}, {"b", "*", "*"}},
                     {{"*", "e"}},
                     {{"e", "e", "e"}, {"a", "e", "a"}, {"b", "e", "b"},
                      {"e", "a", "a"}, {"e", "b", "b"},
                      {"a", "a", "b"}, {"b", "a", "a"},
                      {"a", "b", "e"}, {"b", "b", "b"}}),
      doctest::Contains("associativity"), strat::ValidationError);

  CHECK_THROWS_WITH_AS(FiniteCategory({"x"}, {{"idx", "x", "x"}}, {},
                                      {{"idx", "idx", "idx"}}),
                       doctest::Contains("no identity"),
                       strat::ValidationError);

  CHECK_THROWS_WITH_AS(
      FiniteCategory({"x", "y"},
                     {{"idx", "x", "x"}, {"idy", "y", "y"}, {"f", "x", "y"}},
                     {{"x", "idx"}, {"y", "idy"}},
                     {{"idx", "idx", "idx"}, {"idy", "idy", "idy"},
                      {"idx", "f", "f"}}),
      doctest::Contains("does not match composability"),
      strat::ValidationError);
}

TEST_CASE("delooping of Z/2: the paper's non-example") {
  FiniteCategory bz2 = delooping_of_cyclic(2);
  CHECK(bz2.object_count() == 1);
  CHECK(bz2.morphism_count() == 2);
  CHECK_FALSE(strat::has_terminal(bz2).has_value());
  CHECK_FALSE(strat::has_initial(bz2).has_value());
  CHECK(strat::weakly_terminal(bz2) == std::vector<std::string>{"*"});
  CHECK(strat::weakly_initial(bz2) == std::vector<std::string>{"*"});
  CHECK_FALSE(strat::is_filtered(bz2));
  CHECK_FALSE(strat::is_cofiltered(bz2));

  auto rigidity = strat::rigidity_check(bz2);
  CHECK_FALSE(rigidity.hypothesis_holds);
  CHECK_FALSE(rigidity.counterexample);
}

TEST_CASE("delooping laws") {
  FiniteCategory b1 = delooping_of_cyclic(1);
  CHECK(b1.object_count() == 1);
  CHECK(b1.morphism_count() == 1);
  CHECK(strat::has_terminal(b1) == "*");
  CHECK(strat::is_filtered(b1));

  for (int n : {2, 3, 4}) {
    FiniteCategory bn = delooping_of_cyclic(n);
    CHECK(bn.morphism_count() == static_cast<std::size_t>(n));
    CHECK_FALSE(strat::is_filtered(bn));
  }

  auto s3_table = strat::todd_coxeter(testutil::s3(), {}, 1000);
  FiniteCategory bs3 = strat::delooping(std::get<strat::CosetTable>(s3_table));
  CHECK(bs3.morphism_count() == 6);
  // noncommutative: some pair composes differently in the two orders
  bool noncommutative = false;
  for (int f = 0; f < 6 && !noncommutative; ++f)
    for (int g = 0; g < 6 && !noncommutative; ++g)
      noncommutative = bs3.compose(g, f) != bs3.compose(f, g);
  CHECK(noncommutative);

  strat::Effort effort;
  auto big = strat::todd_coxeter(
      strat::GroupPresentation({"a"}, {Word::generator(0).pow(1000)}), {},
      effort.max_cosets);
  CHECK_THROWS_AS(strat::delooping(std::get<strat::CosetTable>(big)),
                  strat::TooLargeError);
}

TEST_CASE("poset categories") {
  FiniteCategory interval =
      strat::poset_as_category(FinitePoset({"a", "b"}, {{"a", "b"}}));
  CHECK(interval.object_count() == 2);
  CHECK(interval.morphism_count() == 3);
  CHECK(strat::has_terminal(interval) == "b");
  CHECK(strat::has_initial(interval) == "a");

  FiniteCategory discrete = strat::poset_as_category(FinitePoset({"a", "b"}, {}));
  CHECK(discrete.morphism_count() == 2);
  CHECK_FALSE(strat::has_terminal(discrete).has_value());
  CHECK(strat::weakly_terminal(discrete).empty());
  CHECK(strat::weakly_initial(discrete).empty());

  FinitePoset star({"p1", "p2", "eta"}, {{"p1", "eta"}, {"p2", "eta"}});
  FiniteCategory star_cat = strat::poset_as_category(star);
  CHECK(strat::has_terminal(star_cat).has_value() ==
        (strat::maximal_elements(star).size() == 1));
  CHECK(strat::weakly_terminal(star_cat) == strat::maximal_elements(star));
}

TEST_CASE("rigidity holds on hand-built instances") {
  FinitePoset star({"p1", "p2", "eta"}, {{"p1", "eta"}, {"p2", "eta"}});
  auto report = strat::rigidity_check(strat::poset_as_category(star));
  CHECK(report.hypothesis_holds);
  CHECK(report.conclusion_holds);
  CHECK_FALSE(report.counterexample);

  auto one = strat::rigidity_check(
      strat::poset_as_category(FinitePoset({"x"}, {})));
  CHECK(one.hypothesis_holds);
  CHECK(one.conclusion_holds);
}

TEST_CASE("terminal implies filtered, dually for initial") {
  strat::Rng rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    FiniteCategory c = strat::random_category(rng, 4);
    if (strat::has_terminal(c)) CHECK(strat::is_filtered(c));
    if (strat::has_initial(c)) CHECK(strat::is_cofiltered(c));
  }
}

TEST_CASE("sampled categories never break the rigidity lemma") {
  strat::Rng rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    FiniteCategory c = strat::random_category(rng, 4);
    CHECK_FALSE(strat::rigidity_check(c).counterexample);
  }
}

TEST_CASE("poset category has a terminal object iff a unique maximum") {
  strat::Rng rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    FinitePoset p = strat::random_poset(rng, 5);
    auto terminal = strat::has_terminal(strat::poset_as_category(p));
    auto top = strat::unique_maximum(p);
    CHECK(terminal.has_value() == top.has_value());
    if (terminal) CHECK(*terminal == *top);
    auto initial = strat::has_initial(strat::poset_as_category(p));
    CHECK(initial.has_value() == (strat::minimal_elements(p).size() == 1));
  }
}

TEST_CASE("weak terminals of a poset category are its upper bounds") {
  strat::Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    FinitePoset p = strat::random_poset(rng, 5);
    auto weak = strat::weakly_terminal(strat::poset_as_category(p));
    if (strat::is_directed(p))
      CHECK(weak == strat::maximal_elements(p));
    else
      CHECK(weak.empty());
  }
}
