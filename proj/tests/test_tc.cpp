#include <doctest.h>

#include <variant>

#include "helpers.hpp"
#include "strat/cert.hpp"
#include "strat/coset.hpp"

using strat::CosetTable;
using strat::Overflow;
using strat::TCResult;
using strat::Word;

namespace {

CosetTable table_of(const TCResult& r) {
  REQUIRE(std::holds_alternative<CosetTable>(r));
  return std::get<CosetTable>(r);
}

}  // namespace

TEST_CASE("S3 enumerations") {
  auto s3 = testutil::s3();
  CHECK(table_of(strat::todd_coxeter(s3, {}, 1000)).index() == 6);
  CHECK(table_of(strat::todd_coxeter(s3, {Word::generator(0)}, 1000)).index() == 3);
  CHECK(table_of(strat::todd_coxeter(s3, {Word::generator(1)}, 1000)).index() == 2);
}

TEST_CASE("free group overflows") {
  TCResult r = strat::todd_coxeter(strat::free_group({"a", "b"}), {}, 10000);
  REQUIRE(std::holds_alternative<Overflow>(r));
  CHECK(std::get<Overflow>(r).cosets_allocated >= 10000);
}

TEST_CASE("quotient of S3 by a transposition is trivial") {
  auto q = strat::quotient_by_normal_closure(testutil::s3(), {Word::generator(0)});
  CHECK(table_of(strat::todd_coxeter(q, {}, 1000)).index() == 1);
}

TEST_CASE("a perfect-abelianization trivial group closes to one coset") {
  // b a b^-1 = a^2, a b a^-1 = b^2
  strat::GroupPresentation g(
      {"a", "b"},
      {testutil::w({2, 1, -2, -1, -1}), testutil::w({1, 2, -1, -2, -2})});
  CHECK(strat::abelianization(g).trivial());
  CHECK(table_of(strat::todd_coxeter(g, {}, 100000)).index() == 1);
}

TEST_CASE("cyclic groups and subgroups") {
  auto c6 = testutil::cyclic("a", 6);
  CHECK(table_of(strat::todd_coxeter(c6, {}, 100)).index() == 6);
  CHECK(table_of(strat::todd_coxeter(c6, {Word::generator(0).pow(2)}, 100)).index() == 2);
  CHECK(table_of(strat::todd_coxeter(c6, {Word::generator(0).pow(3)}, 100)).index() == 3);
}

TEST_CASE("trivial presentation has a one-coset table") {
  CHECK(table_of(strat::todd_coxeter(strat::trivial_group(), {}, 10)).index() == 1);
}

TEST_CASE("deterministic tables") {
  auto g = testutil::s3();
  auto a = strat::todd_coxeter(g, {}, 1000);
  auto b = strat::todd_coxeter(g, {}, 1000);
  CHECK(table_of(a).rows() == table_of(b).rows());
}

TEST_CASE("closed table is a permutation action respecting relators") {
  auto g = testutil::s3();
  const CosetTable& t = table_of(strat::todd_coxeter(g, {}, 1000));
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::vector<int> p = t.permutation(Word::generator(static_cast<int>(i)));
    std::vector<bool> hit(t.index(), false);
    for (int x : p) {
      REQUIRE(x >= 0);
      REQUIRE(static_cast<std::size_t>(x) < t.index());
      hit[static_cast<std::size_t>(x)] = true;
    }
    for (bool b : hit) CHECK(b);
  }
  for (const auto& r : g.relators) CHECK(t.word_acts_trivially(r));
}

TEST_CASE("coset representatives reach every coset from the base") {
  const CosetTable& t =
      table_of(strat::todd_coxeter(testutil::s3(), {}, 1000));
  auto reps = t.coset_representatives();
  REQUIRE(reps.size() == 6);
  CHECK(reps[0].empty());
  for (std::size_t i = 0; i < reps.size(); ++i)
    CHECK(t.apply_word(0, reps[i]) == static_cast<int>(i));
}

TEST_CASE("group_order helper") {
  CHECK(strat::group_order(testutil::s3(), 1000) == 6);
  CHECK(strat::group_order(strat::free_group({"a"}), 100) == std::nullopt);
}

TEST_CASE("Fibonacci group F(2,5) collapses to Z/11") {
  // ab = c, bc = d, cd = e, de = a, ea = b; heavy on coincidences
  strat::GroupPresentation f25(
      {"a", "b", "c", "d", "e"},
      {testutil::w({1, 2, -3}), testutil::w({2, 3, -4}),
       testutil::w({3, 4, -5}), testutil::w({4, 5, -1}),
       testutil::w({5, 1, -2})});
  CHECK(strat::group_order(f25, 10000) == 11);
  CHECK(strat::abelianization(f25).to_string() == "(11)");
}

TEST_CASE("PSL(2,7) from the (2,3,7;4) presentation under cap pressure") {
  strat::GroupPresentation psl(
      {"a", "b"},
      {Word::generator(0).pow(2), Word::generator(1).pow(3),
       (Word::generator(0) * Word::generator(1)).pow(7),
       (Word::generator(0).inverse() * Word::generator(1).inverse() *
        Word::generator(0) * Word::generator(1))
           .pow(4)});
  // once the table closes at some cap, every larger cap gives the same index
  bool closed_before = false;
  for (std::size_t cap : {200u, 400u, 800u, 3000u, 100000u}) {
    auto r = strat::todd_coxeter(psl, {}, cap);
    if (const auto* table = std::get_if<CosetTable>(&r)) {
      CHECK(table->index() == 168);
      closed_before = true;
    } else {
      CHECK_FALSE(closed_before);
    }
  }
  CHECK(closed_before);
}
