// Acceptance suite: one criterion per block, one pass/fail line each,
// nonzero exit if anything fails. Time limits are part of the criteria and
// are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "strat/arith.hpp"
#include "strat/cert.hpp"
#include "strat/fincat.hpp"
#include "strat/json_io.hpp"
#include "strat/sampler.hpp"
#include "strat/site.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int number;
  std::string label;
  double limit_seconds;
  std::function<bool(std::string&)> body;
};

strat::DedekindModel s3_model(std::vector<strat::Word> inertia) {
  strat::DedekindModel m;
  m.galois = testutil::s3();
  strat::PrimeData p;
  p.name = "p";
  p.decomposition = testutil::cyclic("d", 2);
  p.inclusion =
      strat::GroupHom(p.decomposition, m.galois, {strat::Word::generator(0)});
  p.inertia = std::move(inertia);
  m.primes.push_back(std::move(p));
  return m;
}

bool criterion1(std::string& detail) {
  using strat::Word;
  // ramified: both routes certified trivial with a one-coset table
  auto ramified = s3_model({Word::generator(0)});
  auto site = strat::build_site(ramified);
  auto pipeline = strat::classifying_pi1(site, "eta");
  auto expected = strat::expected_pi1(ramified);
  auto cert_a = strat::is_trivial(pipeline);
  auto cert_b = strat::is_trivial(expected);
  bool ramified_ok = cert_a.trivial() && cert_a.coset_index == 1 &&
                     cert_b.trivial() && cert_b.coset_index == 1;

  // unramified: both of order 6 with verified mutual homs
  auto unramified = s3_model({});
  auto report = strat::verify_formula(unramified);
  bool unramified_ok =
      report.outcome == strat::FormulaReport::Outcome::Match &&
      report.pipeline_order == 6 && report.expected_order == 6 &&
      report.mutual_homs_verified;

  detail = "ramified trivial: " + std::string(ramified_ok ? "yes" : "NO") +
           ", unramified order 6 with mutual homs: " +
           std::string(unramified_ok ? "yes" : "NO");
  return ramified_ok && unramified_ok;
}

bool criterion2(std::string& detail) {
  auto outcomes = strat::dedekind_batch(42, 50, {});
  std::size_t matches = 0;
  for (const auto& o : outcomes) matches += o.match_with_oracle;
  detail = std::to_string(matches) + "/50 instances match the " +
           "conjugation-closure oracle";
  return matches == 50;
}

bool criterion3(std::string& detail) {
  strat::Rng rng(271828);
  for (int trial = 0; trial < 20; ++trial) {
    strat::SampledDedekind instance = strat::sample_dedekind(rng);
    auto base = strat::expected_pi1(instance.model);
    auto base_order = strat::group_order(base, 100000);
    auto base_ab = strat::abelianization(base);

    strat::CayleyWords cayley =
        strat::cayley_words(instance.realization->generator_perms);
    strat::Word c = cayley.words[rng.below(cayley.words.size())];
    auto conjugated = strat::expected_pi1(
        strat::conjugate_inertia(instance.model, c));
    if (strat::group_order(conjugated, 100000) != base_order ||
        strat::abelianization(conjugated) != base_ab) {
      detail = "conjugation changed the quotient at trial " +
               std::to_string(trial);
      return false;
    }
  }
  detail = "20/20 instances invariant under conjugated inertia data";
  return true;
}

bool criterion4(std::string& detail) {
  std::size_t checks = 0;
  for (std::uint64_t m = 3; m <= 200; ++m) {
    auto report = strat::cyclotomic_consistency(m);
    checks += report.checks.size();
    if (!report.all_consistent) {
      detail = "inconsistency at modulus " + std::to_string(m);
      return false;
    }
  }
  detail = std::to_string(checks) + " (modulus, subset) pairs consistent";
  return true;
}

bool criterion5(std::string& detail) {
  strat::Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    strat::FinitePoset p = strat::random_poset(rng, 8);
    if (strat::is_directed(p) != (strat::maximal_elements(p).size() == 1) ||
        strat::is_codirected(p) != (strat::minimal_elements(p).size() == 1)) {
      detail = "law fails at trial " + std::to_string(trial);
      return false;
    }
  }
  detail = "500/500 posets satisfy both equivalences";
  return true;
}

bool criterion6(std::string& detail) {
  strat::Rng rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    strat::FinitePoset p = strat::random_poset(rng, 6);
    strat::FinitePoset sub = strat::subdivision(p);
    if (strat::connected_components(sub).size() !=
        strat::connected_components(p).size()) {
      detail = "pi0 mismatch at trial " + std::to_string(trial);
      return false;
    }
    auto h1_p = testutil::h1_by_component(p);
    auto h1_sub = testutil::h1_by_component(sub);
    if (h1_p != h1_sub) {
      detail = "H1 mismatch at trial " + std::to_string(trial);
      return false;
    }
  }
  detail = "300/300 posets keep pi0 and H1 under subdivision";
  return true;
}

bool criterion7(std::string& detail) {
  auto table = strat::todd_coxeter(testutil::cyclic("a", 2), {}, 100);
  strat::FiniteCategory bz2 =
      strat::delooping(std::get<strat::CosetTable>(table));
  bool bz2_ok = !strat::has_terminal(bz2) && !strat::has_initial(bz2) &&
                !strat::is_filtered(bz2) && !strat::is_cofiltered(bz2) &&
                strat::weakly_terminal(bz2) == std::vector<std::string>{"*"} &&
                strat::weakly_initial(bz2) == std::vector<std::string>{"*"};

  strat::FinitePoset star({"p1", "p2", "eta"}, {{"p1", "eta"}, {"p2", "eta"}});
  bool star_ok =
      strat::has_terminal(strat::poset_as_category(star)) == "eta";

  strat::Rng rng(7);
  int counterexamples = 0;
  for (int trial = 0; trial < 200; ++trial) {
    strat::FiniteCategory c = strat::random_category(rng, 4);
    counterexamples += strat::rigidity_check(c).counterexample;
  }
  detail = "BZ/2 predicates: " + std::string(bz2_ok ? "ok" : "NO") +
           ", poset-with-maximum terminal: " + (star_ok ? "ok" : "NO") +
           ", rigidity counterexamples: " + std::to_string(counterexamples) +
           "/200";
  return bz2_ok && star_ok && counterexamples == 0;
}

bool criterion8(std::string& detail) {
  strat::Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    strat::GroupDiagram d = strat::random_group_diagram(rng, 4, 3);
    if (strat::abelianization(strat::colimit(d)) !=
        testutil::abelianized_pushout(d)) {
      detail = "colimit abelianization mismatch at diagram " +
               std::to_string(trial);
      return false;
    }
  }

  auto s3 = testutil::s3();
  bool tc_ok =
      strat::group_order(s3, 1000) == 6 &&
      std::holds_alternative<strat::CosetTable>(
          strat::todd_coxeter(s3, {strat::Word::generator(0)}, 1000)) &&
      std::get<strat::CosetTable>(
          strat::todd_coxeter(s3, {strat::Word::generator(0)}, 1000))
              .index() == 3 &&
      std::holds_alternative<strat::Overflow>(
          strat::todd_coxeter(strat::free_group({"a", "b"}), {}, 10000));

  strat::GroupPresentation hard(
      {"a", "b"},
      {testutil::w({2, 1, -2, -1, -1}), testutil::w({1, 2, -1, -2, -2})});
  auto cert = strat::is_trivial(hard);
  bool hard_ok = cert.trivial() && cert.coset_index == 1;

  detail = std::string("100/100 pushout-oracle matches, |S3| and [S3:<s>] ") +
           (tc_ok ? "ok" : "NO") + ", hard trivial presentation " +
           (hard_ok ? "certified" : "NOT certified");
  return tc_ok && hard_ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Dedekind formula, single prime (S3; I = <s> and I = 1)", 1.0,
       criterion1},
      {2, "Dedekind formula, randomized (50 instances vs permutation oracle)",
       60.0, criterion2},
      {3, "conjugation invariance of expected_pi1 (20 instances)", 60.0,
       criterion3},
      {4, "cyclotomic consistency for all m <= 200 and all subsets", 10.0,
       criterion4},
      {5, "poset laws on 500 random posets (<= 8 elements)", 5.0, criterion5},
      {6, "subdivision keeps pi0 and H1 (300 random posets, <= 6 elements)",
       30.0, criterion6},
      {7, "finite-category predicates and rigidity (200 samples)", 10.0,
       criterion7},
      {8, "group-engine oracles (pushout, Todd-Coxeter, hard trivial)", 30.0,
       criterion8},
  };

  int failures = 0;
  for (auto& criterion : criteria) {
    std::string detail;
    auto start = Clock::now();
    bool ok = false;
    try {
      ok = criterion.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    bool in_time = seconds <= criterion.limit_seconds;
    bool pass = ok && in_time;
    failures += !pass;
    std::printf("[%s] criterion %d: %s — %s (%.2fs%s)\n",
                pass ? "PASS" : "FAIL", criterion.number,
                criterion.label.c_str(), detail.c_str(), seconds,
                in_time ? "" : ", over time limit");
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
