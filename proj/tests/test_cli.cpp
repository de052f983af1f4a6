#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI under the paths provided by ctest; stderr folded into stdout.
RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("STRAT_CLI");
  REQUIRE_MESSAGE(cli != nullptr,
                  "STRAT_CLI must point at the strat binary (set by ctest)");
  std::string command = std::string(cli) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 512> buffer;
  while (fgets(buffer.data(), buffer.size(), pipe)) r.output += buffer.data();
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  const char* dir = std::getenv("STRAT_DATA");
  REQUIRE_MESSAGE(dir != nullptr, "STRAT_DATA must point at the data directory");
  return std::string(dir) + "/" + name;
}

}  // namespace

TEST_CASE("cli: poset diagnostics") {
  auto star = run_cli("poset " + data("poset_star.json"));
  CHECK(star.exit_code == 0);
  CHECK(star.output.find("directed: true (irreducible model)") != std::string::npos);
  CHECK(star.output.find("w-local: false") != std::string::npos);

  auto chain = run_cli("poset " + data("poset_chain.json"));
  CHECK(chain.exit_code == 0);
  CHECK(chain.output.find("directed: true") != std::string::npos);
  CHECK(chain.output.find("codirected: true") != std::string::npos);
  CHECK(chain.output.find("w-local: true") != std::string::npos);

  auto crown = run_cli("poset " + data("poset_crown.json"));
  CHECK(crown.exit_code == 0);
  CHECK(crown.output.find("order-complex pi1: nontrivial") != std::string::npos);
}

TEST_CASE("cli: pi1") {
  auto dvr = run_cli("pi1 " + data("site_dvr.json"));
  CHECK(dvr.exit_code == 0);
  CHECK(dvr.output.find("pi1: trivial (order 1)") != std::string::npos);

  auto unram = run_cli("pi1 " + data("site_dvr_unramified.json"));
  CHECK(unram.exit_code == 0);
  CHECK(unram.output.find("order: 6") != std::string::npos);
}

TEST_CASE("cli: pi1 precondition failures exit 3") {
  // disconnected base: an antichain site
  std::string tmp = "/tmp/strat_antichain_site.json";
  FILE* f = fopen(tmp.c_str(), "w");
  REQUIRE(f);
  fputs(R"({"poset": {"elements": ["a","b"], "covers": []},
            "strata": {"a": {"generators": [], "relators": []},
                       "b": {"generators": [], "relators": []}},
            "maps": {}})",
        f);
  fclose(f);
  auto r = run_cli("pi1 " + tmp + " --basepoint a");
  CHECK(r.exit_code == 3);
}

TEST_CASE("cli: parse failures exit 2") {
  std::string tmp = "/tmp/strat_bad.json";
  FILE* f = fopen(tmp.c_str(), "w");
  REQUIRE(f);
  fputs("{not json", f);
  fclose(f);
  CHECK(run_cli("poset " + tmp).exit_code == 2);
  CHECK(run_cli("poset /nonexistent.json").exit_code == 2);
  CHECK(run_cli("cyclotomic --modulus 60 --primes 7").exit_code == 2);
  CHECK(run_cli("cyclotomic --modulus 2").exit_code == 2);
}

TEST_CASE("cli: group engine") {
  auto tc = run_cli("group tc " + data("group_s3.json"));
  CHECK(tc.exit_code == 0);
  CHECK(tc.output.find("index 6") != std::string::npos);

  auto coset = run_cli("group tc " + data("group_s3.json") + " --subgroup s");
  CHECK(coset.output.find("index 3") != std::string::npos);

  auto ab = run_cli("group abelianize " + data("group_free2.json"));
  CHECK(ab.exit_code == 0);
  CHECK(ab.output.find("(0, 0)") != std::string::npos);

  auto overflow =
      run_cli("group tc " + data("group_free2.json") + " --effort-cosets 5000");
  CHECK(overflow.exit_code == 4);

  auto hard = run_cli("group istrivial " + data("group_trivial_hard.json"));
  CHECK(hard.exit_code == 0);
  CHECK(hard.output.find("trivial") != std::string::npos);
}

TEST_CASE("cli: cat predicates") {
  auto bz2 = run_cli("cat " + data("cat_bz2.json"));
  CHECK(bz2.exit_code == 0);
  CHECK(bz2.output.find("terminal: none") != std::string::npos);
  CHECK(bz2.output.find("initial: none") != std::string::npos);
  CHECK(bz2.output.find("filtered: false") != std::string::npos);
  CHECK(bz2.output.find("weakly terminal: *") != std::string::npos);
}

TEST_CASE("cli: dedekind verify") {
  auto single = run_cli("dedekind verify " + data("model_s3.json"));
  CHECK(single.exit_code == 0);
  CHECK(single.output.find("match") != std::string::npos);

  auto batch = run_cli("dedekind verify --batch 10 --seed 42");
  CHECK(batch.exit_code == 0);
  CHECK(batch.output.find("10/10 matches") != std::string::npos);

  // incl sending the order-2 generator to an order-3 element
  std::string tmp = "/tmp/strat_bad_model.json";
  FILE* f = fopen(tmp.c_str(), "w");
  REQUIRE(f);
  fputs(R"({"G_K": {"generators": ["s","t"], "relators": ["s^2","t^3","(s*t)^2"]},
            "primes": [{"name": "p",
                        "D": {"generators": ["d"], "relators": ["d^2"]},
                        "incl": {"d": "t"},
                        "inertia": ["d"]}]})",
        f);
  fclose(f);
  auto bad = run_cli("dedekind verify " + tmp);
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("NotAHomomorphism") != std::string::npos);
}

TEST_CASE("cli: index check override") {
  // crown base with trivial strata: nerve is a circle
  std::string tmp = "/tmp/strat_crown_site.json";
  FILE* f = fopen(tmp.c_str(), "w");
  REQUIRE(f);
  fputs(R"({"poset": {"elements": ["a","b","x","y"],
                      "covers": [["a","x"],["a","y"],["b","x"],["b","y"]]},
            "strata": {"a": {"generators": [], "relators": []},
                       "b": {"generators": [], "relators": []},
                       "x": {"generators": [], "relators": []},
                       "y": {"generators": [], "relators": []},
                       "a<x": {"generators": [], "relators": []},
                       "a<y": {"generators": [], "relators": []},
                       "b<x": {"generators": [], "relators": []},
                       "b<y": {"generators": [], "relators": []}},
            "maps": {"a<x -> a": {}, "a<x -> x": {},
                     "a<y -> a": {}, "a<y -> y": {},
                     "b<x -> b": {}, "b<x -> x": {},
                     "b<y -> b": {}, "b<y -> y": {}}})",
        f);
  fclose(f);
  auto refused = run_cli("pi1 " + tmp + " --basepoint a");
  CHECK(refused.exit_code == 3);
  auto forced = run_cli("pi1 " + tmp + " --basepoint a --override-index-check");
  CHECK(forced.exit_code == 0);
  CHECK(forced.output.find("certificate: trivial") != std::string::npos);
}

TEST_CASE("cli: pi1 reports budget exhaustion with exit 4") {
  // a free stratum on a point: pi1 is infinite, the order cannot close
  std::string tmp = "/tmp/strat_free_site.json";
  FILE* f = fopen(tmp.c_str(), "w");
  REQUIRE(f);
  fputs(R"({"poset": {"elements": ["eta"], "covers": []},
            "strata": {"eta": {"generators": ["u","v"], "relators": []}},
            "maps": {}})",
        f);
  fclose(f);
  auto r = run_cli("pi1 " + tmp + " --effort-cosets 500");
  CHECK(r.exit_code == 4);
  CHECK(r.output.find("order: unknown") != std::string::npos);
}

TEST_CASE("cli: json output is byte-identical across runs") {
  std::string args = "pi1 " + data("site_dvr.json") + " --json";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"schema\": \"strat-pi1/1\"") != std::string::npos);

  auto batch_a = run_cli("dedekind verify --batch 5 --seed 3 --json");
  auto batch_b = run_cli("dedekind verify --batch 5 --seed 3 --json");
  CHECK(batch_a.output == batch_b.output);
}
