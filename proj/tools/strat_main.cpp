// Command-line front end: poset diagnostics, classifying-space invariants,
// Dedekind-formula verification, cyclotomic quotients, category predicates
// and the group engine, all over the JSON formats of the library.
//
// Exit codes: 0 success, 2 input error, 3 precondition violation, 4 budget
// exhausted / inconclusive, 5 internal mismatch (a theorem-violation report,
// which should never occur).

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>

#include "strat/arith.hpp"
#include "strat/cert.hpp"
#include "strat/errors.hpp"
#include "strat/fincat.hpp"
#include "strat/json_io.hpp"
#include "strat/poset.hpp"
#include "strat/sampler.hpp"
#include "strat/site.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBudget = 4;
constexpr int kExitMismatch = 5;

constexpr const char* kSchema = "strat-pi1/1";

struct Options {
  strat::Effort effort;
  bool json = false;
  std::uint64_t seed = 12345;
  bool override_index_check = false;
};

void emit(const Options& opt, const strat::Json& body,
          const std::string& text) {
  if (opt.json) {
    strat::Json out;
    out["schema"] = kSchema;
    out.update(body);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string verdict_name(const strat::TrivialityCertificate& cert) {
  using V = strat::TrivialityCertificate::Verdict;
  switch (cert.verdict) {
    case V::Trivial:
      return "trivial";
    case V::NonTrivial:
      return "nontrivial";
    default:
      return "unknown";
  }
}

int cmd_poset(const Options& opt, const std::string& file) {
  strat::FinitePoset p = strat::poset_from_json(strat::load_json_file(file));

  auto maxima = strat::maximal_elements(p);
  auto minima = strat::minimal_elements(p);
  auto components = strat::connected_components(p);
  bool directed = !p.empty() && strat::is_directed(p);
  bool codirected = !p.empty() && strat::is_codirected(p);
  bool wlocal = strat::is_w_local(p);
  strat::FinitePoset sub = strat::subdivision(p);

  // pi1 certificate of the order complex, one component at a time.
  std::vector<strat::TrivialityCertificate> certs;
  bool all_trivial = true;
  for (const auto& component : components) {
    std::vector<std::string> keep(component.begin(), component.end());
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& [a, b] : p.covers()) {
      const std::string& lo = p.elements()[static_cast<std::size_t>(a)];
      const std::string& hi = p.elements()[static_cast<std::size_t>(b)];
      if (std::find(keep.begin(), keep.end(), lo) != keep.end() &&
          std::find(keep.begin(), keep.end(), hi) != keep.end())
        covers.emplace_back(lo, hi);
    }
    strat::FinitePoset restricted(keep, covers);
    strat::GroupPresentation pi1 = strat::edge_path_group(
        strat::order_complex(restricted), keep.front());
    certs.push_back(strat::is_trivial(pi1, opt.effort));
    all_trivial &= certs.back().trivial();
  }

  std::ostringstream text;
  text << "elements: " << p.size() << "\n";
  text << "maximal: ";
  for (const auto& m : maxima) text << m << " ";
  text << "\nminimal: ";
  for (const auto& m : minima) text << m << " ";
  text << "\ndirected: " << (directed ? "true" : "false")
       << (directed ? " (irreducible model)" : "") << "\n";
  text << "codirected: " << (codirected ? "true" : "false")
       << (codirected ? " (local model)" : "") << "\n";
  text << "w-local: " << (wlocal ? "true" : "false") << "\n";
  text << "components: " << components.size() << "\n";
  text << "subdivision size: " << sub.size() << "\n";
  text << "order-complex pi1: "
       << (certs.empty()
               ? "trivial"
               : (all_trivial ? "trivial"
                              : verdict_name(*std::find_if(
                                    certs.begin(), certs.end(),
                                    [](const auto& c) { return !c.trivial(); }))))
       << " (per component:";
  for (const auto& c : certs) text << " " << verdict_name(c);
  text << ")\n";

  strat::Json body;
  body["command"] = "poset";
  body["poset"] = strat::poset_to_json(p);
  body["maximal"] = maxima;
  body["minimal"] = minima;
  body["directed"] = directed;
  body["irreducible_model"] = directed;
  body["codirected"] = codirected;
  body["local_model"] = codirected;
  body["w_local"] = wlocal;
  body["components"] = components.size();
  body["subdivision_size"] = sub.size();
  strat::Json cert_list = strat::Json::array();
  for (const auto& c : certs) cert_list.push_back(strat::certificate_to_json(c));
  body["order_complex_pi1"] = cert_list;
  emit(opt, body, text.str());
  return kExitOk;
}

int cmd_pi1(const Options& opt, const std::string& file,
            const std::string& basepoint_flag) {
  strat::StratifiedSite site =
      strat::site_from_json(strat::load_json_file(file));

  std::string basepoint = basepoint_flag;
  if (basepoint.empty()) {
    auto top = strat::unique_maximum(site.base);
    if (!top)
      throw strat::PreconditionError(
          "base has no unique maximum; pass --basepoint");
    basepoint = *top;
  }

  strat::SiteValidation validation = strat::validate_site(site, opt.effort);
  if (!validation.accepted()) {
    std::string detail;
    for (const auto& f : validation.findings)
      if (f.hard) detail += (detail.empty() ? "" : "; ") + f.detail;
    throw strat::ValidationError("site validation failed: " + detail);
  }

  strat::GroupPresentation pi1 = strat::classifying_pi1(
      site, basepoint, opt.effort, opt.override_index_check);
  strat::AbelianInvariants ab = strat::abelianization(pi1);
  strat::TrivialityCertificate cert = strat::is_trivial(pi1, opt.effort);
  auto order = strat::group_order(pi1, opt.effort.max_cosets);

  std::ostringstream text;
  text << "pi1: " << pi1.to_string() << "\n";
  text << "abelianization: " << ab.to_string() << "\n";
  text << "certificate: " << verdict_name(cert) << " (" << cert.note << ")\n";
  if (order)
    text << "order: " << *order << "\n";
  else
    text << "order: unknown (coset budget exhausted)\n";
  if (cert.trivial() && order && *order == 1) text << "pi1: trivial (order 1)\n";

  strat::Json body;
  body["command"] = "pi1";
  body["basepoint"] = basepoint;
  body["warnings"] = validation.warnings();
  body["presentation"] = strat::group_to_json(pi1);
  body["abelianization"] = strat::invariants_to_json(ab);
  body["certificate"] = strat::certificate_to_json(cert);
  if (order)
    body["order"] = *order;
  else
    body["order"] = nullptr;
  emit(opt, body, text.str());
  return order ? kExitOk : kExitBudget;
}

int cmd_dedekind_verify(const Options& opt, const std::string& file,
                        std::size_t batch) {
  strat::Json body;
  body["command"] = "dedekind-verify";
  std::ostringstream text;
  bool any_mismatch = false;
  bool any_inconclusive = false;

  if (batch > 0) {
    std::vector<strat::BatchOutcome> outcomes =
        strat::dedekind_batch(opt.seed, batch, opt.effort);
    strat::Json list = strat::Json::array();
    std::size_t matches = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const auto& o = outcomes[i];
      bool match = o.match_with_oracle;
      matches += match;
      any_mismatch |= o.report.outcome == strat::FormulaReport::Outcome::Mismatch ||
                      (o.report.outcome == strat::FormulaReport::Outcome::Match &&
                       !match);
      any_inconclusive |=
          o.report.outcome == strat::FormulaReport::Outcome::Inconclusive;
      strat::Json item;
      item["instance"] = i;
      item["seed"] = o.instance_seed;
      item["group"] = o.group_name;
      item["oracle_order"] = o.oracle_order;
      item["outcome"] = match ? "match"
                              : (o.report.outcome ==
                                         strat::FormulaReport::Outcome::Inconclusive
                                     ? "inconclusive"
                                     : "mismatch");
      item["detail"] = o.report.detail;
      if (o.report.pipeline_order) item["order"] = *o.report.pipeline_order;
      list.push_back(item);
      text << "instance " << i << " [" << o.group_name << "]: "
           << (match ? "match" : "MISMATCH/inconclusive") << " ("
           << o.report.detail << ")\n";
    }
    body["instances"] = list;
    body["matches"] = matches;
    body["total"] = outcomes.size();
    text << matches << "/" << outcomes.size() << " matches\n";
  } else {
    strat::DedekindModel model =
        strat::model_from_json(strat::load_json_file(file));
    strat::FormulaReport report = strat::verify_formula(model, opt.effort);
    any_mismatch = report.outcome == strat::FormulaReport::Outcome::Mismatch;
    any_inconclusive =
        report.outcome == strat::FormulaReport::Outcome::Inconclusive;
    body["outcome"] = any_mismatch        ? "mismatch"
                      : any_inconclusive ? "inconclusive"
                                         : "match";
    body["detail"] = report.detail;
    if (report.pipeline_order) body["pipeline_order"] = *report.pipeline_order;
    if (report.expected_order) body["expected_order"] = *report.expected_order;
    body["mutual_homs_verified"] = report.mutual_homs_verified;
    text << "outcome: " << body["outcome"].get<std::string>() << "\n";
    text << "detail: " << report.detail << "\n";
  }

  emit(opt, body, text.str());
  if (any_mismatch) return kExitMismatch;
  if (any_inconclusive) return kExitBudget;
  return kExitOk;
}

int cmd_cyclotomic(const Options& opt, std::uint64_t modulus,
                   const std::string& primes_csv) {
  std::vector<std::uint64_t> primes;
  if (!primes_csv.empty()) {
    std::stringstream ss(primes_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        primes.push_back(std::stoull(tok));
      } catch (const std::exception&) {
        throw strat::ValidationError("bad prime list entry: " + tok);
      }
    }
  }

  strat::AbelianInvariants quotient =
      strat::cyclotomic_quotient(modulus, primes);
  std::uint64_t residual = modulus;
  for (const auto& [p, a] : strat::factorize(modulus))
    if (std::find(primes.begin(), primes.end(), p) != primes.end())
      for (int i = 0; i < a; ++i) residual /= p;

  // The unit-enumeration oracle is linear in the residual modulus.
  constexpr std::uint64_t kOracleCap = 2000000;
  bool oracle_ran = residual <= kOracleCap;
  strat::AbelianInvariants oracle;
  if (oracle_ran) oracle = strat::unit_group_invariants_bruteforce(residual);
  bool consistent = !oracle_ran || quotient == oracle;

  std::ostringstream text;
  text << quotient.to_string() << "  [= (Z/" << residual << ")^x: "
       << (oracle_ran ? (consistent ? "consistent" : "INCONSISTENT")
                      : "oracle skipped, residual too large")
       << "]\n";

  strat::Json body;
  body["command"] = "cyclotomic";
  body["modulus"] = modulus;
  body["ramified"] = primes;
  body["quotient"] = strat::invariants_to_json(quotient);
  body["residual_modulus"] = residual;
  body["oracle"] =
      oracle_ran ? strat::invariants_to_json(oracle) : strat::Json(nullptr);
  body["consistent"] = oracle_ran ? strat::Json(consistent) : strat::Json(nullptr);
  emit(opt, body, text.str());
  return consistent ? kExitOk : kExitMismatch;
}

int cmd_cat(const Options& opt, const std::string& file) {
  strat::FiniteCategory c =
      strat::category_from_json(strat::load_json_file(file));
  auto terminal = strat::has_terminal(c);
  auto initial = strat::has_initial(c);
  auto wt = strat::weakly_terminal(c);
  auto wi = strat::weakly_initial(c);
  bool filtered = strat::is_filtered(c);
  bool cofiltered = strat::is_cofiltered(c);
  strat::RigidityReport rigidity = strat::rigidity_check(c);

  std::ostringstream text;
  text << "objects: " << c.object_count()
       << ", morphisms: " << c.morphism_count() << "\n";
  text << "terminal: " << (terminal ? *terminal : "none") << "\n";
  text << "initial: " << (initial ? *initial : "none") << "\n";
  text << "weakly terminal: ";
  for (const auto& o : wt) text << o << " ";
  if (wt.empty()) text << "none";
  text << "\nweakly initial: ";
  for (const auto& o : wi) text << o << " ";
  if (wi.empty()) text << "none";
  text << "\nfiltered: " << (filtered ? "true" : "false") << "\n";
  text << "cofiltered: " << (cofiltered ? "true" : "false") << "\n";
  text << "rigidity: hypothesis "
       << (rigidity.hypothesis_holds ? "holds" : "fails")
       << (rigidity.hypothesis_holds
               ? (rigidity.counterexample ? ", COUNTEREXAMPLE"
                                          : ", conclusion holds")
               : " (vacuous pass)")
       << "\n";

  strat::Json body;
  body["command"] = "cat";
  body["objects"] = c.object_count();
  body["morphisms"] = c.morphism_count();
  body["terminal"] = terminal ? strat::Json(*terminal) : strat::Json(nullptr);
  body["initial"] = initial ? strat::Json(*initial) : strat::Json(nullptr);
  body["weakly_terminal"] = wt;
  body["weakly_initial"] = wi;
  body["filtered"] = filtered;
  body["cofiltered"] = cofiltered;
  strat::Json rig;
  rig["hypothesis"] = rigidity.hypothesis_holds;
  rig["witness"] =
      rigidity.witness ? strat::Json(*rigidity.witness) : strat::Json(nullptr);
  rig["conclusion"] = rigidity.conclusion_holds;
  rig["counterexample"] = rigidity.counterexample;
  body["rigidity"] = rig;
  emit(opt, body, text.str());
  return rigidity.counterexample ? kExitMismatch : kExitOk;
}

int cmd_group(const Options& opt, const std::string& action,
              const std::string& file, const std::string& subgroup_csv) {
  strat::GroupPresentation g =
      strat::group_from_json(strat::load_json_file(file));
  std::ostringstream text;
  strat::Json body;
  body["command"] = "group-" + action;
  body["input"] = strat::group_to_json(g);
  int exit_code = kExitOk;

  if (action == "abelianize") {
    strat::AbelianInvariants ab = strat::abelianization(g);
    text << ab.to_string() << "\n";
    body["abelianization"] = strat::invariants_to_json(ab);
  } else if (action == "simplify") {
    strat::GroupPresentation s =
        strat::tietze_simplify(g, opt.effort.tietze_passes);
    text << s.to_string() << "\n";
    body["simplified"] = strat::group_to_json(s);
  } else if (action == "tc") {
    std::vector<strat::Word> subgroup;
    if (!subgroup_csv.empty()) {
      std::stringstream ss(subgroup_csv);
      std::string tok;
      while (std::getline(ss, tok, ','))
        subgroup.push_back(strat::parse_word(tok, g.generators));
    }
    strat::TCResult r =
        strat::todd_coxeter(g, subgroup, opt.effort.max_cosets);
    if (const auto* table = std::get_if<strat::CosetTable>(&r)) {
      text << "index " << table->index() << " (cosets defined: "
           << table->total_defined() << ")\n";
      body["index"] = table->index();
      body["cosets_defined"] = table->total_defined();
    } else {
      const auto& overflow = std::get<strat::Overflow>(r);
      text << "overflow after " << overflow.cosets_allocated
           << " cosets (budget " << opt.effort.max_cosets << ")\n";
      body["index"] = nullptr;
      body["cosets_defined"] = overflow.cosets_allocated;
      exit_code = kExitBudget;
    }
  } else if (action == "istrivial") {
    strat::TrivialityCertificate cert = strat::is_trivial(g, opt.effort);
    text << verdict_name(cert) << " (" << cert.note << ")\n";
    body["certificate"] = strat::certificate_to_json(cert);
    if (cert.verdict == strat::TrivialityCertificate::Verdict::Unknown)
      exit_code = kExitBudget;
  } else {
    throw strat::ValidationError("unknown group action: " + action);
  }
  emit(opt, body, text.str());
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fundamental groups of stratified models: posets, decollages, "
               "group colimits and finite-level arithmetic checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--effort-cosets", opt.effort.max_cosets,
                 "coset enumeration budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--effort-degree", opt.effort.max_degree,
                 "max degree for permutation witness search")
      ->check(CLI::PositiveNumber);
  app.add_option("--tietze-passes", opt.effort.tietze_passes,
                 "simplification passes")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for randomized commands");
  app.add_flag("--override-index-check", opt.override_index_check,
               "compute the colimit even without a simple-connectivity "
               "certificate for the index");

  std::string file, basepoint, primes_csv, subgroup_csv, group_action;
  std::uint64_t modulus = 0;
  std::size_t batch = 0;

  CLI::App* poset = app.add_subcommand("poset", "poset diagnostics");
  poset->add_option("file", file, "poset JSON")->required();

  CLI::App* pi1 = app.add_subcommand("pi1", "classifying-space pi1 of a site");
  pi1->add_option("file", file, "site JSON")->required();
  pi1->add_option("--basepoint", basepoint, "basepoint element of the base");

  CLI::App* dedekind = app.add_subcommand("dedekind", "Dedekind-domain models");
  CLI::App* verify = dedekind->add_subcommand(
      "verify", "check the quotient formula on a model or a sampled batch");
  verify->add_option("file", file, "model JSON");
  verify->add_option("--batch", batch, "number of sampled instances");

  CLI::App* cyclotomic =
      app.add_subcommand("cyclotomic", "finite-level cyclotomic quotients");
  cyclotomic->add_option("--modulus", modulus, "cyclotomic level (>= 3)")
      ->required();
  cyclotomic->add_option("--primes", primes_csv,
                         "comma-separated ramified primes");

  CLI::App* cat = app.add_subcommand("cat", "finite category predicates");
  cat->add_option("file", file, "category JSON")->required();

  CLI::App* group = app.add_subcommand("group", "group engine");
  group->add_option("action", group_action, "abelianize|simplify|tc|istrivial")
      ->required();
  group->add_option("file", file, "group JSON")->required();
  group->add_option("--subgroup", subgroup_csv,
                    "comma-separated subgroup generator words (tc)");

  for (CLI::App* sub : {poset, pi1, dedekind, verify, cyclotomic, cat, group})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (poset->parsed()) return cmd_poset(opt, file);
    if (pi1->parsed()) return cmd_pi1(opt, file, basepoint);
    if (dedekind->parsed()) {
      if (!verify->parsed()) {
        std::cerr << "dedekind requires the verify subcommand\n";
        return kExitInput;
      }
      if (batch == 0 && file.empty()) {
        std::cerr << "dedekind verify needs a model file or --batch N\n";
        return kExitInput;
      }
      return cmd_dedekind_verify(opt, file, batch);
    }
    if (cyclotomic->parsed()) return cmd_cyclotomic(opt, modulus, primes_csv);
    if (cat->parsed()) return cmd_cat(opt, file);
    if (group->parsed()) return cmd_group(opt, group_action, file, subgroup_csv);
  } catch (const strat::BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const strat::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const strat::ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const strat::IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitInput;
}
