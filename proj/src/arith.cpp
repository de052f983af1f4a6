#include "strat/arith.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "strat/errors.hpp"

namespace strat {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 pow_u64(u64 base, int exp) {
  u64 r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

u64 totient_of_factorization(const std::vector<std::pair<u64, int>>& fs) {
  u64 t = 1;
  for (const auto& [p, a] : fs) t *= pow_u64(p, a - 1) * (p - 1);
  return t;
}

// Smallest primitive root mod p^a for odd p.
u64 primitive_root(u64 p, int a) {
  std::vector<std::pair<u64, int>> fs = factorize(p - 1);
  u64 g = 0;
  for (u64 cand = 2; cand < p; ++cand) {
    bool primitive = true;
    for (const auto& [q, e] : fs)
      if (powmod(cand, (p - 1) / q, p) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      g = cand;
      break;
    }
  }
  if (a == 1) return g;
  // g stays primitive mod p^a unless g^(p-1) = 1 mod p^2; then g + p works.
  if (powmod(g, p - 1, p * p) == 1) g += p;
  return g;
}

// x = r mod q, x = 1 mod c (q, c coprime), via the extended Euclid identity.
u64 crt_lift(u64 r, u64 q, u64 c) {
  if (c == 1) return r % q;
  long long s = 0, old_s = 1, t = 1, old_t = 0;
  long long a = static_cast<long long>(q), b = static_cast<long long>(c);
  while (b != 0) {
    long long quot = a / b;
    std::tie(a, b) = std::make_pair(b, a - quot * b);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - quot * t);
  }
  // old_s * q + old_t * c = 1
  u64 m = q * c;
  auto norm = [&](long long v) {
    long long w = v % static_cast<long long>(m);
    if (w < 0) w += static_cast<long long>(m);
    return static_cast<u64>(w);
  };
  u64 e_c = norm(old_s) ;          // = old_s * q mod m: 1 mod c, 0 mod q
  e_c = mulmod(e_c, q, m);
  u64 e_q = norm(old_t);           // = old_t * c mod m: 1 mod q, 0 mod c
  e_q = mulmod(e_q, c, m);
  return (mulmod(r % m, e_q, m) + e_c) % m;
}

}  // namespace

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.emplace_back(p, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

void check_model(const DedekindModel& m) {
  std::set<std::string> names;
  for (const auto& p : m.primes) {
    if (p.name.empty()) throw ValidationError("prime with empty name");
    if (p.name == "eta")
      throw ValidationError("prime name 'eta' collides with the generic point");
    if (p.name.find('<') != std::string::npos)
      throw ValidationError("prime name may not contain '<': " + p.name);
    if (!names.insert(p.name).second)
      throw ValidationError("duplicate prime name: " + p.name);
    if (p.inclusion.source != p.decomposition || p.inclusion.target != m.galois)
      throw ValidationError("inclusion at prime " + p.name +
                            " does not run D_p -> G_K");
    for (const auto& w : p.inertia)
      if (w.max_index() >= static_cast<int>(p.decomposition.rank()))
        throw ValidationError("inertia word at prime " + p.name +
                              " uses an unknown generator");
  }
}

StratifiedSite build_site(const DedekindModel& m) {
  check_model(m);

  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& p : m.primes) {
    elements.push_back(p.name);
    covers.emplace_back(p.name, "eta");
  }
  elements.push_back("eta");
  FinitePoset base(std::move(elements), std::move(covers));

  std::map<std::string, GroupPresentation> strata;
  std::map<std::pair<std::string, std::string>, GroupHom> maps;
  strata.emplace("eta", m.galois);
  for (const auto& p : m.primes) {
    GroupPresentation residue =
        quotient_by_normal_closure(p.decomposition, p.inertia);
    strata.emplace(p.name, residue);
    strata.emplace(p.name + "<eta", p.decomposition);

    std::vector<Word> identity_images;
    for (std::size_t g = 0; g < p.decomposition.rank(); ++g)
      identity_images.push_back(Word::generator(static_cast<int>(g)));
    GroupHom quotient_map(p.decomposition, residue, std::move(identity_images));
    quotient_map.status = GroupHom::Status::Verified;  // relators map to relators
    maps.emplace(std::make_pair(p.name + "<eta", p.name), std::move(quotient_map));
    maps.emplace(std::make_pair(p.name + "<eta", std::string("eta")), p.inclusion);
  }
  return site_from_diagram(base, std::move(strata), std::move(maps));
}

GroupPresentation expected_pi1(const DedekindModel& m) {
  check_model(m);
  std::vector<Word> images;
  for (const auto& p : m.primes)
    for (const auto& w : p.inertia) images.push_back(p.inclusion.apply(w));
  return quotient_by_normal_closure(m.galois, images);
}

DedekindModel conjugate_inertia(const DedekindModel& m, const Word& c) {
  if (c.max_index() >= static_cast<int>(m.galois.rank()))
    throw ValidationError("conjugating word uses an unknown generator of G_K");
  DedekindModel out = m;
  for (auto& p : out.primes) {
    std::vector<Word> conjugated;
    for (const auto& img : p.inclusion.images)
      conjugated.push_back(c * img * c.inverse());
    p.inclusion = GroupHom(p.decomposition, m.galois, std::move(conjugated));
  }
  return out;
}

namespace {

// Canonical map out of the colimit: eta-stratum generators to themselves,
// every decomposition-group generator (at p and at p<eta) to its inclusion
// image. Returns images keyed by colimit generator name.
std::unordered_map<std::string, Word> colimit_generator_images(
    const DedekindModel& m) {
  std::unordered_map<std::string, Word> images;
  for (std::size_t g = 0; g < m.galois.rank(); ++g)
    images[m.galois.generators[g]] = Word::generator(static_cast<int>(g));
  for (const auto& p : m.primes) {
    const GroupPresentation& d = p.decomposition;
    for (std::size_t g = 0; g < d.rank(); ++g) {
      images[d.generators[g] + "@" + p.name] = p.inclusion.images[g];
      images[d.generators[g] + "@" + p.name + "<eta"] = p.inclusion.images[g];
    }
  }
  return images;
}

}  // namespace

FormulaReport verify_formula(const DedekindModel& m, const Effort& effort) {
  FormulaReport report;
  StratifiedSite site = build_site(m);

  SiteValidation validation = validate_site(site, effort);
  if (!validation.accepted()) {
    std::string detail;
    for (const auto& f : validation.findings)
      if (f.hard) detail += (detail.empty() ? "" : "; ") + f.detail;
    throw ValidationError("site validation failed: " + detail);
  }

  GroupPresentation simplified;
  GroupPresentation raw;
  try {
    simplified = classifying_pi1(site, "eta", effort);
    Effort no_tietze = effort;
    no_tietze.tietze_passes = 0;
    raw = classifying_pi1(site, "eta", no_tietze);
  } catch (const BudgetError& e) {
    report.outcome = FormulaReport::Outcome::Inconclusive;
    report.detail = e.what();
    return report;
  }
  GroupPresentation expected = expected_pi1(m);

  report.pipeline_order = group_order(simplified, effort.max_cosets);
  report.expected_order = group_order(expected, effort.max_cosets);
  if (!report.pipeline_order || !report.expected_order) {
    report.outcome = FormulaReport::Outcome::Inconclusive;
    report.detail = "coset enumeration did not complete within budget";
    return report;
  }
  if (*report.pipeline_order != *report.expected_order) {
    report.outcome = FormulaReport::Outcome::Mismatch;
    report.detail = "orders differ: pipeline " +
                    std::to_string(*report.pipeline_order) + ", expected " +
                    std::to_string(*report.expected_order);
    return report;
  }

  // Canonical homs both ways, on the raw colimit presentation (the
  // simplified one presents the same group but may have dropped names).
  std::vector<Word> into_colimit;
  bool names_found = true;
  for (const auto& name : expected.generators) {
    int idx = raw.generator_index(name);
    if (idx < 0) {
      names_found = false;
      break;
    }
    into_colimit.push_back(Word::generator(idx));
  }
  std::unordered_map<std::string, Word> out_images =
      colimit_generator_images(m);
  std::vector<Word> out_of_colimit;
  for (const auto& name : raw.generators) {
    auto it = out_images.find(name);
    if (it == out_images.end()) {
      names_found = false;
      break;
    }
    out_of_colimit.push_back(it->second);
  }
  if (!names_found) {
    report.outcome = FormulaReport::Outcome::Mismatch;
    report.detail = "canonical generator correspondence broke down";
    return report;
  }

  GroupHom to_pipeline(expected, raw, into_colimit);
  GroupHom to_expected(raw, expected, out_of_colimit);
  try {
    to_pipeline = verify_hom(to_pipeline, effort);
    to_expected = verify_hom(to_expected, effort);
  } catch (const NotAHomomorphismError& e) {
    report.outcome = FormulaReport::Outcome::Mismatch;
    report.detail = std::string("canonical map is not a homomorphism: ") +
                    e.what();
    return report;
  }
  if (!to_pipeline.verified() || !to_expected.verified()) {
    report.outcome = FormulaReport::Outcome::Inconclusive;
    report.detail = "hom verification exceeded the coset budget";
    return report;
  }

  // Composites act as the identity on generators in the faithful
  // permutation representations of both sides.
  TCResult raw_tc = todd_coxeter(raw, {}, effort.max_cosets);
  TCResult exp_tc = todd_coxeter(expected, {}, effort.max_cosets);
  const auto* raw_table = std::get_if<CosetTable>(&raw_tc);
  const auto* exp_table = std::get_if<CosetTable>(&exp_tc);
  if (!raw_table || !exp_table) {
    report.outcome = FormulaReport::Outcome::Inconclusive;
    report.detail = "composite check exceeded the coset budget";
    return report;
  }
  for (std::size_t g = 0; g < expected.rank(); ++g) {
    Word round_trip = to_expected.apply(to_pipeline.images[g]);
    Word difference = round_trip * Word::generator(static_cast<int>(g)).inverse();
    if (!exp_table->word_acts_trivially(difference)) {
      report.outcome = FormulaReport::Outcome::Mismatch;
      report.detail = "composite is not the identity on generator " +
                      expected.generators[g];
      return report;
    }
  }
  for (std::size_t g = 0; g < raw.rank(); ++g) {
    Word round_trip = to_pipeline.apply(to_expected.images[g]);
    Word difference = round_trip * Word::generator(static_cast<int>(g)).inverse();
    if (!raw_table->word_acts_trivially(difference)) {
      report.outcome = FormulaReport::Outcome::Mismatch;
      report.detail = "composite is not the identity on colimit generator " +
                      raw.generators[g];
      return report;
    }
  }

  report.mutual_homs_verified = true;
  report.outcome = FormulaReport::Outcome::Match;
  report.detail = "orders agree (" + std::to_string(*report.pipeline_order) +
                  "), mutual homs verified with identity composites";
  return report;
}

CyclotomicLevel CyclotomicLevel::build(u64 m) {
  if (m < 3) throw ValidationError("cyclotomic level needs modulus >= 3");
  if (m > 1000000000000ull)
    throw ValidationError("modulus too large (limit 10^12)");
  CyclotomicLevel level;
  level.modulus = m;
  std::vector<std::pair<u64, int>> fs = factorize(m);
  for (const auto& [p, a] : fs) {
    u64 q = pow_u64(p, a);
    u64 rest = m / q;
    if (p == 2) {
      if (a == 1) continue;  // (Z/2)^x is trivial
      if (a == 2) {
        level.factors.push_back({p, a, 2, crt_lift(3, q, rest)});
      } else {
        level.factors.push_back({p, a, 2, crt_lift(q - 1, q, rest)});
        level.factors.push_back({p, a, q / 4, crt_lift(3, q, rest)});
      }
    } else {
      u64 order = pow_u64(p, a - 1) * (p - 1);
      level.factors.push_back({p, a, order, crt_lift(primitive_root(p, a), q, rest)});
    }
  }
  u64 product = 1;
  for (const auto& f : level.factors) product *= f.order;
  if (product != totient_of_factorization(fs))
    throw ValidationError("internal: unit group factor orders do not multiply "
                          "to the totient");
  return level;
}

AbelianInvariants cyclotomic_quotient(u64 m, const std::vector<u64>& ramified) {
  CyclotomicLevel level = CyclotomicLevel::build(m);
  std::set<u64> support;
  for (const auto& [p, a] : factorize(m)) support.insert(p);
  std::set<u64> chosen;
  for (u64 p : ramified) {
    if (!support.count(p))
      throw PrimeNotDividingError("prime " + std::to_string(p) +
                                  " does not divide " + std::to_string(m));
    chosen.insert(p);
  }

  std::size_t k = level.factors.size();
  IntMatrix rows;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<BigInt> row(k, 0);
    row[i] = BigInt(level.factors[i].order);
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < k; ++i)
    if (chosen.count(level.factors[i].prime)) {
      std::vector<BigInt> row(k, 0);
      row[i] = 1;
      rows.push_back(std::move(row));
    }
  return cokernel_invariants(rows, k);
}

AbelianInvariants unit_group_invariants_bruteforce(u64 n) {
  if (n <= 2) return {};
  std::vector<u64> units;
  for (u64 x = 1; x < n; ++x)
    if (std::gcd(x, n) == 1) units.push_back(x);
  u64 phi = units.size();

  // For each prime q | phi: count solutions of x^(q^k) = 1 to read off the
  // partition of the q-primary part. The k-th increment of log_q(count) is
  // the number of cyclic factors with exponent >= k.
  std::vector<std::pair<u64, std::vector<int>>> partitions;  // ascending
  for (const auto& [q, unused] : factorize(phi)) {
    std::vector<int> counts_log{0};
    for (int k = 1;; ++k) {
      u64 exp = pow_u64(q, k);
      u64 count = 0;
      for (u64 x : units) count += powmod(x, exp, n) == 1;
      int lg = 0;
      for (u64 c = count; c > 1; c /= q) ++lg;
      counts_log.push_back(lg);
      if (counts_log[static_cast<std::size_t>(k)] ==
          counts_log[static_cast<std::size_t>(k - 1)])
        break;
    }
    std::vector<int> partition;
    for (std::size_t k = 1; k < counts_log.size(); ++k) {
      int parts_ge_k = counts_log[k] - counts_log[k - 1];
      if (parts_ge_k == 0) break;
      if (partition.empty()) {
        partition.assign(static_cast<std::size_t>(parts_ge_k), 1);
      } else {
        for (int i = 0; i < parts_ge_k; ++i) ++partition[static_cast<std::size_t>(i)];
      }
    }
    std::sort(partition.begin(), partition.end());
    partitions.emplace_back(q, std::move(partition));
  }

  std::size_t count = 0;
  for (const auto& [q, part] : partitions) count = std::max(count, part.size());
  AbelianInvariants inv;
  for (std::size_t slot = 0; slot < count; ++slot) {
    BigInt d = 1;
    for (const auto& [q, part] : partitions) {
      // largest exponents belong to the last invariant factor
      std::size_t from_end = count - slot;
      if (part.size() >= from_end) {
        int exponent = part[part.size() - from_end];
        for (int k = 0; k < exponent; ++k) d *= q;
      }
    }
    if (d > 1) inv.factors.push_back(d);
  }
  return inv;
}

CyclotomicReport cyclotomic_consistency(u64 m) {
  CyclotomicReport report;
  std::vector<std::pair<u64, int>> fs = factorize(m);
  std::size_t k = fs.size();
  for (std::size_t mask = 0; mask < (1u << k); ++mask) {
    CyclotomicCheck check;
    u64 residual = m;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        check.ramified.push_back(fs[i].first);
        residual /= pow_u64(fs[i].first, fs[i].second);
      }
    check.residual_modulus = residual;
    check.quotient = cyclotomic_quotient(m, check.ramified);
    check.oracle = unit_group_invariants_bruteforce(residual);
    check.consistent = check.quotient == check.oracle;
    report.all_consistent &= check.consistent;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace strat
