#include "strat/sampler.hpp"

#include <algorithm>
#include <array>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "strat/errors.hpp"

namespace strat {

namespace {

// Cycle notation helper for pool entries.
Perm cycles(int n, const std::vector<std::vector<int>>& cs) {
  Perm p = perm_identity(n);
  for (const auto& c : cs)
    for (std::size_t i = 0; i < c.size(); ++i)
      p[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
  return p;
}

Word parse_gen_word(const std::vector<int>& letters) { return Word(std::vector<int>(letters)); }

Word commutator(int a, int b) {
  return parse_gen_word({-(a + 1), -(b + 1), a + 1, b + 1});
}

// Right-multiplication permutations of the quaternion group on its eight
// elements +-1, +-i, +-j, +-k.
std::pair<Perm, Perm> quaternion_perms() {
  // element = (axis, sign): axis 0 = 1, 1 = i, 2 = j, 3 = k
  auto index = [](int axis, int sign) { return axis * 2 + (sign < 0 ? 1 : 0); };
  // multiplication of axes: table[a][b] = (axis, sign) of a*b
  static const int axis_table[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_table[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto mul = [&](int e, int by_axis) {
    int axis = e / 2;
    int sign = e % 2 ? -1 : 1;
    int raxis = axis_table[axis][by_axis];
    int rsign = sign * sign_table[axis][by_axis];
    return index(raxis, rsign);
  };
  Perm by_i(8), by_j(8);
  for (int e = 0; e < 8; ++e) {
    by_i[static_cast<std::size_t>(e)] = mul(e, 1);
    by_j[static_cast<std::size_t>(e)] = mul(e, 2);
  }
  return {by_i, by_j};
}

std::vector<GroupRealization> build_pool() {
  std::vector<GroupRealization> pool;
  auto add = [&](std::string name, GroupPresentation pres,
                 std::vector<Perm> perms) {
    std::size_t order = generated_subgroup(perms).size();
    pool.push_back({std::move(name), std::move(pres), std::move(perms), order});
  };

  for (int n : {2, 3, 4, 6, 8, 12}) {
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = i;
    add("C" + std::to_string(n),
        GroupPresentation({"a"}, {Word::generator(0).pow(n)}),
        {cycles(n, {cycle})});
  }
  add("V4",
      GroupPresentation({"a", "b"}, {Word::generator(0).pow(2),
                                     Word::generator(1).pow(2),
                                     commutator(0, 1)}),
      {cycles(4, {{0, 1}}), cycles(4, {{2, 3}})});
  add("C2xC4",
      GroupPresentation({"a", "b"}, {Word::generator(0).pow(2),
                                     Word::generator(1).pow(4),
                                     commutator(0, 1)}),
      {cycles(6, {{0, 1}}), cycles(6, {{2, 3, 4, 5}})});
  add("C3xC3",
      GroupPresentation({"a", "b"}, {Word::generator(0).pow(3),
                                     Word::generator(1).pow(3),
                                     commutator(0, 1)}),
      {cycles(6, {{0, 1, 2}}), cycles(6, {{3, 4, 5}})});
  add("S3",
      GroupPresentation({"s", "t"},
                        {Word::generator(0).pow(2), Word::generator(1).pow(3),
                         (Word::generator(0) * Word::generator(1)).pow(2)}),
      {cycles(3, {{0, 1}}), cycles(3, {{0, 1, 2}})});
  add("D4",
      GroupPresentation({"r", "s"},
                        {Word::generator(0).pow(4), Word::generator(1).pow(2),
                         (Word::generator(0) * Word::generator(1)).pow(2)}),
      {cycles(4, {{0, 1, 2, 3}}), cycles(4, {{1, 3}})});
  add("D6",
      GroupPresentation({"r", "s"},
                        {Word::generator(0).pow(6), Word::generator(1).pow(2),
                         (Word::generator(0) * Word::generator(1)).pow(2)}),
      {cycles(6, {{0, 1, 2, 3, 4, 5}}), cycles(6, {{0, 5}, {1, 4}, {2, 3}})});
  add("A4",
      GroupPresentation({"s", "t"},
                        {Word::generator(0).pow(2), Word::generator(1).pow(3),
                         (Word::generator(0) * Word::generator(1)).pow(3)}),
      {cycles(4, {{0, 1}, {2, 3}}), cycles(4, {{0, 1, 2}})});
  add("S4",
      GroupPresentation({"a", "b"},
                        {Word::generator(0).pow(2), Word::generator(1).pow(3),
                         (Word::generator(0) * Word::generator(1)).pow(4)}),
      {cycles(4, {{0, 1}}), cycles(4, {{1, 2, 3}})});
  {
    auto [by_i, by_j] = quaternion_perms();
    // i^4, i^2 = j^2, j^-1 i j = i^-1
    add("Q8",
        GroupPresentation(
            {"i", "j"},
            {Word::generator(0).pow(4),
             Word::generator(0).pow(2) * Word::generator(1).pow(-2),
             Word::generator(1).inverse() * Word::generator(0) *
                 Word::generator(1) * Word::generator(0)}),
        {by_i, by_j});
  }
  return pool;
}

}  // namespace

const std::vector<GroupRealization>& realization_pool() {
  static const std::vector<GroupRealization> pool = build_pool();
  return pool;
}

FinitePoset random_poset(Rng& rng, int max_elements, bool ensure_connected) {
  for (int attempt = 0;; ++attempt) {
    int n = rng.between(1, max_elements);
    // Random relation compatible with the index order, then closure.
    std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.chance(2, 5)) rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
              rel[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
            rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;

    std::vector<std::string> elements;
    for (int i = 0; i < n; ++i) elements.push_back("x" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
        bool is_cover = true;
        for (int k = 0; k < n && is_cover; ++k)
          is_cover = !(rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                       rel[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
        if (is_cover) covers.emplace_back(elements[static_cast<std::size_t>(i)],
                                          elements[static_cast<std::size_t>(j)]);
      }
    FinitePoset p(std::move(elements), std::move(covers));
    if (!ensure_connected || connected_components(p).size() == 1 ||
        attempt >= 50)
      return p;
  }
}

FiniteCategory random_category(Rng& rng, int max_objects) {
  FinitePoset p = random_poset(rng, max_objects);

  // Morphism group: trivial weighted high so filtered instances show up,
  // plus cyclic and one nonabelian choice.
  std::vector<std::vector<std::size_t>> mult;
  std::size_t mode = rng.below(5);
  if (mode <= 1) {
    mult = {{0}};
  } else if (mode == 2) {
    mult = {{0, 1}, {1, 0}};
  } else if (mode == 3) {
    mult = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  } else {
    std::vector<Perm> elems = generated_subgroup(
        {cycles(3, {{0, 1}}), cycles(3, {{0, 1, 2}})});
    std::map<Perm, std::size_t> idx;
    for (std::size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = i;
    mult.assign(elems.size(), std::vector<std::size_t>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j)
        mult[i][j] = idx.at(perm_compose(elems[j], elems[i]));
  }
  std::size_t g = mult.size();

  auto name = [&](int a, int b, std::size_t k) {
    return p.elements()[static_cast<std::size_t>(a)] + "|" +
           p.elements()[static_cast<std::size_t>(b)] + "|" + std::to_string(k);
  };
  int n = static_cast<int>(p.size());
  std::vector<FiniteCategory::MorphismData> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;
  std::vector<std::array<std::string, 3>> comps;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.leq(a, b))
        for (std::size_t k = 0; k < g; ++k)
          morphisms.push_back({name(a, b, k),
                               p.elements()[static_cast<std::size_t>(a)],
                               p.elements()[static_cast<std::size_t>(b)]});
  for (int a = 0; a < n; ++a)
    identities.emplace_back(p.elements()[static_cast<std::size_t>(a)], name(a, a, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (p.leq(a, b) && p.leq(b, c))
          for (std::size_t k1 = 0; k1 < g; ++k1)
            for (std::size_t k2 = 0; k2 < g; ++k2)
              comps.push_back({name(a, b, k1), name(b, c, k2),
                               name(a, c, mult[k2][k1])});
  return FiniteCategory(p.elements(), std::move(morphisms),
                        std::move(identities), std::move(comps));
}

GroupDiagram random_group_diagram(Rng& rng, int max_nodes, int max_gens) {
  GroupDiagram d;
  d.index = random_poset(rng, max_nodes);
  d.orientation = rng.chance(1, 2) ? GroupDiagram::Orientation::Covariant
                                   : GroupDiagram::Orientation::Contravariant;
  static const std::array<const char*, 4> names{"a", "b", "c", "d"};

  auto random_word = [&](std::size_t rank, int max_len) {
    std::vector<int> letters;
    int len = rng.between(0, max_len);
    for (int i = 0; i < len && rank > 0; ++i) {
      int idx = static_cast<int>(rng.below(rank));
      letters.push_back(rng.chance(1, 2) ? idx + 1 : -(idx + 1));
    }
    return Word(std::move(letters));
  };

  for (const auto& node : d.index.elements()) {
    std::size_t rank = rng.below(static_cast<std::size_t>(max_gens) + 1);
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < rank; ++i) gens.push_back(names[i]);
    std::vector<Word> rels;
    int nrels = rng.between(0, 2);
    for (int i = 0; i < nrels; ++i) rels.push_back(random_word(rank, 4));
    d.nodes.emplace(node, GroupPresentation(std::move(gens), std::move(rels)));
  }
  for (const auto& [a, b] : d.index.covers()) {
    const std::string& lo = d.index.elements()[static_cast<std::size_t>(a)];
    const std::string& hi = d.index.elements()[static_cast<std::size_t>(b)];
    auto key = d.orientation == GroupDiagram::Orientation::Covariant
                   ? std::make_pair(lo, hi)
                   : std::make_pair(hi, lo);
    const GroupPresentation& src = d.nodes.at(key.first);
    const GroupPresentation& tgt = d.nodes.at(key.second);
    std::vector<Word> images;
    for (std::size_t i = 0; i < src.rank(); ++i)
      images.push_back(random_word(tgt.rank(), 3));
    d.edges.emplace(key, GroupHom(src, tgt, std::move(images)));
  }
  return d;
}

SampledDedekind sample_dedekind(Rng& rng) {
  const auto& pool = realization_pool();
  const GroupRealization& base = pool[rng.below(pool.size())];
  CayleyWords cayley = cayley_words(base.generator_perms);

  SampledDedekind out;
  out.realization = &base;
  out.model.galois = base.presentation;

  int nprimes = rng.between(1, 3);
  for (int pi = 0; pi < nprimes; ++pi) {
    PrimeData prime;
    prime.name = "p" + std::to_string(pi + 1);
    int rank = rng.chance(2, 3) ? 1 : 2;
    std::vector<Word> incl_images;
    if (rank == 1) {
      std::size_t pick = rng.below(cayley.elements.size());
      int order = perm_order(cayley.elements[pick]);
      prime.decomposition = GroupPresentation(
          {"d"}, {Word::generator(0).pow(order)});
      incl_images.push_back(cayley.words[pick]);
    } else {
      prime.decomposition = free_group({"d", "e"});
      for (int i = 0; i < 2; ++i)
        incl_images.push_back(cayley.words[rng.below(cayley.elements.size())]);
    }
    prime.inclusion =
        GroupHom(prime.decomposition, out.model.galois, incl_images);

    int nwords = rng.between(0, 2);
    for (int i = 0; i < nwords; ++i) {
      std::vector<int> letters;
      int len = rng.between(1, 3);
      for (int j = 0; j < len; ++j) {
        int idx = static_cast<int>(rng.below(prime.decomposition.rank()));
        letters.push_back(rng.chance(1, 2) ? idx + 1 : -(idx + 1));
      }
      prime.inertia.emplace_back(std::move(letters));
    }

    std::vector<Word> in_galois;
    for (const auto& w : prime.inertia)
      in_galois.push_back(prime.inclusion.apply(w));
    out.inertia_in_galois.push_back(std::move(in_galois));
    out.model.primes.push_back(std::move(prime));
  }
  return out;
}

std::size_t oracle_quotient_order(const SampledDedekind& instance) {
  const auto& gens = instance.realization->generator_perms;
  std::vector<Perm> seeds;
  for (const auto& prime_words : instance.inertia_in_galois)
    for (const auto& w : prime_words) seeds.push_back(eval_word(w, gens));
  std::size_t group_size = generated_subgroup(gens).size();
  std::size_t closure_size = normal_closure(seeds, gens).size();
  return group_size / closure_size;
}

std::vector<BatchOutcome> dedekind_batch(std::uint64_t seed, std::size_t count,
                                         const Effort& effort) {
  std::vector<BatchOutcome> results(count);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    auto& out = results[static_cast<std::size_t>(i)];
    out.instance_seed = seed + static_cast<std::uint64_t>(i);
    try {
      Rng rng(out.instance_seed);
      SampledDedekind instance = sample_dedekind(rng);
      out.group_name = instance.realization->name;
      out.oracle_order = oracle_quotient_order(instance);
      out.report = verify_formula(instance.model, effort);
      out.match_with_oracle =
          out.report.outcome == FormulaReport::Outcome::Match &&
          out.report.pipeline_order &&
          *out.report.pipeline_order == out.oracle_order;
      if (out.report.outcome == FormulaReport::Outcome::Match &&
          !out.match_with_oracle)
        out.report.detail += "; pipeline disagrees with permutation oracle (" +
                             std::to_string(out.oracle_order) + ")";
    } catch (const std::exception& e) {
      out.report.outcome = FormulaReport::Outcome::Mismatch;
      out.report.detail = std::string("exception: ") + e.what();
      out.match_with_oracle = false;
    }
  }
  return results;
}

}  // namespace strat
