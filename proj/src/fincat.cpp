#include "strat/fincat.hpp"

#include <unordered_map>

#include "strat/errors.hpp"

namespace strat {

FiniteCategory::FiniteCategory(
    std::vector<std::string> objects, std::vector<MorphismData> morphisms,
    std::vector<std::pair<std::string, std::string>> identities,
    std::vector<std::array<std::string, 3>> compositions) {
  std::unordered_map<std::string, int> oid, mid;
  for (const auto& o : objects) {
    if (!oid.emplace(o, static_cast<int>(oid.size())).second)
      throw ValidationError("duplicate object id: " + o);
  }
  for (const auto& m : morphisms) {
    if (!mid.emplace(m.id, static_cast<int>(mid.size())).second)
      throw ValidationError("duplicate morphism id: " + m.id);
    if (!oid.count(m.src) || !oid.count(m.tgt))
      throw ValidationError("morphism " + m.id + " references unknown object");
  }
  objects_ = std::move(objects);
  morphisms_ = std::move(morphisms);
  for (const auto& m : morphisms_) {
    src_.push_back(oid.at(m.src));
    tgt_.push_back(oid.at(m.tgt));
  }

  identity_.assign(objects_.size(), -1);
  for (const auto& [obj, morph] : identities) {
    if (!oid.count(obj) || !mid.count(morph))
      throw ValidationError("identity entry references unknown id: (" + obj +
                            ", " + morph + ")");
    int o = oid.at(obj), m = mid.at(morph);
    if (identity_[static_cast<std::size_t>(o)] != -1)
      throw ValidationError("two identities declared for object " + obj);
    if (src(m) != o || tgt(m) != o)
      throw ValidationError("identity of " + obj +
                            " is not an endomorphism of it");
    identity_[static_cast<std::size_t>(o)] = m;
  }
  for (std::size_t o = 0; o < objects_.size(); ++o)
    if (identity_[o] == -1)
      throw ValidationError("object " + objects_[o] + " has no identity");

  std::size_t n = morphisms_.size();
  comp_.assign(n, std::vector<int>(n, -1));
  for (const auto& [f, g, h] : compositions) {
    if (!mid.count(f) || !mid.count(g) || !mid.count(h))
      throw ValidationError("composition triple references unknown morphism: (" +
                            f + ", " + g + ", " + h + ")");
    int fi = mid.at(f), gi = mid.at(g), hi = mid.at(h);
    if (tgt(fi) != src(gi))
      throw ValidationError("composition declared on a non-composable pair: (" +
                            f + ", " + g + ", " + h + ")");
    if (src(hi) != src(fi) || tgt(hi) != tgt(gi))
      throw ValidationError("composite has wrong endpoints: (" + f + ", " + g +
                            ", " + h + ")");
    if (comp_[static_cast<std::size_t>(gi)][static_cast<std::size_t>(fi)] != -1)
      throw ValidationError("composition declared twice for pair: (" + f +
                            ", " + g + ")");
    comp_[static_cast<std::size_t>(gi)][static_cast<std::size_t>(fi)] = hi;
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f)
      if ((tgt(static_cast<int>(f)) == src(static_cast<int>(g))) !=
          (comp_[g][f] != -1))
        throw ValidationError(
            "composition table does not match composability: (" +
            morphisms_[f].id + ", " + morphisms_[g].id + ")");

  for (std::size_t f = 0; f < n; ++f) {
    int fi = static_cast<int>(f);
    if (compose(fi, identity_of(src(fi))) != fi ||
        compose(identity_of(tgt(fi)), fi) != fi)
      throw ValidationError("identity law fails at morphism " +
                            morphisms_[f].id);
  }

  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g) {
      if (tgt(static_cast<int>(f)) != src(static_cast<int>(g))) continue;
      for (std::size_t h = 0; h < n; ++h) {
        if (tgt(static_cast<int>(g)) != src(static_cast<int>(h))) continue;
        int left = compose(static_cast<int>(h),
                           compose(static_cast<int>(g), static_cast<int>(f)));
        int right = compose(compose(static_cast<int>(h), static_cast<int>(g)),
                            static_cast<int>(f));
        if (left != right)
          throw ValidationError("associativity fails on triple: (" +
                                morphisms_[f].id + ", " + morphisms_[g].id +
                                ", " + morphisms_[h].id + ")");
      }
    }

  hom_.assign(objects_.size(),
              std::vector<std::vector<int>>(objects_.size()));
  for (std::size_t m = 0; m < n; ++m)
    hom_[static_cast<std::size_t>(src(static_cast<int>(m)))]
        [static_cast<std::size_t>(tgt(static_cast<int>(m)))]
            .push_back(static_cast<int>(m));
}

const std::string& FiniteCategory::morphism_id(int m) const {
  return morphisms_[static_cast<std::size_t>(m)].id;
}

int FiniteCategory::compose(int g, int f) const {
  return comp_[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
}

const std::vector<int>& FiniteCategory::hom_set(int x, int y) const {
  return hom_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

bool FiniteCategory::is_isomorphism(int m) const {
  for (int g : hom_set(tgt(m), src(m)))
    if (compose(g, m) == identity_of(src(m)) &&
        compose(m, g) == identity_of(tgt(m)))
      return true;
  return false;
}

std::optional<std::string> has_terminal(const FiniteCategory& c) {
  int n = static_cast<int>(c.object_count());
  for (int t = 0; t < n; ++t) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = c.hom_set(x, t).size() == 1;
    if (ok) return c.objects()[static_cast<std::size_t>(t)];
  }
  return std::nullopt;
}

std::optional<std::string> has_initial(const FiniteCategory& c) {
  int n = static_cast<int>(c.object_count());
  for (int i = 0; i < n; ++i) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = c.hom_set(i, x).size() == 1;
    if (ok) return c.objects()[static_cast<std::size_t>(i)];
  }
  return std::nullopt;
}

std::vector<std::string> weakly_terminal(const FiniteCategory& c) {
  std::vector<std::string> out;
  int n = static_cast<int>(c.object_count());
  for (int t = 0; t < n; ++t) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = !c.hom_set(x, t).empty();
    if (ok) out.push_back(c.objects()[static_cast<std::size_t>(t)]);
  }
  return out;
}

std::vector<std::string> weakly_initial(const FiniteCategory& c) {
  std::vector<std::string> out;
  int n = static_cast<int>(c.object_count());
  for (int i = 0; i < n; ++i) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = !c.hom_set(i, x).empty();
    if (ok) out.push_back(c.objects()[static_cast<std::size_t>(i)]);
  }
  return out;
}

bool is_filtered(const FiniteCategory& c) {
  int n = static_cast<int>(c.object_count());
  if (n == 0) return false;
  // Cocones for pairs of objects.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool found = false;
      for (int z = 0; z < n && !found; ++z)
        found = !c.hom_set(x, z).empty() && !c.hom_set(y, z).empty();
      if (!found) return false;
    }
  // Coequalizing morphisms for parallel pairs.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int f : c.hom_set(x, y))
        for (int g : c.hom_set(x, y)) {
          if (f == g) continue;
          bool found = false;
          for (int z = 0; z < n && !found; ++z)
            for (int h : c.hom_set(y, z)) {
              if (c.compose(h, f) == c.compose(h, g)) {
                found = true;
                break;
              }
            }
          if (!found) return false;
        }
  return true;
}

bool is_cofiltered(const FiniteCategory& c) {
  int n = static_cast<int>(c.object_count());
  if (n == 0) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool found = false;
      for (int z = 0; z < n && !found; ++z)
        found = !c.hom_set(z, x).empty() && !c.hom_set(z, y).empty();
      if (!found) return false;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int f : c.hom_set(x, y))
        for (int g : c.hom_set(x, y)) {
          if (f == g) continue;
          bool found = false;
          for (int z = 0; z < n && !found; ++z)
            for (int h : c.hom_set(z, x)) {
              if (c.compose(f, h) == c.compose(g, h)) {
                found = true;
                break;
              }
            }
          if (!found) return false;
        }
  return true;
}

RigidityReport rigidity_check(const FiniteCategory& c) {
  RigidityReport report;
  if (!is_filtered(c)) return report;
  int n = static_cast<int>(c.object_count());
  for (int t = 0; t < n; ++t) {
    bool weakly = true;
    for (int x = 0; x < n && weakly; ++x) weakly = !c.hom_set(x, t).empty();
    if (!weakly) continue;
    bool nothing_out = true;
    for (int x = 0; x < n && nothing_out; ++x)
      if (x != t) nothing_out = c.hom_set(t, x).empty();
    if (!nothing_out) continue;
    bool only_isos = true;
    for (int m : c.hom_set(t, t))
      if (!c.is_isomorphism(m)) {
        only_isos = false;
        break;
      }
    if (!only_isos) continue;
    report.hypothesis_holds = true;
    report.witness = c.objects()[static_cast<std::size_t>(t)];
    break;
  }
  if (report.hypothesis_holds) {
    report.conclusion_holds = has_terminal(c).has_value();
    report.counterexample = !report.conclusion_holds;
  }
  return report;
}

FiniteCategory delooping(const CosetTable& regular, std::size_t cap) {
  std::size_t n = regular.index();
  if (n > cap)
    throw TooLargeError("group of order " + std::to_string(n) +
                        " exceeds the delooping cap " + std::to_string(cap));
  std::vector<Word> reps = regular.coset_representatives();
  auto name = [](std::size_t i) { return "g" + std::to_string(i); };

  std::vector<FiniteCategory::MorphismData> morphisms;
  for (std::size_t i = 0; i < n; ++i) morphisms.push_back({name(i), "*", "*"});
  std::vector<std::array<std::string, 3>> comps;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // arrow i then arrow j: right action of the j-th element on coset i
      int k = regular.apply_word(static_cast<int>(i), reps[j]);
      comps.push_back({name(i), name(j), name(static_cast<std::size_t>(k))});
    }
  return FiniteCategory({"*"}, std::move(morphisms), {{"*", "g0"}},
                        std::move(comps));
}

FiniteCategory poset_as_category(const FinitePoset& p) {
  std::vector<FiniteCategory::MorphismData> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;
  std::vector<std::array<std::string, 3>> comps;
  int n = static_cast<int>(p.size());
  auto name = [&](int a, int b) {
    return p.elements()[static_cast<std::size_t>(a)] + "<=" +
           p.elements()[static_cast<std::size_t>(b)];
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.leq(a, b)) morphisms.push_back({name(a, b),
                                            p.elements()[static_cast<std::size_t>(a)],
                                            p.elements()[static_cast<std::size_t>(b)]});
  for (int a = 0; a < n; ++a)
    identities.emplace_back(p.elements()[static_cast<std::size_t>(a)], name(a, a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (p.leq(a, b) && p.leq(b, c))
          comps.push_back({name(a, b), name(b, c), name(a, c)});
  return FiniteCategory(p.elements(), std::move(morphisms),
                        std::move(identities), std::move(comps));
}

}  // namespace strat
