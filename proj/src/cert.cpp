#include "strat/cert.hpp"

#include <algorithm>

#include "strat/errors.hpp"

namespace strat {

namespace {

// Systematic search for a homomorphism to Sym(degree) with nontrivial image:
// generator images are enumerated in lexicographic order over all element
// tuples, bounded by a fixed trial budget so the search stays deterministic.
std::optional<PermWitness> find_perm_witness(const GroupPresentation& g,
                                             int max_degree) {
  if (g.rank() == 0) return std::nullopt;
  constexpr std::size_t kTrialBudget = 2'000'000;
  for (int degree = 2; degree <= max_degree; ++degree) {
    std::vector<Perm> sym;
    Perm p = perm_identity(degree);
    do {
      sym.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::size_t trials = 0;
    std::vector<std::size_t> pick(g.rank(), 0);
    while (true) {
      if (++trials > kTrialBudget / static_cast<std::size_t>(max_degree))
        break;
      bool all_identity = true;
      for (std::size_t i : pick) all_identity &= i == 0;
      if (!all_identity) {
        std::vector<Perm> images;
        images.reserve(g.rank());
        for (std::size_t i : pick) images.push_back(sym[i]);
        bool ok = true;
        for (const auto& r : g.relators)
          if (!perm_is_identity(eval_word(r, images))) {
            ok = false;
            break;
          }
        if (ok) {
          PermWitness w;
          w.degree = degree;
          w.images = images;
          w.image_order = generated_subgroup(images).size();
          if (w.image_order > 1) return w;
        }
      }
      // next tuple
      std::size_t k = pick.size();
      while (k > 0) {
        --k;
        if (++pick[k] < sym.size()) break;
        pick[k] = 0;
        if (k == 0) goto next_degree;
      }
    }
  next_degree:;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> group_order(const GroupPresentation& g,
                                       std::size_t max_cosets) {
  TCResult r = todd_coxeter(g, {}, max_cosets);
  if (const auto* table = std::get_if<CosetTable>(&r)) return table->index();
  return std::nullopt;
}

TrivialityCertificate is_trivial(const GroupPresentation& g,
                                 const Effort& effort) {
  TrivialityCertificate cert;

  AbelianInvariants ab = abelianization(g);
  if (!ab.trivial()) {
    cert.verdict = TrivialityCertificate::Verdict::NonTrivial;
    cert.abelian = ab;
    cert.note = "nontrivial abelianization " + ab.to_string();
    return cert;
  }

  TCResult r = todd_coxeter(g, {}, effort.max_cosets);
  if (const auto* table = std::get_if<CosetTable>(&r)) {
    cert.coset_index = table->index();
    if (table->index() == 1) {
      cert.verdict = TrivialityCertificate::Verdict::Trivial;
      cert.note = "coset enumeration closed with one coset";
    } else {
      cert.verdict = TrivialityCertificate::Verdict::NonTrivial;
      cert.note = "coset enumeration closed with " +
                  std::to_string(table->index()) + " cosets";
      PermWitness w;
      w.degree = static_cast<int>(table->index());
      for (std::size_t i = 0; i < g.rank(); ++i)
        w.images.push_back(
            table->permutation(Word::generator(static_cast<int>(i))));
      w.image_order = table->index();  // regular representation
      cert.witness = std::move(w);
    }
    return cert;
  }

  if (auto witness = find_perm_witness(g, effort.max_degree)) {
    cert.verdict = TrivialityCertificate::Verdict::NonTrivial;
    cert.witness = std::move(witness);
    cert.note = "nontrivial image in Sym(" +
                std::to_string(cert.witness->degree) + ")";
    return cert;
  }

  cert.verdict = TrivialityCertificate::Verdict::Unknown;
  cert.note = "effort budget exhausted (" +
              std::to_string(effort.max_cosets) + " cosets, degree " +
              std::to_string(effort.max_degree) + ")";
  return cert;
}

GroupHom verify_hom(GroupHom phi, const Effort& effort) {
  // Syntactic fast path: a relator whose image is literally a relator of the
  // target (or freely reduces away) is trivial there by fiat; quotient maps
  // pass entirely this way, with no enumeration of the target.
  std::vector<const Word*> pending;
  for (const auto& relator : phi.source.relators) {
    Word image = phi.apply(relator);
    if (image.empty()) continue;
    bool syntactic = false;
    for (const auto& t : phi.target.relators)
      if (t == image || t == image.inverse()) {
        syntactic = true;
        break;
      }
    if (!syntactic) pending.push_back(&relator);
  }
  if (pending.empty()) {
    phi.status = GroupHom::Status::Verified;
    return phi;
  }

  TCResult r = todd_coxeter(phi.target, {}, effort.max_cosets);
  const auto* table = std::get_if<CosetTable>(&r);
  if (!table) {
    phi.status = GroupHom::Status::Unverified;
    return phi;
  }
  for (const Word* relator : pending) {
    Word image = phi.apply(*relator);
    if (!table->word_acts_trivially(image))
      throw NotAHomomorphismError(
          "relator image is nontrivial in the target: " +
              render_word(*relator, phi.source.generators),
          render_word(*relator, phi.source.generators));
  }
  phi.status = GroupHom::Status::Verified;
  return phi;
}

}  // namespace strat
