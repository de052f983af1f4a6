#include "strat/coset.hpp"

#include <algorithm>
#include <deque>

#include "strat/errors.hpp"

namespace strat {

namespace {

constexpr int kUndef = -1;

int letter_to_col(int letter) {
  int idx = letter_index(letter);
  return letter > 0 ? 2 * idx : 2 * idx + 1;
}

int col_to_letter(int col) { return col % 2 == 0 ? col / 2 + 1 : -(col / 2 + 1); }

std::vector<int> word_cols(const Word& w) {
  std::vector<int> cols;
  cols.reserve(w.size());
  for (int letter : w.letters()) cols.push_back(letter_to_col(letter));
  return cols;
}

struct CapacityHit {};

// Working state of one enumeration. Coincidences are handled with a
// union-find forest over cosets; a coset is live iff it is its own
// representative.
class Enumerator {
 public:
  Enumerator(const GroupPresentation& g, const std::vector<Word>& subgroup,
             std::size_t max_cosets)
      : ncols_(2 * g.rank()), cap_(std::max<std::size_t>(max_cosets, 1)) {
    for (const auto& r : g.relators) relators_.push_back(word_cols(r));
    for (const auto& w : subgroup)
      if (!w.empty()) subgroup_.push_back(word_cols(w));
  }

  TCResult run(std::size_t ngens) {
    new_coset();
    try {
      for (const auto& w : subgroup_) scan(0, w, /*fill=*/true);
    } catch (const CapacityHit&) {
      return Overflow{total_defined_};
    }

    std::size_t alpha = 0;
    while (alpha < table_.size()) {
      if (!live(alpha)) {
        ++alpha;
        continue;
      }
      try {
        bool died = false;
        for (const auto& w : relators_) {
          scan(static_cast<int>(alpha), w, /*fill=*/true);
          if (!live(alpha)) {
            died = true;
            break;
          }
        }
        if (!died) {
          for (std::size_t x = 0; x < ncols_; ++x)
            if (table_[alpha][x] == kUndef) define(static_cast<int>(alpha), static_cast<int>(x));
        }
        ++alpha;
      } catch (const CapacityHit&) {
        std::size_t before = live_;
        lookahead();
        alpha = compact(alpha);
        if (live_ >= cap_ || live_ == before || ++lookaheads_ > 64 ||
            total_defined_ > 50 * cap_)
          return Overflow{total_defined_};
      }
    }

    compact(0);
    return CosetTable(ngens, std::move(table_), total_defined_);
  }

 private:
  bool live(std::size_t a) const { return parent_[a] == static_cast<int>(a); }

  int new_coset() {
    if (live_ >= cap_) throw CapacityHit{};
    table_.emplace_back(ncols_, kUndef);
    parent_.push_back(static_cast<int>(parent_.size()));
    ++total_defined_;
    ++live_;
    return static_cast<int>(table_.size()) - 1;
  }

  void define(int a, int col) {
    int b = new_coset();
    table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(col)] = b;
    table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(col ^ 1)] = a;
  }

  int rep(int k) {
    int root = k;
    while (parent_[static_cast<std::size_t>(root)] != root)
      root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(k)] != root) {
      int next = parent_[static_cast<std::size_t>(k)];
      parent_[static_cast<std::size_t>(k)] = root;
      k = next;
    }
    return root;
  }

  void merge(int j, int k) {
    j = rep(j);
    k = rep(k);
    if (j == k) return;
    if (j > k) std::swap(j, k);
    parent_[static_cast<std::size_t>(k)] = j;
    --live_;
    queue_.push_back(k);
  }

  // Standard coincidence processing: transfer the dying coset's edges onto
  // its representative, queueing any secondary coincidences discovered.
  void coincidence(int a, int b) {
    merge(a, b);
    while (!queue_.empty()) {
      int gamma = queue_.front();
      queue_.pop_front();
      for (std::size_t x = 0; x < ncols_; ++x) {
        int delta = table_[static_cast<std::size_t>(gamma)][x];
        if (delta == kUndef) continue;
        table_[static_cast<std::size_t>(delta)][x ^ 1] = kUndef;
        int mu = rep(gamma);
        int nu = rep(delta);
        int mu_x = table_[static_cast<std::size_t>(mu)][x];
        int nu_xi = table_[static_cast<std::size_t>(nu)][x ^ 1];
        if (mu_x != kUndef) {
          merge(nu, mu_x);
        } else if (nu_xi != kUndef) {
          merge(mu, nu_xi);
        } else {
          table_[static_cast<std::size_t>(mu)][x] = nu;
          table_[static_cast<std::size_t>(nu)][x ^ 1] = mu;
        }
      }
    }
  }

  // Trace w at alpha from both ends. With fill the gap is closed by defining
  // new cosets (HLT); without fill only deductions and coincidences happen.
  void scan(int alpha, const std::vector<int>& w, bool fill) {
    if (w.empty()) return;
    int f = alpha;
    std::size_t i = 0;
    int b = alpha;
    std::size_t j = w.size() - 1;
    while (true) {
      while (i <= j) {
        int next = table_[static_cast<std::size_t>(f)][static_cast<std::size_t>(w[i])];
        if (next == kUndef) break;
        f = next;
        if (i == j) {  // forward scan complete
          if (f != b) coincidence(f, b);
          return;
        }
        ++i;
      }
      while (j >= i) {
        int next = table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(w[j] ^ 1)];
        if (next == kUndef) break;
        b = next;
        if (j == i) {  // crossed the gap: f and b sit at the same spot
          coincidence(f, b);
          return;
        }
        --j;
      }
      if (i == j) {  // gap of one: deduction
        table_[static_cast<std::size_t>(f)][static_cast<std::size_t>(w[i])] = b;
        table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(w[i] ^ 1)] = f;
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void lookahead() {
    for (std::size_t a = 0; a < table_.size(); ++a) {
      if (!live(a)) continue;
      for (const auto& w : relators_) {
        scan(static_cast<int>(a), w, /*fill=*/false);
        if (!live(a)) break;
      }
    }
  }

  // Renumber live cosets in increasing order; returns the new position of
  // the scan pointer.
  std::size_t compact(std::size_t alpha) {
    std::vector<int> remap(table_.size(), kUndef);
    int next = 0;
    for (std::size_t a = 0; a < table_.size(); ++a)
      if (live(a)) remap[a] = next++;
    std::vector<std::vector<int>> packed(static_cast<std::size_t>(next));
    for (std::size_t a = 0; a < table_.size(); ++a) {
      if (!live(a)) continue;
      auto& row = packed[static_cast<std::size_t>(remap[a])];
      row = std::move(table_[a]);
      for (int& e : row)
        if (e != kUndef) e = remap[static_cast<std::size_t>(rep(e))];
    }
    std::size_t new_alpha = 0;
    for (std::size_t a = 0; a < std::min(alpha, remap.size()); ++a)
      if (remap[a] != kUndef) ++new_alpha;
    table_ = std::move(packed);
    parent_.resize(table_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
    live_ = table_.size();
    return new_alpha;
  }

  std::size_t ncols_;
  std::size_t cap_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgroup_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::deque<int> queue_;
  std::size_t total_defined_ = 0;
  std::size_t live_ = 0;
  std::size_t lookaheads_ = 0;
};

}  // namespace

CosetTable::CosetTable(std::size_t ngens, std::vector<std::vector<int>> rows,
                       std::size_t total_defined)
    : ngens_(ngens), rows_(std::move(rows)), total_defined_(total_defined) {}

int CosetTable::apply_letter(int coset, int letter) const {
  return rows_[static_cast<std::size_t>(coset)]
              [static_cast<std::size_t>(letter_to_col(letter))];
}

int CosetTable::apply_word(int coset, const Word& w) const {
  for (int letter : w.letters()) coset = apply_letter(coset, letter);
  return coset;
}

std::vector<int> CosetTable::permutation(const Word& w) const {
  std::vector<int> p(rows_.size());
  for (std::size_t c = 0; c < rows_.size(); ++c)
    p[c] = apply_word(static_cast<int>(c), w);
  return p;
}

bool CosetTable::word_acts_trivially(const Word& w) const {
  for (std::size_t c = 0; c < rows_.size(); ++c)
    if (apply_word(static_cast<int>(c), w) != static_cast<int>(c)) return false;
  return true;
}

std::vector<Word> CosetTable::coset_representatives() const {
  std::vector<Word> reps(rows_.size());
  std::vector<bool> seen(rows_.size(), false);
  std::vector<int> frontier{0};
  seen[0] = true;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier) {
      for (std::size_t x = 0; x < 2 * ngens_; ++x) {
        int b = rows_[static_cast<std::size_t>(a)][x];
        if (b == kUndef || seen[static_cast<std::size_t>(b)]) continue;
        seen[static_cast<std::size_t>(b)] = true;
        reps[static_cast<std::size_t>(b)] =
            reps[static_cast<std::size_t>(a)] *
            Word({col_to_letter(static_cast<int>(x))});
        next.push_back(b);
      }
    }
    frontier = std::move(next);
  }
  return reps;
}

TCResult todd_coxeter(const GroupPresentation& g,
                      const std::vector<Word>& subgroup_gens,
                      std::size_t max_cosets) {
  for (const auto& w : subgroup_gens)
    if (w.max_index() >= static_cast<int>(g.rank()))
      throw ValidationError("subgroup generator references unknown generator");
  Enumerator e(g, subgroup_gens, max_cosets);
  return e.run(g.rank());
}

}  // namespace strat
