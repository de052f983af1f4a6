#include "strat/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "strat/errors.hpp"

namespace strat {

std::string chain_key(const Chain& c) {
  std::string key;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) key += "<";
    key += c[i];
  }
  return key;
}

FinitePoset::FinitePoset(std::vector<std::string> elements,
                         std::vector<std::pair<std::string, std::string>> covers) {
  std::unordered_map<std::string, int> index;
  for (const auto& e : elements) {
    if (e.empty()) throw ValidationError("empty element identifier");
    if (!index.emplace(e, static_cast<int>(index.size())).second)
      throw ValidationError("duplicate element identifier: " + e);
  }
  elements_ = std::move(elements);

  std::set<std::pair<int, int>> seen;
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end() || b == index.end())
      throw ValidationError("cover references unknown element: (" + lo + ", " +
                            hi + ")");
    if (a->second == b->second)
      throw ValidationError("reflexive cover pair: " + lo);
    if (!seen.emplace(a->second, b->second).second)
      throw ValidationError("duplicate cover pair: (" + lo + ", " + hi + ")");
    covers_.emplace_back(a->second, b->second);
  }

  // Reachability through covers; a path back to the start is a cycle.
  std::size_t n = elements_.size();
  std::vector<std::vector<int>> above(n);
  for (const auto& [a, b] : covers_) above[static_cast<std::size_t>(a)].push_back(b);
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> stack = above[s];
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (leq_[s][static_cast<std::size_t>(v)]) continue;
      leq_[s][static_cast<std::size_t>(v)] = true;
      for (int w : above[static_cast<std::size_t>(v)]) stack.push_back(w);
    }
    if (leq_[s][s])
      throw ValidationError("covers imply a cycle through element " +
                            elements_[s]);
  }
  for (const auto& [a, b] : covers_)
    for (std::size_t c = 0; c < n; ++c)
      if (static_cast<int>(c) != a && static_cast<int>(c) != b &&
          leq_[static_cast<std::size_t>(a)][c] &&
          leq_[c][static_cast<std::size_t>(b)])
        throw ValidationError(
            "cover pair (" + elements_[static_cast<std::size_t>(a)] + ", " +
            elements_[static_cast<std::size_t>(b)] +
            ") is implied by transitivity through " + elements_[c]);
  for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
}

int FinitePoset::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == id) return static_cast<int>(i);
  return -1;
}

bool FinitePoset::leq(int a, int b) const {
  return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

bool FinitePoset::leq(const std::string& a, const std::string& b) const {
  int i = index_of(a), j = index_of(b);
  if (i < 0 || j < 0) throw ValidationError("unknown element in leq query");
  return leq(i, j);
}

std::vector<std::string> maximal_elements(const FinitePoset& p) {
  std::vector<std::string> out;
  int n = static_cast<int>(p.size());
  for (int a = 0; a < n; ++a) {
    bool has_successor = false;
    for (int b = 0; b < n && !has_successor; ++b)
      has_successor = a != b && p.leq(a, b);
    if (!has_successor) out.push_back(p.elements()[static_cast<std::size_t>(a)]);
  }
  return out;
}

std::vector<std::string> minimal_elements(const FinitePoset& p) {
  std::vector<std::string> out;
  int n = static_cast<int>(p.size());
  for (int a = 0; a < n; ++a) {
    bool has_predecessor = false;
    for (int b = 0; b < n && !has_predecessor; ++b)
      has_predecessor = a != b && p.leq(b, a);
    if (!has_predecessor) out.push_back(p.elements()[static_cast<std::size_t>(a)]);
  }
  return out;
}

bool is_directed(const FinitePoset& p) {
  if (p.empty()) throw EmptyPosetError();
  int n = static_cast<int>(p.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool bound = false;
      for (int c = 0; c < n && !bound; ++c) bound = p.leq(a, c) && p.leq(b, c);
      if (!bound) return false;
    }
  return true;
}

bool is_codirected(const FinitePoset& p) {
  if (p.empty()) throw EmptyPosetError();
  int n = static_cast<int>(p.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool bound = false;
      for (int c = 0; c < n && !bound; ++c) bound = p.leq(c, a) && p.leq(c, b);
      if (!bound) return false;
    }
  return true;
}

namespace {

std::vector<int> component_labels(const FinitePoset& p) {
  std::vector<int> label(p.size());
  std::iota(label.begin(), label.end(), 0);
  std::vector<std::vector<int>> adj(p.size());
  for (const auto& [a, b] : p.covers()) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      label[v] = static_cast<int>(s);
      for (int w : adj[v])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(static_cast<std::size_t>(w));
        }
    }
  }
  return label;
}

}  // namespace

std::vector<std::vector<std::string>> connected_components(const FinitePoset& p) {
  std::vector<int> label = component_labels(p);
  std::map<int, std::vector<std::string>> buckets;
  for (std::size_t i = 0; i < p.size(); ++i)
    buckets[label[i]].push_back(p.elements()[i]);
  std::vector<std::vector<std::string>> out;
  for (auto& [root, members] : buckets) out.push_back(std::move(members));
  return out;
}

bool is_w_local(const FinitePoset& p) {
  std::vector<int> label = component_labels(p);
  std::map<int, int> minima_per_component;
  for (const auto& id : minimal_elements(p))
    ++minima_per_component[label[static_cast<std::size_t>(p.index_of(id))]];
  std::set<int> roots(label.begin(), label.end());
  for (int root : roots)
    if (minima_per_component[root] != 1) return false;
  return true;
}

std::vector<Chain> all_chains(const FinitePoset& p) {
  std::vector<std::vector<int>> found;
  int n = static_cast<int>(p.size());
  std::vector<int> current;
  auto extend = [&](auto&& self, int last) -> void {
    found.push_back(current);
    for (int next = 0; next < n; ++next) {
      if (next == last || !p.leq(last, next)) continue;
      current.push_back(next);
      self(self, next);
      current.pop_back();
    }
  };
  for (int start = 0; start < n; ++start) {
    current = {start};
    extend(extend, start);
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() != b.size() ? a.size() < b.size() : a < b;
                   });
  std::vector<Chain> out;
  out.reserve(found.size());
  for (const auto& members : found) {
    Chain c;
    for (int i : members) c.push_back(p.elements()[static_cast<std::size_t>(i)]);
    out.push_back(std::move(c));
  }
  return out;
}

FinitePoset subdivision(const FinitePoset& p) {
  std::vector<Chain> chains = all_chains(p);
  std::vector<std::string> elements;
  elements.reserve(chains.size());
  for (const auto& c : chains) elements.push_back(chain_key(c));

  auto contains_all = [](const Chain& big, const Chain& small) {
    for (const auto& id : small)
      if (std::find(big.begin(), big.end(), id) == big.end()) return false;
    return true;
  };

  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t j = 0; j < chains.size(); ++j)
      if (chains[j].size() == chains[i].size() + 1 &&
          contains_all(chains[j], chains[i]))
        covers.emplace_back(elements[i], elements[j]);
  return FinitePoset(std::move(elements), std::move(covers));
}

OrderComplex order_complex(const FinitePoset& p) {
  OrderComplex k;
  k.vertices = p.elements();
  for (const auto& chain : all_chains(p)) {
    std::size_t dim = chain.size() - 1;
    if (k.simplices_by_dim.size() <= dim) k.simplices_by_dim.resize(dim + 1);
    k.simplices_by_dim[dim].push_back(chain);
  }
  return k;
}

GroupPresentation edge_path_group(const OrderComplex& k,
                                  const std::string& basepoint) {
  std::unordered_map<std::string, int> vid;
  for (const auto& v : k.vertices)
    vid.emplace(v, static_cast<int>(vid.size()));
  auto base = vid.find(basepoint);
  if (base == vid.end())
    throw PreconditionError("basepoint is not a vertex: " + basepoint);

  const std::vector<Chain> no_simplices;
  const std::vector<Chain>& edges =
      k.simplices_by_dim.size() > 1 ? k.simplices_by_dim[1] : no_simplices;
  const std::vector<Chain>& triangles =
      k.simplices_by_dim.size() > 2 ? k.simplices_by_dim[2] : no_simplices;

  // Spanning tree: breadth-first from the basepoint, neighbours visited in
  // lexicographic id order.
  std::vector<std::vector<std::string>> nbr(k.vertices.size());
  for (const auto& e : edges) {
    nbr[static_cast<std::size_t>(vid[e[0]])].push_back(e[1]);
    nbr[static_cast<std::size_t>(vid[e[1]])].push_back(e[0]);
  }
  for (auto& list : nbr) std::sort(list.begin(), list.end());

  std::set<std::pair<int, int>> tree;  // normalized (min, max) vertex pairs
  std::vector<bool> seen(k.vertices.size(), false);
  std::vector<int> frontier{base->second};
  seen[static_cast<std::size_t>(base->second)] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier)
      for (const auto& w_id : nbr[static_cast<std::size_t>(v)]) {
        int w = vid[w_id];
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        tree.emplace(std::min(v, w), std::max(v, w));
        next.push_back(w);
      }
    frontier = std::move(next);
  }
  if (reached != k.vertices.size())
    throw DisconnectedError("order complex is disconnected from basepoint " +
                            basepoint);

  // One generator per non-tree edge, oriented along the chain.
  std::map<std::pair<int, int>, int> gen_of_edge;
  std::vector<std::string> gen_names;
  for (const auto& e : edges) {
    int a = vid[e[0]], b = vid[e[1]];
    std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    if (tree.count(key)) continue;
    gen_of_edge[{a, b}] = static_cast<int>(gen_names.size());
    gen_names.push_back(e[0] + "<" + e[1]);
  }

  // Word of the directed edge a -> b (both orientations of each edge occur
  // in triangle relators).
  auto edge_word = [&](const std::string& a_id, const std::string& b_id) {
    int a = vid[a_id], b = vid[b_id];
    auto fwd = gen_of_edge.find({a, b});
    if (fwd != gen_of_edge.end()) return Word::generator(fwd->second);
    auto rev = gen_of_edge.find({b, a});
    if (rev != gen_of_edge.end()) return Word::generator(rev->second, true);
    return Word();  // tree edge
  };

  std::vector<Word> relators;
  for (const auto& t : triangles)
    relators.push_back(edge_word(t[0], t[1]) * edge_word(t[1], t[2]) *
                       edge_word(t[0], t[2]).inverse());
  return GroupPresentation(std::move(gen_names), std::move(relators));
}

std::optional<std::string> unique_maximum(const FinitePoset& p) {
  auto maxima = maximal_elements(p);
  if (maxima.size() == 1) return maxima[0];
  return std::nullopt;
}

}  // namespace strat
