#include "qyd/ngraphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "qyd/linalg.hpp"
#include "qyd/stanley.hpp"

namespace qyd {

namespace {

void require_graph(const BipartiteGraph& g) {
  if (g.n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  std::vector<char> side(static_cast<std::size_t>(g.n) + 1, 0);
  const auto place = [&](const std::vector<int>& part, char tag) {
    for (int v : part) {
      if (v < 1 || v > g.n || side[static_cast<std::size_t>(v)] != 0)
        throw std::invalid_argument("vertex sides must partition 1..n");
      side[static_cast<std::size_t>(v)] = tag;
    }
  };
  place(g.v1, 1);
  place(g.v2, 2);
  for (int v = 1; v <= g.n; ++v)
    if (side[static_cast<std::size_t>(v)] == 0)
      throw std::invalid_argument("vertex sides must partition 1..n");
  if (!std::is_sorted(g.v1.begin(), g.v1.end()) || !std::is_sorted(g.v2.begin(), g.v2.end()))
    throw std::invalid_argument("vertex sides must be increasing");
  const auto check_edges = [&](const std::vector<std::pair<int, int>>& es) {
    for (const auto& [v, w] : es)
      if (v < 1 || v > g.n || w < 1 || w > g.n || side[static_cast<std::size_t>(v)] != 1 ||
          side[static_cast<std::size_t>(w)] != 2)
        throw std::invalid_argument("edges must join v1 to v2");
    if (!std::is_sorted(es.begin(), es.end()) ||
        std::adjacent_find(es.begin(), es.end()) != es.end())
      throw std::invalid_argument("edge lists must be sorted and duplicate-free");
  };
  check_edges(g.e12);
  check_edges(g.e21);
}

bool admissible(const BipartiteGraph& g, const std::vector<int>& r) {
  for (const auto& [v, w] : g.e12)
    if (r[static_cast<std::size_t>(v - 1)] > r[static_cast<std::size_t>(w - 1)]) return false;
  for (const auto& [v, w] : g.e21)
    if (r[static_cast<std::size_t>(w - 1)] >= r[static_cast<std::size_t>(v - 1)]) return false;
  return true;
}

// Calls f on every assignment r in {1..m}^n (once, with empty r, if n = 0).
void for_each_assignment(int n, int m, const std::function<void(const std::vector<int>&)>& f) {
  if (n == 0) {
    const std::vector<int> r;
    f(r);
    return;
  }
  if (m <= 0) return;
  std::vector<int> r(static_cast<std::size_t>(n), 1);
  while (true) {
    f(r);
    int i = 0;
    while (i < n && r[static_cast<std::size_t>(i)] == m) {
      r[static_cast<std::size_t>(i)] = 1;
      ++i;
    }
    if (i == n) break;
    ++r[static_cast<std::size_t>(i)];
  }
}

}  // namespace

BipartiteGraph make_graph(int n, std::vector<int> v1, std::vector<std::pair<int, int>> e12,
                          std::vector<std::pair<int, int>> e21, bool labelled) {
  BipartiteGraph g;
  g.n = n;
  std::sort(v1.begin(), v1.end());
  v1.erase(std::unique(v1.begin(), v1.end()), v1.end());
  for (int v : v1)
    if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
  std::vector<char> in1(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  for (int v : v1) in1[static_cast<std::size_t>(v)] = 1;
  for (int v = 1; v <= n; ++v)
    if (!in1[static_cast<std::size_t>(v)]) g.v2.push_back(v);
  g.v1 = std::move(v1);
  const auto tidy = [](std::vector<std::pair<int, int>>& es) {
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
  };
  tidy(e12);
  tidy(e21);
  g.e12 = std::move(e12);
  g.e21 = std::move(e21);
  g.labelled = labelled;
  require_graph(g);
  return g;
}

bool weak_cover(const BipartiteGraph& g) {
  std::vector<char> hit(static_cast<std::size_t>(g.n) + 1, 0);
  for (const auto& [v, w] : g.e12) {
    hit[static_cast<std::size_t>(v)] = 1;
    hit[static_cast<std::size_t>(w)] = 1;
  }
  for (int v = 1; v <= g.n; ++v)
    if (!hit[static_cast<std::size_t>(v)]) return false;
  return true;
}

Var uvar(int i) { return Var{'u', i}; }

CommPoly ng_eval(const BipartiteGraph& g, int m) {
  require_graph(g);
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  CommPoly out;
  for_each_assignment(g.n, m, [&](const std::vector<int>& r) {
    if (!admissible(g, r)) return;
    std::map<Var, int> exps;
    for (int v : g.v1) exps[pvar(r[static_cast<std::size_t>(v - 1)])] += 1;
    for (int w : g.v2) exps[qvar(r[static_cast<std::size_t>(w - 1)])] += 1;
    out.terms[Monomial(exps.begin(), exps.end())] += 1;
  });
  return out;
}

CommPoly fg_expand(const BipartiteGraph& g, int n_vars) {
  require_graph(g);
  if (n_vars < 0) throw std::invalid_argument("n_vars must be nonnegative");
  CommPoly out;
  for_each_assignment(g.n, n_vars, [&](const std::vector<int>& r) {
    if (!admissible(g, r)) return;
    std::map<Var, int> exps;
    for (int v = 1; v <= g.n; ++v) exps[uvar(r[static_cast<std::size_t>(v - 1)])] += 1;
    out.terms[Monomial(exps.begin(), exps.end())] += 1;
  });
  return out;
}

QSymElement fg_qsym(const BipartiteGraph& g) {
  require_graph(g);
  const int nv = g.n;
  const CommPoly f = fg_expand(g, nv);
  QSymElement out;
  for (const auto& [mo, c] : f.terms) {
    bool leading = true;
    Composition I;
    for (std::size_t k = 0; k < mo.size(); ++k) {
      if (mo[k].first.fam != 'u' || mo[k].first.idx != static_cast<int>(k) + 1) {
        leading = false;
        break;
      }
      I.push_back(mo[k].second);
    }
    if (leading) out.coeffs[I] = c;
  }
  // Matching is only meaningful for quasi-symmetric input; certify it.
  SignedAlphabet ua;
  for (int i = 1; i <= nv; ++i) ua.push_back(plus_var(uvar(i)));
  CommPoly back;
  for (const auto& [I, c] : out.coeffs)
    back += c * expand_on_alphabet(QSymElement::monomial(I), ua);
  if (back != f)
    throw std::logic_error("one-alphabet series failed quasi-symmetry reconstruction");
  return out;
}

bool verify_ng_formula(const BipartiteGraph& g, int m) {
  require_graph(g);
  if (!weak_cover(g))
    throw std::invalid_argument("every vertex must meet a weak edge");
  const QSymElement f = fg_qsym(g);
  CommPoly two_row = ng_eval(g, m);
  if (g.v1.size() % 2 == 1) two_row = -two_row;
  return phi_x_to_pq(f, m) == two_row;
}

BipartiteGraph graph_from_setcomp(const SetComposition& k) {
  if (k.size() % 2 != 0)
    throw std::invalid_argument("set composition must have an even number of blocks");
  int n = 0;
  for (const auto& block : k) n += static_cast<int>(block.size());
  std::vector<int> v1;
  std::vector<std::pair<int, int>> e12, e21;
  for (std::size_t j = 0; j < k.size(); j += 2) {
    v1.insert(v1.end(), k[j].begin(), k[j].end());
    for (int v : k[j])
      for (int w : k[j + 1]) e12.emplace_back(v, w);
    if (j >= 2)
      for (int v : k[j])
        for (int w : k[j - 1]) e21.emplace_back(v, w);
  }
  return make_graph(n, std::move(v1), std::move(e12), std::move(e21), true);
}

NCPoly nc_ng_eval(const BipartiteGraph& g, int m) {
  require_graph(g);
  if (!g.labelled)
    throw std::invalid_argument("word-valued evaluation needs a labelled graph");
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  std::vector<char> in1(static_cast<std::size_t>(g.n) + 1, 0);
  for (int v : g.v1) in1[static_cast<std::size_t>(v)] = 1;
  NCPoly out;
  for_each_assignment(g.n, m, [&](const std::vector<int>& r) {
    if (!admissible(g, r)) return;
    NCWord w(static_cast<std::size_t>(g.n));
    for (int v = 1; v <= g.n; ++v)
      w[static_cast<std::size_t>(v - 1)] =
          Letter{in1[static_cast<std::size_t>(v)] ? 'b' : 'd', r[static_cast<std::size_t>(v - 1)]};
    out.terms[w] += 1;
  });
  return out;
}

std::vector<PackedWord> fg_admissible_words(const BipartiteGraph& g) {
  require_graph(g);
  if (!g.labelled)
    throw std::invalid_argument("admissible words need a labelled graph");
  std::vector<PackedWord> out;
  for (const PackedWord& u : packed_words(g.n))
    if (admissible(g, u)) out.push_back(u);
  return out;
}

std::vector<int> nc_word_evaluation(const NCWord& w, int max_index) {
  std::vector<int> ev(static_cast<std::size_t>(2 * std::max(max_index, 0)), 0);
  for (const Letter& l : w) {
    if (l.idx < 1 || l.idx > max_index || (l.fam != 'b' && l.fam != 'd'))
      throw std::invalid_argument("letter outside the b/d families with index <= max_index");
    ev[static_cast<std::size_t>(2 * (l.idx - 1) + (l.fam == 'd' ? 1 : 0))] += 1;
  }
  return ev;
}

int gk_independence_rank(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const auto comps = set_compositions(n, BlockParity::even);
  std::vector<NCPoly> polys;
  polys.reserve(comps.size());
  std::set<NCWord> leaders;
  for (const SetComposition& k : comps) {
    const BipartiteGraph g = graph_from_setcomp(k);
    NCPoly p = nc_ng_eval(g, n);
    NCWord predicted(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < k.size(); ++j)
      for (int pos : k[j])
        predicted[static_cast<std::size_t>(pos - 1)] =
            Letter{j % 2 == 0 ? 'b' : 'd', static_cast<int>(j / 2) + 1};
    const NCWord* best = nullptr;
    std::vector<int> best_ev;
    bool unique_best = true;
    for (const auto& term : p.terms) {
      std::vector<int> ev = nc_word_evaluation(term.first, n);
      if (best == nullptr || ev > best_ev) {
        best = &term.first;
        best_ev = std::move(ev);
        unique_best = true;
      } else if (ev == best_ev) {
        unique_best = false;
      }
    }
    if (best == nullptr || !unique_best || *best != predicted)
      throw std::logic_error("leading-word certificate failed");
    if (!leaders.insert(predicted).second)
      throw std::logic_error("leading words are not pairwise distinct");
    polys.push_back(std::move(p));
  }
  return rank_of_nc(polys);
}

}  // namespace qyd
