#pragma once

#include <utility>
#include <vector>

#include "qyd/combinatorics.hpp"
#include "qyd/poly.hpp"
#include "qyd/qsym.hpp"

namespace qyd {

// ---------------------------------------------------------------------------
// Bipartite graphs with two kinds of cross edges. An assignment r of values
// in {1..m} to the vertices is admissible when r(v) <= r(w) across every weak
// edge (v, w) and r(w) < r(v) across every strict edge (v, w). Every
// generating function below sums over admissible assignments.
// ---------------------------------------------------------------------------
struct BipartiteGraph {
  int n = 0;                             // vertices are 1..n
  std::vector<int> v1, v2;               // increasing, disjoint, union {1..n}
  std::vector<std::pair<int, int>> e12;  // weak edges (v in v1, w in v2)
  std::vector<std::pair<int, int>> e21;  // strict edges (v in v1, w in v2)
  bool labelled = false;                 // word-valued operations use positions
  bool operator==(const BipartiteGraph&) const = default;
};

// Builds a graph with v2 = {1..n} \ v1; sorts and deduplicates the input,
// then validates the shape (throws std::invalid_argument when malformed).
BipartiteGraph make_graph(int n, std::vector<int> v1,
                          std::vector<std::pair<int, int>> e12,
                          std::vector<std::pair<int, int>> e21, bool labelled = false);

// True when every vertex is an endpoint of at least one weak edge — the
// hypothesis under which the two-row series solves the coordinate equations.
bool weak_cover(const BipartiteGraph& g);

Var uvar(int i);  // the one-alphabet variables u1, u2, ...

// Two-row generating polynomial: the sum over admissible r into {1..m} of
// the product of p_{r(v)} over v1 and q_{r(w)} over v2. Independent of the
// labelling.
CommPoly ng_eval(const BipartiteGraph& g, int m);

// One-alphabet generating polynomial in u1..u_{n_vars}: the sum over
// admissible r of the product of u_{r(v)} over all vertices. Quasi-symmetric
// by construction.
CommPoly fg_expand(const BipartiteGraph& g, int n_vars);

// Basis coordinates of the one-alphabet series, extracted by matching the
// monomials with consecutive leading support and certified by re-expansion.
QSymElement fg_qsym(const BipartiteGraph& g);

// Checks that evaluating the one-alphabet series on the alternating virtual
// alphabet and rewriting in two-row coordinates reproduces the two-row
// polynomial times (-1)^{|v1|}. Throws std::invalid_argument when the
// weak-cover hypothesis fails.
bool verify_ng_formula(const BipartiteGraph& g, int m);

// Labelled graph attached to a set composition with an even number of blocks:
// blocks alternate sides starting with v1, consecutive blocks are joined
// completely — weakly from block 2t-1 to block 2t, strictly from block 2t to
// block 2t+1. Throws std::invalid_argument on an odd block count.
BipartiteGraph graph_from_setcomp(const SetComposition& k);

// Word-valued two-row evaluation: each admissible r contributes the length-n
// word whose letter at position v is b_{r(v)} for v in v1 and d_{r(v)} for
// v in v2. Requires a labelled graph.
NCPoly nc_ng_eval(const BipartiteGraph& g, int m);

// Packed words admissible as assignments; admissibility only depends on the
// relative order of values, so these index the word classes of the
// one-alphabet series. Requires a labelled graph.
std::vector<PackedWord> fg_admissible_words(const BipartiteGraph& g);

// Interleaved letter-count sequence (#b1, #d1, #b2, #d2, ...) up to max_index.
std::vector<int> nc_word_evaluation(const NCWord& w, int max_index);

// Exact rank of the word-valued evaluations at m = n over the graphs of all
// even-block set compositions of n. Also certifies that in each polynomial a
// unique word has the lexicographically largest letter-count sequence, that
// it places letter b_t on block 2t-1 and d_t on block 2t (so the composition
// can be read back), and that these words are pairwise distinct across the
// family; throws std::logic_error if any of that fails.
int gk_independence_rank(int n);

}  // namespace qyd
