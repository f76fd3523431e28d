#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qyd/rational.hpp"

namespace qyd {

// ---------------------------------------------------------------------------
// Compositions: ordered lists of positive integers. The empty vector is the
// unique composition of 0.
// ---------------------------------------------------------------------------
using Composition = std::vector<int>;

int comp_weight(const Composition& c);

// All 2^{n-1} compositions of n (just the empty one for n = 0), in
// lexicographic order on the part lists: 3 -> (1,1,1),(1,2),(2,1),(3).
std::vector<Composition> compositions_of(int n);

Composition comp_mirror(Composition c);  // reversed part list

// All compositions obtained by summing adjacent runs of consecutive parts,
// enumerated by the subset of surviving cut points in binary-counter order:
// (1,2,2) -> (1,2,2),(3,2),(1,4),(5). Count is 2^{length-1}.
std::vector<Composition> coarsenings(const Composition& c);

// Multisets are maps object -> multiplicity; they are never flattened.
std::map<Composition, long> quasi_shuffle(const Composition& a, const Composition& b);
std::map<Composition, long> shuffle(const Composition& a, const Composition& b);

std::string comp_str(const Composition& c);  // "1.2.2"; empty composition -> ""
Composition comp_parse(const std::string& s);

// ---------------------------------------------------------------------------
// Partitions: weakly decreasing compositions, used as Young diagram row lists.
// ---------------------------------------------------------------------------
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
std::vector<Partition> partitions_of(int n);          // first part descending
std::vector<Partition> partitions_up_to(int wmax);    // all |λ| = 0..wmax, in weight order
Partition conjugate(const Partition& p);

// ---------------------------------------------------------------------------
// Permutations of {1,…,n}, one-line notation.
//
// Convention: the product σ·τ means "apply σ, then τ", i.e.
// (σ·τ)(x) = τ(σ(x)). All factorization code in this library depends on it.
// ---------------------------------------------------------------------------
struct Permutation {
  std::vector<int> img;  // img[i-1] = image of i

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<std::size_t>(i) - 1]; }
  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return img < o.img; }
};

Permutation perm_identity(int n);
Permutation perm_product(const Permutation& a, const Permutation& b);  // apply a, then b
Permutation perm_inverse(const Permutation& s);
std::vector<std::vector<int>> perm_cycles(const Permutation& s);  // sorted by least element
int perm_sign(const Permutation& s);                              // (-1)^{n - #cycles}
std::vector<Permutation> all_permutations(int n);                 // lex order on one-line words
std::string perm_str(const Permutation& s);
Partition cycle_type(const Permutation& s);  // cycle lengths, largest first

// All k! pairs (σ, τ) with σ·τ = π ("apply σ, then τ"); σ runs over S_k in
// lexicographic order and determines τ.
std::vector<std::pair<Permutation, Permutation>> two_factorizations(const Permutation& pi);

// ---------------------------------------------------------------------------
// Set compositions: ordered lists of disjoint nonempty blocks covering {1..n}.
// ---------------------------------------------------------------------------
using SetComposition = std::vector<std::vector<int>>;  // each block increasing

enum class BlockParity { all, odd, even };

// Enumerated via the word w (w_i = block index of element i), in lexicographic
// word order; counts give the ordered Bell numbers 1,1,3,13,75,541,…
std::vector<SetComposition> set_compositions(int n, BlockParity parity = BlockParity::all);

std::string setcomp_str(const SetComposition& k);  // "{2,3}|{1,5}|{6}|{4}"
SetComposition setcomp_parse(const std::string& s);

Integer ordered_bell(int n);

// ---------------------------------------------------------------------------
// Packed words: words on {1,…,d} in which every value 1..max occurs.
// ---------------------------------------------------------------------------
using PackedWord = std::vector<int>;

bool is_packed(const PackedWord& w);
PackedWord pack(const std::vector<int>& w);  // order-preserving relabel onto {1..d}
std::vector<PackedWord> packed_words(int n);  // lex order; count = ordered_bell(n)
Composition word_eval(const PackedWord& u);   // (#1s, #2s, …, #max's)
PackedWord sorted_word(PackedWord u);          // u↑, letters nondecreasing

// The lexicographically least σ with (u↑ · σ) = u, where (w·σ)_k = w_{σ(k)}.
Permutation sorting_perm(const PackedWord& u);

// Positions permuted: (w·σ)_k = w_{σ(k)}.
std::vector<int> word_action(const std::vector<int>& w, const Permutation& s);

std::string word_str(const PackedWord& w);  // "132212", dot-separated if a letter > 9
PackedWord word_parse(const std::string& s);

}  // namespace qyd
