#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qyd/combinatorics.hpp"
#include "qyd/poly.hpp"
#include "qyd/qsym.hpp"

namespace qyd {

// ---------------------------------------------------------------------------
// Word quasi-symmetric functions: finitely supported rational combinations of
// basis elements indexed by packed words. The basis element of u expands as
// the sum of all words whose packing pattern is u; its commutative image is
// the monomial quasi-symmetric element of the letter-count composition.
// ---------------------------------------------------------------------------
class WQSymElement {
 public:
  std::map<PackedWord, Rational> coeffs;  // no zero coefficients stored

  WQSymElement() = default;
  static WQSymElement basis(const PackedWord& u, const Rational& c = 1);
  static WQSymElement one();  // basis element of the empty word

  bool is_zero() const { return coeffs.empty(); }
  Rational coeff(const PackedWord& u) const;
  // True when every stored word has the same length (vacuously for zero);
  // writes that common length through the pointer when supplied.
  bool is_homogeneous(int* length = nullptr) const;
  bool audit_no_zero_terms() const;

  WQSymElement& operator+=(const WQSymElement& o);
  WQSymElement& operator-=(const WQSymElement& o);
  WQSymElement operator-() const;
  WQSymElement& operator*=(const Rational& c);

  bool operator==(const WQSymElement&) const = default;
  std::string str() const;  // "1*P:121 + -1*P:21"; unit prints as "P:()"
};

WQSymElement operator+(WQSymElement a, const WQSymElement& b);
WQSymElement operator-(WQSymElement a, const WQSymElement& b);
WQSymElement operator*(const Rational& c, WQSymElement f);

// Expansion in ordinary letters a1..an_vars: the sum of all words with the
// given packing pattern (zero when the pattern needs more distinct letters
// than n_vars provides). The index must be a packed word.
NCPoly p_expand(const PackedWord& u, int n_vars);
NCPoly wq_expand(const WQSymElement& f, int n_vars);

// ---------------------------------------------------------------------------
// Signed ordered letter alphabets, the noncommutative counterpart of the
// signed variable alphabets: an entry is a sign together with a letter, and
// the entry order is the alphabet order.
// ---------------------------------------------------------------------------
struct NCAlphabetEntry {
  int sign = 1;  // +1 or -1
  Letter letter{};
  bool operator==(const NCAlphabetEntry&) const = default;
};
using NCAlphabetSpec = std::vector<NCAlphabetEntry>;

// First n entries of the alternating letter alphabet: -a1 +a2 -a3 +a4 ...
NCAlphabetSpec virtual_a(int n);

// Basis expansion on a signed alphabet. For a nondecreasing index the block
// rule is applied with the noncommuting letters of every monomial kept in
// nondecreasing order; a general index permutes the positions of every
// monomial by its sorting permutation afterwards.
NCPoly p_expand_on(const PackedWord& u, const NCAlphabetSpec& alph);

// Expansion on the alternating alphabet truncated to n letters.
NCPoly p_virtual_expand(const PackedWord& u, int n);
NCPoly wq_virtual_expand(const WQSymElement& f, int n);

// ---------------------------------------------------------------------------
// The defining substitution equation for families of stable noncommutative
// truncations. family(n) is the truncation in a1..an; stability and the
// equal-letter substitution identity are checked for all admissible (n, i).
// ---------------------------------------------------------------------------
FuncEqReport check_functional_eq_nc(const std::function<NCPoly(int)>& family, int n_max);

// Product: expand both factors in enough letters (the combined degree
// suffices, since a packed word only uses as many letters as its length),
// multiply, and re-expand in the basis by repeatedly peeling the packed
// pattern of the least remaining word. A remainder whose least word is not
// packed signals an internal inconsistency and throws.
WQSymElement wq_product(const WQSymElement& U, const WQSymElement& V);
inline WQSymElement operator*(const WQSymElement& a, const WQSymElement& b) {
  return wq_product(a, b);
}

// Right action permuting the positions inside every word: (w.s)_k = w_{s(k)}.
// Requires homogeneous input of degree s.n(); throws on a degree mismatch.
NCPoly sn_action(const NCPoly& f, const Permutation& s);
WQSymElement sn_action(const WQSymElement& f, const Permutation& s);

// Deletion operator: the basis element of u maps to the basis element of v
// when u is v with one extra final letter max(v)+1 (equivalently: the last
// letter of u is its unique maximum), and to zero otherwise. The basis
// element of the one-letter word maps to the unit.
WQSymElement delta_op(const WQSymElement& f);

// Letter change from the alternating alphabet to the two-row letters at m
// columns: a_{2i+1} -> (d_{i+1}+...+d_m) - (b_1+...+b_i) and
// a_{2i} -> (d_i+...+d_m) - (b_1+...+b_i). Every input letter must be an
// a-letter of index at most 2m+1.
NCPoly phi_a_to_bd(const NCPoly& f, int m);

// Inverse letter change: b_i -> a_{2i-1} - a_{2i}, d_i -> a_{2i} - a_{2i+1}.
// Every input letter must be a b- or d-letter of index at most m.
NCPoly phi_bd_to_a(const NCPoly& f, int m);

// Image of the basis expansion on the alternating alphabet under the letter
// change, computed by a dense block-rule convolution; exactly equal to
// phi_a_to_bd(p_virtual_expand(u, 2*m+1), m).
NCPoly phi_p_virtual_image(const PackedWord& u, int m);

// Exact dimension of the degree-n part of the position-permuted left ideal
// generated by the one-letter basis element: the span of all (W*P1).s over
// basis elements W of degree n-1 and permutations s of n positions.
int kernel_ideal_dimension(int n);

// Exact nullity at degree n of the letter-change map on the span of the
// alternating-alphabet basis expansions, at truncation width m (>= n).
// The result is recomputed at width m+1 and a disagreement throws, so a
// returned value is certified stable across consecutive widths.
int phi_kernel_dimension(int n, int m);

// Checks that a family of width-m truncations in the two-row letters
// b_1..b_m, d_1..d_m describes a genuine function on diagrams, the
// noncommutative counterpart of the commutative solution-space membership
// test. family(m) is the width-m truncation. Verified for every width up to
// m_max: appending an empty column is neutral (stability, reported with
// i = 0); killing d_i merges b_i with b_{i+1} and closes the gap (reported
// as "d-zero"); killing b_i merges d_{i-1} with d_i and closes the gap
// (reported as "b-zero"); at the boundary the merge partner does not exist
// and the column is simply erased (d_m: plain restriction; b_1: every
// remaining index shifts down by one).
FuncEqReport check_solprime_nc(const std::function<NCPoly(int)>& family, int m_max);

}  // namespace qyd
