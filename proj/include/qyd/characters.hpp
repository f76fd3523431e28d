#pragma once
// Normalized character polynomials: for a partition mu, the function on Young
// diagrams lam |-> |lam|(|lam|-1)...(|lam|-|mu|+1) times the normalized
// irreducible symmetric-group character at cycle type mu padded with fixed
// points (zero when |lam| < |mu|). Two independent routes are provided: a
// combinatorial expansion over the composition basis evaluated in
// multirectangular coordinates, and a border-strip character oracle.

#include "qyd/combinatorics.hpp"
#include "qyd/diagrams.hpp"
#include "qyd/rational.hpp"
#include "qyd/stanley.hpp"

namespace qyd {

// Irreducible character chi^lam_rho by the border-strip recursion, memoized.
// Throws std::invalid_argument when |lam| != |rho|. The dimension of the
// representation is the value at rho = 1^{|lam|}.
Integer mn_character(const Partition& lam, const Partition& rho);

// Canonical permutation of cycle type mu: cycles filled with consecutive
// integers, largest part first.
Permutation cycle_type_rep(const Partition& mu);

// Basis coordinates of the normalized character polynomial: sum over the
// two-factor factorizations sigma . tau = pi of sign(tau) times one basis
// element per bijection phi from the sigma-cycles to {1..#cycles}; the
// composition's j-th part is 1 plus the number of tau-cycles whose maximal
// phi-value over intersecting sigma-cycles equals j. The result depends only
// on the cycle type of pi; mu must be nonempty.
HExpansion ch_h_expansion(const Partition& mu);
HExpansion ch_h_expansion_from(const Permutation& pi);

// Value on a diagram: the basis coordinates evaluated at the canonical
// multirectangular presentation of lam. Empty mu gives the constant 1.
Rational ch_eval(const Partition& mu, const YoungDiagram& lam);

// Independent route through the character table.
Rational ch_oracle(const Partition& mu, const YoungDiagram& lam);

}  // namespace qyd
