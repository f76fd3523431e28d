#pragma once

#include <string>
#include <vector>

#include "qyd/combinatorics.hpp"
#include "qyd/qsym.hpp"

namespace qyd {

// Young diagrams are weakly decreasing lists of positive row lengths.
using YoungDiagram = Partition;

std::string diagram_str(const YoungDiagram& lam);  // "4,4,2"; empty -> "()"
YoungDiagram diagram_parse(const std::string& s);  // accepts "4,4,2", "()", ""

// ---------------------------------------------------------------------------
// Interlacing coordinates: the abscissas of the local minima and maxima of
// the diagram's profile (Russian convention), in decreasing order. Odd-length
// strictly decreasing integer list with alternating sum zero; the empty
// diagram has coordinates (0).
// ---------------------------------------------------------------------------
std::vector<int> interlacing_coords(const YoungDiagram& lam);

// Inverse map. Equal adjacent values are erased pairwise first (weakly
// decreasing inputs denote the same diagram); then the list must be odd
// length, strictly decreasing, with alternating sum zero.
YoungDiagram diagram_from_interlacing(std::vector<int> xs);

// ---------------------------------------------------------------------------
// Multirectangular coordinates: column block widths q and heights p. The
// canonical form of a diagram has all entries positive and is unique;
// degenerate forms (zero entries) are accepted as input everywhere.
// ---------------------------------------------------------------------------
struct MultirectCoords {
  std::vector<int> p;
  std::vector<int> q;

  std::vector<int> qprime() const;  // q'_i = q_i + ... + q_m
  bool operator==(const MultirectCoords&) const = default;
};

// p_i = x_{2i-1} - x_{2i}, q_i = x_{2i} - x_{2i+1}.
MultirectCoords interlacing_to_multirect(const std::vector<int>& xs);

// x_{2i+1} = (q_{i+1}+...+q_m) - (p_1+...+p_i), x_{2i} = x_{2i+1} + q_i.
std::vector<int> multirect_to_interlacing(const MultirectCoords& c);

// Canonical coordinates: p_i = multiplicity of the i-th distinct row length
// (largest first), q'_i = that row length.
MultirectCoords multirect_coords(const YoungDiagram& lam);

// Accepts degenerate forms; rejects coordinate lists that match no diagram.
YoungDiagram diagram_from_multirect(const MultirectCoords& c);

// ---------------------------------------------------------------------------
// Frobenius coordinates: a_i = lam_i - i + 1/2, b_i = lam'_i - i + 1/2 for
// i = 1..d with d the number of diagonal cells; exact half-integers.
// ---------------------------------------------------------------------------
struct FrobeniusCoords {
  std::vector<Rational> a;
  std::vector<Rational> b;

  int d() const { return static_cast<int>(a.size()); }
  bool operator==(const FrobeniusCoords&) const = default;
};

FrobeniusCoords frobenius_coords(const YoungDiagram& lam);

// ---------------------------------------------------------------------------
// Signed alphabets attached to a diagram. All three evaluate any
// quasi-symmetric function to the same value.
// ---------------------------------------------------------------------------

// Interlacing coordinates with alternating signs starting negative.
SignedAlphabet interlacing_alphabet(const YoungDiagram& lam);
SignedAlphabet interlacing_alphabet_at(const std::vector<int>& xs);

// Row-coordinate alphabet truncated after k rows (k >= number of rows):
// pairs -(lam_i - i + 1), +(lam_i - i) for i = 1..k, closed by -(-k).
SignedAlphabet row_alphabet(const YoungDiagram& lam, int k);

// Frobenius alphabet: -(a_i + 1/2), +(a_i - 1/2) for i = 1..d, then
// +(b_i - 1/2), -(b_i + 1/2) for i = d..1.
SignedAlphabet frobenius_alphabet(const YoungDiagram& lam);

// Evaluation of a quasi-symmetric function at a diagram (exact).
Rational act_y(const QSymElement& f, const YoungDiagram& lam);

// Rank of the evaluation matrix of the degree-n basis over a growing family
// of diagrams; stops at 2^{n-2} (the proven ceiling) or on a stable plateau.
int qlambda_dimension(int n);

}  // namespace qyd
