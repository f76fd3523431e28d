#pragma once
// Functions on Young diagrams in multirectangular coordinates. A diagram cut
// into m rectangles is described by column counts p_1..p_m and row widths
// q_1..q_m (or the partial sums q'_i = q_i + q_{i+1} + ... + q_m). A
// polynomial function of these coordinates is presented by its truncations to
// every width m; the truncations of a well-defined function on diagrams obey
// substitution identities (dropping an empty rectangle must not change the
// value), and the solutions of those identities carry a basis indexed by
// compositions whose last part is at least 2.

#include <functional>
#include <map>
#include <string>

#include "qyd/combinatorics.hpp"
#include "qyd/poly.hpp"
#include "qyd/qsym.hpp"
#include "qyd/rational.hpp"

namespace qyd {

// Coordinate variables p_i, q_i and the partial-sum variant q'_i.
Var pvar(int i);
Var qvar(int i);
Var qpvar(int i);

// Rewrite a width-m polynomial between the q and q' parametrizations.
// Throws std::invalid_argument if a coordinate of index beyond m appears.
CommPoly q_to_qprime(const CommPoly& f, int m);
CommPoly qprime_to_q(const CommPoly& f, int m);

// A polynomial function of multirectangular coordinates: for every m >= 0 a
// polynomial in p_1..p_m and q_1..q_m (q'_1..q'_m when in_qprime is set).
struct PQFamily {
  std::function<CommPoly(int)> truncation;
  bool in_qprime = false;
};

PQFamily pq_family_h(const Composition& I);  // basis element truncations (q')
PQFamily pq_family_phi(QSymElement f);       // image of a quasi-symmetric f (q)
PQFamily pq_family_product(const PQFamily& a, const PQFamily& b);

struct SolPrimeReport {
  bool ok = true;
  std::string what;  // "stability", "q-zero" or "p-zero" when !ok
  int m = 0;         // width at which the first failure occurred
  int i = 0;         // slot index for an equation failure
};

// Checks that the truncations describe a genuine function on diagrams up to
// width m_max: appending an empty rectangle is neutral (stability), collapsing
// a zero row gap q_i = 0 merges the adjacent column counts (checked in q
// variables), and removing a zero column count p_i = 0 erases the slot
// (checked in q' variables). Boundary slots erase the column whose merged
// variable does not exist.
SolPrimeReport check_solprime(const PQFamily& h, int m_max);

// Change of variables between interlacing coordinates x_1..x_{2m+1} and
// multirectangular coordinates: p_i = x_{2i-1} - x_{2i}, q_i = x_{2i} -
// x_{2i+1}, and inversely x_{2i} = (q_i+...+q_m) - (p_1+...+p_i), x_{2i+1} =
// (q_{i+1}+...+q_m) - (p_1+...+p_i). Inputs with variables of index beyond
// the width are rejected with std::invalid_argument.
CommPoly x_to_pq(const CommPoly& f, int m);
CommPoly pq_to_x(const CommPoly& h, int m);

// Expand f on the alternating virtual alphabet in x_1..x_{2m+1}, then change
// variables to p, q. Kills the weight-one basis element for every m.
CommPoly phi_x_to_pq(const QSymElement& f, int m);
// Width-m truncation rewritten as a polynomial in x_1..x_{2m+1}.
CommPoly phi_pq_to_x(const PQFamily& h, int m);

// Width-m truncation of the basis element attached to I (last part >= 2, or I
// empty for the constant 1): the sum over ways to cut I into consecutive
// nonempty blocks placed at increasing slot indices, each block of length l
// and sum s at slot k contributing p_k^l (q'_k)^{s-l} / l!.
CommPoly h_eval(const Composition& I, int m);

// Coordinates of an element on the basis: composition (last part >= 2, or
// empty) -> nonzero coefficient.
struct HExpansion {
  std::map<Composition, Rational> coeffs;
  bool operator==(const HExpansion&) const = default;
};

std::string hexp_str(const HExpansion& e);  // "1*H:4 + -3*H:1.3"; zero -> "0"
bool hexp_valid(const HExpansion& e);

// Reads basis coordinates off the width-max_degree truncation: the basis
// element of I is the only one containing the square-free monomial
// p_1 (q'_1)^{i_1 - 1} p_2 (q'_2)^{i_2 - 1} ..., so its coefficient can be
// extracted directly; the certified-zero remainder proves membership in the
// span. Throws std::domain_error on a nonzero remainder.
HExpansion h_expand(const PQFamily& h, int max_degree);
// Same, from an explicit width-max_degree truncation in p and q' variables.
HExpansion h_expand_poly(const CommPoly& h_m, int max_degree);

// Bilinear extension of the part-shuffle product rule.
HExpansion h_shuffle_product(const HExpansion& a, const HExpansion& b);

// Basis coordinates of the image of the weight-k power-sum-like basis
// element, computed by expansion (k >= 2).
HExpansion mk_h_expansion(int k);

// Image of the basis element under p_j, q'_j -> y_j: the sum over cuts of I
// into consecutive blocks I_1..I_s of (prod_t 1/len(I_t)!) times the monomial
// basis element of (|I_1|, ..., |I_s|). Defined for every composition.
QSymElement collapse_to_y(const Composition& I);

}  // namespace qyd
