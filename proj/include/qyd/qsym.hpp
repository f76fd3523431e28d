#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qyd/combinatorics.hpp"
#include "qyd/poly.hpp"

namespace qyd {

// ---------------------------------------------------------------------------
// Quasi-symmetric functions on the monomial basis: finitely supported
// rational combinations of basis elements indexed by compositions.
// ---------------------------------------------------------------------------
class QSymElement {
 public:
  std::map<Composition, Rational> coeffs;  // no zero coefficients stored

  QSymElement() = default;
  static QSymElement monomial(const Composition& I, const Rational& c = 1);
  static QSymElement one();  // basis element of the empty composition

  bool is_zero() const { return coeffs.empty(); }
  Rational coeff(const Composition& I) const;
  int max_weight() const;
  QSymElement homogeneous(int w) const;  // weight-w component
  bool audit_no_zero_terms() const;

  QSymElement& operator+=(const QSymElement& o);
  QSymElement& operator-=(const QSymElement& o);
  QSymElement operator-() const;
  QSymElement& operator*=(const Rational& c);

  bool operator==(const QSymElement&) const = default;
  std::string str() const;  // "1*M:2.1 + -1*M:3"; unit prints as "M:()"
};

QSymElement operator+(QSymElement a, const QSymElement& b);
QSymElement operator-(QSymElement a, const QSymElement& b);
QSymElement operator*(const Rational& c, QSymElement f);

// Bilinear extension of the quasi-shuffle rule on basis indices.
QSymElement qsym_product(const QSymElement& f, const QSymElement& g);
inline QSymElement operator*(const QSymElement& a, const QSymElement& b) {
  return qsym_product(a, b);
}

// Deconcatenation coproduct, returned as weighted pairs of basis indices.
using TensorTerms = std::map<std::pair<Composition, Composition>, Rational>;
TensorTerms qsym_coproduct(const QSymElement& f);

// S(M_I) = (-1)^{length(I)} sum over coarsenings J of I of M_{mirror(J)}.
QSymElement antipode(const QSymElement& f);

// ---------------------------------------------------------------------------
// Signed ordered alphabets. An entry is a sign together with either a
// variable or an exact value; the entry order is the alphabet order.
// ---------------------------------------------------------------------------
struct AlphabetEntry {
  int sign = 1;          // +1 or -1
  bool symbolic = true;  // variable entry vs numeric entry
  Var var{};
  Rational value{};
};
using SignedAlphabet = std::vector<AlphabetEntry>;

inline AlphabetEntry plus_var(Var v) { return {+1, true, v, 0}; }
inline AlphabetEntry minus_var(Var v) { return {-1, true, v, 0}; }
inline AlphabetEntry plus_val(Rational r) { return {+1, false, {}, std::move(r)}; }
inline AlphabetEntry minus_val(Rational r) { return {-1, false, {}, std::move(r)}; }

// First n entries of the alternating alphabet: -x1 +x2 -x3 +x4 ...
SignedAlphabet virtual_x(int n);

// Evaluation by the block rule: split the index into consecutive blocks
// matched to alphabet entries in order; a positive entry absorbs at most one
// part and contributes symbol^part, a negative entry absorbs any block and
// contributes (-1)^{block length} * symbol^{block sum}.
CommPoly expand_on_alphabet(const QSymElement& f, const SignedAlphabet& a);

// Same rule with numeric entries only (throws on a symbolic entry).
Rational evaluate_on_alphabet(const QSymElement& f, const SignedAlphabet& a);

// ---------------------------------------------------------------------------
// The defining substitution equation for families of stable truncations.
// family(n) is the truncation in x1..xn; both the stability of the family and
// the substitution identity are checked for all admissible (n, i).
// ---------------------------------------------------------------------------
struct FuncEqReport {
  bool ok = true;
  std::string what;  // "stability" or "equation" on failure
  int n = 0;
  int i = 0;
};

FuncEqReport check_functional_eq(const std::function<CommPoly(int)>& family, int n_max);
FuncEqReport check_functional_eq(const QSymElement& f, int n_max);

// Rank of the expansion matrix of all degree-n basis elements on the
// alternating alphabet truncated to 2n+1 variables.
int solve_dimension(int n);

// ---------------------------------------------------------------------------
// Core DP for the block rule, shared by every alphabet-evaluation variant.
// Cell must be default-constructible to zero, addable, negatable.
// mul(cell, entry_index, block_sum) multiplies a partial product by the
// entry's contribution for a block with the given part sum (sign excluded;
// the DP applies (-1)^{block length} on negative entries).
// ---------------------------------------------------------------------------
namespace detail {

template <class Cell>
Cell signed_block_dp(const Composition& parts, const std::vector<int>& signs, Cell one,
                     const std::function<Cell(const Cell&, int, int)>& mul) {
  const int L = static_cast<int>(parts.size());
  std::vector<Cell> dp(static_cast<std::size_t>(L) + 1);
  std::vector<char> live(static_cast<std::size_t>(L) + 1, 0);
  dp[0] = std::move(one);
  live[0] = 1;
  for (int j = 0; j < static_cast<int>(signs.size()); ++j) {
    std::vector<Cell> nd = dp;  // absorbing nothing is always allowed
    std::vector<char> nl = live;
    for (int k = 0; k < L; ++k) {
      if (!live[k]) continue;
      if (signs[static_cast<std::size_t>(j)] > 0) {
        Cell t = mul(dp[k], j, parts[static_cast<std::size_t>(k)]);
        nd[k + 1] += t;
        nl[k + 1] = 1;
      } else {
        int sum = 0;
        for (int r = 1; k + r <= L; ++r) {
          sum += parts[static_cast<std::size_t>(k + r - 1)];
          Cell t = mul(dp[k], j, sum);
          if (r % 2)
            nd[k + r] += -t;
          else
            nd[k + r] += t;
          nl[k + r] = 1;
        }
      }
    }
    dp = std::move(nd);
    live = std::move(nl);
  }
  return live[L] ? dp[L] : Cell{};
}

}  // namespace detail

}  // namespace qyd
