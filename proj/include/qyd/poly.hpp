#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qyd/combinatorics.hpp"
#include "qyd/rational.hpp"

namespace qyd {

// ---------------------------------------------------------------------------
// Commutative variables. A variable is a family character plus a positive
// index; 'Q' is the primed family and prints as "q'". Families order as
// x < y < u < p < q < q' < t so mixed monomials print predictably.
// ---------------------------------------------------------------------------
struct Var {
  char fam = 'x';
  int idx = 1;
  bool operator==(const Var&) const = default;
};

int fam_rank(char fam);
bool operator<(const Var& a, const Var& b);
std::string var_str(const Var& v);
Var var_parse(const std::string& s);

// Sorted (Var, exponent>0) pairs; the empty vector is the unit monomial.
// Keys are canonically trimmed: a vanished variable leaves no entry, so the
// stable-polynomial identification "set the last variable to zero" is a
// literal key equality.
using Monomial = std::vector<std::pair<Var, int>>;

std::string mono_str(const Monomial& m);

class CommPoly {
 public:
  std::map<Monomial, Rational> terms;  // no zero coefficients stored

  CommPoly() = default;
  static CommPoly constant(const Rational& c);
  static CommPoly variable(const Var& v, int exp = 1);

  bool is_zero() const { return terms.empty(); }
  int total_degree() const;  // max over monomials, 0 for the zero polynomial
  std::set<Var> variables() const;
  Rational coeff(const Monomial& m) const;
  bool audit_no_zero_terms() const;

  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly operator-() const;
  CommPoly& operator*=(const Rational& c);
  CommPoly pow(int e) const;

  // Multiply every term by the given monomial and scalar (a cheap shift).
  CommPoly mul_monomial(const Monomial& m, const Rational& c) const;

  // Simultaneous substitution; unbound variables pass through.
  CommPoly substitute(const std::map<Var, CommPoly>& bind) const;
  CommPoly rename(const std::map<Var, Var>& names) const;  // simultaneous renaming
  CommPoly drop_var(const Var& v) const;                   // substitute v -> 0

  // Full evaluation; throws std::invalid_argument when a variable is unbound.
  Rational evaluate(const std::map<Var, Rational>& vals) const;

  bool operator==(const CommPoly&) const = default;
  std::string str() const;  // "3*x1^2*q'3 + -1*x2"
};

CommPoly operator+(CommPoly a, const CommPoly& b);
CommPoly operator-(CommPoly a, const CommPoly& b);
CommPoly operator*(const CommPoly& a, const CommPoly& b);
CommPoly operator*(const Rational& c, CommPoly p);

// ---------------------------------------------------------------------------
// Noncommutative letters and words. Families: 'a' (alphabet letters),
// 'b' and 'd' (the two-row coordinate letters).
// ---------------------------------------------------------------------------
struct Letter {
  char fam = 'a';
  int idx = 1;
  bool operator==(const Letter&) const = default;
};

bool operator<(const Letter& a, const Letter& b);
std::string letter_str(const Letter& l);

using NCWord = std::vector<Letter>;

std::string ncword_str(const NCWord& w);  // "b1.d2.b1"; "" is the empty word

class NCPoly {
 public:
  std::map<NCWord, Rational> terms;

  NCPoly() = default;
  static NCPoly constant(const Rational& c);
  static NCPoly letter(const Letter& l);
  static NCPoly word(const NCWord& w, const Rational& c = 1);

  bool is_zero() const { return terms.empty(); }
  int max_word_length() const;
  bool is_homogeneous(int* length = nullptr) const;
  Rational coeff(const NCWord& w) const;
  bool audit_no_zero_terms() const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly operator-() const;
  NCPoly& operator*=(const Rational& c);

  // Simultaneous substitution; each letter of a word is replaced in place,
  // preserving word order. Unbound letters pass through.
  NCPoly substitute(const std::map<Letter, NCPoly>& bind) const;
  NCPoly rename(const std::map<Letter, Letter>& names) const;
  NCPoly drop_letter(const Letter& l) const;  // substitute l -> 0

  // Positions permuted: each word w becomes w·σ with (w·σ)_k = w_{σ(k)}.
  // Requires the polynomial to be homogeneous of length σ.n().
  NCPoly position_action(const Permutation& s) const;

  bool operator==(const NCPoly&) const = default;
  std::string str() const;
};

NCPoly operator+(NCPoly a, const NCPoly& b);
NCPoly operator-(NCPoly a, const NCPoly& b);
NCPoly operator*(const NCPoly& a, const NCPoly& b);  // concatenation product
NCPoly operator*(const Rational& c, NCPoly p);

// Commutative image: each letter becomes the commutative variable of the
// given family with the same index.
CommPoly commutative_image(const NCPoly& p, char comm_fam);

// Commutative image with one target family per letter family; throws
// std::invalid_argument on a letter family missing from the map.
CommPoly commutative_image(const NCPoly& p, const std::map<char, char>& fam_map);

}  // namespace qyd
