#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "qyd/linalg.hpp"
#include "qyd/poly.hpp"

using namespace qyd;

namespace {

CommPoly X(int i, int e = 1) { return CommPoly::variable(Var{'x', i}, e); }
NCPoly A(int i) { return NCPoly::letter(Letter{'a', i}); }

}  // namespace

TEST_CASE("variable parsing and printing") {
  CHECK(var_str(Var{'x', 3}) == "x3");
  CHECK(var_str(Var{'Q', 2}) == "q'2");
  CHECK(var_parse("x12") == Var{'x', 12});
  CHECK(var_parse("q'3") == Var{'Q', 3});
  CHECK(var_parse("q5") == Var{'q', 5});
  CHECK_THROWS_AS(var_parse("z1"), std::invalid_argument);
  CHECK_THROWS_AS(var_parse("x0"), std::invalid_argument);
  CHECK_THROWS_AS(var_parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(var_parse("x1a"), std::invalid_argument);
}

TEST_CASE("commutative arithmetic") {
  CommPoly p = (X(1) + X(2)) * (X(1) - X(2));
  CHECK(p == X(1, 2) - X(2, 2));
  CHECK(p.audit_no_zero_terms());

  CommPoly q = X(1) + X(2);
  q *= Rational(0);
  CHECK(q.is_zero());
  CHECK(q.terms.empty());

  CHECK((X(1) - X(1)).terms.empty());
  CHECK(CommPoly::constant(0).is_zero());

  CommPoly r = Rational(3) * X(1, 2) + CommPoly::constant(Rational(1, 2));
  CHECK(r.coeff({{Var{'x', 1}, 2}}) == 3);
  CHECK(r.coeff({}) == Rational(1, 2));
  CHECK(r.coeff({{Var{'x', 2}, 1}}) == 0);
  CHECK(r.total_degree() == 2);

  CHECK((X(1) + X(2)).pow(2) == X(1, 2) + Rational(2) * (X(1) * X(2)) + X(2, 2));
  CHECK(X(1).pow(0) == CommPoly::constant(1));

  CommPoly shifted = (X(1) + X(2)).mul_monomial({{Var{'x', 1}, 1}}, Rational(2));
  CHECK(shifted == Rational(2) * X(1, 2) + Rational(2) * (X(1) * X(2)));

  CommPoly self = X(1) + X(2);
  self += self;
  CHECK(self == Rational(2) * (X(1) + X(2)));
  self -= self;
  CHECK(self.is_zero());
}

TEST_CASE("noncommutative arithmetic") {
  CHECK(A(1) * A(2) != A(2) * A(1));
  NCPoly p = A(1) * A(2) - A(2) * A(1);
  CHECK_FALSE(p.is_zero());

  NCPoly z = A(1);
  z *= Rational(0);
  CHECK(z.terms.empty());

  NCPoly w = NCPoly::word({Letter{'b', 1}, Letter{'d', 2}, Letter{'b', 1}}, Rational(3));
  CHECK(w.coeff({Letter{'b', 1}, Letter{'d', 2}, Letter{'b', 1}}) == 3);
  CHECK(w.max_word_length() == 3);
  int len = -1;
  CHECK(w.is_homogeneous(&len));
  CHECK(len == 3);
  CHECK_FALSE((w + A(1)).is_homogeneous());

  NCPoly self = A(1) * A(2) + A(3);
  self += self;
  CHECK(self == Rational(2) * (A(1) * A(2) + A(3)));
  self -= self;
  CHECK(self.is_zero());
}

TEST_CASE("commutative substitution") {
  CHECK((X(1) - X(2)).substitute({{Var{'x', 2}, X(1)}}).is_zero());

  // alternating-sign power sum truncated at three variables, merge x2 into x1
  CommPoly m2x3 = -X(1, 2) + X(2, 2) - X(3, 2);
  CommPoly merged = m2x3.substitute({{Var{'x', 2}, X(1)}});
  CHECK(merged == -X(3, 2));

  // unbound variables pass through
  CommPoly p = X(1) * X(2) + X(3);
  CHECK(p.substitute({{Var{'x', 1}, CommPoly::constant(2)}}) ==
        Rational(2) * X(2) + X(3));

  // scalar-valued bindings via constants
  CHECK(X(1, 3).substitute({{Var{'x', 1}, CommPoly::constant(Rational(1, 2))}}) ==
        CommPoly::constant(Rational(1, 8)));
}

TEST_CASE("substitution composes") {
  std::vector<CommPoly> samples = {
      X(1, 2) * X(2) + Rational(1, 3) * X(2),
      (X(1) + X(2) + X(3)).pow(2),
      X(1) - X(3),
  };
  std::map<Var, CommPoly> sigma = {{Var{'x', 1}, CommPoly::variable(Var{'y', 1}) +
                                                     CommPoly::variable(Var{'y', 2})},
                                   {Var{'x', 2}, CommPoly::constant(2)}};
  std::map<Var, CommPoly> tau = {{Var{'y', 1}, CommPoly::variable(Var{'y', 2})},
                                 {Var{'x', 3}, CommPoly::constant(1)}};
  // composed map: v -> tau(sigma(v)) on dom(sigma), v -> tau(v) elsewhere
  std::map<Var, CommPoly> composed = tau;
  for (const auto& [v, img] : sigma) composed[v] = img.substitute(tau);
  for (const auto& p : samples)
    CHECK(p.substitute(sigma).substitute(tau) == p.substitute(composed));
}

TEST_CASE("noncommutative substitution preserves word order") {
  NCPoly p = A(1) * A(2) * A(1);
  NCPoly bd = NCPoly::letter(Letter{'b', 1}) - NCPoly::letter(Letter{'d', 1});
  NCPoly q = p.substitute({{Letter{'a', 1}, bd}});
  CHECK(q.terms.size() == 4);
  Letter b{'b', 1}, d{'d', 1}, a2{'a', 2};
  CHECK(q.coeff({b, a2, b}) == 1);
  CHECK(q.coeff({b, a2, d}) == -1);
  CHECK(q.coeff({d, a2, b}) == -1);
  CHECK(q.coeff({d, a2, d}) == 1);
  CHECK(q.audit_no_zero_terms());

  // substituting a letter by zero kills every word containing it
  CHECK((A(1) * A(2) + A(2) * A(2)).drop_letter(Letter{'a', 1}) == A(2) * A(2));
}

TEST_CASE("canonical trimming makes stability a key equality") {
  // a stable family member with its last variable removed equals the shorter
  // member literally, as maps
  CommPoly f3 = X(1) + X(2) + X(3);
  CHECK(f3.drop_var(Var{'x', 3}) == X(1) + X(2));
  CommPoly g = X(1, 2) + X(1) * X(3);
  CHECK(g.drop_var(Var{'x', 3}) == X(1, 2));
  // exponents of a vanished variable leave no residue in the key
  auto vars = g.drop_var(Var{'x', 3}).variables();
  CHECK(vars == std::set<Var>{Var{'x', 1}});
}

TEST_CASE("renaming") {
  CommPoly p = X(1) * X(2, 3);
  CommPoly r = p.rename({{Var{'x', 1}, Var{'x', 5}}, {Var{'x', 2}, Var{'x', 1}}});
  CHECK(r == X(5) * X(1, 3));
  CHECK_THROWS_AS(p.rename({{Var{'x', 2}, Var{'x', 1}}}), std::invalid_argument);

  NCPoly w = A(1) * A(2);
  CHECK(w.rename({{Letter{'a', 1}, Letter{'a', 2}}}) ==
        NCPoly::word({Letter{'a', 2}, Letter{'a', 2}}));
}

TEST_CASE("evaluation") {
  CommPoly p = (X(1) + X(2)).pow(2);
  CHECK(p.evaluate({{Var{'x', 1}, Rational(1, 2)}, {Var{'x', 2}, Rational(1, 2)}}) == 1);
  CHECK_THROWS_AS(p.evaluate({{Var{'x', 1}, Rational(1)}}), std::invalid_argument);
  CHECK(CommPoly().evaluate({}) == 0);
}

TEST_CASE("position permutation of words") {
  // (w.sigma)_k = w_{sigma(k)}
  NCPoly w = A(1) * A(2) * A(3);
  Permutation s{{2, 3, 1}};
  CHECK(w.position_action(s) == A(2) * A(3) * A(1));
  NCPoly mixed = w + A(1) * A(1) * A(2);
  CHECK(mixed.position_action(s).coeff({Letter{'a', 1}, Letter{'a', 2}, Letter{'a', 1}}) == 1);
  CHECK_THROWS_AS((A(1) * A(2)).position_action(s), std::invalid_argument);
}

TEST_CASE("commutative image of words") {
  NCPoly p = A(1) * A(2) * A(1) + A(2) * A(1) * A(1) + A(1) * A(2) * A(2);
  CommPoly img = commutative_image(p, 'x');
  CHECK(img.coeff({{Var{'x', 1}, 2}, {Var{'x', 2}, 1}}) == 2);
  CHECK(img.coeff({{Var{'x', 1}, 1}, {Var{'x', 2}, 2}}) == 1);
}

TEST_CASE("canonical text form") {
  CommPoly p = Rational(3) * (X(1, 2) * CommPoly::variable(Var{'Q', 3})) - X(2);
  CHECK(p.str() == "3*x1^2*q'3 + -1*x2");
  CHECK(CommPoly().str() == "0");
  CHECK(CommPoly::constant(Rational(-5, 2)).str() == "-5/2");
  CHECK(ncword_str({Letter{'b', 1}, Letter{'d', 2}, Letter{'b', 1}}) == "b1.d2.b1");
  NCPoly w = NCPoly::word({Letter{'b', 1}, Letter{'d', 2}}, Rational(1, 2)) -
             NCPoly::constant(1);
  CHECK(w.str() == "-1 + 1/2*b1.d2");
  CHECK(NCPoly().str() == "0");
}

TEST_CASE("sparse integer rows") {
  SparseIntRow r = {{0, Integer(4)}, {2, Integer(-6)}};
  row_normalize(r);
  CHECK(r == SparseIntRow{{0, Integer(2)}, {2, Integer(-3)}});
  SparseIntRow neg = {{1, Integer(-3)}, {4, Integer(9)}};
  row_normalize(neg);
  CHECK(neg == SparseIntRow{{1, Integer(1)}, {4, Integer(-3)}});

  SparseIntRow a = {{0, Integer(1)}, {1, Integer(2)}};
  SparseIntRow b = {{1, Integer(1)}, {3, Integer(5)}};
  // 2*a - 1*b skipping nothing relevant
  SparseIntRow c = row_combine(a, Integer(2), b, Integer(1), 99);
  CHECK(c == SparseIntRow{{0, Integer(2)}, {1, Integer(3)}, {3, Integer(-5)}});
  // cancel column 1 exactly
  SparseIntRow d = row_combine(a, Integer(1), b, Integer(2), 1);
  CHECK(d == SparseIntRow{{0, Integer(1)}, {3, Integer(-10)}});
}

TEST_CASE("exact rank") {
  RatMatrix id5;
  id5.rows = id5.cols = 5;
  for (int i = 0; i < 5; ++i) id5.set(i, i, 1);
  CHECK(rank(id5) == 5);

  RatMatrix zero;
  zero.rows = 4;
  zero.cols = 7;
  CHECK(rank(zero) == 0);

  // rank-2 matrix with rational entries: row2 = row0 + (1/2)row1
  RatMatrix m;
  m.rows = 3;
  m.cols = 4;
  Rational vals0[4] = {Rational(1, 2), 0, Rational(3), Rational(-1)};
  Rational vals1[4] = {Rational(2), Rational(1, 3), 0, Rational(4)};
  for (int c = 0; c < 4; ++c) {
    m.set(0, c, vals0[c]);
    m.set(1, c, vals1[c]);
    m.set(2, c, vals0[c] + vals1[c] / 2);
  }
  CHECK(rank(m) == 2);
  CHECK(rank(transpose(m)) == 2);
  CHECK(rank(transpose(id5)) == 5);

  // batch and incremental elimination agree
  std::vector<SparseIntRow> rows;
  for (int i = 0; i < 6; ++i) {
    SparseIntRow r;
    for (int j = 0; j < 5; ++j) {
      long v = (i * 7 + j * j * 3 + (i + j) % 4) % 5 - 2;
      if (v != 0) r.emplace_back(static_cast<std::uint64_t>(j), Integer(v));
    }
    rows.push_back(r);
  }
  Echelon e;
  int grew = 0;
  for (const auto& r : rows)
    if (e.add_row(r)) ++grew;
  CHECK(grew == e.rank());
  CHECK(e.rank() == rank_sparse(rows));
}

TEST_CASE("incremental echelon and span membership") {
  Echelon e;
  CHECK(e.add_row({{0, Integer(1)}, {1, Integer(2)}}));
  CHECK(e.add_row({{1, Integer(1)}, {2, Integer(1)}}));
  CHECK_FALSE(e.add_row({{0, Integer(2)}, {1, Integer(5)}, {2, Integer(1)}}));
  CHECK(e.rank() == 2);
  CHECK(e.in_span({{0, Integer(3)}, {1, Integer(6)}}));
  CHECK_FALSE(e.in_span({{2, Integer(1)}}));
  CHECK(e.add_row({{3, Integer(7)}}));
  CHECK(e.rank() == 3);
}

TEST_CASE("span membership for polynomials") {
  std::vector<CommPoly> basis = {X(1) + X(2), X(2) + X(3)};
  CHECK(span_contains(basis, basis[0]));
  CHECK(span_contains(basis, Rational(2) * basis[0] + Rational(3) * basis[1]));
  CHECK_FALSE(span_contains({X(1)}, X(1, 2)));
  CHECK(span_contains(basis, CommPoly()));

  NCPoly b1 = NCPoly::letter(Letter{'b', 1});
  NCPoly b2 = NCPoly::letter(Letter{'b', 2});
  CHECK(span_contains(std::vector<NCPoly>{b1, b2}, Rational(2) * b1 + Rational(3) * b2));
  CHECK_FALSE(span_contains(std::vector<NCPoly>{b1 * b2}, b2 * b1));
}

TEST_CASE("polynomial rank helpers") {
  // x1+x2, x2+x3, x1-x3 span a 2-dimensional space
  CHECK(rank_of_comm({X(1) + X(2), X(2) + X(3), X(1) - X(3)}) == 2);
  CHECK(rank_of_comm({}) == 0);
  CHECK(rank_of_comm({CommPoly()}) == 0);
  // rational coefficients are cleared exactly
  CHECK(rank_of_comm({Rational(1, 2) * X(1) + Rational(1, 3) * X(2),
                      Rational(3) * X(1) + Rational(2) * X(2)}) == 1);
  CHECK(rank_of_nc({A(1) * A(2), A(2) * A(1), A(1) * A(2) - A(2) * A(1)}) == 2);
}
