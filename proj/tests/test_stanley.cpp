#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qyd/diagrams.hpp"
#include "qyd/stanley.hpp"

using namespace qyd;

namespace {

QSymElement M(const Composition& I) { return QSymElement::monomial(I); }

CommPoly pv(int i) { return CommPoly::variable(pvar(i)); }
CommPoly qv(int i) { return CommPoly::variable(qvar(i)); }
CommPoly qpv(int i) { return CommPoly::variable(qpvar(i)); }
CommPoly xv(int j) { return CommPoly::variable(Var{'x', j}); }

std::vector<Composition> comps_up_to(int n) {
  std::vector<Composition> out{{}};
  for (int w = 1; w <= n; ++w)
    for (const Composition& I : compositions_of(w)) out.push_back(I);
  return out;
}

std::vector<Composition> basis_comps_of(int w) {
  std::vector<Composition> out;
  for (const Composition& I : compositions_of(w))
    if (I.back() >= 2) out.push_back(I);
  return out;
}

PQFamily constant_p1_family() {
  return PQFamily{[](int m) { return m >= 1 ? CommPoly::variable(pvar(1)) : CommPoly{}; }, false};
}

// Numeric value of a family at explicit multirectangular coordinates.
Rational family_value(const PQFamily& h, const std::vector<int>& p, const std::vector<int>& q) {
  const int m = static_cast<int>(p.size());
  CommPoly t = h.truncation(m);
  if (h.in_qprime) t = qprime_to_q(t, m);
  std::map<Var, Rational> vals;
  for (int i = 1; i <= m; ++i) {
    vals[pvar(i)] = p[static_cast<std::size_t>(i - 1)];
    vals[qvar(i)] = q[static_cast<std::size_t>(i - 1)];
  }
  return t.evaluate(vals);
}

// The interlacing-coordinate realization of a family, widened to every
// variable count: odd counts use the matching width, even counts set the last
// odd coordinate to zero.
std::function<CommPoly(int)> x_realization(const PQFamily& h) {
  return [h](int n) {
    const int m = n / 2;
    CommPoly f = pq_to_x(h.truncation(m), m);
    if (n % 2 == 0) f = f.drop_var(Var{'x', 2 * m + 1});
    return f;
  };
}

}  // namespace

TEST_CASE("q and q' parametrizations convert both ways") {
  CHECK(q_to_qprime(qv(1), 2) == qpv(1) - qpv(2));
  CHECK(q_to_qprime(qv(2), 2) == qpv(2));
  CHECK(qprime_to_q(qpv(1), 3) == qv(1) + qv(2) + qv(3));

  const CommPoly sample = pv(1) * qv(1) * qv(1) - Rational(1, 3) * qv(2) * pv(3) + CommPoly::constant(5);
  CHECK(qprime_to_q(q_to_qprime(sample, 3), 3) == sample);
  const CommPoly sample2 = qpv(1) * qpv(2) + pv(2) * qpv(2);
  CHECK(q_to_qprime(qprime_to_q(sample2, 2), 2) == sample2);

  CHECK_THROWS_AS(q_to_qprime(qv(3), 2), std::invalid_argument);
  CHECK_THROWS_AS(qprime_to_q(qpv(4), 3), std::invalid_argument);
}

TEST_CASE("coordinate changes between x and p,q") {
  CHECK(pq_to_x(pv(1), 1) == xv(1) - xv(2));
  CHECK(pq_to_x(qv(1), 1) == xv(2) - xv(3));
  CHECK(pq_to_x(qpv(1), 2) == xv(2) - xv(3) + xv(4) - xv(5));
  CHECK(x_to_pq(xv(1), 1) == qv(1));
  CHECK(x_to_pq(xv(2), 1) == qv(1) - pv(1));
  CHECK(x_to_pq(xv(3), 1) == -pv(1));
  CHECK(x_to_pq(xv(1) + xv(3), 2) == qv(1) + qv(2) + qv(2) - pv(1));
  CHECK_THROWS_AS(x_to_pq(xv(4), 1), std::invalid_argument);
  CHECK_THROWS_AS(pq_to_x(pv(2), 1), std::invalid_argument);

  // substituting the two changes in sequence is the identity on p,q inputs
  for (int m = 1; m <= 3; ++m) {
    const CommPoly h = pv(1) * qv(m) + qv(1) * qv(1);
    CHECK(x_to_pq(pq_to_x(h, m), m) == h);
  }
}

TEST_CASE("basis truncations") {
  for (int v = 2; v <= 3; ++v) {
    CommPoly want;
    for (int i = 1; i <= 3; ++i) want += pv(i) * qpv(i).pow(v - 1);
    CHECK(h_eval({v}, 3) == want);
  }

  {
    CommPoly want;
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j) want += pv(i) * qpv(i) * pv(j) * qpv(j) * qpv(j);
    for (int i = 1; i <= 3; ++i) want += Rational(1, 2) * pv(i) * pv(i) * qpv(i).pow(3);
    CHECK(h_eval({2, 3}, 3) == want);
  }

  CHECK(h_eval({1, 2}, 1) == Rational(1, 2) * pv(1) * pv(1) * qpv(1));
  CHECK(h_eval({}, 4) == CommPoly::constant(1));
  CHECK(h_eval({3}, 0) == CommPoly{});
  CHECK_THROWS_AS(h_eval({1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(h_eval({2, 1}, 2), std::invalid_argument);
}

TEST_CASE("the x-to-pq image of quasi-symmetric elements") {
  for (int m = 0; m <= 3; ++m) CHECK(phi_x_to_pq(M({1}), m) == CommPoly{});
  CHECK(phi_x_to_pq(M({2}), 1) == Rational(-2) * pv(1) * qv(1));
  CHECK(phi_x_to_pq(QSymElement::one(), 2) == CommPoly::constant(1));

  // the direct block expansion agrees with expand-then-substitute
  for (const Composition& I : comps_up_to(4)) {
    const CommPoly direct = phi_x_to_pq(M(I), 2);
    const CommPoly routed = x_to_pq(expand_on_alphabet(M(I), virtual_x(5)), 2);
    CHECK(direct == routed);
  }

  // multiplicativity of the image
  const QSymElement prod = M({2}) * M({1, 1});
  CHECK(phi_x_to_pq(prod, 2) == phi_x_to_pq(M({2}), 2) * phi_x_to_pq(M({1, 1}), 2));
}

TEST_CASE("substitution identities for functions of the coordinates") {
  for (const Composition& I : {Composition{2}, Composition{3}, Composition{1, 2}, Composition{2, 2}}) {
    const SolPrimeReport r = check_solprime(pq_family_h(I), 4);
    CAPTURE(comp_str(I));
    CAPTURE(r.what);
    CHECK(r.ok);
  }

  for (const Composition& I : {Composition{2}, Composition{1, 1}, Composition{2, 1}}) {
    const SolPrimeReport r = check_solprime(pq_family_phi(M(I)), 3);
    CAPTURE(comp_str(I));
    CAPTURE(r.what);
    CHECK(r.ok);
  }

  const SolPrimeReport prod =
      check_solprime(pq_family_product(pq_family_h({2}), pq_family_h({1, 2})), 3);
  CHECK(prod.ok);
  const SolPrimeReport mixed =
      check_solprime(pq_family_product(pq_family_h({2}), pq_family_phi(M({2}))), 3);
  CHECK(mixed.ok);

  const SolPrimeReport bad = check_solprime(constant_p1_family(), 2);
  CHECK_FALSE(bad.ok);
  CHECK(bad.what == "q-zero");
  CHECK(bad.m == 1);
  CHECK(bad.i == 1);
}

TEST_CASE("equivalent coordinate lists of one diagram give equal values") {
  // five presentations of the same diagram, with padding and split rectangles
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> coords = {
      {{2, 1}, {2, 2}},
      {{2, 0, 1}, {2, 0, 2}},
      {{0, 2, 1}, {5, 2, 2}},
      {{1, 1, 1}, {0, 2, 2}},
      {{2, 1, 0}, {2, 1, 1}},
  };
  const std::vector<PQFamily> families = {pq_family_h({2}),      pq_family_h({1, 2}),
                                          pq_family_h({2, 2}),   pq_family_phi(M({2})),
                                          pq_family_phi(M({2, 1}))};
  for (std::size_t fi = 0; fi < families.size(); ++fi) {
    const Rational base = family_value(families[fi], coords[0].first, coords[0].second);
    for (std::size_t ci = 1; ci < coords.size(); ++ci) {
      CAPTURE(fi);
      CAPTURE(ci);
      CHECK(family_value(families[fi], coords[ci].first, coords[ci].second) == base);
    }
  }
}

TEST_CASE("the image evaluated at canonical coordinates matches the diagram action") {
  for (const YoungDiagram& lam : partitions_up_to(5))
    for (const Composition& I : comps_up_to(3)) {
      const MultirectCoords c = multirect_coords(lam);
      CAPTURE(diagram_str(lam));
      CAPTURE(comp_str(I));
      CHECK(family_value(pq_family_phi(M(I)), c.p, c.q) == act_y(M(I), lam));
    }
}

TEST_CASE("round trip through interlacing coordinates is the identity") {
  for (int w = 2; w <= 5; ++w)
    for (const Composition& I : basis_comps_of(w))
      for (int m : {w, w + 1}) {
        const CommPoly h = h_eval(I, m);
        const CommPoly back = q_to_qprime(x_to_pq(pq_to_x(h, m), m), m);
        CAPTURE(comp_str(I));
        CAPTURE(m);
        CHECK(back == h);
      }
}

TEST_CASE("x-realizations of basis elements satisfy the functional equation") {
  for (const Composition& I : {Composition{2}, Composition{1, 2}}) {
    const FuncEqReport r = check_functional_eq(x_realization(pq_family_h(I)), 5);
    CAPTURE(comp_str(I));
    CAPTURE(r.what);
    CHECK(r.ok);
  }
}

TEST_CASE("coordinate extraction on the basis") {
  {
    const HExpansion e = h_expand(pq_family_h({2, 3}), 5);
    REQUIRE(e.coeffs.size() == 1);
    CHECK(e.coeffs.at({2, 3}) == 1);
  }
  {
    const HExpansion e = h_expand(pq_family_product(pq_family_h({2}), pq_family_h({3})), 5);
    CHECK(e.coeffs == std::map<Composition, Rational>{{{2, 3}, 1}, {{3, 2}, 1}});
  }
  {
    // an inhomogeneous combination splits into its graded coordinates
    PQFamily fam{[](int m) { return h_eval({2}, m) + 3 * h_eval({1, 2}, m); }, true};
    const HExpansion e = h_expand(fam, 3);
    CHECK(e.coeffs == std::map<Composition, Rational>{{{2}, 1}, {{1, 2}, 3}});
  }
  {
    PQFamily fam{[](int m) { return m >= 1 ? CommPoly::constant(7) : CommPoly::constant(7); }, true};
    const HExpansion e = h_expand(fam, 2);
    CHECK(e.coeffs == std::map<Composition, Rational>{{{}, 7}});
  }
  CHECK_THROWS_AS(h_expand(constant_p1_family(), 1), std::domain_error);
  {
    PQFamily fam{[](int m) { return m >= 1 ? qpv(1) * qpv(1) : CommPoly{}; }, true};
    CHECK_THROWS_AS(h_expand(fam, 2), std::domain_error);
  }
  CHECK_THROWS_AS(h_expand_poly(xv(1), 1), std::invalid_argument);
}

TEST_CASE("part-shuffle products") {
  const HExpansion h2{{{Composition{2}, 1}}};
  const HExpansion h12{{{Composition{1, 2}, 1}}};
  CHECK(h_shuffle_product(h2, h2) == HExpansion{{{Composition{2, 2}, 2}}});
  CHECK(h_shuffle_product(h2, h12) ==
        HExpansion{{{Composition{2, 1, 2}, 1}, {Composition{1, 2, 2}, 2}}});
  const HExpansion unit{{{Composition{}, 1}}};
  CHECK(h_shuffle_product(unit, h12) == h12);

  // agreement with actual multiplication followed by extraction
  for (int wi = 2; wi <= 3; ++wi)
    for (int wj = 2; wj + wi <= 5; ++wj)
      for (const Composition& I : basis_comps_of(wi))
        for (const Composition& J : basis_comps_of(wj)) {
          const HExpansion direct =
              h_expand(pq_family_product(pq_family_h(I), pq_family_h(J)), wi + wj);
          const HExpansion ruled = h_shuffle_product(HExpansion{{{I, 1}}}, HExpansion{{{J, 1}}});
          CAPTURE(comp_str(I));
          CAPTURE(comp_str(J));
          CHECK(direct == ruled);
        }
}

TEST_CASE("power-sum images expand with falling-factorial coefficients") {
  CHECK(mk_h_expansion(2) == HExpansion{{{Composition{2}, -2}}});
  CHECK(mk_h_expansion(3) == HExpansion{{{Composition{3}, -3}, {Composition{1, 2}, 6}}});
  CHECK_THROWS_AS(mk_h_expansion(1), std::invalid_argument);

  for (int k = 2; k <= 5; ++k) {
    const HExpansion e = mk_h_expansion(k);
    CHECK(e.coeffs.size() == static_cast<std::size_t>(k - 1));
    for (int i = 0; i <= k - 2; ++i) {
      Composition I(static_cast<std::size_t>(i), 1);
      I.push_back(k - i);
      Rational want = (i % 2 == 0) ? -1 : 1;
      for (int t = 0; t <= i; ++t) want *= (k - t);  // i + 1 factors k(k-1)...(k-i)
      CAPTURE(k);
      CAPTURE(i);
      REQUIRE(e.coeffs.count(I) == 1);
      CHECK(e.coeffs.at(I) == want);
    }
  }
}

TEST_CASE("collapsing p and q' to one alphabet") {
  CHECK(collapse_to_y({2}) == M({2}));
  CHECK(collapse_to_y({1, 1}) == M({1, 1}) + QSymElement::monomial({2}, Rational(1, 2)));
  CHECK(collapse_to_y({2, 3}) == M({2, 3}) + QSymElement::monomial({5}, Rational(1, 2)));
  CHECK(collapse_to_y({}) == QSymElement::one());

  // the collapse is literally the substitution p_k, q'_k -> y_k
  for (int w = 2; w <= 4; ++w)
    for (const Composition& I : basis_comps_of(w)) {
      const int m = w;
      SignedAlphabet ys;
      std::map<Var, CommPoly> bind;
      for (int k = 1; k <= m; ++k) {
        ys.push_back(plus_var(Var{'y', k}));
        bind[pvar(k)] = CommPoly::variable(Var{'y', k});
        bind[qpvar(k)] = CommPoly::variable(Var{'y', k});
      }
      CAPTURE(comp_str(I));
      CHECK(expand_on_alphabet(collapse_to_y(I), ys) == h_eval(I, m).substitute(bind));
    }

  // unitriangular against the monomial basis along coarsening
  for (const Composition& I : comps_up_to(5)) {
    const QSymElement c = collapse_to_y(I);
    CHECK(c.coeff(I) == 1);
    const auto coars = coarsenings(I);
    for (const auto& [K, coef] : c.coeffs) {
      const bool is_coarsening =
          std::find(coars.begin(), coars.end(), K) != coars.end();
      CAPTURE(comp_str(I));
      CAPTURE(comp_str(K));
      CHECK(is_coarsening);
      if (K != I) CHECK(K.size() < I.size());
    }
  }

  // products collapse to part shuffles
  for (const Composition& I : comps_up_to(3))
    for (const Composition& J : comps_up_to(3)) {
      if (comp_weight(I) + comp_weight(J) > 5) continue;
      QSymElement want;
      for (const auto& [K, mult] : shuffle(I, J)) {
        QSymElement t = collapse_to_y(K);
        t *= Rational(mult);
        want += t;
      }
      CAPTURE(comp_str(I));
      CAPTURE(comp_str(J));
      CHECK(qsym_product(collapse_to_y(I), collapse_to_y(J)) == want);
    }
}

TEST_CASE("coordinate text forms") {
  HExpansion e;
  e.coeffs[{4}] = 1;
  e.coeffs[{1, 3}] = -3;
  CHECK(hexp_str(e) == "-3*H:1.3 + 1*H:4");
  CHECK(hexp_str(HExpansion{}) == "0");
  CHECK(hexp_str(HExpansion{{{Composition{}, 2}}}) == "2*H:()");
  CHECK(hexp_valid(e));
  CHECK_FALSE(hexp_valid(HExpansion{{{Composition{2, 1}, 1}}}));
  CHECK_FALSE(hexp_valid(HExpansion{{{Composition{2}, 0}}}));
}
