#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qyd/characters.hpp"

using namespace qyd;

namespace {

int pweight(const Partition& p) {
  int w = 0;
  for (int x : p) w += x;
  return w;
}

// Independent dimension oracle: n! divided by the product of hook lengths.
Integer hook_dim(const Partition& lam) {
  const int n = pweight(lam);
  const Partition conj = conjugate(lam);
  Integer hooks = 1;
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) {
      const int arm = lam[i] - j - 1;
      const int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      hooks *= (arm + leg + 1);
    }
  return factorial(n) / hooks;
}

// Order of the centralizer of a permutation of cycle type rho.
Integer centralizer_order(const Partition& rho) {
  std::map<int, int> mult;
  for (int part : rho) mult[part] += 1;
  Integer z = 1;
  for (const auto& [part, m] : mult) {
    for (int t = 0; t < m; ++t) z *= part;
    z *= factorial(m);
  }
  return z;
}

PQFamily expansion_family(const HExpansion& e) {
  return PQFamily{[e](int m) {
                    CommPoly t;
                    for (const auto& [I, c] : e.coeffs) t += c * h_eval(I, m);
                    return t;
                  },
                  true};
}

Rational expansion_value(const HExpansion& e, const std::vector<int>& p, const std::vector<int>& q) {
  const int m = static_cast<int>(p.size());
  std::map<Var, Rational> vals;
  int tail = 0;
  std::vector<Rational> qp(p.size());
  for (int i = m; i >= 1; --i) {
    tail += q[static_cast<std::size_t>(i - 1)];
    vals[qpvar(i)] = tail;
    vals[pvar(i)] = p[static_cast<std::size_t>(i - 1)];
  }
  Rational total = 0;
  for (const auto& [I, c] : e.coeffs) total += c * h_eval(I, m).evaluate(vals);
  return total;
}

}  // namespace

TEST_CASE("border-strip character recursion") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& rho : partitions_of(n)) {
      CHECK(mn_character(Partition{n}, rho) == 1);
      // the sign representation
      const int sign = ((n - static_cast<int>(rho.size())) % 2 == 0) ? 1 : -1;
      CHECK(mn_character(Partition(static_cast<std::size_t>(n), 1), rho) == sign);
    }
  CHECK(mn_character({2, 1}, {3}) == -1);
  CHECK(mn_character({2, 2}, {2, 2}) == 2);
  CHECK(mn_character({}, {}) == 1);
  CHECK_THROWS_AS(mn_character({2, 1}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(mn_character({1, 2}, {3}), std::invalid_argument);
}

TEST_CASE("dimensions match the hook-length formula") {
  for (const Partition& lam : partitions_up_to(8)) {
    if (lam.empty()) continue;
    const int n = pweight(lam);
    CAPTURE(diagram_str(lam));
    CHECK(mn_character(lam, Partition(static_cast<std::size_t>(n), 1)) == hook_dim(lam));
  }
}

TEST_CASE("character table rows are orthonormal") {
  for (int n = 1; n <= 6; ++n) {
    const auto lams = partitions_of(n);
    const auto rhos = partitions_of(n);
    for (const Partition& a : lams)
      for (const Partition& b : lams) {
        Rational dot = 0;
        for (const Partition& rho : rhos)
          dot += Rational(mn_character(a, rho) * mn_character(b, rho)) / Rational(centralizer_order(rho));
        CAPTURE(diagram_str(a));
        CAPTURE(diagram_str(b));
        CHECK(dot == (a == b ? 1 : 0));
      }
  }
}

TEST_CASE("canonical cycle-type representatives") {
  CHECK(cycle_type_rep({3}).img == std::vector<int>{2, 3, 1});
  CHECK(cycle_type_rep({2, 1}).img == std::vector<int>{2, 1, 3});
  CHECK(cycle_type(cycle_type_rep({3, 2, 2, 1})) == Partition{3, 2, 2, 1});
}

TEST_CASE("normalized-character coordinates") {
  const HExpansion ch3 = ch_h_expansion({3});
  CHECK(ch3.coeffs == std::map<Composition, Rational>{{{4}, 1},
                                                      {{1, 3}, -3},
                                                      {{2, 2}, -3},
                                                      {{1, 1, 2}, 6},
                                                      {{2}, 1}});
  CHECK(ch_h_expansion({1}).coeffs == std::map<Composition, Rational>{{{2}, 1}});
  CHECK(ch_h_expansion({2}).coeffs == std::map<Composition, Rational>{{{3}, 1}, {{1, 2}, -2}});
  CHECK_THROWS_AS(ch_h_expansion({}), std::invalid_argument);

  // integer coefficients and valid supports
  for (int k = 1; k <= 4; ++k)
    for (const Partition& mu : partitions_of(k)) {
      const HExpansion e = ch_h_expansion(mu);
      CHECK(hexp_valid(e));
      for (const auto& [I, c] : e.coeffs) {
        CAPTURE(diagram_str(mu));
        CAPTURE(comp_str(I));
        CHECK(c.get_den() == 1);
      }
    }
}

TEST_CASE("coordinates do not depend on the chosen representative") {
  for (int k = 1; k <= 4; ++k)
    for (const Partition& mu : partitions_of(k)) {
      const HExpansion want = ch_h_expansion(mu);
      for (const Permutation& pi : all_permutations(k)) {
        if (cycle_type(pi) != mu) continue;
        CAPTURE(diagram_str(mu));
        CAPTURE(perm_str(pi));
        CHECK(ch_h_expansion_from(pi) == want);
      }
    }
}

TEST_CASE("values on diagrams") {
  CHECK(ch_eval({3}, {3}) == 6);
  CHECK(ch_eval({3}, {2, 1}) == -3);
  CHECK(ch_eval({3}, {1, 1}) == 0);
  CHECK(ch_eval({}, {2, 1}) == 1);
  CHECK(ch_oracle({1}, {4, 2}) == 6);
  CHECK(ch_oracle({2}, {2}) == 2);
  CHECK(ch_oracle({3}, {2, 1}) == -3);

  for (const Partition& lam : partitions_up_to(8)) {
    CAPTURE(diagram_str(lam));
    CHECK(ch_eval({1}, lam) == pweight(lam));
  }
}

TEST_CASE("both evaluation routes agree") {
  for (int k = 1; k <= 4; ++k)
    for (const Partition& mu : partitions_of(k))
      for (const Partition& lam : partitions_up_to(8)) {
        CAPTURE(diagram_str(mu));
        CAPTURE(diagram_str(lam));
        const Rational v = ch_eval(mu, lam);
        CHECK(v == ch_oracle(mu, lam));
        CHECK(v.get_den() == 1);
      }
}

TEST_CASE("values are insensitive to padded coordinate presentations") {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> coords = {
      {{2, 1}, {2, 2}},
      {{2, 0, 1}, {2, 0, 2}},
      {{0, 2, 1}, {5, 2, 2}},
      {{1, 1, 1}, {0, 2, 2}},
      {{2, 1, 0}, {2, 1, 1}},
  };
  for (const Partition& mu : {Partition{2}, Partition{3}, Partition{2, 1}}) {
    const HExpansion e = ch_h_expansion(mu);
    const Rational want = ch_eval(mu, {4, 4, 2});
    for (const auto& [p, q] : coords) {
      CAPTURE(diagram_str(mu));
      CHECK(expansion_value(e, p, q) == want);
    }
  }
}

TEST_CASE("the expansion family is a genuine function on diagrams") {
  const HExpansion ch3 = ch_h_expansion({3});
  const PQFamily fam = expansion_family(ch3);
  const SolPrimeReport r = check_solprime(fam, 3);
  CAPTURE(r.what);
  CHECK(r.ok);
  CHECK(h_expand(fam, 4) == ch3);
}
