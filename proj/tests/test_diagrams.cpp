#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qyd/diagrams.hpp"

using namespace qyd;

namespace {

QSymElement M(const Composition& I) { return QSymElement::monomial(I); }

std::vector<Composition> comps_up_to(int wmax) {
  std::vector<Composition> out;
  for (int w = 0; w <= wmax; ++w)
    for (auto& I : compositions_of(w)) out.push_back(I);
  return out;
}

}  // namespace

TEST_CASE("interlacing coordinates of a diagram") {
  CHECK(interlacing_coords({4, 4, 2}) == std::vector<int>{4, 2, 0, -1, -3});
  CHECK(interlacing_coords({}) == std::vector<int>{0});
  CHECK(interlacing_coords({1}) == std::vector<int>{1, 0, -1});
  CHECK(interlacing_coords({2, 1}) == std::vector<int>{2, 1, 0, -1, -2});
  for (const auto& lam : partitions_up_to(8)) {
    auto xs = interlacing_coords(lam);
    CHECK(xs.size() % 2 == 1);
    int alt = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) alt += (i % 2 ? -xs[i] : xs[i]);
    CHECK(alt == 0);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) CHECK(xs[i] > xs[i + 1]);
  }
}

TEST_CASE("diagram reconstruction from interlacing coordinates") {
  CHECK(diagram_from_interlacing({4, 2, 0, -1, -3}) == YoungDiagram{4, 4, 2});
  CHECK(diagram_from_interlacing({0}) == YoungDiagram{});
  // equal adjacent values denote the same diagram
  CHECK(diagram_from_interlacing({4, 2, 2, 2, 0, -1, -3}) == YoungDiagram{4, 4, 2});
  CHECK(diagram_from_interlacing({1, 1, 1, 0, -1}) == YoungDiagram{1});

  CHECK_THROWS_AS(diagram_from_interlacing({1, 0, -2}), std::invalid_argument);
  CHECK_THROWS_AS(diagram_from_interlacing({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(diagram_from_interlacing({0, 1, -1}), std::invalid_argument);

  for (const auto& lam : partitions_up_to(8))
    CHECK(diagram_from_interlacing(interlacing_coords(lam)) == lam);
}

TEST_CASE("multirectangular coordinates") {
  MultirectCoords c = interlacing_to_multirect({4, 2, 0, -1, -3});
  CHECK(c.p == std::vector<int>{2, 1});
  CHECK(c.q == std::vector<int>{2, 2});
  CHECK(c.qprime() == std::vector<int>{4, 2});

  MultirectCoords empty = interlacing_to_multirect({0});
  CHECK(empty.p.empty());
  CHECK(empty.q.empty());

  CHECK(multirect_coords({4, 4, 2}) == MultirectCoords{{2, 1}, {2, 2}});
  CHECK(multirect_coords({3}) == MultirectCoords{{1}, {3}});
  CHECK(multirect_coords({2, 1}) == MultirectCoords{{1, 1}, {1, 1}});
  CHECK(multirect_coords({2, 1}).qprime() == std::vector<int>{2, 1});

  for (const auto& lam : partitions_up_to(8)) {
    MultirectCoords canon = multirect_coords(lam);
    CHECK(canon == interlacing_to_multirect(interlacing_coords(lam)));
    CHECK(multirect_to_interlacing(canon) == interlacing_coords(lam));
    CHECK(diagram_from_multirect(canon) == lam);
  }

  // degenerate entries are accepted and name the same diagram
  CHECK(diagram_from_multirect({{2, 0, 1}, {2, 0, 2}}) == YoungDiagram{4, 4, 2});
  CHECK(diagram_from_multirect({{0, 2, 1}, {5, 2, 2}}) == YoungDiagram{4, 4, 2});
  CHECK(diagram_from_multirect({{2, 1, 0}, {2, 1, 1}}) == YoungDiagram{4, 4, 2});
  CHECK(diagram_from_multirect({{1, 1, 1}, {0, 2, 2}}) == YoungDiagram{4, 4, 2});
  CHECK_THROWS_AS(diagram_from_multirect({{-1}, {2}}), std::invalid_argument);
}

TEST_CASE("Frobenius coordinates") {
  FrobeniusCoords f = frobenius_coords({4, 4, 2});
  CHECK(f.a == std::vector<Rational>{Rational(7, 2), Rational(5, 2)});
  CHECK(f.b == std::vector<Rational>{Rational(5, 2), Rational(3, 2)});
  CHECK(f.d() == 2);
  CHECK(frobenius_coords({}).d() == 0);
  CHECK(frobenius_coords({2, 1}) ==
        FrobeniusCoords{{Rational(3, 2)}, {Rational(3, 2)}});

  for (const auto& lam : partitions_up_to(8)) {
    FrobeniusCoords fc = frobenius_coords(lam);
    Rational total = 0;
    for (int i = 0; i < fc.d(); ++i) {
      total += fc.a[static_cast<std::size_t>(i)] + fc.b[static_cast<std::size_t>(i)];
      CHECK(fc.a[static_cast<std::size_t>(i)] > 0);
      CHECK(fc.b[static_cast<std::size_t>(i)] > 0);
      if (i) {
        CHECK(fc.a[static_cast<std::size_t>(i)] < fc.a[static_cast<std::size_t>(i) - 1]);
        CHECK(fc.b[static_cast<std::size_t>(i)] < fc.b[static_cast<std::size_t>(i) - 1]);
      }
    }
    CHECK(total == comp_weight(lam));
  }
}

TEST_CASE("evaluation at a diagram") {
  for (const auto& lam : partitions_up_to(8)) {
    CHECK(act_y(M({1}), lam) == 0);
    CHECK(act_y(QSymElement::one(), lam) == 1);
  }
  CHECK(act_y(M({2}), {1}) == -2);
  CHECK(act_y(M({2}), {2, 1}) == -6);
  CHECK(act_y(M({2}), {}) == 0);
}

TEST_CASE("evaluation is an algebra morphism") {
  auto cs = comps_up_to(3);
  for (const auto& lam : partitions_up_to(5))
    for (const auto& I : cs)
      for (const auto& J : cs) {
        if (I.empty() || J.empty()) continue;
        CHECK(act_y(qsym_product(M(I), M(J)), lam) == act_y(M(I), lam) * act_y(M(J), lam));
      }
}

TEST_CASE("row-coordinate evaluation agrees with interlacing evaluation") {
  // single diagram, several truncation depths
  for (int k = 3; k <= 5; ++k)
    CHECK(evaluate_on_alphabet(M({2}), row_alphabet({4, 4, 2}, k)) == act_y(M({2}), {4, 4, 2}));
  for (int k = 1; k <= 3; ++k)
    CHECK(evaluate_on_alphabet(M({2}), row_alphabet({1}, k)) == -2);
  CHECK(evaluate_on_alphabet(M({3, 1}), row_alphabet({}, 0)) == 0);
  CHECK(evaluate_on_alphabet(M({1, 1}), row_alphabet({}, 2)) == 0);
  CHECK_THROWS_AS(row_alphabet({2, 1}, 1), std::invalid_argument);

  for (const auto& lam : partitions_up_to(6))
    for (const auto& I : comps_up_to(3)) {
      Rational want = act_y(M(I), lam);
      int len = static_cast<int>(lam.size());
      CHECK(evaluate_on_alphabet(M(I), row_alphabet(lam, len)) == want);
      CHECK(evaluate_on_alphabet(M(I), row_alphabet(lam, len + 2)) == want);
    }
}

TEST_CASE("Frobenius evaluation agrees with interlacing evaluation") {
  SignedAlphabet f21 = frobenius_alphabet({2, 1});
  REQUIRE(f21.size() == 4);
  CHECK(f21[0].sign == -1);
  CHECK(f21[0].value == 2);
  CHECK(f21[1].sign == +1);
  CHECK(f21[1].value == 1);
  CHECK(f21[2].sign == +1);
  CHECK(f21[2].value == -1);
  CHECK(f21[3].sign == -1);
  CHECK(f21[3].value == -2);
  CHECK(evaluate_on_alphabet(M({2}), f21) == -6);
  CHECK(frobenius_alphabet({}).empty());

  for (const auto& lam : partitions_up_to(6))
    for (const auto& I : comps_up_to(3))
      CHECK(evaluate_on_alphabet(M(I), frobenius_alphabet(lam)) == act_y(M(I), lam));
}

TEST_CASE("evaluation-matrix dimensions") {
  CHECK(qlambda_dimension(2) == 1);
  CHECK(qlambda_dimension(3) == 2);
  CHECK(qlambda_dimension(4) == 4);
  CHECK(qlambda_dimension(5) == 8);
  CHECK_THROWS_AS(qlambda_dimension(1), std::invalid_argument);
}

TEST_CASE("diagram text form") {
  CHECK(diagram_str({4, 4, 2}) == "4,4,2");
  CHECK(diagram_str({}) == "()");
  CHECK(diagram_parse("4,4,2") == YoungDiagram{4, 4, 2});
  CHECK(diagram_parse("()") == YoungDiagram{});
  CHECK(diagram_parse("") == YoungDiagram{});
  CHECK_THROWS_AS(diagram_parse("2,3"), std::invalid_argument);
  CHECK_THROWS_AS(diagram_parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(diagram_parse("3,0"), std::invalid_argument);
}
