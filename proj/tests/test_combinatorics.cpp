#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "qyd/combinatorics.hpp"

using namespace qyd;

namespace {

// Flatten-and-count helper for multiset algebra on composition multisets.
std::map<Composition, long> ms_combine(const std::map<Composition, long>& a,
                                       const std::map<Composition, long>& b, bool quasi) {
  std::map<Composition, long> out;
  for (const auto& [x, mx] : a)
    for (const auto& [y, my] : b)
      for (const auto& [z, mz] : quasi ? quasi_shuffle(x, y) : shuffle(x, y)) out[z] += mx * my * mz;
  return out;
}

}  // namespace

TEST_CASE("compositions_of enumerates lexicographically") {
  CHECK(compositions_of(0) == std::vector<Composition>{Composition{}});
  std::vector<Composition> want{{1, 1, 1}, {1, 2}, {2, 1}, {3}};
  CHECK(compositions_of(3) == want);
  CHECK(compositions_of(5).size() == 16);
  CHECK(compositions_of(8).size() == 128);
  for (const auto& c : compositions_of(6)) CHECK(comp_weight(c) == 6);
}

TEST_CASE("quasi_shuffle matches hand expansions") {
  std::map<Composition, long> want{{{1, 1, 2}, 1}, {{1, 2, 1}, 1}, {{2, 1, 1}, 1}, {{1, 3}, 1}, {{3, 1}, 1}};
  CHECK(quasi_shuffle({2}, {1, 1}) == want);

  std::map<Composition, long> w2{{{1, 1}, 2}, {{2}, 1}};
  CHECK(quasi_shuffle({1}, {1}) == w2);

  CHECK(quasi_shuffle({}, {3, 1}) == std::map<Composition, long>{{{3, 1}, 1}});
}

TEST_CASE("shuffle matches hand expansions") {
  std::map<Composition, long> want{{{2, 3}, 1}, {{3, 2}, 1}};
  CHECK(shuffle({2}, {3}) == want);
  std::map<Composition, long> w2{{{1, 1, 2}, 2}, {{1, 2, 1}, 1}};
  CHECK(shuffle({1, 2}, {1}) == w2);
  CHECK(shuffle({}, {2}) == std::map<Composition, long>{{{2}, 1}});
}

TEST_CASE("shuffle cardinality and quasi-shuffle weight") {
  auto count = [](const std::map<Composition, long>& m) {
    long c = 0;
    for (auto& [k, v] : m) c += v;
    return c;
  };
  Composition a{1, 2, 1}, b{2, 2};
  CHECK(count(shuffle(a, b)) == 10);  // C(5,3)
  for (const auto& [k, v] : quasi_shuffle(a, b)) CHECK(comp_weight(k) == 8);
}

TEST_CASE("shuffle operations are commutative and associative") {
  for (bool quasi : {false, true}) {
    for (int wa = 0; wa <= 3; ++wa)
      for (const auto& a : compositions_of(wa))
        for (int wb = 0; wa + wb <= 4; ++wb)
          for (const auto& b : compositions_of(wb)) {
            auto ab = quasi ? quasi_shuffle(a, b) : shuffle(a, b);
            auto ba = quasi ? quasi_shuffle(b, a) : shuffle(b, a);
            CHECK(ab == ba);
            for (int wc = 0; wa + wb + wc <= 6 && wc <= 2; ++wc)
              for (const auto& c : compositions_of(wc)) {
                auto left = ms_combine(ab, {{c, 1}}, quasi);
                auto bc = quasi ? quasi_shuffle(b, c) : shuffle(b, c);
                auto right = ms_combine({{a, 1}}, bc, quasi);
                CHECK(left == right);
              }
          }
  }
}

TEST_CASE("coarsenings") {
  std::vector<Composition> want{{1, 2, 2}, {3, 2}, {1, 4}, {5}};
  CHECK(coarsenings({1, 2, 2}) == want);
  CHECK(coarsenings({7}) == std::vector<Composition>{{7}});
  std::vector<Composition> w3{{1, 1, 1}, {2, 1}, {1, 2}, {3}};
  CHECK(coarsenings({1, 1, 1}) == w3);
  CHECK(coarsenings({1, 1, 2, 1}).size() == 8);
}

TEST_CASE("composition text form") {
  CHECK(comp_str({1, 2, 2}) == "1.2.2");
  CHECK(comp_str({}) == "");
  CHECK(comp_parse("1.2.2") == Composition{1, 2, 2});
  CHECK(comp_parse("") == Composition{});
  CHECK(comp_parse("12") == Composition{12});
  CHECK_THROWS_AS(comp_parse("1..2"), std::invalid_argument);
  CHECK_THROWS_AS(comp_parse("0.1"), std::invalid_argument);
}

TEST_CASE("partitions") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(8).size() == 22);
  CHECK(partitions_up_to(3).size() == 1 + 1 + 2 + 3);
  CHECK(conjugate(Partition{4, 4, 2}) == Partition{3, 3, 2, 2});
  CHECK(conjugate(Partition{}) == Partition{});
  for (const auto& p : partitions_of(6)) CHECK(is_partition(p));
}

TEST_CASE("permutation product applies left factor first") {
  Permutation s{{3, 1, 2}};  // 1->3, 2->1, 3->2
  Permutation t{{2, 1, 3}};
  Permutation st = perm_product(s, t);
  CHECK(st(1) == t(s(1)));
  CHECK(st.img == std::vector<int>{3, 2, 1});
  CHECK(perm_product(s, perm_inverse(s)) == perm_identity(3));
}

TEST_CASE("permutation cycles and sign") {
  Permutation c3{{2, 3, 1}};
  CHECK(perm_cycles(c3) == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(perm_sign(c3) == 1);
  Permutation tr{{2, 1, 3, 4}};
  CHECK(perm_sign(tr) == -1);
  CHECK(perm_cycles(tr).size() == 3);
  CHECK(perm_sign(perm_identity(5)) == 1);
}

TEST_CASE("two_factorizations") {
  Permutation id1{{1}};
  auto f1 = two_factorizations(id1);
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].first == id1);
  CHECK(f1[0].second == id1);

  Permutation pi{{2, 3, 1}};  // the 3-cycle 1->2->3->1
  auto f = two_factorizations(pi);
  CHECK(f.size() == 6);
  std::set<std::vector<int>> sigmas;
  for (const auto& [s, t] : f) {
    CHECK(perm_product(s, t) == pi);
    sigmas.insert(s.img);
  }
  CHECK(sigmas.size() == 6);  // (σ,τ) ↦ σ is a bijection onto S_3
  bool found = false;
  for (const auto& [s, t] : f)
    if (s == pi && t == perm_identity(3)) found = true;
  CHECK(found);
}

TEST_CASE("set composition counts") {
  std::vector<long> all{1, 1, 3, 13, 75, 541};
  std::vector<long> odd{0, 1, 1, 7, 37, 271};
  for (int n = 0; n <= 5; ++n) {
    CHECK(static_cast<long>(set_compositions(n).size()) == all[static_cast<std::size_t>(n)]);
    CHECK(static_cast<long>(set_compositions(n, BlockParity::odd).size()) == odd[static_cast<std::size_t>(n)]);
    CHECK(static_cast<long>(set_compositions(n, BlockParity::even).size()) ==
          all[static_cast<std::size_t>(n)] - odd[static_cast<std::size_t>(n)]);
    CHECK(ordered_bell(n) == Integer(all[static_cast<std::size_t>(n)]));
  }
  CHECK(ordered_bell(6) == 4683);
  // (OB(n) - (-1)^n)/2 counts the odd-block-count set compositions, n ≤ 6
  for (int n = 0; n <= 6; ++n) {
    Integer expect = (ordered_bell(n) - (n % 2 == 0 ? 1 : -1)) / 2;
    if (n <= 5)
      CHECK(Integer(static_cast<long>(set_compositions(n, BlockParity::odd).size())) == expect);
  }
}

TEST_CASE("set composition structure and text form") {
  for (const auto& k : set_compositions(4)) {
    std::set<int> elems;
    for (const auto& b : k) {
      CHECK(!b.empty());
      for (int v : b) CHECK(elems.insert(v).second);
    }
    CHECK(elems == std::set<int>{1, 2, 3, 4});
  }
  SetComposition k{{2, 3}, {1, 5}, {6}, {4}};
  CHECK(setcomp_str(k) == "{2,3}|{1,5}|{6}|{4}");
  CHECK(setcomp_parse("{2,3}|{1,5}|{6}|{4}") == k);
  CHECK_THROWS_AS(setcomp_parse("{}"), std::invalid_argument);
}

TEST_CASE("pack") {
  CHECK(pack({3, 6, 4, 4, 3, 4}) == PackedWord{1, 3, 2, 2, 1, 2});
  CHECK(pack({7, 7, 7}) == PackedWord{1, 1, 1});
  CHECK(pack({2, 1, 2}) == PackedWord{2, 1, 2});
  for (const auto& u : packed_words(4)) CHECK(pack(u) == u);  // idempotence
  // relative order of equal letters is preserved: positions of value 4 stay increasing
  auto p = pack({9, 4, 9, 4});
  CHECK(p == PackedWord{2, 1, 2, 1});
}

TEST_CASE("packed word enumeration") {
  CHECK(packed_words(0) == std::vector<PackedWord>{PackedWord{}});
  std::vector<PackedWord> w2{{1, 1}, {1, 2}, {2, 1}};
  CHECK(packed_words(2) == w2);
  CHECK(packed_words(3).size() == 13);
  CHECK(packed_words(5).size() == 541);
  for (const auto& u : packed_words(4)) CHECK(is_packed(u));
}

TEST_CASE("word_eval, sorting permutation, action") {
  CHECK(word_eval({1, 2, 1}) == Composition{2, 1});
  CHECK(word_eval({1, 1, 2, 2, 2}) == Composition{2, 3});
  CHECK(sorted_word({1, 2, 1}) == PackedWord{1, 1, 2});
  CHECK(sorting_perm({1, 2, 1}).img == std::vector<int>{1, 3, 2});
  for (const auto& u : packed_words(4)) {
    Permutation s = sorting_perm(u);
    CHECK(word_action(sorted_word(u), s) == u);
  }
  // the pinned reindexing example: w·(3 1 2 4) moves w_3 to the front
  std::vector<int> w{11, 22, 33, 44};
  Permutation s{{3, 1, 2, 4}};
  CHECK(word_action(w, s) == std::vector<int>{33, 11, 22, 44});
}

TEST_CASE("word text form") {
  CHECK(word_str({1, 3, 2, 2, 1, 2}) == "132212");
  CHECK(word_parse("132212") == PackedWord{1, 3, 2, 2, 1, 2});
  CHECK(word_str({1, 10, 2}) == "1.10.2");
  CHECK(word_parse("1.10.2") == PackedWord{1, 10, 2});
  CHECK(word_parse("") == PackedWord{});
}
