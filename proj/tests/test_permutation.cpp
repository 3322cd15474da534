#include <doctest.h>

#include <algorithm>
#include <set>

#include "schubert/permutation.hpp"

using namespace schubert;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}  // namespace

TEST_SUITE_BEGIN("perm");

TEST_CASE("canonical form trims trailing fixed points") {
  CHECK(Permutation::from_window({2, 1, 3, 4, 5}) == Permutation::from_window({2, 1}));
  CHECK(Permutation::from_window({1, 2, 3}).is_identity());
  CHECK(Permutation{}.degree() == 0);
  CHECK(P("21345").degree() == 2);
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(Permutation::from_window({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_window({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(P("abc"), std::invalid_argument);
  CHECK_THROWS_AS(P("(1,2"), std::invalid_argument);
  CHECK_THROWS_AS(P("(1,1,2)"), std::invalid_argument);
}

TEST_CASE("composition convention: (s t)(i) = s(t(i))") {
  Permutation w = P("45123");
  CHECK(compose(Permutation{}, w) == w);
  CHECK(compose(w, Permutation{}) == w);
  CHECK(compose(P("(2,4)(1,5,3)"), P("21345")) == P("45123"));
  CHECK(compose(P("213"), P("213")).is_identity());
}

TEST_CASE("length is the inversion count") {
  CHECK(Permutation{}.length() == 0);
  CHECK(P("45123").length() == 6);
  CHECK(P("413652").length() == 7);
  CHECK(P("21345").length() == 1);
}

TEST_CASE("lehmer code") {
  CHECK(Permutation{}.code().empty());
  CHECK(P("413652").code() == std::vector<int>{3, 0, 1, 2, 1});
  CHECK(P("2413").code() == std::vector<int>{1, 2});
  // sum of the code is the length
  for (const auto& w : all_permutations(5)) {
    int sum = 0;
    for (int c : w.code()) sum += c;
    CHECK(sum == w.length());
    CHECK(Permutation::from_code(w.code()) == w);
  }
}

TEST_CASE("grassmannian permutations") {
  CHECK(grassmannian(Partition{}, 3).is_identity());
  CHECK(grassmannian(Partition{2, 1}, 2) == P("2413"));
  CHECK(grassmannian(Partition{4}, 2) == P("162345"));
  CHECK_THROWS_AS(grassmannian(Partition{1, 1, 1}, 2), std::invalid_argument);

  auto shape = grassmannian_shape(P("2413"));
  REQUIRE(shape.has_value());
  CHECK(shape->first == Partition{2, 1});
  CHECK(shape->second == 2);
  CHECK_FALSE(grassmannian_shape(P("2431")).has_value());
  auto id = grassmannian_shape(Permutation{});
  REQUIRE(id.has_value());
  CHECK(id->first == Partition{});

  // round trip over a 4x4 box
  for (const auto& lam : partitions_in_box(4, 4)) {
    if (lam.empty()) continue;
    Permutation v = grassmannian(lam, 4);
    auto back = grassmannian_shape(v);
    REQUIRE(back.has_value());
    CHECK(back->first == lam);
    CHECK(back->second == 4);
    CHECK(v.length() == lam.size());
    CHECK(v.descents().size() <= 1);
  }
}

TEST_CASE("matrix deletion and insertion") {
  CHECK(delete_entry(P("631452"), 3) == P("52341"));
  CHECK(delete_entry(P("531642"), 3) == P("42531"));
  CHECK(delete_entry(Permutation{}, 2).is_identity());
  CHECK(insert_entry(P("52341"), 3, 1) == P("631452"));
  CHECK(insert_entry(P("42531"), 3, 1) == P("531642"));
  CHECK(insert_entry(Permutation{}, 1, 1).is_identity());

  for (const auto& y : all_permutations(5))
    for (int p = 1; p <= 6; ++p)
      for (int q = 1; q <= 6; ++q)
        CHECK(delete_entry(insert_entry(y, p, q), p) == y);
}

TEST_CASE("support relabeling") {
  CHECK(embed_support(Permutation{}, {3, 7}).is_identity());
  CHECK(embed_support(P("(2,4)(1,5,3)"), {1, 3, 4, 5, 7}) == P("(3,5)(1,7,4)"));
  CHECK(embed_support(P("21"), {4, 9}) == Permutation::transposition(4, 9));
  CHECK_THROWS_AS(embed_support(P("321"), {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(embed_support(P("21"), {5, 5}), std::invalid_argument);
}

TEST_CASE("conjugations") {
  CHECK(conjugate_by_longest(Permutation{}, 4).is_identity());
  CHECK(conjugate_by_longest(P("21"), 3) == P("132"));
  // w0 (1243) w0 computed directly in S_4: the cycle maps to (4,3,1,2),
  // which is the same permutation.
  CHECK(conjugate_by_longest(P("(1,2,4,3)"), 4) == P("(1,2,4,3)"));

  CHECK(conjugate_by_cycle(P("(1,2,4,3)"), 4) == P("(1,4,2,3)"));
  CHECK(conjugate_by_cycle(P("(1,4,2,3)"), 4) == P("(1,3,4,2)"));
  CHECK(conjugate_by_cycle(Permutation{}, 5).is_identity());
  CHECK_THROWS_AS(conjugate_by_longest(P("45123"), 4), std::invalid_argument);
  CHECK_THROWS_AS(conjugate_by_cycle(P("45123"), 4), std::invalid_argument);
  // n-fold conjugation returns to the start
  for (const auto& z : all_permutations(4)) {
    Permutation cur = z;
    for (int i = 0; i < 4; ++i) cur = conjugate_by_cycle(cur, 4);
    CHECK(cur == z);
  }
}

TEST_CASE("parsing and formatting") {
  CHECK(P("(2,4)(1,5,3)") == Permutation::from_window({5, 4, 1, 2, 3}));
  CHECK(P("21345") == Permutation::transposition(1, 2));
  Permutation ten = P("[10,1,2,3,4,5,6,7,8,9]");
  CHECK(ten.degree() == 10);
  CHECK(ten(1) == 10);
  CHECK(ten(10) == 9);
  CHECK(P("e").is_identity());
  CHECK(P("()").is_identity());

  for (const auto& w : all_permutations(4)) {
    CHECK(P(w.to_oneline().c_str()) == w);
    CHECK(P(w.to_cycles().c_str()) == w);
  }
  CHECK(Permutation{}.to_oneline() == "e");
  CHECK(Permutation{}.to_cycles() == "()");
  CHECK(P("45123").to_oneline() == "45123");
  CHECK(ten.to_oneline() == "[10,1,2,3,4,5,6,7,8,9]");
  CHECK(P("21").to_oneline(5) == "21345");
}

TEST_CASE("length identities") {
  for (const auto& s : all_permutations(4)) {
    CHECK(s.length() == s.inverse().length());
    for (const auto& t : all_permutations(4))
      CHECK(compose(s, t).length() <= s.length() + t.length());
  }
}

TEST_SUITE_END();
