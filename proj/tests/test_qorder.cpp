#include <doctest.h>

#include <set>

#include "schubert/bruhat.hpp"
#include "schubert/qorder.hpp"
#include "schubert/schubert_basis.hpp"
#include "schubert/tableaux.hpp"

using namespace schubert;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

// Witness form of the order, brute-forced over u in S6, k <= 5.
bool q_leq_witness(const Permutation& eta, const Permutation& zeta) {
  for (const auto& u : all_permutations(6)) {
    Permutation eu = compose(eta, u), zu = compose(zeta, u);
    for (int k = 1; k <= 5; ++k)
      if (k_bruhat_leq(u, eu, k) && k_bruhat_leq(eu, zu, k)) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE_BEGIN("qorder");

TEST_CASE("profiles, compression, shape equivalence") {
  auto prof = UpDownProfile::of(P("(2,4)(1,5,3)"));
  CHECK(prof.up == std::vector<int>{1, 2});
  CHECK(prof.down == std::vector<int>{3, 4, 5});
  CHECK(prof.support() == std::vector<int>{1, 2, 3, 4, 5});

  CHECK(compress(P("132")) == P("21"));
  CHECK(shape_equivalent(P("(2,4)(1,5,3)"), P("(2,4)(1,5,3)")));
  CHECK(shape_equivalent(P("(2,4)(1,5,3)"), P("(3,5)(1,7,4)")));
  CHECK(shape_equivalent(P("21"), Permutation::transposition(1, 3)));
  CHECK_FALSE(shape_equivalent(P("21"), P("(1,2,3)")));
  // relabeling the support never changes the shape class
  for (const auto& z : all_permutations(4)) {
    CHECK(shape_equivalent(z, embed_support(z, {2, 4, 6, 8})));
    CHECK(shape_equivalent(z, embed_support(z, {1, 5, 6, 9})));
  }
}

TEST_CASE("rank closed form") {
  CHECK(q_rank(Permutation{}) == 0);
  CHECK(q_rank(P("21")) == 1);
  CHECK(q_rank(P("(2,4)(1,5,3)")) == 5);
  CHECK(q_rank(P("(2,4)(1,5,3)")) == P("45123").length() - P("21345").length());
  // shape invariance of the rank
  for (const auto& z : all_permutations(4)) {
    CHECK(q_rank(z) == q_rank(embed_support(z, {3, 4, 7, 9})));
    CHECK(q_rank(z) == q_rank(compress(z)));
  }
}

TEST_CASE("rank agrees with every witness on S4") {
  for (const auto& zeta : all_permutations(4)) {
    auto wk = find_k_witness(zeta, 1);
    REQUIRE(wk.has_value());
    CHECK(q_rank(zeta) == compose(zeta, wk->u).length() - wk->u.length());
    auto wk3 = find_k_witness(zeta, 3);
    REQUIRE(wk3.has_value());
    CHECK(q_rank(zeta) == compose(zeta, wk3->u).length() - wk3->u.length());
  }
}

TEST_CASE("comparison agrees with the witness definition over S4") {
  auto s4 = all_permutations(4);
  for (const auto& eta : s4)
    for (const auto& zeta : s4) {
      bool conditions = q_leq(eta, zeta);
      bool witness = q_leq_witness(eta, zeta);
      CHECK(conditions == witness);
    }
}

TEST_CASE("pinned comparabilities") {
  CHECK(q_leq(Permutation{}, P("(2,4)(1,5,3)")));
  CHECK_FALSE(q_leq(P("21"), P("(2,4)(1,5,3)")));
  CHECK(q_leq(P("132"), P("2413")));
  CHECK_FALSE(q_leq(P("21"), P("2413")));
}

TEST_CASE("grassmannian restriction is the partition order") {
  for (int k = 1; k <= 3; ++k) {
    for (const auto& mu : partitions_in_box(k, 4 - k))
      for (const auto& lam : partitions_in_box(k, 4 - k))
        CHECK(q_leq(grassmannian(mu, k), grassmannian(lam, k)) == lam.contains(mu));
  }
}

TEST_CASE("intervals in the graded order") {
  CHECK(q_interval(Permutation{}).nodes().size() == 1);

  LabeledInterval q = q_interval(P("(2,4)(1,5,3)"));
  LabeledInterval b = LabeledInterval::k_bruhat(P("21345"), P("45123"), 2);
  CHECK(q.is_graded());
  CHECK(isomorphic(q, b));
  // the explicit correspondence v -> v u^{-1}
  Permutation uinv = P("21345").inverse();
  std::set<Permutation> mapped;
  for (const auto& v : b.nodes()) mapped.insert(compose(v, uinv));
  std::set<Permutation> qnodes(q.nodes().begin(), q.nodes().end());
  CHECK(mapped == qnodes);

  // disjoint product of two 2-chains
  LabeledInterval square = q_interval(compose(P("(1,2)"), P("(3,4)")));
  CHECK(square.nodes().size() == 4);
  CHECK(square.maximal_chain_count() == 2);

  CHECK_THROWS_AS(q_interval(P("21"), P("2413")), std::invalid_argument);

  // membership forces the support inside the top's support
  for (const auto& eta : all_permutations(4))
    if (q_leq(eta, P("2413"))) {
      for (int a : eta.support()) CHECK(P("2413")(a) != a);
    }
}

TEST_CASE("every interval is graded and matches its witness interval") {
  for (const auto& zeta : all_permutations(4)) {
    LabeledInterval q = q_interval(zeta);
    CHECK(q.is_graded());
    CHECK(q.height() == q_rank(zeta));
    auto wk = find_k_witness(zeta, 1);
    REQUIRE(wk.has_value());
    LabeledInterval b = LabeledInterval::k_bruhat(wk->u, compose(zeta, wk->u), wk->k);
    CHECK(isomorphic(q, b));
  }
}

TEST_CASE("chain counts decompose through skew coefficients") {
  // |maximal chains of [u, zeta u]_k| = sum_lambda c^zeta_lambda * #SYT(lambda)
  for (const auto& zeta : all_permutations(4)) {
    auto wk = find_k_witness(zeta, 1);
    REQUIRE(wk.has_value());
    Int chains = LabeledInterval::k_bruhat(wk->u, compose(zeta, wk->u), wk->k)
                     .maximal_chain_count();
    Int total = 0;
    for (const auto& lam : partitions_of(q_rank(zeta)))
      total += skew_coefficient(zeta, lam) * syt_count(lam);
    CHECK(chains == total);
  }
  // pinned: the six-chain interval decomposes as 1*1 + 1*3 + 1*2
  Int six = LabeledInterval::k_bruhat(P("312645"), P("561234"), 2).maximal_chain_count();
  CHECK(six == syt_count(Partition{4}) + syt_count(Partition{3, 1}) + syt_count(Partition{2, 2}));
}

TEST_CASE("order automorphisms and reversals on S4") {
  auto s4 = all_permutations(4);
  // interval translation: [eta,zeta] = [e, zeta eta^{-1}] via xi -> xi eta^{-1}
  for (const auto& eta : s4)
    for (const auto& zeta : s4) {
      if (!q_leq(eta, zeta)) continue;
      LabeledInterval upper = q_interval(eta, zeta);
      LabeledInterval base = q_interval(compose(zeta, eta.inverse()));
      CHECK(upper.nodes().size() == base.nodes().size());
      std::set<Permutation> translated;
      for (const auto& xi : upper.nodes()) translated.insert(compose(xi, eta.inverse()));
      std::set<Permutation> base_nodes(base.nodes().begin(), base.nodes().end());
      CHECK(translated == base_nodes);
    }
  // eta -> eta zeta^{-1} reverses [e,zeta] onto [e,zeta^{-1}]
  for (const auto& zeta : s4) {
    LabeledInterval fwd = q_interval(zeta);
    LabeledInterval rev = q_interval(zeta.inverse());
    CHECK(fwd.nodes().size() == rev.nodes().size());
    for (const auto& a : fwd.nodes())
      for (const auto& b : fwd.nodes())
        CHECK(q_leq(a, b) == q_leq(compose(b, zeta.inverse()), compose(a, zeta.inverse())));
  }
  // conjugation by the longest element is an automorphism
  for (const auto& a : s4)
    for (const auto& b : s4)
      CHECK(q_leq(a, b) == q_leq(conjugate_by_longest(a, 4), conjugate_by_longest(b, 4)));
}

TEST_CASE("disjoint products") {
  CHECK(is_disjoint_product(Permutation{}, P("(1,3,2)")));
  CHECK(is_disjoint_product(P("(1,2)"), P("(3,4)")));
  CHECK(q_rank(P("2143")) == 2);
  CHECK_FALSE(is_disjoint_product(P("(1,2)"), P("(2,3)")));
}

TEST_SUITE_END();
