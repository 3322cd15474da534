#include <doctest.h>

#include <string>

#include "schubert/verify.hpp"

using namespace schubert;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }

bool has_note(const Report& r, const std::string& needle) {
  for (const auto& n : r.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}
}  // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("chain identity checker") {
  Report tiny = check_chain_identity(2, {1});
  CHECK(tiny.ok());
  CHECK(tiny.instances == 3);
  Report r = check_chain_identity(3, {1, 2});
  CHECK(r.ok());
  CHECK(r.instances > 3);
}

TEST_CASE("k-bruhat equivalence checker") {
  Report r = check_k_bruhat_equiv(4);
  CHECK(r.ok());
  CHECK(r.instances == 24 * 24 * 3);
}

TEST_CASE("skew invariance checker") {
  Report r = check_skew_invariance(3);
  CHECK(r.ok());
  CHECK(r.instances > 6);
}

TEST_CASE("schensted counting checker") {
  Report grass = check_schensted_counting(P("132"), P("2413"), 2);
  CHECK(grass.ok());
  CHECK(has_note(grass, "hypothesis established"));

  Report six = check_schensted_counting(P("312645"), P("561234"), 2);
  CHECK(six.ok());  // nothing asserted without the hypothesis
  CHECK(has_note(six, "hypothesis not established"));
  CHECK(has_note(six, "conclusion fails"));

  // (1,4,3,6,5,2) is not a Grassmannian quotient class, yet the tableau
  // counting still matches: recorded as a bonus pass, never asserted.
  Report bonus = check_schensted_counting(P("13254"), P("461235"), 2);
  CHECK(bonus.ok());
  CHECK(has_note(bonus, "hypothesis not established"));
  CHECK(has_note(bonus, "bonus pass"));

  Report trivial = check_schensted_counting(P("321"), P("321"), 1);
  CHECK(trivial.ok());
}

TEST_CASE("disjointness checker") {
  Report r = check_disjointness(P("(1,2)"), P("(3,4)"));
  CHECK(r.ok());
  CHECK(r.instances == 3);  // iso + two partitions of 2

  Report skip = check_disjointness(P("(1,2)"), P("(2,3)"));
  CHECK(skip.ok());
  CHECK(skip.instances == 0);
  CHECK(has_note(skip, "not a disjoint product"));

  Report trivial = check_disjointness(Permutation{}, P("(1,3,2)"));
  CHECK(trivial.ok());
}

TEST_CASE("cyclic shift checker") {
  Report r = check_cyclic_shift(3);
  CHECK(r.ok());
  CHECK(r.instances > 0);
}

TEST_CASE("deletion checker") {
  Report r = check_deletion_theorem(3);
  CHECK(r.ok());
  CHECK(r.instances > 0);
}

TEST_CASE("two-alphabet substitution checker") {
  Report pref = check_psi_P(3, VariableSplit::prefix(3));
  CHECK(pref.ok());
  CHECK(pref.instances == 6);
  // a genuinely mixed prefix: both alphabets occur, coefficients still >= 0
  Report half = check_psi_P(4, VariableSplit::prefix(2));
  CHECK(half.ok());
  Report mixed = check_psi_P(3, VariableSplit::with_tail({1, 3}, 3));
  CHECK(mixed.ok());
  CHECK(has_note(mixed, "prefix"));
}

TEST_CASE("reports are deterministic") {
  Report a = check_chain_identity(3, {2});
  Report b = check_chain_identity(3, {2});
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  CHECK(a.to_json(false)["checker"] == "chain_identity");
}

TEST_SUITE_END();
