#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "schubert/cache.hpp"
#include "schubert/io.hpp"
#include "schubert/qorder.hpp"

using namespace schubert;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}  // namespace

TEST_SUITE_BEGIN("io_cache");

TEST_CASE("json round trips") {
  Permutation w = P("413652");
  CHECK(permutation_from_json(to_json(w)) == w);

  Partition lam{3, 1, 1};
  CHECK(partition_from_json(to_json(lam)) == lam);

  SparsePolynomial f = schubert_polynomial(w);
  CHECK(polynomial_from_json(to_json(f)) == f);

  // coefficients beyond 64 bits travel as strings
  SparsePolynomial big =
      SparsePolynomial::monomial({1}, int_from_string("123456789012345678901234567890"));
  CHECK(polynomial_from_json(to_json(big)) == big);
  CHECK(to_json(big)[0]["coeff"].is_string());

  TwoAlphabetPolynomial two = split_alphabet(f, VariableSplit::with_tail({1, 3}, 3));
  CHECK(two_alphabet_from_json(to_json(two)) == two);

  const SchubertExpansion& e = structure_constants(P("213"), P("132"));
  CHECK(expansion_from_json(to_json(e)) == e);

  Tableau t({{1, 2, 2}, {3, 4}});
  CHECK(tableau_from_json(to_json(t)) == t);
}

TEST_CASE("interval serialization") {
  LabeledInterval iv = LabeledInterval::k_bruhat(P("1234"), P("2413"), 2);
  auto j = to_json(iv);
  CHECK(j["kind"] == "k-bruhat");
  CHECK(j["k"] == 2);
  CHECK(j["nodes"].size() == iv.nodes().size());
  CHECK(j["covers"].size() == iv.covers().size());
  for (const auto& c : j["covers"]) CHECK(c.size() == 3);

  std::string dot = to_dot(iv);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
  CHECK(dot.find("label=") != std::string::npos);

  auto qj = to_json(q_interval(P("(1,2)")));
  for (const auto& c : qj["covers"]) CHECK(c.size() == 2);
}

TEST_CASE("disk cache round trip and poisoning") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "schubert-cache-test";
  std::filesystem::remove_all(dir);
  DiskCache cache(dir);
  cache.install();
  schubert_polynomial(P("456123"));
  structure_constants(P("45123"), P("21345"));
  DiskCache::uninstall();

  auto stats = cache.stats();
  CHECK(stats.schubert_records > 0);
  CHECK(stats.product_records > 0);
  CHECK(stats.malformed == 0);

  // poison the file, then reload: warn and keep going
  {
    std::ofstream out(cache.file(), std::ios::app);
    out << "{ this is not json\n";
  }
  CHECK(cache.stats().malformed == 1);
  size_t loaded = cache.load();
  CHECK(loaded == stats.schubert_records + stats.product_records);

  // a cold computation equals the cached one
  SparsePolynomial warm = schubert_polynomial(P("456123"));
  memo_clear();
  SparsePolynomial cold = schubert_polynomial(P("456123"));
  CHECK(warm == cold);

  cache.clear();
  CHECK(cache.stats().schubert_records == 0);
  std::filesystem::remove_all(dir);
}

TEST_SUITE_END();
