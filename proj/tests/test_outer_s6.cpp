#include <map>
#include <set>

#include "doctest.h"
#include "support.hpp"

#include "h6/grouptheory.hpp"
#include "h6/outer_s6.hpp"

using namespace h6;

namespace {

// All perfect matchings of the points in `rest` by recursion on the smallest point.
void matchings(std::vector<int> rest, std::vector<Duad>& partial, std::set<std::vector<Duad>>& out) {
  if (rest.empty()) {
    std::vector<Duad> m = partial;
    std::sort(m.begin(), m.end());
    out.insert(m);
    return;
  }
  const int a = rest[0];
  for (std::size_t k = 1; k < rest.size(); ++k) {
    std::vector<int> next;
    for (std::size_t m = 1; m < rest.size(); ++m)
      if (m != k) next.push_back(rest[m]);
    partial.emplace_back(a, rest[k]);
    matchings(next, partial, out);
    partial.pop_back();
  }
}

}  // namespace

TEST_SUITE("outer_s6") {
  TEST_CASE("the outer automorphism") {
    const AutoTable sigma = build_outer();
    CHECK(sigma.size() == 720);
    CHECK(sigma.is_bijective());
    CHECK(sigma.is_multiplicative());
    CHECK(sigma.is_multiplicative_exhaustive());
    CHECK(sigma(parse_cycles("(1,2)", 6)).str() == "(1,2)(3,6)(4,5)");
    CHECK(sigma(parse_cycles("(1,2,3,4,5,6)", 6)).str() == "(1,2,6)(3,5)");
    CHECK(sigma(parse_cycles("(2,3,4,5,6)", 6)).str() == "(2,3,4,5,6)");
    CHECK(sigma(Permutation(6)).is_identity());
    CHECK_FALSE(is_inner(sigma).has_value());
    CHECK(is_inner(compose(sigma, sigma)).has_value());
    CHECK_THROWS_AS(sigma(Permutation(7)), std::out_of_range);
  }

  TEST_CASE("sigma swaps conjugacy classes and keeps orders") {
    const AutoTable sigma = build_outer();
    std::map<std::vector<int>, std::set<std::vector<int>>> image_types;
    for (const Permutation& g : s6_elements()) {
      CHECK(sigma(g).order() == g.order());
      image_types[g.cycle_type()].insert(sigma(g).cycle_type());
    }
    // each class goes to a single class
    for (const auto& [type, images] : image_types) CHECK(images.size() == 1);
    CHECK(*image_types[{2, 1, 1, 1, 1}].begin() == std::vector<int>{2, 2, 2});
    CHECK(*image_types[{3, 1, 1, 1}].begin() == std::vector<int>{3, 3});
    CHECK(*image_types[{6}].begin() == std::vector<int>{3, 2, 1});
    CHECK(*image_types[{4, 1, 1}].begin() == std::vector<int>{4, 1, 1});
  }

  TEST_CASE("inner tables") {
    const Permutation h = parse_cycles("(1,3,5)(2,6)", 6);
    const AutoTable t = inner_table(h);
    CHECK(t.is_multiplicative_exhaustive());
    const auto found = is_inner(t);
    REQUIRE(found.has_value());
    // S6 has trivial center, so the conjugator is unique
    CHECK(*found == h);
    CHECK(is_inner(identity_table()).value().is_identity());
  }

  TEST_CASE("non-multiplicative tables are rejected") {
    std::unordered_map<Permutation, Permutation, PermutationHash> m;
    for (const Permutation& g : s6_elements()) m.emplace(g, g);
    const Permutation a = parse_cycles("(1,2)", 6), b = parse_cycles("(1,3)", 6);
    m[a] = b;
    m[b] = a;
    const AutoTable t(std::move(m));
    CHECK(t.is_bijective());
    CHECK_FALSE(t.is_multiplicative());
    CHECK_THROWS_AS(is_inner(t), NotAHomomorphism);
    CHECK_THROWS_AS(AutoTable(std::unordered_map<Permutation, Permutation, PermutationHash>{}), std::invalid_argument);
  }

  TEST_CASE("synthemes by recursion") {
    std::set<std::vector<Duad>> oracle;
    std::vector<Duad> partial;
    matchings({1, 2, 3, 4, 5, 6}, partial, oracle);
    const std::vector<Syntheme> s = all_synthemes();
    CHECK(s.size() == 15);
    CHECK(oracle.size() == 15);
    std::set<std::vector<Duad>> got;
    for (const Syntheme& x : s) got.insert({x.begin(), x.end()});
    CHECK(got == oracle);
  }

  TEST_CASE("synthematic totals") {
    const std::vector<SynthematicTotal> totals = sylvester_totals();
    REQUIRE(totals.size() == 6);
    CHECK(std::is_sorted(totals.begin(), totals.end()));
    // each total uses all 15 duads once
    for (const SynthematicTotal& t : totals) {
      std::set<Duad> duads;
      for (const Syntheme& s : t.synthemes) duads.insert(s.begin(), s.end());
      CHECK(duads.size() == 15);
    }
    // each syntheme lies in exactly two totals, and two totals share exactly one syntheme
    std::map<Syntheme, int> count;
    for (const SynthematicTotal& t : totals)
      for (const Syntheme& s : t.synthemes) ++count[s];
    CHECK(count.size() == 15);
    for (const auto& [s, n] : count) CHECK(n == 2);
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = a + 1; b < 6; ++b) {
        int shared = 0;
        for (const Syntheme& x : totals[a].synthemes)
          for (const Syntheme& y : totals[b].synthemes) shared += x == y;
        CHECK(shared == 1);
      }
  }

  TEST_CASE("the action on totals is outer and matches sigma up to inner") {
    const AutoTable by_totals = totals_outer();
    CHECK(by_totals.is_multiplicative_exhaustive());
    CHECK_FALSE(is_inner(by_totals).has_value());
    const auto h = compare_up_to_inner(build_outer(), by_totals);
    REQUIRE(h.has_value());
    const AutoTable sigma = build_outer();
    for (const Permutation& g : s6_elements()) CHECK(sigma(g) == conjugate(by_totals(g), *h));
  }

  TEST_CASE("json table") {
    const auto j = outer_to_json(build_outer());
    CHECK(j["generator_images"]["(1,2)"] == "(1,2)(3,6)(4,5)");
    CHECK(j["generator_images"]["(2,3,4,5,6)"] == "(2,3,4,5,6)");
    CHECK(j["table"].size() == 720);
    CHECK(j["table"][0][0] == "id");
    CHECK(j["table"][0][1] == "id");
  }

  TEST_CASE("report") {
    const Report r = verify_outer();
    for (const Clause& c : r.clauses) {
      CAPTURE(c.id);
      CHECK(c.pass);
    }
  }
}
