#include <set>

#include "doctest.h"
#include "support.hpp"

#include "h6/codes.hpp"

using namespace h6;

namespace {

std::vector<GF4> all_gf4() { return {GF4(0), GF4(1), GF4(2), GF4(3)}; }

// Every GF(4) combination of the raw generator rows, deduplicated.
std::set<std::vector<std::uint8_t>> span_by_brute_force(const LinearCode& c) {
  std::set<std::vector<std::uint8_t>> words;
  const std::size_t rows = c.generators().size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < rows; ++i) total *= 4;
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<GF4> w(c.length());
    std::size_t digits = n;
    for (const Word4& g : c.generators()) {
      const GF4 coeff(static_cast<std::uint8_t>(digits % 4));
      digits /= 4;
      for (std::size_t k = 0; k < c.length(); ++k) w[k] = w[k] + coeff * g[k];
    }
    std::vector<std::uint8_t> v;
    for (GF4 e : w) v.push_back(e.value());
    words.insert(v);
  }
  return words;
}

}  // namespace

TEST_SUITE("codes") {
  TEST_CASE("GF(4) is a field with x^2 = x + 1") {
    CHECK(GF4::x() * GF4::x() == GF4::x() + GF4::one());
    CHECK(GF4::x2() == GF4::x() * GF4::x());
    CHECK(GF4::x() * GF4::x2() == GF4::one());
    CHECK(GF4::power_of_x(3) == GF4::one());
    CHECK(GF4::power_of_x(-1) == GF4::x2());
    CHECK_THROWS_AS(GF4::zero().inverse(), std::domain_error);
    for (GF4 a : all_gf4()) {
      CHECK(a + a == GF4::zero());
      CHECK(a * GF4::one() == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == GF4::one());
      if (!a.is_zero()) CHECK(a * a * a == GF4::one());
      for (GF4 b : all_gf4()) {
        CHECK(a * b == b * a);
        for (GF4 c : all_gf4()) {
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }

  TEST_CASE("hexacode parameters") {
    const LinearCode c = h6_code();
    CHECK(c.length() == 6);
    CHECK(c.generators().size() == 6);
    CHECK(c.dimension() == 3);
    CHECK(min_distance(c) == 4);
    CHECK(c.codewords().size() == 64);
    CHECK(weight_distribution(c) == std::vector<std::size_t>{1, 0, 0, 0, 45, 0, 18});
  }

  TEST_CASE("codewords agree with the span of all six rows") {
    for (GF4 image : {GF4::x(), GF4::x2()}) {
      const LinearCode c = h6_code(image);
      const auto oracle = span_by_brute_force(c);
      std::set<std::vector<std::uint8_t>> got;
      for (const Word4& w : c.codewords()) {
        std::vector<std::uint8_t> v;
        for (GF4 e : w) v.push_back(e.value());
        got.insert(v);
      }
      CHECK(got == oracle);
      std::size_t best = 7;
      for (const auto& v : oracle) {
        std::size_t wt = 0;
        for (auto e : v) wt += e != 0;
        if (wt > 0) best = std::min(best, wt);
      }
      CHECK(best == 4);
    }
    CHECK_THROWS_AS(h6_code(GF4::one()), std::invalid_argument);
  }

  TEST_CASE("punctures") {
    const LinearCode c = h6_code();
    for (std::size_t k = 1; k <= 6; ++k) {
      const LinearCode p = puncture(c, k);
      CHECK(p.length() == 5);
      CHECK(p.dimension() == 3);
      CHECK(min_distance(p) == 3);
    }
    CHECK_THROWS_AS(puncture(c, 0), std::out_of_range);
    CHECK_THROWS_AS(puncture(c, 7), std::out_of_range);
  }

  TEST_CASE("small codes") {
    CHECK(min_distance(repetition_code(6)) == 6);
    const LinearCode zero_column(3, {Word4{GF4::one(), GF4::x(), GF4::zero()}});
    CHECK(min_distance(zero_column) == 2);
    CHECK(min_distance(puncture(zero_column, 3)) == 2);
    CHECK_THROWS_AS(min_distance(LinearCode(4, {Word4(4)})), std::domain_error);
    CHECK_THROWS_AS(LinearCode(3, {Word4(2)}), std::invalid_argument);
  }

  TEST_CASE("json summary") {
    const auto j = hexacode_json();
    CHECK(j["dimension"] == 3);
    CHECK(j["min_distance"] == 4);
    CHECK(j["weight_distribution"][4] == 45);
  }

  TEST_CASE("report") { CHECK(verify_codes().pass()); }
}
