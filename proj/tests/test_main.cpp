#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "h6/report.hpp"

TEST_SUITE("report") {
  TEST_CASE("a report passes iff every clause passes") {
    h6::Report r;
    r.suite = "demo";
    CHECK(r.pass());
    r.check("a", "equal strings", "1", "1");
    CHECK(r.pass());
    r.check("b", "a false fact", false);
    CHECK_FALSE(r.pass());
    REQUIRE(r.find("b") != nullptr);
    CHECK(r.find("b")->computed == "false");
    CHECK(r.find("zzz") == nullptr);
    const auto j = h6::reports_to_json({r});
    CHECK(j["pass"] == false);
    CHECK(j["suites"][0]["clauses"][0]["id"] == "a");
    CHECK(j["suites"][0]["clauses"][1]["pass"] == false);
  }
}
