#include "doctest.h"

#include <filesystem>

#include "cocenter/errors.hpp"
#include "cocenter/persist.hpp"
#include "cocenter/suites.hpp"
#include "cocenter/syntax.hpp"

using namespace cocenter;

TEST_CASE("newton suite on SL2 reports strata sizes") {
  SuiteOptions o;
  o.group = "A1";
  o.length = 4;
  auto reps = run_suite("newton", o);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].passed());
  bool found = false;
  for (const auto& [k, v] : reps[0].params)
    if (k == "strata_sizes") {
      CHECK(v == "5/2/2");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("suites are independent of the thread count") {
  SuiteOptions a;
  a.group = "A2";
  a.length = 4;
  a.random_strategies = 20;
  SuiteOptions b = a;
  b.jobs = 4;
  for (const char* name : {"reduction", "cocenter", "levi"}) {
    auto x = run_suite(name, a);
    auto y = run_suite(name, b);
    REQUIRE(x.size() == y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(report_json(x[i]) == report_json(y[i]));
      CHECK(report_text(x[i]) == report_text(y[i]));
      CHECK(x[i].passed());
    }
  }
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope", SuiteOptions{}), InputError); }

TEST_CASE("memo persistence round trip") {
  auto dir = std::filesystem::temp_directory_path() / "cocenter-memo-test";
  std::filesystem::remove_all(dir);
  IwahoriWeyl g(RootDatum::build(GroupDescriptor::parse("A1", "sc")));
  Cocenter first(g);
  for (const auto& w : g.ball(5, g.default_labels())) first.reduce_basis(w);
  save_cache(first, dir.string());
  Cocenter second(g);
  CHECK(load_cache(second, dir.string()) == first.memo_size());
  CHECK(second.snapshot() == first.snapshot());
  // another group ignores the file
  IwahoriWeyl h(RootDatum::build(GroupDescriptor::parse("A1", "adjoint")));
  Cocenter other(h);
  CHECK(load_cache(other, dir.string()) == 0);
  std::filesystem::remove_all(dir);
}
