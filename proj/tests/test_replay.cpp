#include <doctest.h>

#include <set>

#include "coxgrowth/errors.hpp"
#include "coxgrowth/replay.hpp"

using namespace coxgrowth;

namespace {

ReplayOptions corrupted() {
  ReplayOptions opt;
  opt.table.override_entry({Family::A, 2, 0}, {1, 3});
  return opt;
}

}  // namespace

TEST_SUITE("replay") {
  TEST_CASE("check ids are fixed and distinct") {
    const auto& ids = replay_check_ids();
    CHECK(ids.size() == 12);
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
    CHECK(ids.front() == "gamma-rates");
    CHECK(ids.back() == "f4-extension-volume");
    CHECK_THROWS_AS(replay_check("no-such-check"), InvalidArgument);
  }

  TEST_CASE("single checks fill every field") {
    for (const char* id : {"p0-rate", "w-steinberg-comparison", "ideal-link-partitions", "f4-extension-volume"}) {
      const Check c = replay_check(id);
      CHECK(c.id == id);
      CHECK(c.passed);
      CHECK_FALSE(c.computed.empty());
      CHECK_FALSE(c.expected.empty());
      CHECK((c.provenance == "published" || c.provenance == "derived"));
      CHECK(c.elapsed_ms >= 0);
    }
    CHECK(replay_check("ideal-link-partitions").note.find("(3,3,5)") != std::string::npos);
  }

  TEST_CASE("report order does not depend on the thread count") {
    ReplayOptions one;
    one.threads = 1;
    ReplayOptions many;
    many.threads = 4;
    const ReplayReport a = replay(one);
    const ReplayReport b = replay(many);
    REQUIRE(a.checks.size() == replay_check_ids().size());
    REQUIRE(b.checks.size() == a.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
      CHECK(a.checks[i].id == replay_check_ids()[i]);
      CHECK(b.checks[i].id == a.checks[i].id);
      CHECK(b.checks[i].passed == a.checks[i].passed);
      CHECK(b.checks[i].computed == a.checks[i].computed);
    }
    bool all = true;
    for (const auto& c : a.checks) all = all && c.passed;
    CHECK(a.passed() == all);
  }

  TEST_CASE("a corrupted exponent table is caught") {
    const ReplayOptions opt = corrupted();
    CHECK_FALSE(replay_check("gamma-rates", opt).passed);
    CHECK_FALSE(replay_check("w-steinberg-comparison", opt).passed);
    CHECK_FALSE(replay(opt).passed());
  }

  TEST_CASE("census counts") {
    CHECK(census_count(3) == 23);
    CHECK(census_count(9) == 3);
    CHECK_THROWS_AS(census_count(10), InvalidArgument);
  }
}

TEST_SUITE("replay_full") {
  TEST_CASE("every replay check passes") {
    const ReplayReport r = replay();
    for (const auto& c : r.checks) {
      INFO(c.id << ": " << c.computed);
      CHECK(c.passed);
    }
    CHECK(r.passed());
  }
}
