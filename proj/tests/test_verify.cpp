#include <doctest.h>

#include "fixtures.hpp"
#include "tamagawa/database.hpp"
#include "tamagawa/verify.hpp"
#include "tamagawa/visibility.hpp"

using namespace tamagawa;

TEST_CASE("single curve") {
  const auto s = run_verification_suite(parse_curve_db_text("11a1 0 -1 1 -10 -20 0 5\n"));
  CHECK(s.curves_scanned == 1);
  CHECK(s.bad_primes_checked == 1);
  CHECK(s.failures.empty());
  CHECK(s.ok());
  for (const auto& [name, c] : s.counters()) {
    INFO(name);
    CHECK(c->passed == c->total);
  }
  CHECK(s.pairing_ok.total == 1);
  CHECK(s.good_reduction_ok.total == kGoodPrimeSpotChecks);
}

TEST_CASE("empty database") {
  const auto s = run_verification_suite(DatabaseFile{});
  CHECK(s.curves_scanned == 0);
  CHECK(s.bad_primes_checked == 0);
  CHECK(s.failures.empty());
  for (const auto& [name, c] : s.counters()) CHECK(c->total == 0);
}

TEST_CASE("failures are empty exactly when every counter is full") {
  const auto s = run_verification_suite(parse_curve_db_text(fixtures::kSmallDb));
  bool full = true;
  for (const auto& [name, c] : s.counters()) full = full && c->passed == c->total;
  CHECK(full == s.failures.empty());
  CHECK(s.ok());
}

TEST_CASE("parallel kernels match their serial references on the corpus") {
  const auto db = parse_curve_db(TAMAGAWA_CORPUS);
  const auto parallel = run_verification_suite(db);
  CHECK(parallel == run_verification_suite_serial(db));
  CHECK(parallel.failures.empty());
  for (std::int64_t p : {3, 5, 7}) {
    CHECK(scan_congruent_pairs(db.records, p, 300) == scan_congruent_pairs_serial(db.records, p, 300));
  }
}
