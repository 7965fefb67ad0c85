#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "tamagawa/arith.hpp"
#include "tamagawa/database.hpp"
#include "tamagawa/visibility.hpp"

using namespace tamagawa;

namespace {

const DatabaseFile& small_db() {
  static const auto db = parse_curve_db_text(fixtures::kSmallDb);
  return db;
}

const CurveRecord& rec(const std::string& label) { return small_db().find(label); }

}  // namespace

TEST_CASE("records recompute the conductor") {
  CHECK(rec("11a1").conductor == 11);
  CHECK(rec("114c1").conductor == 114);
  CHECK_THROWS_AS(make_record("bad", WeierstrassCurve(0, -1, 1, -10, -20), 0, 5, Integer(12)), ValidationError);
  CHECK_THROWS_AS(make_record("neg", WeierstrassCurve(0, -1, 1, -10, -20), -1, 5), ValidationError);
}

TEST_CASE("Sturm bound") {
  CHECK(sturm_bound(11, 11) == 2);
  CHECK(sturm_bound(1, 1) == 1);
  CHECK(sturm_bound(114, 57) == 40);
}

TEST_CASE("congruence evidence") {
  const auto ev = congruence_evidence(rec("114c1"), rec("57a1"), 5, 100);
  CHECK(ev.pass());
  for (auto l : ev.checked_primes) {
    CHECK(l <= 100);
    CHECK(l != 2);
    CHECK(l != 3);
    CHECK(l != 19);
  }
  CHECK(ev.checked_primes.size() == primes_up_to(100).size() - 3);

  CHECK(congruence_evidence(rec("11a1"), rec("11a1"), 7, 500).pass());

  const auto bad = congruence_evidence(rec("11a1"), rec("57a1"), 5, 100);
  REQUIRE_FALSE(bad.pass());
  CHECK(bad.violation->ell <= 100);
  CHECK((bad.violation->trace_a - bad.violation->trace_b) % 5 != 0);
}

TEST_CASE("torsion multiple bound") {
  CHECK(torsion_multiple_bound(WeierstrassCurve(0, -1, 1, -10, -20)) % 5 == 0);
  CHECK(torsion_multiple_bound(WeierstrassCurve(1, 1, 1, -352, -2431)) % 4 == 0);
  CHECK(torsion_multiple_bound(WeierstrassCurve(1, 1, 1, -352, -2431)) == 4);
  // more primes can only shrink the gcd
  const WeierstrassCurve e(0, 0, 1, -1, 0);
  std::int64_t previous = 0;
  for (int k = 1; k <= 15; ++k) {
    const auto t = torsion_multiple_bound(e, k);
    if (previous) CHECK(previous % t == 0);
    previous = t;
  }
}

TEST_CASE("hypotheses for the 114c1 / 57a1 example") {
  const auto r = check_hypotheses(rec("114c1"), rec("57a1"), 5);
  for (const auto& [name, h] : r.hypotheses()) {
    INFO(name, ": ", h->note);
    CHECK(h->verdict == Verdict::Pass);
  }
  CHECK(r.all_pass());
  CHECK(r.tamagawa_product_a == 20);
  CHECK(r.tamagawa_product_b == 2);
  CHECK(r.n_radical == 114);
  CHECK(r.torsion_bound_a == 4);
  CHECK_FALSE(r.prediction.has_value());

  const auto v = predict_and_verify(rec("114c1"), rec("57a1"), 5);
  REQUIRE(v.prediction.has_value());
  CHECK(*v.prediction == 5);
  CHECK(*v.torsor_p_torsion == 5);
  CHECK(*v.verified);
}

TEST_CASE("failing hypotheses give no prediction") {
  const auto swapped = predict_and_verify(rec("57a1"), rec("114c1"), 5);
  CHECK(swapped.rank_a_zero.verdict == Verdict::Fail);
  CHECK_FALSE(swapped.prediction.has_value());
  CHECK_FALSE(swapped.verified.has_value());

  const auto two = predict_and_verify(rec("114c1"), rec("57a1"), 2);
  CHECK(two.p_odd.verdict == Verdict::Fail);
  CHECK_FALSE(two.all_pass());
  CHECK_FALSE(two.prediction.has_value());

  const auto noncongruent = predict_and_verify(rec("11a1"), rec("37a1"), 5);
  CHECK(noncongruent.congruence.verdict == Verdict::Fail);
  CHECK_FALSE(noncongruent.prediction.has_value());
}

TEST_CASE("scan") {
  const auto pairs = scan_congruent_pairs(small_db().records, 5, 1000);
  REQUIRE(pairs.size() == 1);
  CHECK(small_db().records[pairs[0].first].label == "114c1");
  CHECK(small_db().records[pairs[0].second].label == "57a1");
  CHECK(scan_congruent_pairs(small_db().records, 13, 1000).empty());

  // the same curve under two labels is excluded only because both ranks are 0
  const auto twin = parse_curve_db_text("x1 0 -1 1 -10 -20 0 5\nx2 0 -1 1 -10 -20 0 5\n");
  CHECK(scan_congruent_pairs(twin.records, 5, 1000).empty());
  const auto twin_ranks = parse_curve_db_text("x1 0 -1 1 -10 -20 0 5\nx2 0 -1 1 -10 -20 1 5\n");
  CHECK(scan_congruent_pairs(twin_ranks.records, 5, 1000).size() == 1);
}

TEST_CASE("trace table leaves bad primes empty") {
  const auto t = trace_table(rec("11a1"), {2, 3, 5, 7, 11, 13});
  REQUIRE(t.size() == 6);
  CHECK(*t[0] == -2);
  CHECK(*t[1] == -1);
  CHECK_FALSE(t[4].has_value());
  CHECK(*t[5] == 4);
}
