#include "tamagawa/verify.hpp"

#include <algorithm>
#include <exception>

#include "tamagawa/cohomology.hpp"

namespace tamagawa {

std::vector<std::pair<std::string, const CheckCounter*>> VerificationSummary::counters() const {
  return {
      {"herbrand_ok", &herbrand_ok},       {"tt_equals_c_ok", &tt_equals_c_ok},
      {"kind_ok", &kind_ok},               {"duality_ok", &duality_ok},
      {"stabilization_ok", &stabilization_ok}, {"pairing_ok", &pairing_ok},
      {"good_reduction_ok", &good_reduction_ok}, {"product_ok", &product_ok},
  };
}

namespace {

enum class Check { Herbrand, TtEqualsC, Kind, Duality, Stabilization, Pairing, GoodReduction, Product };

const char* check_name(Check c) {
  switch (c) {
    case Check::Herbrand: return "herbrand";
    case Check::TtEqualsC: return "tt_equals_c";
    case Check::Kind: return "kind";
    case Check::Duality: return "duality";
    case Check::Stabilization: return "stabilization";
    case Check::Pairing: return "pairing";
    case Check::GoodReduction: return "good_reduction";
    case Check::Product: return "product";
  }
  return "?";
}

struct Outcome {
  Check check;
  bool passed;
  std::string p;
  std::string detail;
};

// local_index < 0 selects the per-curve checks.
struct Task {
  std::size_t record;
  int local_index;
};

std::vector<Task> make_tasks(const DatabaseFile& db) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < db.records.size(); ++i) {
    tasks.push_back({i, -1});
    for (std::size_t j = 0; j < db.records[i].local.size(); ++j) tasks.push_back({i, static_cast<int>(j)});
  }
  return tasks;
}

std::string sizes(std::int64_t a, std::int64_t b) { return std::to_string(a) + " vs " + std::to_string(b); }

void check_bad_prime(const CurveRecord& rec, const LocalData& ld, std::vector<Outcome>& out) {
  const std::string p = ld.p.get_str();
  const auto h0 = invariants_subgroup(ld.phi);
  const auto h1 = coinvariants_quotient(ld.phi);
  out.push_back({Check::Herbrand, h0.order() == h1.order(), p, sizes(h0.order(), h1.order())});
  out.push_back({Check::TtEqualsC, h0.order() == ld.tamagawa && h1.order() == ld.tamagawa, p,
                 "c_p = " + std::to_string(ld.tamagawa) + ", #H0 = " + std::to_string(h0.order()) +
                     ", #H1 = " + std::to_string(h1.order())});
  const ReductionKind kind = reduction_kind(rec.curve, ld.p);
  out.push_back({Check::Kind, kind == ld.kind, p, to_string(kind) + " vs " + to_string(ld.kind)});
  // the component group of an elliptic curve is self-dual, so H0 ~ H1 directly
  out.push_back({Check::Duality, duality_check(ld.phi) && h0 == h1, p, h0.to_string() + " vs " + h1.to_string()});

  const std::int64_t d = stabilization_degree(ld.phi);
  const auto at_d = cyclic_h1(ld.phi.group, ld.phi.frobenius, d);
  const auto at_2d = cyclic_h1(ld.phi.group, ld.phi.frobenius, 2 * d);
  out.push_back({Check::Stabilization, at_d.order() == h1.order() && at_2d.order() == h1.order(), p,
                 "d = " + std::to_string(d) + ": " + std::to_string(at_d.order()) + ", " +
                     std::to_string(at_2d.order()) + " vs " + std::to_string(h1.order())});
  if (ld.kodaira.is_multiplicative()) {
    out.push_back({Check::Pairing, induced_pairing_check(ld.phi), p, ld.kodaira.to_string()});
  }
}

void check_curve(const CurveRecord& rec, std::vector<Outcome>& out) {
  Integer tt_product = 1;
  for (const auto& ld : rec.local) tt_product *= tamagawa_torsor_group(ld).order();
  const Integer c_product = tamagawa_product(rec.local);
  out.push_back({Check::Product, tt_product == c_product, "", tt_product.get_str() + " vs " + c_product.get_str()});

  int checked = 0;
  for (unsigned long q = 2; checked < kGoodPrimeSpotChecks; ++q) {
    if (!is_prime(Integer(q)) || mpz_divisible_ui_p(rec.conductor.get_mpz_t(), q)) continue;
    const LocalData ld = tate_local_data(rec.curve, Integer(q));
    const bool trivial = ld.kodaira.is_good() && ld.tamagawa == 1 && ld.conductor_exponent == 0 &&
                         ld.phi.group.is_trivial() && coinvariants_quotient(ld.phi).is_trivial();
    out.push_back({Check::GoodReduction, trivial, std::to_string(q), ld.kodaira.to_string()});
    ++checked;
  }
}

std::vector<Outcome> run_task(const DatabaseFile& db, const Task& task) {
  const CurveRecord& rec = db.records[task.record];
  std::vector<Outcome> out;
  const bool per_curve = task.local_index < 0;
  try {
    if (per_curve) {
      check_curve(rec, out);
    } else {
      check_bad_prime(rec, rec.local[task.local_index], out);
    }
  } catch (const std::exception& e) {
    const std::string p = per_curve ? "" : rec.local[task.local_index].p.get_str();
    out.push_back({per_curve ? Check::Product : Check::Herbrand, false, p, std::string("exception: ") + e.what()});
  }
  return out;
}

CheckCounter& counter_for(VerificationSummary& s, Check c) {
  switch (c) {
    case Check::Herbrand: return s.herbrand_ok;
    case Check::TtEqualsC: return s.tt_equals_c_ok;
    case Check::Kind: return s.kind_ok;
    case Check::Duality: return s.duality_ok;
    case Check::Stabilization: return s.stabilization_ok;
    case Check::Pairing: return s.pairing_ok;
    case Check::GoodReduction: return s.good_reduction_ok;
    case Check::Product: return s.product_ok;
  }
  throw std::logic_error("unknown check");
}

VerificationSummary aggregate(const DatabaseFile& db, const std::vector<Task>& tasks,
                              const std::vector<std::vector<Outcome>>& results) {
  VerificationSummary s;
  s.curves_scanned = db.records.size();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (tasks[i].local_index >= 0) ++s.bad_primes_checked;
    for (const auto& o : results[i]) {
      auto& counter = counter_for(s, o.check);
      ++counter.total;
      if (o.passed) {
        ++counter.passed;
      } else {
        s.failures.push_back({db.records[tasks[i].record].label, o.p, check_name(o.check), o.detail});
      }
    }
  }
  std::sort(s.failures.begin(), s.failures.end(), [](const auto& x, const auto& y) {
    return std::make_tuple(x.label, x.p.size(), x.p, x.check) < std::make_tuple(y.label, y.p.size(), y.p, y.check);
  });
  return s;
}

}  // namespace

VerificationSummary run_verification_suite_serial(const DatabaseFile& db) {
  const auto tasks = make_tasks(db);
  std::vector<std::vector<Outcome>> results;
  results.reserve(tasks.size());
  for (const auto& t : tasks) results.push_back(run_task(db, t));
  return aggregate(db, tasks, results);
}

VerificationSummary run_verification_suite(const DatabaseFile& db) {
  const auto tasks = make_tasks(db);
  std::vector<std::vector<Outcome>> results(tasks.size());
  const auto n = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) results[i] = run_task(db, tasks[i]);
  return aggregate(db, tasks, results);
}

}  // namespace tamagawa
