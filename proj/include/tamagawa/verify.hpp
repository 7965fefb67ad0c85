#pragma once

// Batch checks of the torsor identities over a curve database: for every
// bad prime, the Herbrand identity, #TT = c_p, invariants ~ coinvariants,
// stabilization of the finite-level H^1, and the induced pairing on
// multiplicative fibres; per curve, triviality at a few good primes and the
// product rule.

#include <cstddef>
#include <string>
#include <vector>

#include "tamagawa/database.hpp"

namespace tamagawa {

struct CheckCounter {
  std::size_t passed = 0;
  std::size_t total = 0;

  bool complete() const { return passed == total; }
  friend bool operator==(const CheckCounter&, const CheckCounter&) = default;
};

struct VerificationFailure {
  std::string label;
  std::string p;  // empty for per-curve checks
  std::string check;
  std::string detail;

  friend bool operator==(const VerificationFailure&, const VerificationFailure&) = default;
};

struct VerificationSummary {
  std::size_t curves_scanned = 0;
  std::size_t bad_primes_checked = 0;

  CheckCounter herbrand_ok;       // #H^0 = #H^1
  CheckCounter tt_equals_c_ok;    // #H^0 = #H^1 = c_p from the Tate branch
  CheckCounter kind_ok;           // reduction_kind agrees with tate_local_data
  CheckCounter duality_ok;        // H^0 ~ H^1 as groups
  CheckCounter stabilization_ok;  // cyclic H^1 at m = d and 2d, d = stabilization_degree
  CheckCounter pairing_ok;        // multiplicative fibres only
  CheckCounter good_reduction_ok; // spot checks at small good primes
  CheckCounter product_ok;        // prod #TT = prod c_p

  /// Sorted by (label, p, check).
  std::vector<VerificationFailure> failures;

  std::vector<std::pair<std::string, const CheckCounter*>> counters() const;
  bool ok() const { return failures.empty(); }

  friend bool operator==(const VerificationSummary&, const VerificationSummary&) = default;
};

/// Good primes spot-checked per curve.
inline constexpr int kGoodPrimeSpotChecks = 3;

/// OpenMP fan-out over (curve, prime) tasks.
VerificationSummary run_verification_suite(const DatabaseFile& db);

/// Single-threaded reference; produces an identical summary.
VerificationSummary run_verification_suite_serial(const DatabaseFile& db);

}  // namespace tamagawa
