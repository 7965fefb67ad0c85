#pragma once

// Mod-p congruence evidence between curves and the visibility criterion that
// trades rational points of a congruent positive-rank curve B for Tamagawa
// torsors of a rank-zero curve A.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamagawa/curve.hpp"
#include "tamagawa/tate.hpp"

namespace tamagawa {

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CurveRecord {
  std::string label;
  WeierstrassCurve curve;
  Integer conductor;  // recomputed, never taken on trust
  int rank = 0;
  std::optional<std::int64_t> torsion_order;
  std::vector<LocalData> local;  // bad primes of the minimal model
};

/// Builds a record, recomputing the conductor with Tate's algorithm. Throws
/// ValidationError if `stated_conductor` is given and differs, or if rank or
/// torsion are out of range.
CurveRecord make_record(std::string label, WeierstrassCurve curve, int rank, std::optional<std::int64_t> torsion_order,
                        std::optional<Integer> stated_conductor = std::nullopt);

struct CongruenceEvidence {
  struct Violation {
    std::uint32_t ell;
    std::int64_t trace_a, trace_b;
  };

  std::int64_t p = 0;
  std::uint32_t bound = 0;
  std::vector<std::uint32_t> checked_primes;
  std::optional<Violation> violation;

  bool pass() const { return !violation; }
};

/// Compares a_ell(A) and a_ell(B) mod p for every prime ell <= bound of good
/// reduction for both curves.
CongruenceEvidence congruence_evidence(const CurveRecord& a, const CurveRecord& b, std::int64_t p,
                                       std::uint32_t bound);

/// Weight-2 Sturm bound for level lcm(N_A, N_B).
Integer sturm_bound(const Integer& conductor_a, const Integer& conductor_b);

/// gcd of #E(F_ell) over the first `prime_count` odd primes of good
/// reduction; a multiple of the order of the rational torsion subgroup.
std::int64_t torsion_multiple_bound(const WeierstrassCurve& curve, int prime_count = 10);

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

struct HypothesisVerdict {
  Verdict verdict = Verdict::Fail;
  std::string note;
};

struct VisibilityReport {
  std::string label_a, label_b;
  std::int64_t p = 0;

  HypothesisVerdict rank_a_zero;
  HypothesisVerdict rank_b_positive;
  HypothesisVerdict b_semistable;
  HypothesisVerdict p_odd;
  HypothesisVerdict p_coprime_to_n;
  HypothesisVerdict p_coprime_to_torsion_a;
  HypothesisVerdict p_coprime_to_tamagawa_b;
  HypothesisVerdict ramification_ok;
  HypothesisVerdict congruence;
  CongruenceEvidence congruence_data;

  // Supporting numbers.
  Integer n_radical;
  Integer tamagawa_product_a, tamagawa_product_b;
  std::int64_t torsion_bound_a = 0;
  std::optional<std::int64_t> torsion_a;

  /// p^{r_B}, which must divide prod_v #TT(A/Q_v)[p]; set iff every hypothesis passes.
  std::optional<Integer> prediction;
  /// prod_v #TT(A/Q_v)[p], computed from the torsor groups.
  std::optional<Integer> torsor_p_torsion;
  std::optional<bool> verified;

  /// Name and verdict of each hypothesis in a fixed order.
  std::vector<std::pair<std::string, const HypothesisVerdict*>> hypotheses() const;
  bool all_pass() const;
};

/// Congruence bound used by check_hypotheses: max(Sturm bound, 1000).
std::uint32_t visibility_congruence_bound(const CurveRecord& a, const CurveRecord& b);

VisibilityReport check_hypotheses(const CurveRecord& a, const CurveRecord& b, std::int64_t p);

/// check_hypotheses, then the divisibility prediction checked against the
/// torsor groups of A when every hypothesis passes.
VisibilityReport predict_and_verify(const CurveRecord& a, const CurveRecord& b, std::int64_t p);

/// Table of a_ell for the given primes; entries for primes of bad reduction
/// are left as std::nullopt.
std::vector<std::optional<std::int64_t>> trace_table(const CurveRecord& record, const std::vector<std::uint32_t>& primes);

/// Ordered pairs (A, B) with r_A = 0, r_B > 0 and passing congruence
/// evidence at (p, bound), sorted by label pair. Parallel over pairs.
std::vector<std::pair<std::size_t, std::size_t>> scan_congruent_pairs(const std::vector<CurveRecord>& db,
                                                                      std::int64_t p, std::uint32_t bound);

/// Single-threaded reference implementation of scan_congruent_pairs.
std::vector<std::pair<std::size_t, std::size_t>> scan_congruent_pairs_serial(const std::vector<CurveRecord>& db,
                                                                             std::int64_t p, std::uint32_t bound);

}  // namespace tamagawa
