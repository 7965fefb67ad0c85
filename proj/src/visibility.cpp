#include "tamagawa/visibility.hpp"

#include <algorithm>
#include <numeric>

#include "tamagawa/cohomology.hpp"

namespace tamagawa {

CurveRecord make_record(std::string label, WeierstrassCurve curve, int rank, std::optional<std::int64_t> torsion_order,
                        std::optional<Integer> stated_conductor) {
  if (rank < 0) throw ValidationError(label + ": rank must be nonnegative");
  if (torsion_order && *torsion_order < 1) throw ValidationError(label + ": torsion order must be positive");
  auto local = all_local_data(curve);
  Integer n = conductor(local);
  if (stated_conductor && *stated_conductor != n) {
    throw ValidationError(label + ": stated conductor " + stated_conductor->get_str() + " but the minimal model has " +
                          n.get_str());
  }
  return CurveRecord{std::move(label), std::move(curve), std::move(n), rank, torsion_order, std::move(local)};
}

namespace {

bool divides(const Integer& d, const Integer& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

bool good_for_both(const CurveRecord& a, const CurveRecord& b, std::uint32_t ell) {
  return !mpz_divisible_ui_p(a.conductor.get_mpz_t(), ell) && !mpz_divisible_ui_p(b.conductor.get_mpz_t(), ell);
}

bool congruent_mod(std::int64_t x, std::int64_t y, std::int64_t p) { return (x - y) % p == 0; }

HypothesisVerdict verdict(bool ok, std::string note = {}) {
  return {ok ? Verdict::Pass : Verdict::Fail, std::move(note)};
}

}  // namespace

CongruenceEvidence congruence_evidence(const CurveRecord& a, const CurveRecord& b, std::int64_t p,
                                       std::uint32_t bound) {
  if (p < 2) throw std::invalid_argument("congruence_evidence: p must be at least 2");
  CongruenceEvidence ev;
  ev.p = p;
  ev.bound = bound;
  for (std::uint32_t ell : primes_up_to(bound)) {
    if (!good_for_both(a, b, ell)) continue;
    ev.checked_primes.push_back(ell);
    if (ev.violation) continue;
    const std::int64_t ta = count_points_mod(a.curve, ell).trace;
    const std::int64_t tb = count_points_mod(b.curve, ell).trace;
    if (!congruent_mod(ta, tb, p)) ev.violation = CongruenceEvidence::Violation{ell, ta, tb};
  }
  return ev;
}

Integer sturm_bound(const Integer& conductor_a, const Integer& conductor_b) {
  Integer level;
  mpz_lcm(level.get_mpz_t(), conductor_a.get_mpz_t(), conductor_b.get_mpz_t());
  Rational value(level, 6);
  for (const auto& q : prime_divisors(level)) value *= Rational(q + 1, q);
  value.canonicalize();
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

std::int64_t torsion_multiple_bound(const WeierstrassCurve& curve, int prime_count) {
  const WeierstrassCurve minimal = global_minimal_model(curve).curve;
  std::int64_t g = 0;
  int used = 0;
  for (std::uint32_t ell = 3; used < prime_count; ell += 2) {
    if (!is_prime(Integer(ell)) || mpz_divisible_ui_p(minimal.discriminant().get_mpz_t(), ell)) continue;
    g = std::gcd(g, count_points_mod(minimal, ell).count);
    ++used;
  }
  return g;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<std::pair<std::string, const HypothesisVerdict*>> VisibilityReport::hypotheses() const {
  return {
      {"rank_A_zero", &rank_a_zero},
      {"rank_B_positive", &rank_b_positive},
      {"B_semistable", &b_semistable},
      {"p_odd", &p_odd},
      {"p_coprime_to_N", &p_coprime_to_n},
      {"p_coprime_to_torsion_A", &p_coprime_to_torsion_a},
      {"p_coprime_to_tamagawa_B", &p_coprime_to_tamagawa_b},
      {"ramification_ok", &ramification_ok},
      {"congruence", &congruence},
  };
}

bool VisibilityReport::all_pass() const {
  for (const auto& [name, h] : hypotheses()) {
    if (h->verdict != Verdict::Pass) return false;
  }
  return true;
}

std::uint32_t visibility_congruence_bound(const CurveRecord& a, const CurveRecord& b) {
  const Integer sturm = sturm_bound(a.conductor, b.conductor);
  if (sturm > 1000) {
    if (!mpz_fits_uint_p(sturm.get_mpz_t())) throw std::overflow_error("Sturm bound too large for enumeration");
    return static_cast<std::uint32_t>(sturm.get_ui());
  }
  return 1000;
}

VisibilityReport check_hypotheses(const CurveRecord& a, const CurveRecord& b, std::int64_t p) {
  if (!is_prime(Integer(p))) throw std::invalid_argument("visibility: p = " + std::to_string(p) + " is not prime");
  const Integer P(p);
  VisibilityReport rep;
  rep.label_a = a.label;
  rep.label_b = b.label;
  rep.p = p;

  rep.rank_a_zero = verdict(a.rank == 0, "r_A = " + std::to_string(a.rank));
  rep.rank_b_positive = verdict(b.rank > 0, "r_B = " + std::to_string(b.rank));

  bool squarefree = true;
  for (const auto& [q, e] : factor(b.conductor)) squarefree = squarefree && e == 1;
  const bool all_multiplicative =
      std::all_of(b.local.begin(), b.local.end(), [](const LocalData& ld) { return ld.kodaira.is_multiplicative(); });
  if (squarefree != all_multiplicative) {
    throw std::logic_error(b.label + ": squarefree conductor and Kodaira types disagree on semistability");
  }
  rep.b_semistable = verdict(squarefree, "N_B = " + b.conductor.get_str());

  rep.p_odd = verdict(p % 2 == 1);

  rep.n_radical = radical(a.conductor * b.conductor);
  rep.p_coprime_to_n = verdict(!divides(P, rep.n_radical), "N = rad(N_A N_B) = " + rep.n_radical.get_str());

  rep.torsion_bound_a = torsion_multiple_bound(a.curve);
  rep.torsion_a = a.torsion_order;
  if (rep.torsion_bound_a % p != 0) {
    rep.p_coprime_to_torsion_a = verdict(true, "certified: #A(Q)_tor divides " + std::to_string(rep.torsion_bound_a));
  } else if (a.torsion_order) {
    rep.p_coprime_to_torsion_a =
        verdict(*a.torsion_order % p != 0, "from database torsion " + std::to_string(*a.torsion_order));
  } else {
    rep.p_coprime_to_torsion_a = {Verdict::Inconclusive,
                                  "p divides the bound " + std::to_string(rep.torsion_bound_a) + ", torsion unknown"};
  }

  rep.tamagawa_product_a = tamagawa_product(a.local);
  rep.tamagawa_product_b = tamagawa_product(b.local);
  rep.p_coprime_to_tamagawa_b =
      verdict(!divides(P, rep.tamagawa_product_b), "prod c_B = " + rep.tamagawa_product_b.get_str());

  // Over Q every prime is unramified, so e_p = 1 < p - 1 exactly when p >= 3.
  rep.ramification_ok = verdict(p >= 3, "e_p = 1 over Q");

  rep.congruence_data = congruence_evidence(a, b, p, visibility_congruence_bound(a, b));
  std::string note = "evidence: traces compared at " + std::to_string(rep.congruence_data.checked_primes.size()) +
                     " primes up to " + std::to_string(rep.congruence_data.bound);
  if (rep.congruence_data.violation) {
    const auto& v = *rep.congruence_data.violation;
    note += "; a_" + std::to_string(v.ell) + " = " + std::to_string(v.trace_a) + " vs " + std::to_string(v.trace_b);
  }
  rep.congruence = verdict(rep.congruence_data.pass(), std::move(note));
  return rep;
}

VisibilityReport predict_and_verify(const CurveRecord& a, const CurveRecord& b, std::int64_t p) {
  VisibilityReport rep = check_hypotheses(a, b, p);
  if (!rep.all_pass()) return rep;
  Integer prediction;
  mpz_ui_pow_ui(prediction.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(b.rank));
  Integer torsion = 1;
  for (const auto& ld : a.local) torsion *= tamagawa_torsor_group(ld).torsion_count(p);
  rep.prediction = prediction;
  rep.torsor_p_torsion = torsion;
  rep.verified = divides(prediction, torsion);
  return rep;
}

std::vector<std::optional<std::int64_t>> trace_table(const CurveRecord& record,
                                                     const std::vector<std::uint32_t>& primes) {
  std::vector<std::optional<std::int64_t>> out(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (mpz_divisible_ui_p(record.conductor.get_mpz_t(), primes[i])) continue;
    out[i] = count_points_mod(record.curve, primes[i]).trace;
  }
  return out;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> sorted_by_labels(
    const std::vector<CurveRecord>& db, std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  std::sort(pairs.begin(), pairs.end(), [&db](const auto& x, const auto& y) {
    return std::tie(db[x.first].label, db[x.second].label) < std::tie(db[y.first].label, db[y.second].label);
  });
  return pairs;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> scan_congruent_pairs_serial(const std::vector<CurveRecord>& db,
                                                                             std::int64_t p, std::uint32_t bound) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < db.size(); ++i) {
    if (db[i].rank != 0) continue;
    for (std::size_t j = 0; j < db.size(); ++j) {
      if (db[j].rank <= 0) continue;
      if (congruence_evidence(db[i], db[j], p, bound).pass()) out.emplace_back(i, j);
    }
  }
  return sorted_by_labels(db, std::move(out));
}

std::vector<std::pair<std::size_t, std::size_t>> scan_congruent_pairs(const std::vector<CurveRecord>& db,
                                                                      std::int64_t p, std::uint32_t bound) {
  // Same per-pair early exit as the serial scan; a full trace table per curve
  // costs more than it saves since most pairs fail at the first few primes.
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < db.size(); ++i) {
    if (db[i].rank != 0) continue;
    for (std::size_t j = 0; j < db.size(); ++j) {
      if (db[j].rank > 0) candidates.emplace_back(i, j);
    }
  }
  const auto n = static_cast<std::int64_t>(candidates.size());
  std::vector<char> hit(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t k = 0; k < n; ++k) {
    const auto [i, j] = candidates[k];
    hit[k] = congruence_evidence(db[i], db[j], p, bound).pass();
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::int64_t k = 0; k < n; ++k) {
    if (hit[k]) out.push_back(candidates[k]);
  }
  return sorted_by_labels(db, std::move(out));
}

}  // namespace tamagawa
