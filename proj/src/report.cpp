#include "tamagawa/report.hpp"

#include <sstream>

#include "tamagawa/cohomology.hpp"

namespace tamagawa {

Json integer_json(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

namespace {

Json optional_label(const std::optional<std::string>& label) { return label ? Json(*label) : Json(nullptr); }

Json verdict_json(const HypothesisVerdict& h) {
  Json j;
  j["verdict"] = to_string(h.verdict);
  j["note"] = h.note;
  return j;
}

}  // namespace

Json invariants_json(const WeierstrassCurve& curve) {
  const auto& inv = curve.invariants();
  Json j;
  Json ainvs = Json::array();
  for (const auto& a : curve.ainvs()) ainvs.push_back(a.get_str());
  j["ainvs"] = ainvs;
  j["b2"] = inv.b2.get_str();
  j["b4"] = inv.b4.get_str();
  j["b6"] = inv.b6.get_str();
  j["b8"] = inv.b8.get_str();
  j["c4"] = inv.c4.get_str();
  j["c6"] = inv.c6.get_str();
  j["discriminant"] = inv.discriminant.get_str();
  j["j"] = inv.j.get_str();
  return j;
}

Json local_data_json(const LocalData& ld, const std::optional<std::string>& label) {
  const auto tt = tamagawa_torsor_group(ld);
  Json j;
  j["label"] = optional_label(label);
  j["p"] = integer_json(ld.p);
  j["kodaira"] = ld.kodaira.to_string();
  j["kind"] = to_string(ld.kind);
  j["f"] = ld.conductor_exponent;
  j["c"] = ld.tamagawa;
  j["v_disc"] = ld.v_disc;
  Json phi;
  phi["factors"] = ld.phi.group.factors();
  phi["frobenius"] = ld.phi.frobenius.matrix();
  j["phi"] = phi;
  j["tt_order"] = tt.order();
  j["tt_factors"] = tt.factors();
  return j;
}

Json torsors_json(const WeierstrassCurve& curve, const std::vector<LocalData>& local,
                  const std::optional<std::string>& label) {
  Json j;
  j["label"] = optional_label(label);
  j["ainvs"] = Json::array();
  for (const auto& a : curve.ainvs()) j["ainvs"].push_back(a.get_str());
  Json rows = Json::array();
  Integer order = 1;
  for (const auto& ld : local) {
    const auto tt = tamagawa_torsor_group(ld);
    order *= tt.order();
    Json row;
    row["p"] = integer_json(ld.p);
    row["kodaira"] = ld.kodaira.to_string();
    row["c"] = ld.tamagawa;
    row["tt_order"] = tt.order();
    row["tt_factors"] = tt.factors();
    rows.push_back(row);
  }
  j["torsors"] = rows;
  j["total_order"] = integer_json(order);
  j["tamagawa_product"] = integer_json(tamagawa_product(local));
  return j;
}

Json congruence_json(const CongruenceEvidence& ev, const std::string& label_a, const std::string& label_b) {
  Json j;
  j["a"] = label_a;
  j["b"] = label_b;
  j["p"] = ev.p;
  j["bound"] = ev.bound;
  j["checked_primes"] = ev.checked_primes.size();
  j["verdict"] = ev.pass() ? "pass" : "fail";
  if (ev.violation) {
    j["violation"] = {{"ell", ev.violation->ell}, {"a_ell_A", ev.violation->trace_a}, {"a_ell_B", ev.violation->trace_b}};
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

Json visibility_json(const VisibilityReport& r) {
  Json j;
  j["a"] = r.label_a;
  j["b"] = r.label_b;
  j["p"] = r.p;
  Json hyp;
  for (const auto& [name, h] : r.hypotheses()) hyp[name] = verdict_json(*h);
  j["hypotheses"] = hyp;
  j["congruence"] = congruence_json(r.congruence_data, r.label_a, r.label_b);
  j["N"] = integer_json(r.n_radical);
  j["tamagawa_product_A"] = integer_json(r.tamagawa_product_a);
  j["tamagawa_product_B"] = integer_json(r.tamagawa_product_b);
  j["torsion_bound_A"] = r.torsion_bound_a;
  j["torsion_A"] = r.torsion_a ? Json(*r.torsion_a) : Json(nullptr);
  j["all_hypotheses_pass"] = r.all_pass();
  j["assumptions"] = Json::array({"Sha(A/Q)[p^infinity] is trivial (not checked)"});
  j["prediction"] = r.prediction ? integer_json(*r.prediction) : Json(nullptr);
  j["tt_p_torsion"] = r.torsor_p_torsion ? integer_json(*r.torsor_p_torsion) : Json(nullptr);
  j["verified"] = r.verified ? Json(*r.verified) : Json(nullptr);
  return j;
}

Json scan_json(const DatabaseFile& db, const std::vector<std::pair<std::size_t, std::size_t>>& pairs, std::int64_t p,
               std::uint32_t bound) {
  Json j;
  j["p"] = p;
  j["bound"] = bound;
  Json list = Json::array();
  for (const auto& [a, b] : pairs) list.push_back(Json::array({db.records[a].label, db.records[b].label}));
  j["pairs"] = list;
  return j;
}

Json summary_json(const VerificationSummary& s) {
  Json j;
  j["curves_scanned"] = s.curves_scanned;
  j["bad_primes_checked"] = s.bad_primes_checked;
  for (const auto& [name, c] : s.counters()) j[name] = {{"passed", c->passed}, {"total", c->total}};
  Json failures = Json::array();
  for (const auto& f : s.failures) {
    failures.push_back({{"label", f.label}, {"p", f.p}, {"check", f.check}, {"detail", f.detail}});
  }
  j["failures"] = failures;
  return j;
}

std::string invariants_text(const WeierstrassCurve& curve) {
  const auto& inv = curve.invariants();
  std::ostringstream out;
  out << "curve " << curve.to_string() << "\n"
      << "  b2 = " << inv.b2 << "\n  b4 = " << inv.b4 << "\n  b6 = " << inv.b6 << "\n  b8 = " << inv.b8 << "\n"
      << "  c4 = " << inv.c4 << "\n  c6 = " << inv.c6 << "\n"
      << "  discriminant = " << inv.discriminant << "\n  j = " << inv.j << "\n";
  return out.str();
}

std::string local_data_text(const LocalData& ld) {
  std::ostringstream out;
  out << "p = " << ld.p << ": " << ld.kodaira.to_string() << " (" << to_string(ld.kind) << "), f = "
      << ld.conductor_exponent << ", c = " << ld.tamagawa << ", v(disc) = " << ld.v_disc
      << ", phi = " << ld.phi.group.to_string() << ", TT = " << tamagawa_torsor_group(ld).to_string() << "\n";
  return out.str();
}

std::string torsors_text(const std::vector<LocalData>& local) {
  std::ostringstream out;
  Integer order = 1;
  for (const auto& ld : local) {
    const auto tt = tamagawa_torsor_group(ld);
    order *= tt.order();
    out << "TT at " << ld.p << ": " << tt.to_string() << " (order " << tt.order() << ", c = " << ld.tamagawa << ")\n";
  }
  out << "total order " << order << ", product of Tamagawa numbers " << tamagawa_product(local) << "\n";
  return out.str();
}

std::string congruence_text(const CongruenceEvidence& ev, const std::string& label_a, const std::string& label_b) {
  std::ostringstream out;
  out << label_a << " vs " << label_b << " mod " << ev.p << ": " << (ev.pass() ? "pass" : "fail") << " ("
      << ev.checked_primes.size() << " primes up to " << ev.bound << ")";
  if (ev.violation) {
    out << "; first violation at ell = " << ev.violation->ell << ": " << ev.violation->trace_a << " vs "
        << ev.violation->trace_b;
  }
  out << "\n";
  return out.str();
}

std::string visibility_text(const VisibilityReport& r) {
  std::ostringstream out;
  out << "visibility of Tamagawa torsors of " << r.label_a << " via " << r.label_b << " at p = " << r.p << "\n";
  for (const auto& [name, h] : r.hypotheses()) {
    out << "  " << name << ": " << to_string(h->verdict);
    if (!h->note.empty()) out << " (" << h->note << ")";
    out << "\n";
  }
  out << "  prod c_A = " << r.tamagawa_product_a << ", prod c_B = " << r.tamagawa_product_b << "\n";
  out << "  assumption: Sha(A/Q)[p^infinity] trivial (not checked)\n";
  if (r.prediction) {
    out << "  prediction: " << *r.prediction << " divides prod #TT(A/Q_v)[" << r.p << "] = " << *r.torsor_p_torsion
        << ": " << (*r.verified ? "verified" : "NOT verified") << "\n";
  } else {
    out << "  no prediction (some hypothesis did not pass)\n";
  }
  return out.str();
}

std::string scan_text(const DatabaseFile& db, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::ostringstream out;
  for (const auto& [a, b] : pairs) out << db.records[a].label << " " << db.records[b].label << "\n";
  out << pairs.size() << " candidate pair(s)\n";
  return out.str();
}

std::string summary_text(const VerificationSummary& s) {
  std::ostringstream out;
  out << "curves scanned: " << s.curves_scanned << ", bad primes checked: " << s.bad_primes_checked << "\n";
  for (const auto& [name, c] : s.counters()) out << "  " << name << ": " << c->passed << "/" << c->total << "\n";
  for (const auto& f : s.failures) {
    out << "FAIL " << f.label << (f.p.empty() ? "" : " p=" + f.p) << " " << f.check << ": " << f.detail << "\n";
  }
  out << (s.ok() ? "all checks passed" : std::to_string(s.failures.size()) + " failure(s)") << "\n";
  return out.str();
}

}  // namespace tamagawa
