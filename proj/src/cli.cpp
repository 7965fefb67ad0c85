#include "tamagawa/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "tamagawa/report.hpp"

namespace tamagawa {

namespace {

void emit(std::ostream& out, bool json, const Json& j, const std::string& text) {
  if (json) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

std::optional<std::string> optional_string(const std::string& s) {
  return s.empty() ? std::nullopt : std::optional<std::string>(s);
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neron local data, Tamagawa torsors and visibility checks for elliptic curves over Q", "tamagawa"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  std::string ainvs, label, prime, db_path, label_a, label_b;
  std::int64_t p = 0;
  std::uint32_t bound = 1000;

  auto* invariants = app.add_subcommand("invariants", "Weierstrass invariants of a curve");
  invariants->add_option("--ainvs", ainvs, "a1,a2,a3,a4,a6")->required();

  auto* localdata = app.add_subcommand("localdata", "Tate's algorithm at one or all bad primes");
  localdata->add_option("--ainvs", ainvs, "a1,a2,a3,a4,a6")->required();
  localdata->add_option("--p", prime, "Prime (default: every bad prime)");
  localdata->add_option("--label", label, "Label to echo in the output");

  auto* torsors = app.add_subcommand("torsors", "Tamagawa torsor groups at every bad prime");
  torsors->add_option("--ainvs", ainvs, "a1,a2,a3,a4,a6")->required();
  torsors->add_option("--label", label, "Label to echo in the output");

  auto* congruence = app.add_subcommand("congruence", "Trace congruence evidence between two database curves");
  congruence->add_option("--a", label_a)->required();
  congruence->add_option("--b", label_b)->required();
  congruence->add_option("--p", p)->required();
  congruence->add_option("--bound", bound, "Largest prime compared")->capture_default_str();
  congruence->add_option("--db", db_path)->required();

  auto* visibility = app.add_subcommand("visibility", "Check the visibility hypotheses and verify the prediction");
  visibility->add_option("--a", label_a)->required();
  visibility->add_option("--b", label_b)->required();
  visibility->add_option("--p", p)->required();
  visibility->add_option("--db", db_path)->required();

  auto* scan = app.add_subcommand("scan", "List rank-0 / positive-rank pairs congruent mod p");
  scan->add_option("--p", p)->required();
  scan->add_option("--bound", bound, "Largest prime compared")->capture_default_str();
  scan->add_option("--db", db_path)->required();

  auto* verify = app.add_subcommand("verify", "Run every torsor identity over a database");
  verify->add_option("--db", db_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (invariants->parsed()) {
      const auto curve = parse_ainvs(ainvs);
      emit(out, json, invariants_json(curve), invariants_text(curve));
      return kExitOk;
    }
    if (localdata->parsed()) {
      const auto curve = parse_ainvs(ainvs);
      if (!prime.empty()) {
        const Integer q(prime, 10);
        const auto ld = tate_local_data(curve, q);
        emit(out, json, local_data_json(ld, optional_string(label)), local_data_text(ld));
        return kExitOk;
      }
      const auto all = all_local_data(curve);
      Json j = Json::array();
      std::string text;
      for (const auto& ld : all) {
        j.push_back(local_data_json(ld, optional_string(label)));
        text += local_data_text(ld);
      }
      if (all.empty()) text = "good reduction everywhere\n";
      emit(out, json, j, text);
      return kExitOk;
    }
    if (torsors->parsed()) {
      const auto curve = parse_ainvs(ainvs);
      const auto all = all_local_data(curve);
      emit(out, json, torsors_json(curve, all, optional_string(label)), torsors_text(all));
      return kExitOk;
    }
    if (congruence->parsed()) {
      const auto db = parse_curve_db(db_path);
      const auto ev = congruence_evidence(db.find(label_a), db.find(label_b), p, bound);
      emit(out, json, congruence_json(ev, label_a, label_b), congruence_text(ev, label_a, label_b));
      return ev.pass() ? kExitOk : kExitCheckFailed;
    }
    if (visibility->parsed()) {
      const auto db = parse_curve_db(db_path);
      const auto report = predict_and_verify(db.find(label_a), db.find(label_b), p);
      emit(out, json, visibility_json(report), visibility_text(report));
      return report.verified.value_or(false) ? kExitOk : kExitCheckFailed;
    }
    if (scan->parsed()) {
      const auto db = parse_curve_db(db_path);
      const auto pairs = scan_congruent_pairs(db.records, p, bound);
      emit(out, json, scan_json(db, pairs, p, bound), scan_text(db, pairs));
      return kExitOk;
    }
    if (verify->parsed()) {
      const auto db = parse_curve_db(db_path);
      const auto summary = run_verification_suite(db);
      emit(out, json, summary_json(summary), summary_text(summary));
      return summary.ok() ? kExitOk : kExitCheckFailed;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tamagawa
