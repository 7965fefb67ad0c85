#include "tamagawa/database.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace tamagawa {

const CurveRecord& DatabaseFile::find(const std::string& label) const {
  for (const auto& r : records) {
    if (r.label == label) return r;
  }
  throw std::out_of_range("no curve labelled '" + label + "' in " + source_path);
}

namespace {

Integer parse_integer(const std::string& field, const std::string& source, std::size_t line, const char* what) {
  try {
    return Integer(field, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError(source, line, std::string("bad ") + what + " '" + field + "'");
  }
}

}  // namespace

DatabaseFile parse_curve_db_text(const std::string& text, const std::string& source_name) {
  DatabaseFile db;
  db.source_path = source_name;
  std::set<std::string> labels;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields_in(raw);
    std::vector<std::string> fields;
    for (std::string f; fields_in >> f;) fields.push_back(f);
    if (fields.empty()) continue;
    if (fields.size() != 8 && fields.size() != 9) {
      throw ParseError(source_name, line_no, "expected 8 or 9 fields, found " + std::to_string(fields.size()));
    }
    Coefficients<Integer> a;
    for (std::size_t i = 0; i < 5; ++i) a[i] = parse_integer(fields[i + 1], source_name, line_no, "coefficient");
    const Integer rank = parse_integer(fields[6], source_name, line_no, "rank");
    if (rank < 0 || !mpz_fits_sint_p(rank.get_mpz_t())) throw ParseError(source_name, line_no, "rank out of range");
    std::optional<std::int64_t> torsion;
    if (fields[7] != "?") {
      const Integer t = parse_integer(fields[7], source_name, line_no, "torsion");
      if (t < 1 || !mpz_fits_slong_p(t.get_mpz_t())) throw ParseError(source_name, line_no, "torsion out of range");
      torsion = t.get_si();
    }
    std::optional<Integer> stated;
    if (fields.size() == 9) stated = parse_integer(fields[8], source_name, line_no, "conductor");

    const std::string& label = fields[0];
    if (!labels.insert(label).second) throw ValidationError(label + ": duplicate label at line " + std::to_string(line_no));
    std::optional<WeierstrassCurve> curve;
    try {
      curve.emplace(a);
    } catch (const SingularCurveError& e) {
      throw ParseError(source_name, line_no, label + ": " + e.what());
    }
    db.records.push_back(make_record(label, *curve, static_cast<int>(rank.get_si()), torsion, stated));
  }
  return db;
}

DatabaseFile parse_curve_db(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open curve database '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_curve_db_text(text.str(), path);
}

std::string serialize_record(const CurveRecord& r) {
  std::ostringstream out;
  out << r.label;
  for (const auto& a : r.curve.ainvs()) out << ' ' << a.get_str();
  out << ' ' << r.rank << ' ';
  if (r.torsion_order) {
    out << *r.torsion_order;
  } else {
    out << '?';
  }
  out << ' ' << r.conductor.get_str();
  return out.str();
}

std::string serialize_curve_db(const DatabaseFile& db) {
  std::string out;
  for (const auto& r : db.records) out += serialize_record(r) + "\n";
  return out;
}

}  // namespace tamagawa
