#pragma once

// JSON and plain-text renderings of the library's results. JSON objects keep
// insertion order so output is byte-stable for fixed inputs.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tamagawa/database.hpp"
#include "tamagawa/verify.hpp"
#include "tamagawa/visibility.hpp"

namespace tamagawa {

using Json = nlohmann::ordered_json;

/// JSON number when the value fits in 64 bits, decimal string otherwise.
Json integer_json(const Integer& x);

Json invariants_json(const WeierstrassCurve& curve);

/// {"label","p","kodaira","kind","f","c","v_disc","phi":{"factors","frobenius"},"tt_order","tt_factors"}
Json local_data_json(const LocalData& local, const std::optional<std::string>& label);

Json torsors_json(const WeierstrassCurve& curve, const std::vector<LocalData>& local,
                  const std::optional<std::string>& label);

Json congruence_json(const CongruenceEvidence& ev, const std::string& label_a, const std::string& label_b);

Json visibility_json(const VisibilityReport& report);

Json scan_json(const DatabaseFile& db, const std::vector<std::pair<std::size_t, std::size_t>>& pairs, std::int64_t p,
               std::uint32_t bound);

Json summary_json(const VerificationSummary& summary);

std::string invariants_text(const WeierstrassCurve& curve);
std::string local_data_text(const LocalData& local);
std::string torsors_text(const std::vector<LocalData>& local);
std::string congruence_text(const CongruenceEvidence& ev, const std::string& label_a, const std::string& label_b);
std::string visibility_text(const VisibilityReport& report);
std::string scan_text(const DatabaseFile& db, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
std::string summary_text(const VerificationSummary& summary);

}  // namespace tamagawa
