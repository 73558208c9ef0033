#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "collatz/audit.hpp"

namespace collatz {

// One structured document per run. All integers are decimal strings; key
// order is fixed, so identical configurations serialize to identical bytes
// (timestamp excluded).
struct AuditReport {
    nlohmann::ordered_json configuration;
    std::vector<ClaimResult> results;
    std::string timestamp; // ISO-8601, UTC
};

std::string current_utc_timestamp();

nlohmann::ordered_json to_json(const ClaimResult& result);
nlohmann::ordered_json to_json(const AuditReport& report);

std::string render_text(const ClaimResult& result);
std::string render_text(const AuditReport& report);

// CSV export of the lemma-3.3 growth table:
// total_moves,n,k,r_list,min_follower (r_list entries joined with ';').
std::string render_growth_csv(const ClaimResult& lemma_3_3_result);

} // namespace collatz
