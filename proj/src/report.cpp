#include "collatz/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace collatz {

std::string current_utc_timestamp() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::ordered_json to_json(const ClaimResult& result) {
    nlohmann::ordered_json j;
    j["claim_id"] = result.claim_id;
    j["domain"] = result.domain_description;
    j["instances_tested"] = std::to_string(result.instances_tested);
    j["verdict"] = to_string(result.verdict);
    auto cexs = nlohmann::ordered_json::array();
    for (const Counterexample& c : result.counterexamples) {
        nlohmann::ordered_json jc;
        for (const auto& [name, value] : c.fields) jc[name] = value;
        cexs.push_back(std::move(jc));
    }
    j["counterexamples"] = std::move(cexs);
    if (!result.details.is_null()) j["details"] = result.details;
    return j;
}

nlohmann::ordered_json to_json(const AuditReport& report) {
    nlohmann::ordered_json j;
    j["configuration"] = report.configuration;
    auto results = nlohmann::ordered_json::array();
    for (const ClaimResult& r : report.results) results.push_back(to_json(r));
    j["results"] = std::move(results);
    j["timestamp"] = report.timestamp;
    return j;
}

std::string render_text(const ClaimResult& result) {
    std::ostringstream out;
    out << result.claim_id << ": " << to_string(result.verdict) << " ("
        << result.instances_tested << " instances, "
        << result.counterexamples.size() << " counterexamples)\n";
    out << "  domain: " << result.domain_description << "\n";
    for (const Counterexample& c : result.counterexamples) {
        out << "  counterexample:";
        for (const auto& [name, value] : c.fields) {
            out << " " << name << "=" << value;
        }
        out << "\n";
    }
    if (!result.details.is_null()) {
        for (const auto& [key, value] : result.details.items()) {
            if (value.is_string()) out << "  " << key << ": "
                                       << value.get<std::string>() << "\n";
        }
    }
    return out.str();
}

std::string render_text(const AuditReport& report) {
    std::ostringstream out;
    for (const ClaimResult& r : report.results) out << render_text(r);
    return out.str();
}

std::string render_growth_csv(const ClaimResult& lemma_3_3_result) {
    std::ostringstream out;
    out << "total_moves,n,k,r_list,min_follower\n";
    if (!lemma_3_3_result.details.contains("growth_table")) return out.str();
    for (const auto& row : lemma_3_3_result.details["growth_table"]) {
        std::string r_list;
        for (const auto& v : row["r"]) {
            if (!r_list.empty()) r_list += ';';
            r_list += v.get<std::string>();
        }
        out << row["total_moves"].get<std::string>() << ','
            << row["n"].get<std::string>() << ','
            << row["k"].get<std::string>() << ','
            << r_list << ','
            << row["min_follower"].get<std::string>() << '\n';
    }
    return out.str();
}

} // namespace collatz
