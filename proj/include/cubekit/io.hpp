#pragma once

#include <string>

#include <json.hpp>

#include "cubekit/scan.hpp"
#include "cubekit/table1.hpp"

namespace cubekit {

inline constexpr const char* kSchemaVersion = "v1";

nlohmann::json to_json(const ScanRecord& r);
ScanRecord scan_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ScanSummary& s);

nlohmann::json to_json(const CubeSumWitness& w);
nlohmann::json to_json(const SUnitPair& p);
nlohmann::json to_json(const PrimeOfK& q);
nlohmann::json to_json(const SelmerEliminationReport& r, bool with_trace);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const RootNumberReport& r);
nlohmann::json to_json(const CurveReductionReport& r);
nlohmann::json to_json(const TwoSelmerBound& b);
nlohmann::json to_json(const Table1Result& r);

// CSV codec for scan records; encode/parse round-trip losslessly.
std::string scan_csv_header();
std::string to_csv(const ScanRecord& r);
ScanRecord scan_record_from_csv(const std::string& line);

std::string table1_csv_header();
std::string to_csv(const Table1Result& r);

}  // namespace cubekit
