#include "cubekit/io.hpp"

#include <sstream>

namespace cubekit {

using nlohmann::json;

json to_json(const ScanRecord& r) {
    json j{{"schema", kSchemaVersion},
           {"type", "record"},
           {"family", family_name(r.family)},
           {"ell", r.ell},
           {"symbol_trivial", r.symbol_trivial},
           {"root_number", r.root_number},
           {"verdict", outcome_name(r.verdict)}};
    if (r.h3) j["h3"] = *r.h3;
    if (r.bqf_represented) j["bqf_represented"] = *r.bqf_represented;
    return j;
}

ScanRecord scan_record_from_json(const json& j) {
    ScanRecord r;
    auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) fail(errc::bad_flags, "unknown family in record");
    r.family = *fam;
    r.ell = j.at("ell").get<uint64_t>();
    r.symbol_trivial = j.at("symbol_trivial").get<bool>();
    r.root_number = j.at("root_number").get<int>();
    std::string v = j.at("verdict").get<std::string>();
    r.verdict = v == "ProvablyNonCubeSum" ? Outcome::ProvablyNonCubeSum
                : v == "CubeSum"          ? Outcome::CubeSum
                                          : Outcome::Undetermined;
    if (j.contains("h3")) r.h3 = j.at("h3").get<int>();
    if (j.contains("bqf_represented")) r.bqf_represented = j.at("bqf_represented").get<bool>();
    return r;
}

json to_json(const ScanSummary& s) {
    return json{{"schema", kSchemaVersion},
                {"type", "summary"},
                {"family", family_name(s.family)},
                {"class_mod9", s.class_mod9},
                {"limit", s.limit},
                {"count", s.count},
                {"symbol_trivial_count", s.symbol_trivial_count},
                {"symbol_trivial_fraction", s.symbol_trivial_fraction()},
                {"root_plus_count", s.root_plus_count},
                {"proven_non_cube_sum", s.proven_non_cube_sum},
                {"undetermined", s.undetermined},
                {"bqf_mismatches", s.bqf_mismatches}};
}

json to_json(const CubeSumWitness& w) {
    return json{{"x", w.ax.get_str() + "/" + w.c.get_str()},
                {"y", w.ay.get_str() + "/" + w.c.get_str()},
                {"ax", w.ax.get_str()},
                {"ay", w.ay.get_str()},
                {"c", w.c.get_str()}};
}

json to_json(const SUnitPair& p) {
    return json{{"generators", {"zeta", "p3", "pi", "pi'"}},
                {"first", {p.first[0], p.first[1], p.first[2], p.first[3]}},
                {"second", {p.second[0], p.second[1], p.second[2], p.second[3]}},
                {"pretty", p.str()}};
}

json to_json(const PrimeOfK& q) {
    return json{{"generator", q.generator.str()},
                {"residue_degree", q.residue_degree},
                {"rational_prime", q.rational_prime.get_str()},
                {"conjugate_tag", conjugate_tag_name(q.tag)}};
}

json to_json(const SelmerEliminationReport& r, bool with_trace) {
    json j{{"schema", kSchemaVersion},
           {"family", family_name(r.family)},
           {"ell", r.ell.get_str()},
           {"known_element", to_json(r.known_element)},
           {"symbol_3_mod_ell", r.symbol.str()},
           {"conclusive", r.conclusive},
           {"dim_upper_bound", r.dim_upper_bound}};
    json sset = json::array();
    for (const PrimeOfK& q : r.s_set) sset.push_back(to_json(q));
    j["s_set"] = sset;
    json survivors = json::array();
    for (const SUnitPair& s : r.survivors) survivors.push_back(to_json(s));
    j["survivors"] = survivors;
    if (with_trace) {
        json cands = json::array();
        for (const SUnitPair& c : r.candidates) cands.push_back(to_json(c));
        j["candidates"] = cands;
        json elim = json::array();
        for (const Elimination& e : r.eliminations) {
            elim.push_back(json{{"candidate", e.candidate},
                                {"candidate_pretty", r.candidates[e.candidate].str()},
                                {"place", e.place == 2 ? "pi" : "pi'"},
                                {"translate", e.translate},
                                {"value", e.value.str()}});
        }
        j["eliminations"] = elim;
    }
    return j;
}

json to_json(const Verdict& v) {
    json j{{"schema", kSchemaVersion},
           {"n", v.n.get_str()},
           {"outcome", outcome_name(v.outcome)},
           {"trace", v.trace}};
    if (v.family) j["family"] = family_name(*v.family);
    if (v.ell) j["ell"] = v.ell->get_str();
    if (v.root_number_w) j["root_number"] = *v.root_number_w;
    if (v.necessary_condition) {
        j["necessary_condition"] = v.necessary_condition->str();
        j["h3"] = json{{"n", v.necessary_condition->field_n.get_str()},
                       {"value", v.necessary_condition->h3_value}};
    }
    if (v.witness) j["witness"] = to_json(*v.witness);
    if (v.elimination) j["elimination"] = to_json(*v.elimination, false);
    return j;
}

json to_json(const RootNumberReport& r) {
    json locals = json::object();
    for (const auto& [p, wp] : r.local_factors) locals[p.get_str()] = wp;
    return json{{"schema", kSchemaVersion},
                {"n", r.n.get_str()},
                {"w3", r.w3},
                {"local_factors", locals},
                {"w", r.w}};
}

namespace {

std::string rational_str(const mpq_class& q) {
    std::ostringstream oss;
    oss << q;
    return oss.str();
}

}  // namespace

json to_json(const CurveReductionReport& r) {
    json bad = json::array();
    for (const auto& [p, type] : r.bad_primes) {
        (void)type;
        bad.push_back(json{{"p", p.get_str()}, {"reduction", "Additive"}});
    }
    std::string eq = std::string("y^2") + (r.a3 ? " + y" : "") + " = x^3 " +
                     (r.a6 < 0 ? "- " + rational_str(mpq_class(-r.a6)) : "+ " + rational_str(r.a6));
    return json{{"schema", kSchemaVersion},
                {"n", r.n.get_str()},
                {"model_case", model_case_name(r.model_case)},
                {"equation", eq},
                {"a3", r.a3},
                {"a6", rational_str(r.a6)},
                {"discriminant", rational_str(r.discriminant)},
                {"c4", r.c4.get_str()},
                {"bad_primes", bad}};
}

json to_json(const TwoSelmerBound& b) {
    return json{{"schema", kSchemaVersion},
                {"n", b.n.get_str()},
                {"cf_4n", b.cf4n.get_str()},
                {"h2_input", b.h2_input},
                {"u", b.u_term},
                {"e", b.e_term},
                {"additive_correction", b.additive_correction},
                {"bound", b.bound}};
}

json to_json(const Table1Result& r) {
    json j{{"schema", kSchemaVersion},
           {"family", family_name(r.row.family)},
           {"ell", r.row.ell},
           {"r_al", r.row.r_al},
           {"h", r.row.h},
           {"provenance", r.checked ? "checked" : "echo"}};
    if (r.row.expected_h3) j["expected_h3"] = *r.row.expected_h3;
    if (r.computed_h3) j["computed_h3"] = *r.computed_h3;
    if (r.computed_verdict) j["computed_verdict"] = outcome_name(*r.computed_verdict);
    if (r.row.check_verdict) j["expected_verdict"] = "ProvablyNonCubeSum";
    j["status"] = !r.checked ? "ECHO" : (r.pass ? "PASS" : "FAIL");
    return j;
}

std::string scan_csv_header() {
    return "family,ell,h3,symbol_trivial,root_number,verdict,bqf_represented";
}

std::string to_csv(const ScanRecord& r) {
    std::ostringstream oss;
    oss << family_name(r.family) << "," << r.ell << ",";
    if (r.h3) oss << *r.h3;
    oss << "," << (r.symbol_trivial ? 1 : 0) << "," << r.root_number << ","
        << outcome_name(r.verdict) << ",";
    if (r.bqf_represented) oss << (*r.bqf_represented ? 1 : 0);
    return oss.str();
}

ScanRecord scan_record_from_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    if (fields.size() != 7) fail(errc::bad_flags, "malformed scan CSV line: " + line);
    ScanRecord r;
    auto fam = family_from_name(fields[0]);
    if (!fam) fail(errc::bad_flags, "unknown family in CSV line");
    r.family = *fam;
    r.ell = std::stoull(fields[1]);
    if (!fields[2].empty()) r.h3 = std::stoi(fields[2]);
    r.symbol_trivial = fields[3] == "1";
    r.root_number = std::stoi(fields[4]);
    r.verdict = fields[5] == "ProvablyNonCubeSum" ? Outcome::ProvablyNonCubeSum
                : fields[5] == "CubeSum"          ? Outcome::CubeSum
                                                  : Outcome::Undetermined;
    if (!fields[6].empty()) r.bqf_represented = fields[6] == "1";
    return r;
}

std::string table1_csv_header() {
    return "family,ell,r_al,h,expected_h3,computed_h3,expected_verdict,computed_verdict,status";
}

std::string to_csv(const Table1Result& r) {
    std::ostringstream oss;
    oss << family_name(r.row.family) << "," << r.row.ell << "," << r.row.r_al << "," << r.row.h
        << ",";
    if (r.row.expected_h3) oss << *r.row.expected_h3;
    oss << ",";
    if (r.computed_h3) oss << *r.computed_h3;
    oss << ",";
    if (r.row.check_verdict) oss << "ProvablyNonCubeSum";
    oss << ",";
    if (r.computed_verdict) oss << outcome_name(*r.computed_verdict);
    oss << "," << (!r.checked ? "ECHO" : (r.pass ? "PASS" : "FAIL"));
    return oss.str();
}

}  // namespace cubekit
