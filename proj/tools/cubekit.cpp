#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubekit/bqf.hpp"
#include "cubekit/io.hpp"

using namespace cubekit;
using nlohmann::json;

namespace {

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        fail(errc::bad_flags, "not an integer: " + s);
    }
}

Family parse_family(const std::string& s) {
    auto f = family_from_name(s);
    if (!f) fail(errc::bad_flags, "unknown family '" + s + "' (expected 3l, 3l2, 2l, 2l2, l, l2)");
    return *f;
}

int cmd_classify(const std::string& n_str, long denom_bound, long num_bound) {
    ClassifyOptions opts;
    opts.denom_bound = denom_bound;
    opts.num_bound = num_bound;
    Verdict v = classify(parse_int(n_str), opts);
    json j = to_json(v);
    j["command"] = "classify";
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_h3(const std::string& n_str) {
    Int n = parse_int(n_str);
    FactoredForm form = parse_form(n);
    GerthTuple tuple = build_tuple(form);
    GerthMatrix B = build_matrix(form, tuple);
    json matrix = json::array();
    for (int i = 0; i < B.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < B.cols; ++j) row.push_back(B.at(i, j));
        matrix.push_back(row);
    }
    std::cout << json{{"schema", kSchemaVersion},
                      {"command", "h3"},
                      {"n", n.get_str()},
                      {"w", form.w()},
                      {"v", form.v()},
                      {"matrix", matrix},
                      {"rank", B.rank},
                      {"h3", 2 * form.w() - B.rank}}
                     .dump(2)
              << "\n";
    return 0;
}

int cmd_symbol(const std::string& a_str, const std::string& ell_str) {
    Int a = parse_int(a_str), ell = parse_int(ell_str);
    auto [pi, pi2] = split_pair(ell);
    MuCubeValue val = cubic_residue(EisensteinInt(a), pi);
    MuCubeValue conj_val = cubic_residue(EisensteinInt(a), pi2);
    std::cout << json{{"schema", kSchemaVersion},
                      {"command", "symbol"},
                      {"a", a.get_str()},
                      {"ell", ell.get_str()},
                      {"pi", pi.generator.str()},
                      {"exponent", val.exponent()},
                      {"value", val.str()},
                      {"conjugate_exponent", conj_val.exponent()},
                      {"trivial", val.is_trivial()},
                      {"note",
                       "value at the canonical conjugate (generator with b > 0); swapping "
                       "pi and pi' inverts the exponent"}}
                     .dump(2)
              << "\n";
    return 0;
}

int cmd_rootnumber(const std::string& n_str) {
    json j = to_json(root_number(parse_int(n_str)));
    j["command"] = "rootnumber";
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_model(const std::string& n_str) {
    json j = to_json(minimal_model(parse_int(n_str)));
    j["command"] = "model";
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_selmer_bound(const std::string& n_str, int h2) {
    json j = to_json(two_selmer_bound(parse_int(n_str), h2));
    j["command"] = "selmer-bound";
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_eliminate(const std::string& family_str, const std::string& ell_str, bool trace) {
    SelmerEliminationReport rep = eliminate(parse_family(family_str), parse_int(ell_str));
    json j = to_json(rep, trace);
    j["command"] = "eliminate";
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_bqf(long a, long b, long c, const std::string& ell_str) {
    BqfForm form{a, b, c};
    auto witness = bqf_represents(form, parse_int(ell_str));
    json j{{"schema", kSchemaVersion},
           {"command", "bqf"},
           {"form", {{"a", a}, {"b", b}, {"c", c}}},
           {"discriminant", form.discriminant()},
           {"target", ell_str},
           {"represents", witness.has_value()}};
    if (witness) {
        j["x"] = witness->x;
        j["y"] = witness->y;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_scan(const std::string& family_str, uint64_t limit, int klass, bool csv, bool with_bqf) {
    ScanOptions opts;
    opts.class_mod9 = klass;
    opts.with_bqf = with_bqf;
    auto [records, summary] = scan_family(parse_family(family_str), limit, opts);
    if (csv) {
        std::cout << scan_csv_header() << "\n";
        for (const ScanRecord& r : records) std::cout << to_csv(r) << "\n";
        std::cerr << to_json(summary).dump() << "\n";
    } else {
        for (const ScanRecord& r : records) std::cout << to_json(r).dump() << "\n";
        std::cout << to_json(summary).dump() << "\n";
    }
    return 0;
}

int cmd_table1(bool csv) {
    auto results = run_table1();
    bool all_pass = true;
    if (csv) std::cout << table1_csv_header() << "\n";
    for (const Table1Result& r : results) {
        if (csv)
            std::cout << to_csv(r) << "\n";
        else
            std::cout << to_json(r).dump() << "\n";
        if (r.checked && !r.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubekit: cube-sum classification for root-number-1 Mordell curve families"};
    app.require_subcommand(1);

    std::string n_str, a_str, ell_str, family_str;
    long denom_bound = 50, num_bound = 10000;
    long fa = 0, fb = 0, fc = 0;
    int h2 = 0, klass = 0;
    uint64_t limit = 10000;
    bool trace = false, csv = false, with_bqf = false;

    auto* classify_cmd = app.add_subcommand("classify", "classify n as cube sum / provably not / undetermined");
    classify_cmd->add_option("n", n_str)->required();
    classify_cmd->add_option("--denom-bound", denom_bound, "witness search denominator bound");
    classify_cmd->add_option("--num-bound", num_bound, "witness search numerator bound");

    auto* h3_cmd = app.add_subcommand("h3", "3-rank of the class group of Q(cbrt(n))");
    h3_cmd->add_option("n", n_str)->required();

    auto* symbol_cmd = app.add_subcommand("symbol", "cubic residue symbol (a/pi) for pi over ell");
    symbol_cmd->add_option("a", a_str)->required();
    symbol_cmd->add_option("ell", ell_str)->required();

    auto* root_cmd = app.add_subcommand("rootnumber", "Birch-Stephens root number of E_{-432n^2}");
    root_cmd->add_option("n", n_str)->required();

    auto* model_cmd = app.add_subcommand("model", "minimal Weierstrass model and reduction data");
    model_cmd->add_option("n", n_str)->required();

    auto* selmer_cmd = app.add_subcommand("selmer-bound", "2-Selmer bound from an external h2");
    selmer_cmd->add_option("n", n_str)->required();
    selmer_cmd->add_option("--h2", h2, "2-rank of Cl(Q(cbrt(cf(4n))))")->required();

    auto* elim_cmd = app.add_subcommand("eliminate", "phi-Selmer coset elimination (3l, 3l2)");
    elim_cmd->add_option("family", family_str)->required();
    elim_cmd->add_option("ell", ell_str)->required();
    elim_cmd->add_flag("--trace", trace, "include per-candidate eliminations");

    auto* bqf_cmd = app.add_subcommand("bqf", "does aX^2+bXY+cY^2 represent ell?");
    bqf_cmd->add_option("a", fa)->required();
    bqf_cmd->add_option("b", fb)->required();
    bqf_cmd->add_option("c", fc)->required();
    bqf_cmd->add_option("ell", ell_str)->required();

    auto* scan_cmd = app.add_subcommand("scan", "family scan with density summary");
    scan_cmd->add_option("--family", family_str)->required();
    scan_cmd->add_option("--limit", limit)->required();
    scan_cmd->add_option("--class", klass, "residue class of ell mod 9 (l and l2 only)");
    scan_cmd->add_flag("--csv", csv);
    scan_cmd->add_flag("--bqf", with_bqf, "include the quadratic-form column");

    auto* table_cmd = app.add_subcommand("table1", "regression table of published class-rank values");
    table_cmd->add_flag("--csv", csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(n_str, denom_bound, num_bound);
        if (h3_cmd->parsed()) return cmd_h3(n_str);
        if (symbol_cmd->parsed()) return cmd_symbol(a_str, ell_str);
        if (root_cmd->parsed()) return cmd_rootnumber(n_str);
        if (model_cmd->parsed()) return cmd_model(n_str);
        if (selmer_cmd->parsed()) return cmd_selmer_bound(n_str, h2);
        if (elim_cmd->parsed()) return cmd_eliminate(family_str, ell_str, trace);
        if (bqf_cmd->parsed()) return cmd_bqf(fa, fb, fc, ell_str);
        if (scan_cmd->parsed()) return cmd_scan(family_str, limit, klass, csv, with_bqf);
        if (table_cmd->parsed()) return cmd_table1(csv);
    } catch (const Error& e) {
        std::cerr << json{{"schema", kSchemaVersion}, {"error", e.what()}}.dump() << "\n";
        return e.code() == errc::internal ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"schema", kSchemaVersion}, {"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}
