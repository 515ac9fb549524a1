// flagforge: construct and analyze cyclic orbit flag codes over F_{p^n}.
//
// Subcommands: field, orbit, galois-table, odfc-scan, verify.
// Exit codes: 0 success, 1 verification disagreement, 2 usage/input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flagforge/commands.hpp"
#include "flagforge/flagforge.hpp"

namespace {

using namespace flagforge;

std::vector<Coeff> parse_coeff_list(const std::string& s) {
    std::vector<Coeff> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw Error(Errc::InvalidArgument, "empty coefficient in '" + s + "'");
        out.push_back(static_cast<Coeff>(std::stoull(tok)));
    }
    if (out.empty()) throw Error(Errc::InvalidArgument, "empty coefficient list");
    return out;
}

std::vector<std::size_t> parse_type_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw Error(Errc::InvalidArgument, "empty type entry in '" + s + "'");
        out.push_back(static_cast<std::size_t>(std::stoull(tok)));
    }
    if (out.empty()) throw Error(Errc::InvalidArgument, "empty type vector");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write '" + out_path + "'");
    out << text;
}

std::string reports_to_jsonl(const std::vector<OracleReport>& reports) {
    std::string out;
    for (const OracleReport& r : reports) {
        Json line;
        line["quantity"] = r.quantity;
        line["fast"] = r.fast_value;
        line["oracle"] = r.oracle_value;
        line["agree"] = r.agree;
        line["exhaustive"] = r.exhaustive;
        if (!r.witness.empty()) line["witness"] = r.witness;
        out += line.dump();
        out += '\n';
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic orbit flag codes over F_{p^n}"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    std::string format = "md";
    std::string out_path;
    unsigned threads = 1;
    std::uint64_t cap = flagforge::env_table_cap();
    app.add_option("--format", format, "output format: md, csv or json")->capture_default_str();
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--threads", threads, "worker threads for distance scans")->capture_default_str();
    app.add_option("--cap", cap, "max field size in elements (overrides FLAGFORGE_TABLE_CAP)")
        ->capture_default_str();

    std::uint64_t p = 2;
    std::size_t n = 4;
    std::string poly_csv, type_csv, scope, spec_path;
    std::size_t m = 1;
    std::uint64_t l_override = 0;

    CLI::App* c_field = app.add_subcommand("field", "inspect F_{p^n}: modulus, order, subfield lattice");
    c_field->add_option("-p", p, "prime characteristic")->required();
    c_field->add_option("-n", n, "extension degree")->required();
    c_field->add_option("--poly", poly_csv, "modulus coefficients, constant term first (n+1 entries)");

    CLI::App* c_orbit = app.add_subcommand("orbit", "analyze the orbit code of a flag-spec file");
    c_orbit->add_option("spec", spec_path, "flag-spec file")->required();
    CLI::Option* l_opt = c_orbit->add_option("-l", l_override, "subgroup exponent <alpha^l> (overrides the file)");

    CLI::App* c_galois = app.add_subcommand("galois-table", "subgroup table for a Galois flag type");
    c_galois->add_option("-p", p, "prime characteristic")->required();
    c_galois->add_option("-n", n, "extension degree")->required();
    c_galois->add_option("-t,--type", type_csv, "type vector, e.g. 2,4,8")->required();

    CLI::App* c_odfc = app.add_subcommand("odfc-scan", "optimum-distance admissibility scan over all subgroups");
    c_odfc->add_option("-p", p, "prime characteristic")->required();
    c_odfc->add_option("-n", n, "extension degree")->required();
    c_odfc->add_option("-m", m, "best-friend subfield degree")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "run brute-force oracles against the fast paths");
    c_verify->add_option("scope", scope, "examples | tables | self-test | <flag-spec path>")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        OutputFormat fmt = parse_format(format);
        if (c_field->parsed()) {
            std::optional<std::vector<Coeff>> poly;
            if (!poly_csv.empty()) poly = parse_coeff_list(poly_csv);
            emit(render(cmd_field_envelope(p, n, std::move(poly), cap), fmt), out_path);
        } else if (c_orbit->parsed()) {
            FlagSpecDocument doc = parse_flagspec(read_file(spec_path));
            LoadedFlag loaded = realize_flagspec(doc, cap);
            std::uint64_t l = l_opt->count() > 0 ? l_override : loaded.subgroup_l.value_or(1);
            emit(render(cmd_orbit_envelope(loaded, l, threads), fmt), out_path);
        } else if (c_galois->parsed()) {
            emit(render(cmd_galois_table_envelope(p, n, parse_type_list(type_csv), cap), fmt), out_path);
        } else if (c_odfc->parsed()) {
            emit(render(cmd_odfc_scan_envelope(p, n, m, cap), fmt), out_path);
        } else if (c_verify->parsed()) {
            std::vector<OracleReport> reports;
            if (scope == "examples") {
                reports = verify_examples(kDefaultPairEvalCap, threads);
            } else if (scope == "tables") {
                reports = verify_tables(kDefaultPairEvalCap, threads);
            } else if (scope == "self-test") {
                reports = verify_selftest();
            } else {
                reports = verify_flagspec(parse_flagspec(read_file(scope)), kDefaultPairEvalCap, threads, cap);
            }
            emit(reports_to_jsonl(reports), out_path);
            for (const OracleReport& r : reports) {
                if (!r.agree) return 1;
            }
        }
        return 0;
    } catch (const flagforge::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
