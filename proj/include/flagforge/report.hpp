#pragma once

#include <string>

#include <json.hpp>

#include "flagforge/errors.hpp"
#include "flagforge/version.hpp"

namespace flagforge {

using Json = nlohmann::ordered_json;

enum class OutputFormat { markdown, csv, json };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "md" || s == "markdown") return OutputFormat::markdown;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw Error(Errc::InvalidArgument, "unknown format '" + s + "' (expected md, csv or json)");
}

/// A rendered command result: fixed schema version, the command and its
/// parameters, uniform-keyed rows, and provenance (modulus, library version).
/// Identical inputs render to byte-identical text in every format.
struct ReportEnvelope {
    std::string command;
    Json parameters = Json::object();
    Json rows = Json::array();
    Json provenance = Json::object();

    void set_default_provenance(const std::string& modulus_csv) {
        provenance["modulus"] = modulus_csv;
        provenance["version"] = kVersion;
    }
};

namespace report_detail {

inline std::string cell_to_string(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += cell_to_string(v[i]);
        }
        return s;
    }
    return v.dump();
}

inline std::string csv_escape(const std::string& s) {
    bool needs_quotes = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs_quotes) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace report_detail

inline std::string to_json_string(const ReportEnvelope& env) {
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = env.command;
    doc["parameters"] = env.parameters;
    doc["provenance"] = env.provenance;
    doc["rows"] = env.rows;
    return doc.dump(2) + "\n";
}

inline std::string to_csv(const ReportEnvelope& env) {
    std::string out;
    if (env.rows.empty()) return out;
    const Json& first = env.rows.front();
    bool lead = true;
    for (auto it = first.begin(); it != first.end(); ++it) {
        if (!lead) out += ',';
        out += report_detail::csv_escape(it.key());
        lead = false;
    }
    out += '\n';
    for (const Json& row : env.rows) {
        lead = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
            if (!lead) out += ',';
            out += report_detail::csv_escape(report_detail::cell_to_string(it.value()));
            lead = false;
        }
        out += '\n';
    }
    return out;
}

inline std::string to_markdown(const ReportEnvelope& env) {
    std::string out = "## " + env.command;
    for (auto it = env.parameters.begin(); it != env.parameters.end(); ++it) {
        out += " " + it.key() + "=" + report_detail::cell_to_string(it.value());
    }
    out += "\n";
    for (auto it = env.provenance.begin(); it != env.provenance.end(); ++it) {
        out += "<!-- " + it.key() + ": " + report_detail::cell_to_string(it.value()) + " -->\n";
    }
    if (env.rows.empty()) return out;
    out += "\n";
    const Json& first = env.rows.front();
    std::string header = "|", rule = "|";
    for (auto it = first.begin(); it != first.end(); ++it) {
        header += " " + it.key() + " |";
        rule += "---|";
    }
    out += header + "\n" + rule + "\n";
    for (const Json& row : env.rows) {
        std::string line = "|";
        for (auto it = row.begin(); it != row.end(); ++it) {
            line += " " + report_detail::cell_to_string(it.value()) + " |";
        }
        out += line + "\n";
    }
    return out;
}

inline std::string render(const ReportEnvelope& env, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::markdown: return to_markdown(env);
        case OutputFormat::csv: return to_csv(env);
        case OutputFormat::json: return to_json_string(env);
    }
    throw Error(Errc::InternalCheckFailed, "unhandled format");
}

}  // namespace flagforge
