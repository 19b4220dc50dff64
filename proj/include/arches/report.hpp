#pragma once

// Serialization for the command-line tool.  Numbers are always exact strings.

#include <json.hpp>

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "arches/error.hpp"
#include "arches/fpl.hpp"
#include "arches/linkpat.hpp"
#include "arches/verify.hpp"

namespace arches::report {

enum class Format { json, tsv, text };

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "tsv") return Format::tsv;
    if (s == "text") return Format::text;
    throw Error(ErrorKind::Parse, "unknown format '" + s + "'");
}

using Json = nlohmann::ordered_json;

inline std::string tsv_field(const std::string& s) {
    std::string out;
    for (char c : s) out += (c == '\t' || c == '\n') ? ' ' : c;
    return out;
}

// ---- verification reports --------------------------------------------------

inline Json to_json(const verify::Report& r, bool timing = false) {
    Json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["pass"] = r.ok();
    j["aborted"] = r.aborted;
    j["total"] = r.cases.size();
    j["failures"] = r.failures();
    if (timing) j["seconds"] = r.seconds;
    j["cases"] = Json::array();
    for (const auto& c : r.cases)
        j["cases"].push_back({{"id", c.id}, {"inputs", c.inputs}, {"digest", c.digest}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    j["notes"] = Json::object();
    for (const auto& [k, v] : r.notes) j["notes"][k] = v;
    return j;
}

inline void emit(std::ostream& os, const verify::Report& r, Format f, bool timing = false) {
    switch (f) {
    case Format::json: os << to_json(r, timing).dump(2) << '\n'; break;
    case Format::tsv:
        os << "id\tdigest\tpass\texpected\tactual\n";
        for (const auto& c : r.cases)
            os << tsv_field(c.id) << '\t' << c.digest << '\t' << (c.pass ? "pass" : "FAIL") << '\t' << tsv_field(c.expected) << '\t' << tsv_field(c.actual) << '\n';
        break;
    case Format::text:
        for (const auto& c : r.cases)
            if (!c.pass) os << "FAIL " << c.id << "\n  expected " << c.expected << "\n  actual   " << c.actual << '\n';
        for (const auto& [k, v] : r.notes) os << "note " << k << " = " << v << '\n';
        os << r.suite << " seed " << r.seed << ": " << (r.cases.size() - r.failures()) << "/" << r.cases.size() << " passed"
           << (r.aborted ? " (aborted)" : "");
        if (timing) os << " in " << r.seconds << " s";
        os << '\n';
        break;
    }
}

// ---- fpl census ------------------------------------------------------------

inline void emit(std::ostream& os, const FPLCensus& c, Format f) {
    switch (f) {
    case Format::json: {
        Json j;
        j["n"] = c.n;
        j["total"] = c.total().get_str();
        j["counts"] = Json::array();
        for (const auto& [p, k] : c.counts) j["counts"].push_back({{"pattern", p.word()}, {"count", k.get_str()}});
        os << j.dump(2) << '\n';
        break;
    }
    case Format::tsv:
        os << "pattern\tcount\n";
        for (const auto& [p, k] : c.counts) os << p.word() << '\t' << k.get_str() << '\n';
        break;
    case Format::text:
        for (const auto& [p, k] : c.counts) os << p.word() << "  " << k.get_str() << '\n';
        os << "total " << c.total().get_str() << '\n';
        break;
    }
}

inline FPLCensus parse_census_tsv(std::istream& is) {
    FPLCensus c;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || (lineno == 1 && line == "pattern\tcount")) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw Error(ErrorKind::Parse, "census line " + std::to_string(lineno) + ": missing tab");
        auto p = LinkPattern::from_word(line.substr(0, tab));
        mpz_class k;
        if (k.set_str(line.substr(tab + 1), 10) != 0 || k < 0) throw Error(ErrorKind::Parse, "census line " + std::to_string(lineno) + ": bad count");
        if (c.n == 0) c.n = p.size() / 2;
        if (p.size() != 2 * c.n) throw Error(ErrorKind::InconsistentSize, "census mixes pattern sizes");
        c.counts[p] = k;
    }
    return c;
}

// ---- named values ------------------------------------------------------------

/// Rows of (key, exact value) with a header object; used by phi, psi and tilings.
struct Table {
    Json head = Json::object();
    std::string key_name = "key";
    std::string value_name = "value";
    std::string rows_name = "rows";
    std::vector<std::pair<std::string, std::string>> rows;
};

inline void emit(std::ostream& os, const Table& t, Format f) {
    switch (f) {
    case Format::json: {
        Json j = t.head;
        Json rows = Json::array();
        for (const auto& [k, v] : t.rows) rows.push_back({{t.key_name, k}, {t.value_name, v}});
        j[t.rows_name] = rows;
        os << j.dump(2) << '\n';
        break;
    }
    case Format::tsv:
        os << t.key_name << '\t' << t.value_name << '\n';
        for (const auto& [k, v] : t.rows) os << k << '\t' << v << '\n';
        break;
    case Format::text:
        for (const auto& [k, v] : t.rows) os << (k.empty() ? "" : k + "  ") << v << '\n';
        break;
    }
}

} // namespace arches::report
