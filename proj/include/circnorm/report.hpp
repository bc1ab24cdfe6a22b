#pragma once

#include "circnorm/catalog.hpp"
#include "circnorm/verify.hpp"

#include <nlohmann/json.hpp>

#include <iomanip>
#include <limits>
#include <span>
#include <sstream>
#include <string>

namespace circnorm {

// JSON is the canonical encoding; CSV and Markdown are projections of the
// same data. Exact integers are serialized as decimal strings since their
// values routinely exceed what a JSON number can carry losslessly.

namespace detail {

inline nlohmann::json exact_json(const ExactInt& x) { return x.str(); }

inline nlohmann::json optional_exact_json(const std::optional<ExactInt>& x) {
    if (!x) return nullptr;
    return exact_json(*x);
}

inline std::string roundtrip_double(double x) {
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
    return out.str();
}

inline std::string display_double(double x) {
    std::ostringstream out;
    out << std::setprecision(12) << x;
    return out.str();
}

inline std::string csv_quote(std::string_view field) {
    const bool needs = field.find_first_of(",\"\n") != std::string_view::npos;
    if (!needs) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace detail

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["family"] = family_name(r.family);
    j["n"] = r.n;
    j["oracle"] = detail::exact_json(r.oracle);
    j["closed_stated"] = detail::optional_exact_json(r.closed_stated);
    j["closed_used"] = detail::optional_exact_json(r.closed_used);
    j["closed_status"] = status_name(r.closed_status);
    if (r.spectral_float) j["spectral_float"] = *r.spectral_float;
    else j["spectral_float"] = nullptr;
    j["one_norm"] = detail::exact_json(r.one_norm_val);
    j["outcome"] = outcome_name(r.outcome);
    return j;
}

inline nlohmann::json to_json(std::span<const VerificationReport> reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

inline nlohmann::json to_json(const ScanReport& s) {
    nlohmann::json j;
    j["range"] = {{"lo", s.lo}, {"hi", s.hi}};
    j["float_max"] = s.float_max;
    j["reports"] = to_json(std::span<const VerificationReport>(s.reports));
    nlohmann::json summary = nlohmann::json::array();
    for (const auto& fs : s.summary)
        summary.push_back({{"family", family_name(fs.family)},
                           {"pass", fs.pass},
                           {"flagged", fs.flagged}});
    j["summary"] = summary;
    return j;
}

inline nlohmann::json to_json(const TableCell& c) {
    nlohmann::json j;
    j["family"] = family_name(c.family);
    j["n"] = c.n;
    j["printed"] = c.printed;
    j["computed"] = detail::exact_json(c.computed);
    j["match"] = c.match;
    if (c.swap_partner) j["swap_partner"] = family_name(*c.swap_partner);
    else j["swap_partner"] = nullptr;
    return j;
}

inline nlohmann::json to_json(const TableAudit& audit) {
    nlohmann::json j;
    j["orders"] = table3_orders;
    nlohmann::json cells = nlohmann::json::array();
    int mismatches = 0;
    for (const auto& c : audit.cells) {
        cells.push_back(to_json(c));
        if (!c.match) ++mismatches;
    }
    j["cells"] = cells;
    j["discrepancy_count"] = mismatches;
    return j;
}

/// Errata report for the identity catalog, one record per entry.
inline nlohmann::json catalog_to_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : identity_catalog()) {
        nlohmann::json j;
        j["id"] = identity_name(r.id);
        if (r.table == Table::Synthetic) {
            j["table"] = nullptr;
            j["row"] = nullptr;
        } else {
            j["table"] = table_name(r.table);
            j["row"] = r.row;
        }
        j["printed_formula"] = std::string(r.printed_formula);
        j["status"] = status_name(r.status);
        if (r.corrected_formula.empty()) j["corrected_formula"] = nullptr;
        else j["corrected_formula"] = std::string(r.corrected_formula);
        arr.push_back(j);
    }
    return arr;
}

// CSV projections.

inline std::string to_csv(std::span<const VerificationReport> reports) {
    std::string out =
        "family,n,oracle,closed_stated,closed_used,closed_status,spectral_float,one_norm,outcome\n";
    for (const auto& r : reports) {
        out += family_name(r.family);
        out += ',' + std::to_string(r.n);
        out += ',' + r.oracle.str();
        out += ',';
        if (r.closed_stated) out += r.closed_stated->str();
        out += ',';
        if (r.closed_used) out += r.closed_used->str();
        out += ',';
        out += status_name(r.closed_status);
        out += ',';
        if (r.spectral_float) out += detail::roundtrip_double(*r.spectral_float);
        out += ',' + r.one_norm_val.str();
        out += ',';
        out += outcome_name(r.outcome);
        out += '\n';
    }
    return out;
}

inline std::string to_csv(const ScanReport& s) {
    return to_csv(std::span<const VerificationReport>(s.reports));
}

inline std::string to_csv(const TableAudit& audit) {
    std::string out = "family,n,printed,computed,match,swap_partner\n";
    for (const auto& c : audit.cells) {
        out += family_name(c.family);
        out += ',' + std::to_string(c.n);
        out += ',' + std::to_string(c.printed);
        out += ',' + c.computed.str();
        out += c.match ? ",true," : ",false,";
        if (c.swap_partner) out += family_name(*c.swap_partner);
        out += '\n';
    }
    return out;
}

inline std::string catalog_to_csv() {
    std::string out = "id,table,row,printed_formula,status,corrected_formula\n";
    for (const auto& r : identity_catalog()) {
        out += detail::csv_quote(identity_name(r.id));
        out += ',';
        if (r.table != Table::Synthetic) out += table_name(r.table);
        out += ',';
        if (r.table != Table::Synthetic) out += std::to_string(r.row);
        out += ',' + detail::csv_quote(r.printed_formula);
        out += ',';
        out += status_name(r.status);
        out += ',' + detail::csv_quote(r.corrected_formula);
        out += '\n';
    }
    return out;
}

// Markdown projections.

inline std::string to_markdown(std::span<const VerificationReport> reports) {
    std::string out =
        "| family | n | oracle | stated | used | status | spectral | one-norm | outcome |\n"
        "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : reports) {
        out += "| " + family_name(r.family);
        out += " | " + std::to_string(r.n);
        out += " | " + r.oracle.str();
        out += " | " + (r.closed_stated ? r.closed_stated->str() : std::string("-"));
        out += " | " + (r.closed_used ? r.closed_used->str() : std::string("-"));
        out += " | " + std::string(status_name(r.closed_status));
        out += " | " + (r.spectral_float ? detail::display_double(*r.spectral_float)
                                         : std::string("-"));
        out += " | " + r.one_norm_val.str();
        out += " | " + std::string(outcome_name(r.outcome));
        out += " |\n";
    }
    return out;
}

inline std::string to_markdown(const VerificationReport& r) {
    return to_markdown(std::span<const VerificationReport>(&r, 1));
}

inline std::string to_markdown(const ScanReport& s) {
    std::string out = "Scan of orders " + std::to_string(s.lo) + ".." + std::to_string(s.hi) +
                      " (float route up to n=" + std::to_string(s.float_max) + ")\n\n";
    out += "| family | pass | flagged |\n|---|---|---|\n";
    for (const auto& fs : s.summary) {
        out += "| " + family_name(fs.family) + " | " + std::to_string(fs.pass) + " | " +
               std::to_string(fs.flagged) + " |\n";
    }
    std::vector<VerificationReport> flagged;
    for (const auto& r : s.reports)
        if (r.outcome != Outcome::Pass) flagged.push_back(r);
    if (!flagged.empty()) {
        out += "\nFlagged rows:\n\n";
        out += to_markdown(std::span<const VerificationReport>(flagged));
    }
    return out;
}

inline std::string to_markdown(const TableAudit& audit) {
    std::string out = "| n |";
    for (Family f : all_families) out += " " + family_name(f) + " |";
    out += "\n|---|";
    for (int i = 0; i < 14; ++i) out += "---|";
    out += "\n";

    int mismatches = 0;
    for (std::size_t oi = 0; oi < table3_orders.size(); ++oi) {
        out += "| " + std::to_string(table3_orders[oi]) + " |";
        for (std::size_t fi = 0; fi < 14; ++fi) {
            const auto& c = audit.cells[oi * 14 + fi];
            if (c.match) {
                out += " " + std::to_string(c.printed) + " |";
            } else {
                ++mismatches;
                out += " **" + std::to_string(c.printed) + "** (oracle " + c.computed.str();
                if (c.swap_partner) out += ", swapped with " + family_name(*c.swap_partner);
                out += ") |";
            }
        }
        out += "\n";
    }
    out += "\nDiscrepancies: " + std::to_string(mismatches) + " of " +
           std::to_string(audit.cells.size()) + " cells; bold marks a printed value that "
           "differs from the exact oracle.\n";
    return out;
}

inline std::string catalog_to_markdown() {
    std::string out =
        "| id | term | printed closed form | status | corrected form |\n"
        "|---|---|---|---|---|\n";
    for (const auto& r : identity_catalog()) {
        out += "| " + identity_name(r.id);
        out += " | " + std::string(r.term_text);
        out += " | " + std::string(r.printed_formula);
        out += " | " + std::string(status_name(r.status));
        out += " | " + (r.corrected_formula.empty() ? std::string("-")
                                                    : std::string(r.corrected_formula));
        out += " |\n";
    }
    return out;
}

} // namespace circnorm
