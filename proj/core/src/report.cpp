#include <cctype>
#include <sstream>

#include <json.hpp>

#include "duval/catalog.hpp"
#include "duval/errors.hpp"

namespace duval {

namespace {

// Machine ids in the catalog are plain ASCII; the rendered table uses the
// conventional notation.
std::string display_group_name(const std::string& id) {
    for (const auto& g : named_group_table())
        if (g.id == id) return g.display;
    return id;
}

// Coordinate names ending in p (y1p, y2pp, ...) render with primes in the
// human-facing report; machine output keeps the ASCII ids.
std::string primed(const std::string& s) {
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isalpha(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            std::string word = s.substr(i, j - i);
            // letter(s) + digits + trailing p's: replace the p's by primes.
            std::size_t k = word.size();
            while (k > 0 && word[k - 1] == 'p') --k;
            const std::size_t np = word.size() - k;
            if (np >= 1 && np <= 2 && k > 1 &&
                std::isdigit(static_cast<unsigned char>(word[k - 1]))) {
                word = word.substr(0, k);
                for (std::size_t q = 0; q < np; ++q) word += "′";
            }
            out += word;
            i = j;
        } else {
            out += s[i++];
        }
    }
    return out;
}

std::string row_case_label(const CaseReport& r, const CaseRecord& rec) {
    if (rec.lambda_modes.size() <= 1) return r.case_id;
    return r.case_id + " [λ=" + r.mode_label + "]";
}

std::string component_group_cell(const CaseReport& r) {
    for (const auto& c : r.checks)
        if (c.check == "component-group")
            return c.status == CheckStatus::pass ? display_group_name(c.target) : "!" + c.target;
    for (const auto& c : r.checks)
        if (c.check == "graph-group" && c.status == CheckStatus::pass) {
            // Graph-only records: show the verified graph group.
            const auto semi = c.detail.find(", ");
            if (semi != std::string::npos) {
                const auto end = c.detail.find(';', semi);
                return "Aut(Γ) = " +
                       display_group_name(c.detail.substr(semi + 2, end - semi - 2));
            }
        }
    return "—";
}

std::string emit_markdown(const std::vector<CaseReport>& reports, const Catalog& catalog) {
    std::ostringstream os;
    const Summary s = summarize(reports);
    os << "# Automorphism verification report\n\n";
    os << "Checks: " << s.checks << "  pass: " << s.pass << "  fail: " << s.fail
       << "  skipped: " << s.skipped << "  not applicable: " << s.not_applicable << "\n\n";
    os << "| case | degree | type | Aut0 | component group | structure | verdict |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : reports) {
        const CaseRecord* rec = catalog.find_case(r.case_id);
        if (!rec) throw Error("report references unknown case " + r.case_id);
        std::string verdict = r.verdict();
        if (r.count(CheckStatus::skipped_ambiguous) > 0)
            verdict += " (skipped: ambiguous notation)";
        os << "| " << row_case_label(r, *rec) << " | " << rec->degree << " | "
           << rec->singularity_type << " | " << rec->aut0 << " | " << component_group_cell(r)
           << " | " << rec->structure_for(r.mode_label) << " | " << verdict << " |\n";
    }
    os << "\n## Checks\n";
    for (const auto& r : reports) {
        const CaseRecord* rec = catalog.find_case(r.case_id);
        os << "\n### " << row_case_label(r, *rec) << " — " << r.verdict() << "\n";
        for (const auto& c : r.checks) {
            os << "- [" << check_status_str(c.status) << "] " << c.check;
            if (!c.target.empty()) os << " (" << c.target << ")";
            if (!c.detail.empty()) os << ": " << primed(c.detail);
            os << "\n";
        }
    }
    return os.str();
}

std::string emit_json(const std::vector<CaseReport>& reports, const Catalog& catalog) {
    // nlohmann::json keeps object keys sorted, which together with the fixed
    // report order makes the output byte-stable.
    nlohmann::json j;
    j["schemaVersion"] = kReportSchemaVersion;
    const Summary s = summarize(reports);
    j["summary"] = {{"caseReports", s.cases}, {"checks", s.checks},     {"pass", s.pass},
                    {"fail", s.fail},         {"skipped", s.skipped},   {"notApplicable", s.not_applicable}};
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) {
        const CaseRecord* rec = catalog.find_case(r.case_id);
        if (!rec) throw Error("report references unknown case " + r.case_id);
        nlohmann::json jr;
        jr["caseId"] = r.case_id;
        jr["mode"] = r.mode_label;
        jr["degree"] = rec->degree;
        jr["type"] = rec->singularity_type;
        jr["aut0"] = rec->aut0;
        jr["structure"] = rec->structure_for(r.mode_label);
        jr["verdict"] = r.verdict();
        jr["checks"] = nlohmann::json::array();
        for (const auto& c : r.checks)
            jr["checks"].push_back({{"check", c.check},
                                    {"target", c.target},
                                    {"status", check_status_str(c.status)},
                                    {"detail", c.detail}});
        j["reports"].push_back(std::move(jr));
    }
    return j.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const std::vector<CaseReport>& reports, const Catalog& catalog,
                        const std::string& format) {
    if (format == "markdown") return emit_markdown(reports, catalog);
    if (format == "json") return emit_json(reports, catalog);
    throw UnknownFormatError(format);
}

}  // namespace duval
