#ifndef DUVAL_CATALOG_HPP
#define DUVAL_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "duval/dual_graph.hpp"
#include "duval/graded_map.hpp"
#include "duval/group.hpp"

namespace duval {

inline constexpr int kCatalogSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

// One generator as declared in the catalog file.  The tuple is kept in
// generic (symbolic lambda) form; lambda modes are applied at verify time.
struct GeneratorSpec {
    std::string name;
    GradedMap map;                   // validated, generic form
    std::optional<int> expected_order;
    bool in_closure = false;
    std::vector<std::string> modes;  // empty = every mode of the record
    std::string note;

    bool active_in(const std::string& mode_label) const;
};

struct WordRef {
    std::string map;
    bool inverse = false;
    std::optional<Scalar> at;  // parameter value for a family reference
};

struct RelationSpec {
    enum class Kind { family, word };
    enum class Status { verify, skip_ambiguous };
    std::string label;
    Kind kind = Kind::word;
    Status status = Status::verify;
    std::vector<std::string> modes;  // empty = every mode
    std::string note;
    // family relation: outer . family = family with param -> sub
    std::string outer;
    std::string family;
    Scalar sub;
    // word relation
    std::vector<WordRef> lhs;
    std::vector<WordRef> rhs;

    bool active_in(const std::string& mode_label) const;
};

struct ClosureSpec {
    std::vector<std::string> generators;
    std::string expected_group;  // named-group id
    int cap = 64;
};

struct GraphSpec {
    std::string file;            // relative to the catalog file
    std::string expected_group;  // named-group id
};

// One catalog entry: everything the runner needs to replay the published
// claims for a single surface type.
struct CaseRecord {
    std::string id;
    int degree = 0;
    std::string singularity_type;
    std::string aut0;
    std::optional<Ambient> ambient;
    std::optional<Poly> equation;        // generic form
    std::string equation_text;
    std::vector<std::string> lambda_modes;  // labels; defaults to {"generic"}
    std::vector<std::string> symbols;
    std::vector<GeneratorSpec> generators;
    std::vector<RelationSpec> relations;
    std::optional<ClosureSpec> closure_spec;
    std::vector<LatticeAction> lattice_actions;
    std::optional<GraphSpec> graph;
    std::map<std::string, std::string> structure;  // mode label (or "*") -> display string
    bool metadata_only = false;
    std::vector<std::string> notes;

    std::string structure_for(const std::string& mode_label) const;
    const GeneratorSpec* find_generator(const std::string& name,
                                        const std::string& mode_label) const;
};

struct Catalog {
    int schema_version = 0;
    std::string description;
    std::vector<CaseRecord> cases;
    std::string base_dir;  // for resolving graph files

    const CaseRecord* find_case(const std::string& id) const;
};

enum class CheckStatus { pass, fail, skipped_ambiguous, not_applicable };
std::string check_status_str(CheckStatus s);

struct CheckResult {
    std::string check;   // "gradedness", "automorphism", "order", ...
    std::string target;  // generator/relation/action name
    CheckStatus status = CheckStatus::not_applicable;
    std::string detail;
};

struct CaseReport {
    std::string case_id;
    std::string mode_label;
    std::vector<CheckResult> checks;

    // PASS iff no FAIL among applicable checks.
    bool passed() const;
    std::string verdict() const;
    int count(CheckStatus s) const;
};

Catalog load_catalog(const std::string& path);
Catalog load_catalog_text(const std::string& text, const std::string& base_dir);

CaseReport verify_case(const Catalog& catalog, const CaseRecord& rec,
                       const std::string& mode_label);

// Every case in every listed mode (or a single mode when `only_mode` is
// set), deterministic order: degree descending, then id; cases may be
// verified concurrently but reports are always merged in that order.
std::vector<CaseReport> run_all(const Catalog& catalog,
                                const std::optional<std::string>& only_mode = std::nullopt);

struct Summary {
    int cases = 0;
    int checks = 0;
    int pass = 0;
    int fail = 0;
    int skipped = 0;
    int not_applicable = 0;
};
Summary summarize(const std::vector<CaseReport>& reports);

// Report emission (module report): markdown table or stable JSON mirror.
std::string emit_report(const std::vector<CaseReport>& reports, const Catalog& catalog,
                        const std::string& format);

// Rebuilds the specialized surface/maps for one case and mode; exposed for
// tests and the acceptance suite.
struct PreparedCase {
    std::optional<Surface> surface;
    std::vector<std::pair<std::string, GradedMap>> maps;  // specialized, mode-active
    LambdaMode mode;

    const GradedMap& map(const std::string& name) const;
};
PreparedCase prepare_case(const CaseRecord& rec, const std::string& mode_label);

// Resolves one side of a word relation into composable maps.
std::vector<GradedMap> resolve_word(const PreparedCase& prepared,
                                    const std::vector<WordRef>& word);

}  // namespace duval

#endif
