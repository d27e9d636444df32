#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "duval/catalog.hpp"
#include "duval/errors.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string default_catalog_path() {
    if (const char* env = std::getenv("DUVAL_CATALOG")) return env;
    return "./catalog.json";
}

duval::Catalog open_catalog(const std::string& path) { return duval::load_catalog(path); }

int report_and_exit_code(const std::vector<duval::CaseReport>& reports,
                         const duval::Catalog& catalog, const std::string& format) {
    std::cout << duval::emit_report(reports, catalog, format);
    for (const auto& r : reports)
        if (!r.passed()) return kExitFail;
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"duval: verifies the published automorphism-group claims for Du Val del Pezzo "
                 "surfaces with infinite automorphism group"};
    app.require_subcommand(1);
    std::string catalog_path = default_catalog_path();
    std::string format = "markdown";

    auto* list_cmd = app.add_subcommand("list", "list catalog cases");
    list_cmd->add_option("-c,--catalog", catalog_path, "catalog file");

    auto* verify_cmd = app.add_subcommand("verify", "verify one case or the whole catalog");
    std::string case_id;
    std::string lambda;
    bool all = false;
    verify_cmd->add_option("--case", case_id, "case id");
    verify_cmd->add_flag("--all", all, "verify every case");
    verify_cmd->add_option("--lambda", lambda,
                           "lambda mode: a rational p/q, 'generic', or 'sixth-root'");
    verify_cmd->add_option("-c,--catalog", catalog_path, "catalog file");
    verify_cmd->add_option("-f,--format", format, "markdown or json");

    auto* graph_cmd = app.add_subcommand("graph-aut", "automorphism group of a dual graph");
    std::string graph_path;
    graph_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
    graph_cmd->add_option("-f,--format", format, "markdown or json");

    auto* table_cmd = app.add_subcommand("table", "run everything and print the certified table");
    table_cmd->add_option("-c,--catalog", catalog_path, "catalog file");
    table_cmd->add_option("-f,--format", format, "markdown or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return kExitPass;  // --help
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return kExitUsage;
    }

    try {
        if (list_cmd->parsed()) {
            const duval::Catalog catalog = open_catalog(catalog_path);
            for (const auto& rec : catalog.cases) {
                std::cout << rec.id << "  degree " << rec.degree << "  " << rec.singularity_type;
                if (rec.lambda_modes.size() > 1) {
                    std::cout << "  modes:";
                    for (const auto& m : rec.lambda_modes) std::cout << " " << m;
                }
                if (rec.metadata_only) std::cout << "  (metadata only)";
                std::cout << "\n";
            }
            return kExitPass;
        }

        if (verify_cmd->parsed()) {
            if (case_id.empty() && !all) {
                std::cerr << "verify requires --case <id> or --all\n";
                return kExitUsage;
            }
            const duval::Catalog catalog = open_catalog(catalog_path);
            std::optional<std::string> mode;
            if (!lambda.empty()) mode = lambda;
            if (all) {
                const auto reports = duval::run_all(catalog, mode);
                return report_and_exit_code(reports, catalog, format);
            }
            const duval::CaseRecord* rec = catalog.find_case(case_id);
            if (!rec) {
                std::cerr << "unknown case '" << case_id << "'\n";
                return kExitUsage;
            }
            std::vector<std::string> modes =
                mode ? std::vector<std::string>{*mode} : rec->lambda_modes;
            std::vector<duval::CaseReport> reports;
            for (const auto& m : modes) {
                if (std::find(rec->lambda_modes.begin(), rec->lambda_modes.end(), m) ==
                    rec->lambda_modes.end()) {
                    std::cerr << "case " << case_id << " does not list lambda mode '" << m << "'\n";
                    return kExitUsage;
                }
                reports.push_back(duval::verify_case(catalog, *rec, m));
            }
            return report_and_exit_code(reports, catalog, format);
        }

        if (graph_cmd->parsed()) {
            std::ifstream in(graph_path);
            if (!in) {
                std::cerr << "cannot open graph file '" << graph_path << "'\n";
                return kExitUsage;
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            const duval::ColoredGraph g = duval::ColoredGraph::from_json_text(buffer.str());
            const auto auts = duval::graph_automorphisms(g);
            const auto name = duval::identify_graph_group(g);
            if (format == "json") {
                std::cout << "{\"order\": " << auts.size() << ", \"group\": \""
                          << (name ? *name : "") << "\"}\n";
            } else {
                std::cout << "order " << auts.size() << ", " << (name ? *name : "(no match)")
                          << "\n";
            }
            return kExitPass;
        }

        if (table_cmd->parsed()) {
            const duval::Catalog catalog = open_catalog(catalog_path);
            const auto reports = duval::run_all(catalog);
            return report_and_exit_code(reports, catalog, format);
        }
    } catch (const duval::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
