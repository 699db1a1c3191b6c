#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgl/catalog.hpp"
#include "sgl/census.hpp"
#include "sgl/constructions.hpp"
#include "sgl/feasibility.hpp"
#include "sgl/independence.hpp"
#include "sgl/io.hpp"
#include "sgl/reproduce.hpp"
#include "sgl/search.hpp"
#include "sgl/skolem.hpp"

namespace {

// Exit contract: 0 success / feasible found, 1 certified negative, 2 usage
// or input error, 3 budget hit.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

int default_threads() {
    if (const char* env = std::getenv("SGL_THREADS")) {
        int parsed = std::atoi(env);
        if (parsed >= 1) return parsed;
    }
    return 1;
}

struct CommonOptions {
    int threads = default_threads();
    std::string config_path;
    std::uint64_t node_budget = 1'000'000'000;
    double time_budget = 0;
};

void apply_config_file(CommonOptions& opts) {
    if (opts.config_path.empty()) return;
    std::ifstream in(opts.config_path);
    if (!in) throw std::runtime_error("cannot open config file " + opts.config_path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.contains("threads")) opts.threads = j["threads"].get<int>();
    if (j.contains("node_budget")) opts.node_budget = j["node_budget"].get<std::uint64_t>();
    if (j.contains("time_budget_seconds")) opts.time_budget = j["time_budget_seconds"].get<double>();
}

// Graph argument: a compact family spec or a path to a document file.
sgl::Graph load_graph(const std::string& arg, std::optional<sgl::Labeling>* labeling = nullptr) {
    if (std::ifstream probe(arg); probe.good()) {
        sgl::LabelingDocument doc = sgl::read_document_file(arg);
        if (labeling) *labeling = doc.labeling;
        return doc.graph();
    }
    return sgl::parse_graph_spec(arg);
}

void emit_document(const sgl::LabelingDocument& doc, const std::string& out_path, bool json) {
    if (out_path.empty()) {
        if (json) sgl::write_labeling_json(std::cout, doc);
        else sgl::write_edge_list(std::cout, doc);
    } else {
        sgl::write_document_file(out_path, doc, json);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-super graceful labelings: construct, verify, search, enumerate"};
    app.require_subcommand(1);
    CommonOptions common;
    app.add_option("--threads", common.threads, "worker threads for search and census");
    app.add_option("--config", common.config_path, "JSON config file (flags override it)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a labeling document");
    std::string verify_in;
    verify_cmd->add_option("--in", verify_in, "labeling document (edge list or json)")->required();

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "emit a constructed labeling");
    sgl::ConstructionRecipe recipe;
    std::string construct_out, construct_variant;
    bool construct_json = false;
    construct_cmd->add_option("--family", recipe.family, "construction family")->required();
    construct_cmd->add_option("--params", recipe.params, "integer parameters");
    construct_cmd->add_option("--k", recipe.k, "offset k (where the family takes one)");
    construct_cmd->add_option("--variant", construct_variant, "table variant, e.g. a or b");
    construct_cmd->add_option("--out", construct_out, "output file (stdout when absent)");
    construct_cmd->add_flag("--json", construct_json, "emit the json document format");

    // search
    auto* search_cmd = app.add_subcommand("search", "exhaustive labeling search");
    std::string search_graph;
    sgl::SearchConfig search_cfg;
    bool count_all = false, no_prune = false, force = false;
    int witnesses = 1;
    std::string symmetry = "none", search_mode = "plain";
    search_cmd->add_option("--graph", search_graph, "graph file or family spec")->required();
    search_cmd->add_option("--k", search_cfg.k, "offset k")->required();
    search_cmd->add_flag("--count-all", count_all, "count every labeling (default: find one)");
    search_cmd->add_option("--witnesses", witnesses, "how many witnesses to print");
    search_cmd->add_flag("--no-prune", no_prune, "disable the top-range branch pruning");
    search_cmd->add_option("--budget", search_cfg.node_budget, "node budget");
    search_cmd->add_option("--time-limit", search_cfg.time_budget_seconds, "seconds, 0 = none");
    search_cmd->add_option("--symmetry", symmetry, "none | components");
    search_cmd->add_option("--mode", search_mode, "plain | all-odd-vertices | all-even-edges");
    search_cmd->add_flag("--force", force, "search even when a filter says infeasible");

    // skolem
    auto* skolem_cmd = app.add_subcommand("skolem", "construct or search a sequence");
    int skolem_n = 0;
    long long skolem_k = 1;
    bool skolem_count = false;
    skolem_cmd->add_option("--n", skolem_n, "length")->required();
    skolem_cmd->add_option("--k", skolem_k, "offset (smallest difference)");
    skolem_cmd->add_flag("--count", skolem_count, "count all sequences instead");

    // census
    auto* census_cmd = app.add_subcommand("census", "count the leftover pairings");
    int census_r = 0;
    bool count_only = false, long_ok = false;
    census_cmd->add_option("--r", census_r, "table parameter r (>= 4)")->required();
    census_cmd->add_flag("--count-only", count_only, "print only the count");
    census_cmd->add_flag("--long-ok", long_ok, "allow the long-running range r >= 17");

    // feasible
    auto* feasible_cmd = app.add_subcommand("feasible", "run the necessary-condition filters");
    std::string feasible_graph, feasible_mode = "plain";
    long long feasible_k = 1;
    feasible_cmd->add_option("--graph", feasible_graph, "graph file or family spec")->required();
    feasible_cmd->add_option("--k", feasible_k, "offset k")->required();
    feasible_cmd->add_option("--mode", feasible_mode, "plain | all-odd-vertices | all-odd-edges");

    // reproduce
    auto* reproduce_cmd = app.add_subcommand("reproduce", "run a scripted reproduction target");
    std::string target;
    reproduce_cmd->add_option("target", target, "target id or 'all' or 'list'")->required();

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "inspect the fixture catalog");
    std::string show_id, export_path;
    bool list_only = false, catalog_verify = false;
    catalog_cmd->add_flag("--list", list_only, "list entry ids");
    catalog_cmd->add_option("--show", show_id, "print one entry as a document");
    catalog_cmd->add_flag("--verify", catalog_verify, "load and verify every entry");
    catalog_cmd->add_option("--export", export_path, "write the whole catalog as json");

    CLI11_PARSE(app, argc, argv);

    try {
        apply_config_file(common);

        if (*verify_cmd) {
            std::optional<sgl::Labeling> labeling;
            sgl::Graph g = load_graph(verify_in, &labeling);
            if (!labeling) {
                std::cerr << "document carries no labeling\n";
                return kUsage;
            }
            sgl::VerifyResult result = sgl::verify_labeling(g, *labeling);
            if (result.valid) {
                std::cout << "valid\n";
                return kOk;
            }
            std::cout << "invalid\n";
            for (const std::string& why : result.violations) std::cout << "  " << why << '\n';
            return kNegative;
        }

        if (*construct_cmd) {
            recipe.variant = construct_variant;
            sgl::Constructed built = sgl::build_recipe(recipe);
            emit_document(sgl::document_for(built.graph, built.labeling), construct_out,
                          construct_json);
            return kOk;
        }

        if (*search_cmd) {
            sgl::Graph g = load_graph(search_graph);
            search_cfg.mode = count_all ? sgl::SearchMode::CountAll : sgl::SearchMode::FindFirst;
            search_cfg.witness_cap = witnesses;
            search_cfg.top_range_prune = !no_prune;
            search_cfg.component_symmetry = symmetry == "components";
            search_cfg.threads = common.threads;
            search_cfg.ignore_filters = force;
            if (search_mode == "all-odd-vertices") search_cfg.parity = sgl::ParityMask::AllOddVertices;
            else if (search_mode == "all-even-edges") search_cfg.parity = sgl::ParityMask::AllEvenEdges;
            else if (search_mode != "plain") {
                std::cerr << "unknown --mode " << search_mode << '\n';
                return kUsage;
            }
            sgl::SearchReport report = sgl::solve(g, search_cfg);
            std::cout << "status " << (report.exhausted ? "exhausted" : "budget-hit") << '\n'
                      << "count " << report.count << '\n'
                      << "nodes " << report.nodes << '\n';
            for (const sgl::Labeling& w : report.witnesses) {
                std::cout << "witness\n";
                sgl::write_edge_list(std::cout, sgl::document_for(g, w));
            }
            if (!report.exhausted && report.count == 0) return kBudget;
            return report.count > 0 ? kOk : kNegative;
        }

        if (*skolem_cmd) {
            if (skolem_count) {
                sgl::SkolemSearchReport report = sgl::skolem_search(skolem_n, skolem_k, true);
                std::cout << "count " << report.count << "\nnodes " << report.nodes << '\n';
                return report.count > 0 ? kOk : kNegative;
            }
            std::optional<sgl::SkolemSequence> seq;
            if (skolem_k == 2 && skolem_n <= 84) seq = sgl::two_skolem(skolem_n);
            else if (skolem_n == 2 * skolem_k - 1) seq = sgl::k_skolem_length_2k_minus_1(skolem_k);
            else seq = sgl::skolem_search(skolem_n, skolem_k).sequence;
            if (!seq) {
                std::cout << "nonexistent\n";
                return kNegative;
            }
            for (int i = 1; i <= seq->n; ++i) {
                auto [a, b] = seq->pairs[static_cast<size_t>(i - 1)];
                std::cout << a << ' ' << b << ' ' << (a - b) << '\n';
            }
            return kOk;
        }

        if (*census_cmd) {
            if (census_r >= 17 && !long_ok) {
                std::cerr << "census for r >= 17 can run long; pass --long-ok\n";
                return kUsage;
            }
            int cap = count_only ? 0 : 1 << 20;
            sgl::CensusReport report = sgl::pairing_census(census_r, cap, common.threads);
            if (!count_only) {
                for (const sgl::PairingSolution& sol : report.witnesses) {
                    for (size_t i = 0; i < sol.size(); ++i)
                        std::cout << (i ? " " : "") << '(' << sol[i].first << ',' << sol[i].second
                                  << ')';
                    std::cout << '\n';
                }
            }
            std::cout << report.count << '\n';
            return report.count > 0 ? kOk : kNegative;
        }

        if (*feasible_cmd) {
            sgl::Graph g = load_graph(feasible_graph);
            std::vector<sgl::FeasibilityVerdict> verdicts;
            verdicts.push_back(sgl::check_k_range(g, feasible_k));
            if (g.p() == 2 * g.q()) verdicts.push_back(sgl::check_nk2(g.q(), feasible_k));
            if (feasible_mode == "all-odd-vertices")
                verdicts.push_back(sgl::check_all_odd_vertices(g, feasible_k));
            else if (feasible_mode == "all-odd-edges")
                verdicts.push_back(sgl::check_all_odd_edges(g, feasible_k));
            else if (feasible_mode != "plain") {
                std::cerr << "unknown --mode " << feasible_mode << '\n';
                return kUsage;
            }
            bool any_infeasible = false;
            for (const sgl::FeasibilityVerdict& v : verdicts) {
                if (v.infeasible()) {
                    any_infeasible = true;
                    std::cout << "infeasible [" << v.rule_id << "] " << v.citation << " ("
                              << v.parameters << ")\n";
                }
            }
            if (!any_infeasible) std::cout << "unknown (no necessary condition rules it out)\n";
            return any_infeasible ? kNegative : kOk;
        }

        if (*reproduce_cmd) {
            if (target == "list") {
                for (const std::string& id : sgl::reproduce_targets()) std::cout << id << '\n';
                return kOk;
            }
            std::vector<sgl::CriterionResult> results;
            if (target == "all") results = sgl::run_all_reproduce_targets(common.threads);
            else results.push_back(sgl::run_reproduce_target(target, common.threads));
            bool all_pass = true, any_inconclusive = false;
            for (const sgl::CriterionResult& r : results) {
                std::cout << (r.pass ? "PASS " : r.inconclusive ? "INCONCLUSIVE " : "FAIL ")
                          << r.id;
                if (!r.detail.empty()) std::cout << "  -- " << r.detail;
                std::cout << '\n';
                all_pass = all_pass && r.pass;
                any_inconclusive = any_inconclusive || r.inconclusive;
            }
            if (any_inconclusive) return kBudget;
            return all_pass ? kOk : kNegative;
        }

        if (*catalog_cmd) {
            const auto& catalog = sgl::fixture_catalog();
            if (catalog_verify)
                std::cout << "catalog ok: " << catalog.size() << " entries verified\n";
            if (list_only)
                for (const sgl::CatalogEntry& entry : catalog)
                    std::cout << entry.id << "  [" << entry.graph_spec << "]  " << entry.provenance
                              << '\n';
            if (!show_id.empty()) {
                const sgl::CatalogEntry* entry = sgl::find_fixture(show_id);
                if (!entry) {
                    std::cerr << "no catalog entry " << show_id << '\n';
                    return kUsage;
                }
                sgl::Graph g = sgl::parse_graph_spec(entry->graph_spec);
                sgl::write_edge_list(std::cout,
                                     sgl::document_for(g, entry->labeling, entry->graph_spec));
            }
            if (!export_path.empty()) {
                nlohmann::json j;
                j["format"] = "sgl-catalog/1";
                nlohmann::json entries = nlohmann::json::array();
                for (const sgl::CatalogEntry& entry : catalog) {
                    nlohmann::json e;
                    e["id"] = entry.id;
                    e["provenance"] = entry.provenance;
                    e["graph"] = entry.graph_spec;
                    e["k"] = entry.labeling.k;
                    e["vertex_labels"] = entry.labeling.vertex_labels;
                    e["edge_labels"] = entry.labeling.edge_labels;
                    entries.push_back(std::move(e));
                }
                j["entries"] = std::move(entries);
                std::ofstream out(export_path);
                if (!out) throw std::runtime_error("cannot write " + export_path);
                out << j.dump(2) << '\n';
                std::cout << "wrote " << catalog.size() << " entries to " << export_path << '\n';
            }
            return kOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
