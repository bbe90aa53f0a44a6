// Command-line front end for the two-vertex dessin counting library.
//
// Exit codes: 0 ok, 1 usage error, 2 verification mismatch,
// 3 internal integrality failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dessin/counting.hpp"
#include "dessin/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitIntegrality = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of two-vertex dessins d'enfants"};
    app.require_subcommand(1);

    std::int64_t edges = 0, faces = 0, deg2 = 0, max_edges = 7;
    std::optional<std::int64_t> aut;
    std::string format = "plain";
    std::string scope = "all";
    int which_table = 1;
    bool include_zero_rows = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
    };

    auto* count1 = app.add_subcommand("count1", "Count classes by face count L");
    count1->add_option("--edges,-N", edges, "Number of edges N")->required();
    count1->add_option("--faces,-L", faces, "Number of faces L")->required();
    count1->add_option("--aut,-r", aut, "Automorphism order r (divisor of N)");
    add_format(count1);

    auto* count2 = app.add_subcommand("count2", "Count classes by degree-2 face count h");
    count2->add_option("--edges,-N", edges, "Number of edges N")->required();
    count2->add_option("--deg2,-H", deg2, "Number of degree-2 faces h")->required();
    count2->add_option("--aut,-r", aut, "Automorphism order r (divisor of N)");
    add_format(count2);

    auto* genus_cmd = app.add_subcommand("genus", "Genus from the edge/face relation");
    genus_cmd->add_option("--edges,-N", edges, "Number of edges N")->required();
    genus_cmd->add_option("--faces,-L", faces, "Number of faces L")->required();
    add_format(genus_cmd);

    auto* table = app.add_subcommand("table", "Reproduce the numeric tables");
    table->add_option("which", which_table, "Which table: 1 (faces) or 2 (deg-2 faces)")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    table->add_option("--max", max_edges, "Largest edge count")->required();
    table->add_flag("--include-zero-rows", include_zero_rows,
                    "Also emit parity-mismatched (all-zero) rows of table 1");
    add_format(table);

    auto* verify = app.add_subcommand("verify", "Check formulas against the oracle");
    verify->add_option("--max", max_edges, "Largest edge count")->required();
    verify->add_option("--scope", scope, "props | theorems | identities | all")
        ->check(CLI::IsMember({"props", "theorems", "identities", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const dessin::OutputFormat fmt = dessin::parse_format(format);
        if (count1->parsed()) {
            std::cout << dessin::make_count1_record(edges, faces, aut).render(fmt);
        } else if (count2->parsed()) {
            std::cout << dessin::make_count2_record(edges, deg2, aut).render(fmt);
        } else if (genus_cmd->parsed()) {
            std::cout << dessin::make_genus_record(edges, faces).render(fmt);
        } else if (table->parsed()) {
            auto rows = dessin::table_rows(which_table, max_edges, include_zero_rows);
            std::cout << dessin::format_table(rows, fmt);
        } else if (verify->parsed()) {
            auto report = dessin::verify_sweep(max_edges, scope);
            for (const auto& failure : report.failures) {
                std::cout << "MISMATCH " << failure << "\n";
            }
            std::cout << "verify: " << report.checks << " checks, "
                      << report.mismatches << " mismatches\n";
            return report.mismatches == 0 ? kExitOk : kExitMismatch;
        }
        return kExitOk;
    } catch (const dessin::IntegralityError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitIntegrality;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
