#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dessin {

enum class OutputFormat { Plain, Json, Csv };

OutputFormat parse_format(const std::string& name);

// Machine-readable echo of one query. Counts are decimal strings so JSON
// consumers never lose precision.
struct OutputRecord {
    std::string command;                       // count1 | count2 | genus
    std::int64_t edges = 0;                    // N
    std::string param_name;                    // faces | deg2
    std::int64_t param = 0;                    // L or h
    std::optional<std::int64_t> aut;           // r filter; empty = all
    std::map<std::int64_t, std::string> per_r; // decimal strings
    std::string total;
    std::optional<std::int64_t> genus;
    std::string note;                          // e.g. parity emptiness
    std::string provenance = "formula";

    bool operator==(const OutputRecord&) const = default;

    nlohmann::json to_json() const;
    static OutputRecord from_json(const nlohmann::json& j);
    std::string to_plain() const;
    std::string to_csv() const;  // header: N,param,r,count
    std::string render(OutputFormat format) const;
};

OutputRecord make_count1_record(std::int64_t N, std::int64_t L,
                                std::optional<std::int64_t> r);
OutputRecord make_count2_record(std::int64_t N, std::int64_t h,
                                std::optional<std::int64_t> r);
OutputRecord make_genus_record(std::int64_t N, std::int64_t L);

// One table line; aut is empty on total rows.
struct TableRow {
    std::int64_t edges = 0;
    std::int64_t param = 0;
    std::optional<std::int64_t> aut;
    std::string count;

    bool operator==(const TableRow&) const = default;
};

// Rows of the face-count table (which = 1) or degree-2-face table
// (which = 2) for 2 <= N <= max_edges. Table 1 keeps only rows with
// L congruent to N mod 2 unless include_zero_rows is set.
std::vector<TableRow> table_rows(int which, std::int64_t max_edges,
                                 bool include_zero_rows);

std::string format_table(const std::vector<TableRow>& rows, OutputFormat format);

struct VerifyReport {
    std::int64_t checks = 0;
    std::int64_t mismatches = 0;
    std::vector<std::string> failures;
};

// scope: props | theorems | identities | all. The first two sweep the
// brute-force oracle and are bounded by the enumeration cap; identities
// compare closed forms formula-vs-formula.
VerifyReport verify_sweep(std::int64_t max_edges, const std::string& scope);

}  // namespace dessin
