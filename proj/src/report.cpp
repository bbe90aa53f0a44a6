#include "dessin/report.hpp"

#include <iomanip>
#include <sstream>

#include "dessin/counting.hpp"
#include "dessin/permoracle.hpp"

namespace dessin {

OutputFormat parse_format(const std::string& name) {
    if (name == "plain") return OutputFormat::Plain;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format: " + name);
}

nlohmann::json OutputRecord::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["edges"] = edges;
    j["param_name"] = param_name;
    j["param"] = param;
    if (aut) j["aut"] = *aut;
    nlohmann::json per;
    for (const auto& [r, c] : per_r) per[std::to_string(r)] = c;
    j["per_r"] = per;
    j["total"] = total;
    if (genus) j["genus"] = *genus;
    if (!note.empty()) j["note"] = note;
    j["provenance"] = provenance;
    return j;
}

OutputRecord OutputRecord::from_json(const nlohmann::json& j) {
    OutputRecord rec;
    rec.command = j.at("command").get<std::string>();
    rec.edges = j.at("edges").get<std::int64_t>();
    rec.param_name = j.at("param_name").get<std::string>();
    rec.param = j.at("param").get<std::int64_t>();
    if (j.contains("aut")) rec.aut = j.at("aut").get<std::int64_t>();
    for (const auto& [key, value] : j.at("per_r").items()) {
        rec.per_r.emplace(std::stoll(key), value.get<std::string>());
    }
    rec.total = j.at("total").get<std::string>();
    if (j.contains("genus")) rec.genus = j.at("genus").get<std::int64_t>();
    if (j.contains("note")) rec.note = j.at("note").get<std::string>();
    rec.provenance = j.at("provenance").get<std::string>();
    return rec;
}

std::string OutputRecord::to_plain() const {
    std::ostringstream os;
    os << command << "  N=" << edges << "  " << param_name << "=" << param;
    if (aut) os << "  r=" << *aut;
    os << "\n";
    if (genus) os << "genus: " << *genus << "\n";
    if (!note.empty()) os << "note: " << note << "\n";
    for (const auto& [r, c] : per_r) {
        os << "  r=" << std::setw(4) << r << "  " << c << "\n";
    }
    os << "total: " << total << "\n";
    return os.str();
}

std::string OutputRecord::to_csv() const {
    std::ostringstream os;
    os << "N,param,r,count\n";
    for (const auto& [r, c] : per_r) {
        os << edges << "," << param << "," << r << "," << c << "\n";
    }
    os << edges << "," << param << ",total," << total << "\n";
    return os.str();
}

std::string OutputRecord::render(OutputFormat format) const {
    switch (format) {
        case OutputFormat::Json:
            return to_json().dump(2) + "\n";
        case OutputFormat::Csv:
            return to_csv();
        default:
            return to_plain();
    }
}

OutputRecord make_count1_record(std::int64_t N, std::int64_t L,
                                std::optional<std::int64_t> r) {
    OutputRecord rec;
    rec.command = "count1";
    rec.edges = N;
    rec.param_name = "faces";
    rec.param = L;
    rec.aut = r;
    if (r) {
        BigInt c = count_d1_r(N, L, *r);
        rec.per_r.emplace(*r, c.str());
        rec.total = c.str();
    } else {
        auto report = count_d1(N, L);
        for (const auto& [rr, c] : report.per_r) rec.per_r.emplace(rr, c.str());
        rec.total = report.total.str();
    }
    if ((N - L) % 2 == 0) {
        rec.genus = genus(N, L);
    } else {
        rec.note = "no dessin exists: L and N have different parity";
    }
    return rec;
}

OutputRecord make_count2_record(std::int64_t N, std::int64_t h,
                                std::optional<std::int64_t> r) {
    OutputRecord rec;
    rec.command = "count2";
    rec.edges = N;
    rec.param_name = "deg2";
    rec.param = h;
    rec.aut = r;
    if (r) {
        BigInt c = count_d2_r(N, h, *r);
        rec.per_r.emplace(*r, c.str());
        rec.total = c.str();
    } else {
        auto report = count_d2(N, h);
        for (const auto& [rr, c] : report.per_r) rec.per_r.emplace(rr, c.str());
        rec.total = report.total.str();
    }
    if (h == N - 1 || h == N - 2) {
        rec.note = "empty: no dessin has exactly N-1 or N-2 faces of degree 2";
    }
    return rec;
}

OutputRecord make_genus_record(std::int64_t N, std::int64_t L) {
    OutputRecord rec;
    rec.command = "genus";
    rec.edges = N;
    rec.param_name = "faces";
    rec.param = L;
    rec.total = "0";
    if ((N - L) % 2 == 0) {
        rec.genus = genus(N, L);
    } else {
        rec.note = "no dessin exists: L and N have different parity";
    }
    return rec;
}

std::vector<TableRow> table_rows(int which, std::int64_t max_edges,
                                 bool include_zero_rows) {
    if (which != 1 && which != 2) {
        throw std::invalid_argument("table_rows: table must be 1 or 2");
    }
    if (max_edges < 2) throw std::invalid_argument("table_rows: max_edges must be >= 2");
    std::vector<TableRow> rows;
    for (std::int64_t N = 2; N <= max_edges; ++N) {
        const auto rs = divisors(N);
        if (which == 1) {
            for (std::int64_t L = 1; L <= N; ++L) {
                if (!include_zero_rows && (N - L) % 2 != 0) continue;
                auto report = count_d1(N, L);
                for (std::int64_t r : rs) {
                    rows.push_back({N, L, r, report.per_r.at(r).str()});
                }
                rows.push_back({N, L, std::nullopt, report.total.str()});
            }
        } else {
            for (std::int64_t h = 0; h <= N; ++h) {
                auto report = count_d2(N, h);
                for (std::int64_t r : rs) {
                    rows.push_back({N, h, r, report.per_r.at(r).str()});
                }
                rows.push_back({N, h, std::nullopt, report.total.str()});
            }
        }
    }
    return rows;
}

std::string format_table(const std::vector<TableRow>& rows, OutputFormat format) {
    std::ostringstream os;
    if (format == OutputFormat::Csv) {
        os << "N,param,r,count\n";
        for (const auto& row : rows) {
            os << row.edges << "," << row.param << ",";
            if (row.aut) {
                os << *row.aut;
            } else {
                os << "total";
            }
            os << "," << row.count << "\n";
        }
        return os.str();
    }
    if (format == OutputFormat::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json j;
            j["N"] = row.edges;
            j["param"] = row.param;
            if (row.aut) j["r"] = *row.aut;
            j["count"] = row.count;
            arr.push_back(std::move(j));
        }
        return arr.dump(2) + "\n";
    }
    os << std::setw(4) << "N" << std::setw(7) << "param" << std::setw(7) << "r"
       << "  count\n";
    for (const auto& row : rows) {
        os << std::setw(4) << row.edges << std::setw(7) << row.param;
        if (row.aut) {
            os << std::setw(7) << *row.aut;
        } else {
            os << std::setw(7) << "total";
        }
        os << "  " << row.count << "\n";
    }
    return os.str();
}

namespace {

void record_check(VerifyReport& report, bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) {
        ++report.mismatches;
        report.failures.push_back(what);
    }
}

void verify_props(VerifyReport& report, std::int64_t max_edges) {
    for (int N = 1; N <= max_edges; ++N) {
        for (std::int64_t n : divisors(N)) {
            // One enumeration pass per (N, n); histogram by face count and
            // by fixed points of tau*sigma0.
            std::map<int, BigInt> by_cycles, by_fixed;
            const Permutation s0 = sigma0(N);
            for (const Permutation& tau :
                 centralizer_n_cycles(N, static_cast<int>(n), CycleGenStrategy::Filter)) {
                const CycleStats stats = cycle_counts(tau * s0);
                by_cycles[stats.cycles] += 1;
                by_fixed[stats.fixed_points] += 1;
            }
            for (std::int64_t L = 1; L <= N; ++L) {
                BigInt expect = psi(N, L, n);
                BigInt got = by_cycles.count(static_cast<int>(L))
                                 ? by_cycles[static_cast<int>(L)]
                                 : BigInt(0);
                record_check(report, expect == got,
                             "psi(" + std::to_string(N) + "," + std::to_string(L) + "," +
                                 std::to_string(n) + ") = " + expect.str() +
                                 " vs oracle " + got.str());
            }
            for (std::int64_t h = 0; h <= N; ++h) {
                BigInt got = by_fixed.count(static_cast<int>(h))
                                 ? by_fixed[static_cast<int>(h)]
                                 : BigInt(0);
                if (h % (N / n) == 0) {
                    BigInt expect = upsilon(N, h, n);
                    record_check(report, expect == got,
                                 "upsilon(" + std::to_string(N) + "," + std::to_string(h) +
                                     "," + std::to_string(n) + ") = " + expect.str() +
                                     " vs oracle " + got.str());
                } else {
                    record_check(report, got == 0,
                                 "oracle count nonzero outside the divisor constraint at N=" +
                                     std::to_string(N) + " h=" + std::to_string(h) +
                                     " n=" + std::to_string(n));
                }
            }
        }
    }
}

void verify_theorems(VerifyReport& report, std::int64_t max_edges) {
    for (int N = 1; N <= max_edges; ++N) {
        for (std::int64_t L = 1; L <= N; ++L) {
            auto expect = count_d1(N, L);
            auto got = classify_pairs_by_faces(N, static_cast<int>(L));
            for (std::int64_t r : divisors(N)) {
                BigInt g = got.per_r.count(r) ? got.per_r[r] : BigInt(0);
                record_check(report, expect.per_r.at(r) == g,
                             "d1(" + std::to_string(N) + "," + std::to_string(L) +
                                 ") r=" + std::to_string(r) + ": formula " +
                                 expect.per_r.at(r).str() + " vs oracle " + g.str());
            }
        }
        for (std::int64_t h = 0; h <= N; ++h) {
            auto expect = count_d2(N, h);
            auto got = classify_pairs_by_deg2(N, static_cast<int>(h));
            for (std::int64_t r : divisors(N)) {
                BigInt g = got.per_r.count(r) ? got.per_r[r] : BigInt(0);
                record_check(report, expect.per_r.at(r) == g,
                             "d2(" + std::to_string(N) + "," + std::to_string(h) +
                                 ") r=" + std::to_string(r) + ": formula " +
                                 expect.per_r.at(r).str() + " vs oracle " + g.str());
            }
        }
    }
}

void verify_identities(VerifyReport& report, std::int64_t max_edges) {
    for (std::int64_t N = 1; N <= max_edges; ++N) {
        for (std::int64_t L = 1; L <= N; ++L) {
            // h = L walks the h range alongside L; h = 0 is covered below.
            for (const auto& check : crosscheck_identities(N, L, L)) {
                record_check(report, check.pass,
                             "N=" + std::to_string(N) + " L=" + std::to_string(L) + " " +
                                 check.name + ": " + check.lhs + " vs " + check.rhs);
            }
        }
        for (const auto& check : crosscheck_identities(N, N, 0)) {
            record_check(report, check.pass,
                         "N=" + std::to_string(N) + " h=0 " + check.name + ": " +
                             check.lhs + " vs " + check.rhs);
        }
    }
}

}  // namespace

VerifyReport verify_sweep(std::int64_t max_edges, const std::string& scope) {
    if (scope != "props" && scope != "theorems" && scope != "identities" &&
        scope != "all") {
        throw std::invalid_argument("verify: unknown scope " + scope);
    }
    VerifyReport report;
    if (scope == "props" || scope == "all") {
        if (max_edges > brute_force_cap()) {
            throw std::invalid_argument("verify: max exceeds the brute-force cap");
        }
        verify_props(report, max_edges);
    }
    if (scope == "theorems" || scope == "all") {
        if (max_edges > brute_force_cap()) {
            throw std::invalid_argument("verify: max exceeds the brute-force cap");
        }
        verify_theorems(report, max_edges);
    }
    if (scope == "identities" || scope == "all") {
        verify_identities(report, max_edges);
    }
    return report;
}

}  // namespace dessin
