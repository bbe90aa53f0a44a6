// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure.

#include <chrono>
#include <iostream>
#include <string>

#include "dessin/counting.hpp"
#include "dessin/partitions.hpp"
#include "dessin/permoracle.hpp"
#include "dessin/report.hpp"

using namespace dessin;

namespace {

int failures = 0;

class Criterion {
public:
    explicit Criterion(std::string name) : name_(std::move(name)) {}

    void expect(bool ok, const std::string& detail) {
        if (!ok) {
            ok_ = false;
            if (details_.size() < 10) details_.push_back(detail);
        }
    }

    ~Criterion() {
        std::cout << (ok_ ? "PASS" : "FAIL") << "  " << name_ << "\n";
        for (const auto& d : details_) std::cout << "      " << d << "\n";
        if (!ok_) ++failures;
    }

private:
    std::string name_;
    bool ok_ = true;
    std::vector<std::string> details_;
};

void criterion1_table1() {
    Criterion c("1: face-count table reproduction (N = 2..7)");
    struct Row { std::int64_t N, L, r, count; };
    const Row rows[] = {
        {2, 2, 1, 0}, {2, 2, 2, 1},
        {3, 1, 1, 0}, {3, 1, 3, 1}, {3, 3, 1, 0}, {3, 3, 3, 1},
        {4, 2, 1, 1}, {4, 2, 2, 0}, {4, 2, 4, 1},
        {4, 4, 1, 0}, {4, 4, 2, 0}, {4, 4, 4, 1},
        {5, 1, 1, 1}, {5, 1, 5, 3}, {5, 3, 1, 3}, {5, 3, 5, 0},
        {6, 2, 1, 13}, {6, 2, 2, 1}, {6, 2, 3, 1}, {6, 2, 6, 1},
        {6, 4, 1, 5}, {6, 4, 2, 1}, {6, 4, 3, 1}, {6, 4, 6, 0},
        {6, 6, 1, 0}, {6, 6, 2, 0}, {6, 6, 3, 0}, {6, 6, 6, 1},
        {7, 1, 1, 25}, {7, 1, 7, 5},
    };
    for (const auto& row : rows) {
        c.expect(count_d1_r(row.N, row.L, row.r) == row.count,
                 "row (" + std::to_string(row.N) + "," + std::to_string(row.L) + "," +
                     std::to_string(row.r) + ")");
    }
    struct Total { std::int64_t N, L, total; };
    const Total totals[] = {
        {2, 2, 1}, {3, 1, 1}, {3, 3, 1}, {4, 2, 2}, {4, 4, 1},
        {5, 1, 4}, {5, 3, 3}, {5, 5, 1}, {6, 2, 16}, {6, 4, 7}, {6, 6, 1},
        {7, 1, 30}, {7, 3, 67}, {7, 5, 10}, {7, 7, 1},
    };
    for (const auto& t : totals) {
        c.expect(count_d1(t.N, t.L).total == t.total,
                 "total (" + std::to_string(t.N) + "," + std::to_string(t.L) + ")");
    }
}

void criterion2_table2() {
    Criterion c("2: degree-2 face table reproduction (N = 2..5, plus N = 8, h = 4)");
    struct Row { std::int64_t N, h, r, count; };
    const Row rows[] = {
        {2, 0, 1, 0}, {2, 0, 2, 0}, {2, 1, 1, 0}, {2, 1, 2, 0},
        {2, 2, 1, 0}, {2, 2, 2, 1},
        {3, 0, 1, 0}, {3, 0, 3, 1}, {3, 1, 1, 0}, {3, 1, 3, 0},
        {3, 2, 1, 0}, {3, 2, 3, 0}, {3, 3, 1, 0}, {3, 3, 3, 1},
        {4, 0, 1, 0}, {4, 0, 2, 0}, {4, 0, 4, 1},
        {4, 1, 1, 1}, {4, 1, 2, 0}, {4, 1, 4, 0},
        {4, 2, 1, 0}, {4, 2, 2, 0}, {4, 2, 4, 0},
        {4, 3, 1, 0}, {4, 3, 2, 0}, {4, 3, 4, 0},
        {4, 4, 1, 0}, {4, 4, 2, 0}, {4, 4, 4, 1},
        {5, 0, 1, 1},
    };
    for (const auto& row : rows) {
        c.expect(count_d2_r(row.N, row.h, row.r) == row.count,
                 "row (" + std::to_string(row.N) + "," + std::to_string(row.h) + "," +
                     std::to_string(row.r) + ")");
    }
    struct Total { std::int64_t N, h, total; };
    const Total totals[] = {
        {2, 0, 0}, {2, 1, 0}, {2, 2, 1}, {3, 0, 1}, {3, 1, 0}, {3, 2, 0},
        {3, 3, 1}, {4, 0, 1}, {4, 1, 1}, {4, 2, 0}, {4, 3, 0}, {4, 4, 1},
        {5, 0, 4}, {5, 1, 1}, {5, 2, 2}, {8, 4, 10},
    };
    for (const auto& t : totals) {
        c.expect(count_d2(t.N, t.h).total == t.total,
                 "total (" + std::to_string(t.N) + "," + std::to_string(t.h) + ")");
    }
}

void criterion3_centralizer_oracle() {
    Criterion c("3: psi/upsilon equal the centralizer oracle (N <= 8)");
    auto report = verify_sweep(8, "props");
    c.expect(report.mismatches == 0,
             std::to_string(report.mismatches) + " of " + std::to_string(report.checks) +
                 " oracle comparisons failed" +
                 (report.failures.empty() ? "" : "; first: " + report.failures.front()));
}

void criterion4_classification_oracle() {
    Criterion c("4: theorem-level per-r counts equal the classification oracle (N <= 8)");
    auto report = verify_sweep(8, "theorems");
    c.expect(report.mismatches == 0,
             std::to_string(report.mismatches) + " of " + std::to_string(report.checks) +
                 " classification comparisons failed" +
                 (report.failures.empty() ? "" : "; first: " + report.failures.front()));
}

void criterion5_identities() {
    Criterion c("5: specialization identities, formula vs formula (N <= 60)");
    auto report = verify_sweep(60, "identities");
    c.expect(report.checks > 0, "no identity checks ran");
    c.expect(report.mismatches == 0,
             std::to_string(report.mismatches) + " of " + std::to_string(report.checks) +
                 " identity checks failed" +
                 (report.failures.empty() ? "" : "; first: " + report.failures.front()));
}

void criterion6_integrality() {
    Criterion c("6: integrality and divisibility of all counts (N <= 60)");
    for (std::int64_t N = 1; N <= 60; ++N) {
        const auto divs = divisors(N);
        for (std::int64_t L = 1; L <= N; ++L) {
            for (std::int64_t u : divs) {
                BigInt inverted = 0;
                for (std::int64_t n : divisors(u)) {
                    try {
                        inverted += moebius(u / n) * psi(N, L, n);  // throws if non-integral
                    } catch (const IntegralityError& e) {
                        c.expect(false, e.what());
                    }
                }
                c.expect(inverted >= 0 && inverted % u == 0,
                         "inverted sum at N=" + std::to_string(N) +
                             " L=" + std::to_string(L) + " u=" + std::to_string(u));
            }
        }
        for (std::int64_t h = 0; h <= N; ++h) {
            for (std::int64_t n : divs) {
                if (h % (N / n) != 0) continue;
                try {
                    c.expect(upsilon(N, h, n) >= 0,
                             "negative upsilon at N=" + std::to_string(N));
                } catch (const IntegralityError& e) {
                    c.expect(false, e.what());
                }
            }
            for (std::int64_t r : divs) {
                try {
                    (void)count_d2_r(N, h, r);
                } catch (const IntegralityError& e) {
                    c.expect(false, e.what());
                }
            }
        }
        for (std::int64_t L = 1; L <= N; ++L) {
            for (std::int64_t r : divs) {
                try {
                    (void)count_d1_r(N, L, r);
                } catch (const IntegralityError& e) {
                    c.expect(false, e.what());
                }
            }
        }
    }
}

void criterion7_structural() {
    Criterion c("7: cycle-distribution and bijection structure checks");
    for (int n = 1; n <= 8; ++n) {
        for (int m = 1; m <= n; ++m) {
            c.expect(oracle_R_m(n, m) * n * (n + 1) == f_coeff(n, n - m + 1),
                     "cycle-count distribution at n=" + std::to_string(n) +
                         " m=" + std::to_string(m));
        }
        for (int j = 0; j < n; ++j) {
            c.expect(oracle_sigma_fixed(n, j) == sigma_j(n, j) - sigma_j(n, j + 1),
                     "fixed-point distribution at n=" + std::to_string(n) +
                         " j=" + std::to_string(j));
        }
    }
    for (int N = 1; N <= 8; ++N) {
        for (std::int64_t n : divisors(N)) {
            auto filtered = centralizer_n_cycles(N, static_cast<int>(n),
                                                 CycleGenStrategy::Filter);
            auto constructed = centralizer_n_cycles(N, static_cast<int>(n),
                                                    CycleGenStrategy::Construct);
            std::set<Permutation> fs(filtered.begin(), filtered.end());
            std::set<Permutation> cs(constructed.begin(), constructed.end());
            c.expect(fs == cs, "strategy mismatch at N=" + std::to_string(N) +
                                   " n=" + std::to_string(n));
            c.expect(cs.size() == constructed.size(),
                     "construction not injective at N=" + std::to_string(N) +
                         " n=" + std::to_string(n));
            const std::int64_t q = N / n;
            BigInt expected = factorial(n - 1) * euler_phi(q);
            for (std::int64_t k = 0; k < n - 1; ++k) expected *= q;
            c.expect(BigInt(fs.size()) == expected,
                     "cardinality mismatch at N=" + std::to_string(N) +
                         " n=" + std::to_string(n));
        }
    }
}

template <typename F>
void timed(F&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::cout << "      (" << elapsed.count() << " ms)\n";
}

}  // namespace

int main() {
    timed(criterion1_table1);
    timed(criterion2_table2);
    timed(criterion3_centralizer_oracle);
    timed(criterion4_classification_oracle);
    timed(criterion5_identities);
    timed(criterion6_integrality);
    timed(criterion7_structural);
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
