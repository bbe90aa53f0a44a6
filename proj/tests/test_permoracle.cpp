#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "dessin/counting.hpp"
#include "dessin/permoracle.hpp"

using namespace dessin;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("sigma0") {
    CHECK(sigma0(3).images() == std::vector<int>{2, 3, 1});
    CHECK(sigma0(1) == Permutation::identity(1));
    CHECK(sigma0(8).images() == std::vector<int>{2, 3, 4, 5, 6, 7, 8, 1});
}

TEST_CASE("permutation group laws") {
    std::mt19937 rng(20240817);
    for (int n = 1; n <= 12; ++n) {
        const Permutation id = Permutation::identity(n);
        for (int trial = 0; trial < 20; ++trial) {
            Permutation a = random_permutation(n, rng);
            Permutation b = random_permutation(n, rng);
            Permutation c = random_permutation(n, rng);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * id == a);
            REQUIRE(id * a == a);
            REQUIRE(a * a.inverse() == id);
            REQUIRE(a.inverse() * a == id);
        }
    }
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 2}), std::invalid_argument);
}

TEST_CASE("cycle_counts") {
    auto id4 = cycle_counts(Permutation::identity(4));
    CHECK(id4.cycles == 4);
    CHECK(id4.fixed_points == 4);
    CHECK(id4.lengths == std::vector<int>{1, 1, 1, 1});

    auto full = cycle_counts(sigma0(5));
    CHECK(full.cycles == 1);
    CHECK(full.fixed_points == 0);
    CHECK(full.lengths == std::vector<int>{5});

    // tau = (1 8 7 6 5 2 3 4); tau * sigma0 has 4 fixed points
    Permutation tau({8, 3, 4, 1, 2, 5, 6, 7});
    CHECK(cycle_counts(tau * sigma0(8)).fixed_points == 4);
}

TEST_CASE("commutes_with_power") {
    CHECK(commutes_with_power(sigma0(6), 1));
    CHECK(commutes_with_power(sigma0(6), 3));
    CHECK_FALSE(commutes_with_power(Permutation({2, 1, 3, 4}), 1));
    // sigma0^N is the identity, centralizing everything
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        CHECK(commutes_with_power(random_permutation(6, rng), 6));
    }
    CHECK_THROWS_AS(commutes_with_power(sigma0(6), 4), std::invalid_argument);
}

TEST_CASE("rho_from_data base cases") {
    // n = 1: rho is sigma0^b
    for (int N : {4, 5, 8}) {
        for (int b = 1; b < N; ++b) {
            if (std::gcd(b, N) != 1) continue;
            Permutation rho = rho_from_data({Permutation::identity(1), {}, b}, N);
            Permutation expect = sigma0(N);
            for (int k = 1; k < b; ++k) expect = expect * sigma0(N);
            CHECK(rho == expect);
        }
    }
    // n = N: the lift of omega itself
    Permutation omega({3, 1, 2});
    Permutation rho = rho_from_data({omega, {0, 0}, 0}, 3);
    CHECK(rho == omega);

    CHECK_THROWS_AS(rho_from_data({Permutation::identity(2), {0}, 1}, 4),
                    std::invalid_argument);  // omega not a 2-cycle
    CHECK_THROWS_AS(rho_from_data({sigma0(2), {5}, 1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(rho_from_data({sigma0(2), {0}, 0}, 8), std::invalid_argument);
}

TEST_CASE("rho_from_data output lies in the centralizer") {
    for (int N = 1; N <= 8; ++N) {
        for (std::int64_t n : divisors(N)) {
            const int q = N / static_cast<int>(n);
            for_each_n_cycle(static_cast<int>(n), [&](const Permutation& omega) {
                std::vector<int> shifts(static_cast<std::size_t>(n) - 1, 0);
                // spot-check the zero tuple and one mixed tuple
                for (int variant = 0; variant < 2; ++variant) {
                    if (variant == 1) {
                        for (std::size_t i = 0; i < shifts.size(); ++i) {
                            shifts[i] = static_cast<int>(i) % q;
                        }
                    }
                    for (int b = 0; b < q; ++b) {
                        if (std::gcd(b, q) != 1) continue;
                        Permutation rho = rho_from_data({omega, shifts, b}, N);
                        REQUIRE(cycle_counts(rho).cycles == 1);
                        REQUIRE(commutes_with_power(rho, static_cast<int>(n)));
                    }
                }
            });
        }
    }
}

TEST_CASE("centralizer_n_cycles strategies agree and match the cardinality") {
    for (int N = 1; N <= 7; ++N) {
        for (std::int64_t n : divisors(N)) {
            auto filtered = centralizer_n_cycles(N, static_cast<int>(n),
                                                 CycleGenStrategy::Filter);
            auto constructed = centralizer_n_cycles(N, static_cast<int>(n),
                                                    CycleGenStrategy::Construct);
            std::set<Permutation> fs(filtered.begin(), filtered.end());
            std::set<Permutation> cs(constructed.begin(), constructed.end());
            REQUIRE(fs == cs);
            REQUIRE(cs.size() == constructed.size());  // injectivity of the construction
            const std::int64_t q = N / n;
            BigInt expected = factorial(n - 1);
            for (std::int64_t k = 0; k < n - 1; ++k) expected *= q;
            expected *= euler_phi(q);
            REQUIRE(BigInt(fs.size()) == expected);
        }
    }
    // named examples
    CHECK(centralizer_n_cycles(4, 1, CycleGenStrategy::Filter).size() == 2);
    CHECK(centralizer_n_cycles(6, 6, CycleGenStrategy::Filter).size() == 120);
    CHECK(centralizer_n_cycles(6, 3, CycleGenStrategy::Filter).size() == 8);
}

TEST_CASE("classify_pairs matches the table") {
    auto faces = classify_pairs_by_faces(6, 2);
    CHECK(faces.per_r[1] == 13);
    CHECK(faces.per_r[2] == 1);
    CHECK(faces.per_r[3] == 1);
    CHECK(faces.per_r[6] == 1);
    CHECK(faces.total == 16);

    CHECK(classify_pairs_by_deg2(8, 4).total == 10);
    CHECK(classify_pairs_by_deg2(5, 0).total == 4);
}

TEST_CASE("orbit sizes are N / r") {
    // recomputed directly: each counted class with aut order r must sit in
    // a conjugation orbit of size N / r; total raw elements = sum over
    // classes of orbit sizes
    for (int N = 2; N <= 7; ++N) {
        for (int L = 1; L <= N; ++L) {
            auto cls = classify_pairs_by_faces(N, L);
            BigInt raw = 0;
            for (const auto& [r, count] : cls.per_r) raw += count * (N / r);
            REQUIRE(raw == oracle_T_centralizer(N, L, N));
        }
    }
}

TEST_CASE("oracle examples") {
    CHECK(oracle_T_centralizer(7, 1, 1) == 5);
    CHECK(oracle_T_centralizer(7, 1, 7) == 180);
    // N/n does not divide h: count must be 0
    CHECK(oracle_V_centralizer(6, 1, 3) == 0);
    CHECK(oracle_V_centralizer(8, 3, 4) == 0);
    // L = N leaves exactly the inverse-pair class structure
    for (int N = 2; N <= 7; ++N) {
        CHECK(oracle_T_centralizer(N, N, N) == 1);  // only tau = sigma0^{-1}
    }
}

TEST_CASE("cycle-count distribution matches the odd symmetric-function coefficients") {
    for (int n = 1; n <= 7; ++n) {
        for (int m = 1; m <= n; ++m) {
            CAPTURE(n); CAPTURE(m);
            REQUIRE(oracle_R_m(n, m) * n * (n + 1) == f_coeff(n, n - m + 1));
            if ((n - m) % 2 == 1) REQUIRE(oracle_R_m(n, m) == 0);
        }
        REQUIRE(oracle_R_m(n, n) == 1);
    }
}

TEST_CASE("fixed-point distribution matches the Sigma differences") {
    for (int n = 1; n <= 7; ++n) {
        for (int j = 0; j < n; ++j) {
            CAPTURE(n); CAPTURE(j);
            REQUIRE(oracle_sigma_fixed(n, j) == sigma_j(n, j) - sigma_j(n, j + 1));
        }
        if (n >= 2) REQUIRE(oracle_sigma_fixed(n, n - 1) == 0);
    }
}

TEST_CASE("brute-force cap is enforced") {
    const int cap = brute_force_cap();
    CHECK(cap >= 1);
    CHECK(cap <= 11);
    CHECK_THROWS_AS(oracle_R_m(cap + 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(classify_pairs_by_faces(cap + 1, 1), std::invalid_argument);
}
