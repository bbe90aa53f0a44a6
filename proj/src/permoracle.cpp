#include "dessin/permoracle.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dessin {

namespace {

void require_cap(int N, const char* who) {
    if (N < 1) throw std::invalid_argument(std::string(who) + ": N must be >= 1");
    if (N > brute_force_cap()) {
        throw std::invalid_argument(std::string(who) +
                                    ": N exceeds the brute-force bound");
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v) - 1]) {
            throw std::invalid_argument("Permutation: not a bijection on {1..N}");
        }
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& other) const {
    assert(degree() == other.degree());
    std::vector<int> img(images_.size());
    for (int x = 1; x <= degree(); ++x) {
        img[static_cast<std::size_t>(x) - 1] = apply(other.apply(x));
    }
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (int x = 1; x <= degree(); ++x) {
        img[static_cast<std::size_t>(apply(x)) - 1] = x;
    }
    return Permutation(std::move(img));
}

Permutation sigma0(int N) {
    if (N < 1) throw std::invalid_argument("sigma0: N must be >= 1");
    std::vector<int> img(static_cast<std::size_t>(N));
    for (int x = 1; x <= N; ++x) img[static_cast<std::size_t>(x) - 1] = x % N + 1;
    return Permutation(std::move(img));
}

CycleStats cycle_counts(const Permutation& pi) {
    CycleStats stats;
    std::vector<bool> seen(static_cast<std::size_t>(pi.degree()), false);
    for (int x = 1; x <= pi.degree(); ++x) {
        if (seen[static_cast<std::size_t>(x) - 1]) continue;
        int len = 0;
        for (int y = x; !seen[static_cast<std::size_t>(y) - 1]; y = pi.apply(y)) {
            seen[static_cast<std::size_t>(y) - 1] = true;
            ++len;
        }
        ++stats.cycles;
        if (len == 1) ++stats.fixed_points;
        stats.lengths.push_back(len);
    }
    std::sort(stats.lengths.begin(), stats.lengths.end());
    return stats;
}

bool commutes_with_power(const Permutation& tau, int n) {
    const int N = tau.degree();
    if (n < 1 || N % n != 0) {
        throw std::invalid_argument("commutes_with_power: n must divide N");
    }
    // sigma0^n sends x to x + n (mod N); compare tau(x + n) with tau(x) + n.
    for (int x = 1; x <= N; ++x) {
        const int shifted = (x - 1 + n) % N + 1;
        if (tau.apply(shifted) != (tau.apply(x) - 1 + n) % N + 1) return false;
    }
    return true;
}

Permutation rho_from_data(const CentralizerCycleData& data, int N) {
    const int n = data.omega.degree();
    if (n < 1 || N % n != 0) {
        throw std::invalid_argument("rho_from_data: omega degree must divide N");
    }
    const int q = N / n;
    if (cycle_counts(data.omega).lengths != std::vector<int>{n}) {
        throw std::invalid_argument("rho_from_data: omega must be a single n-cycle");
    }
    if (static_cast<int>(data.shifts.size()) != n - 1) {
        throw std::invalid_argument("rho_from_data: expected n-1 shifts");
    }
    for (int u : data.shifts) {
        if (u < 0 || u >= q) {
            throw std::invalid_argument("rho_from_data: shift outside [0, N/n)");
        }
    }
    if (data.unit < 0 || data.unit >= q || std::gcd(data.unit, q) != 1) {
        throw std::invalid_argument("rho_from_data: unit must lie in E and be coprime to N/n");
    }

    // The cycle a_1 = 1, a_2 = omega(1), ..., a_n = omega^{n-1}(1).
    std::vector<int> a(static_cast<std::size_t>(n));
    a[0] = 1;
    for (int j = 1; j < n; ++j) a[static_cast<std::size_t>(j)] = data.omega.apply(a[static_cast<std::size_t>(j) - 1]);
    std::vector<int> u(static_cast<std::size_t>(n), 0);
    for (int j = 1; j < n; ++j) u[static_cast<std::size_t>(j)] = data.shifts[static_cast<std::size_t>(j) - 1];

    // rho(a_j + u_j n) = a_{j+1} + u_{j+1} n, wrapping to 1 + bn, extended
    // over the centralizer by rho(x + kn) = rho(x) + kn.
    std::vector<int> img(static_cast<std::size_t>(N), 0);
    for (int j = 0; j < n; ++j) {
        const int src = a[static_cast<std::size_t>(j)] + u[static_cast<std::size_t>(j)] * n;
        const int dst = (j + 1 < n)
                            ? a[static_cast<std::size_t>(j) + 1] + u[static_cast<std::size_t>(j) + 1] * n
                            : 1 + data.unit * n;
        for (int k = 0; k < q; ++k) {
            const int s = (src - 1 + k * n) % N;
            const int d = (dst - 1 + k * n) % N;
            img[static_cast<std::size_t>(s)] = d + 1;
        }
    }
    Permutation rho{std::move(img)};
    assert(cycle_counts(rho).cycles == 1);
    return rho;
}

void for_each_n_cycle(int N, const std::function<void(const Permutation&)>& fn) {
    if (N < 1) throw std::invalid_argument("for_each_n_cycle: N must be >= 1");
    if (N == 1) {
        fn(Permutation::identity(1));
        return;
    }
    // Cycles (1 c_2 ... c_N) over arrangements of {2..N}: (N-1)! candidates.
    std::vector<int> rest(static_cast<std::size_t>(N) - 1);
    std::iota(rest.begin(), rest.end(), 2);
    std::vector<int> img(static_cast<std::size_t>(N));
    do {
        int prev = 1;
        for (int c : rest) {
            img[static_cast<std::size_t>(prev) - 1] = c;
            prev = c;
        }
        img[static_cast<std::size_t>(prev) - 1] = 1;
        fn(Permutation(img));
    } while (std::next_permutation(rest.begin(), rest.end()));
}

std::vector<Permutation> centralizer_n_cycles(int N, int n, CycleGenStrategy strategy) {
    require_cap(N, "centralizer_n_cycles");
    if (n < 1 || N % n != 0) {
        throw std::invalid_argument("centralizer_n_cycles: n must divide N");
    }
    std::vector<Permutation> out;
    if (strategy == CycleGenStrategy::Filter) {
        for_each_n_cycle(N, [&](const Permutation& tau) {
            if (commutes_with_power(tau, n)) out.push_back(tau);
        });
        return out;
    }
    const int q = N / n;
    std::vector<int> units;
    for (int b = 0; b < q; ++b) {
        if (std::gcd(b, q) == 1) units.push_back(b);
    }
    if (q == 1) units = {0};
    for_each_n_cycle(n, [&](const Permutation& omega) {
        std::vector<int> shifts(static_cast<std::size_t>(n) - 1, 0);
        while (true) {
            for (int b : units) {
                out.push_back(rho_from_data({omega, shifts, b}, N));
            }
            // odometer over E^{n-1}
            std::size_t pos = 0;
            while (pos < shifts.size() && ++shifts[pos] == q) shifts[pos++] = 0;
            if (pos == shifts.size()) break;
        }
    });
    return out;
}

namespace {

std::vector<int> canonical_conjugate(const Permutation& tau, int N, int* orbit_size) {
    // Orbit of tau under conjugation by powers of sigma0; the minimal
    // one-line form is the canonical representative.
    std::set<std::vector<int>> orbit;
    std::vector<int> img(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) {
        for (int x = 1; x <= N; ++x) {
            // (sigma0^k tau sigma0^-k)(x) = tau(x - k) + k  (mod N)
            const int y = ((x - 1 - k) % N + N) % N + 1;
            img[static_cast<std::size_t>(x) - 1] = (tau.apply(y) - 1 + k) % N + 1;
        }
        orbit.insert(img);
    }
    if (orbit_size != nullptr) *orbit_size = static_cast<int>(orbit.size());
    return *orbit.begin();
}

PairClassification classify_pairs(int N, const std::function<bool(const CycleStats&)>& pred) {
    require_cap(N, "classify_pairs");
    const Permutation s0 = sigma0(N);
    PairClassification result;
    result.total = 0;
    std::set<std::vector<int>> seen;
    for_each_n_cycle(N, [&](const Permutation& tau) {
        if (!pred(cycle_counts(tau * s0))) return;
        int orbit_size = 0;
        std::vector<int> canon = canonical_conjugate(tau, N, &orbit_size);
        if (!seen.insert(std::move(canon)).second) return;
        const std::int64_t r = N / orbit_size;
        result.per_r[r] += 1;
        result.total += 1;
    });
    return result;
}

}  // namespace

PairClassification classify_pairs_by_faces(int N, int faces) {
    return classify_pairs(N, [faces](const CycleStats& s) { return s.cycles == faces; });
}

PairClassification classify_pairs_by_deg2(int N, int deg2_faces) {
    return classify_pairs(
        N, [deg2_faces](const CycleStats& s) { return s.fixed_points == deg2_faces; });
}

BigInt oracle_T_centralizer(int N, int L, int n) {
    require_cap(N, "oracle_T_centralizer");
    const Permutation s0 = sigma0(N);
    BigInt count = 0;
    for (const Permutation& tau : centralizer_n_cycles(N, n, CycleGenStrategy::Filter)) {
        if (cycle_counts(tau * s0).cycles == L) ++count;
    }
    return count;
}

BigInt oracle_V_centralizer(int N, int h, int n) {
    require_cap(N, "oracle_V_centralizer");
    const Permutation s0 = sigma0(N);
    BigInt count = 0;
    for (const Permutation& tau : centralizer_n_cycles(N, n, CycleGenStrategy::Filter)) {
        if (cycle_counts(tau * s0).fixed_points == h) ++count;
    }
    return count;
}

BigInt oracle_R_m(int n, int m) {
    require_cap(n, "oracle_R_m");
    if (m < 1 || m > n) throw std::invalid_argument("oracle_R_m: need 1 <= m <= n");
    const Permutation s0n = sigma0(n);
    BigInt count = 0;
    for_each_n_cycle(n, [&](const Permutation& omega) {
        if (cycle_counts(omega * s0n).cycles == m) ++count;
    });
    return count;
}

BigInt oracle_sigma_fixed(int n, int j) {
    require_cap(n, "oracle_sigma_fixed");
    if (j < 0 || j >= n) throw std::invalid_argument("oracle_sigma_fixed: need 0 <= j < n");
    const Permutation s0n = sigma0(n);
    BigInt count = 0;
    for_each_n_cycle(n, [&](const Permutation& omega) {
        if (cycle_counts(omega * s0n).fixed_points == j) ++count;
    });
    return count;
}

int brute_force_cap() {
    const char* env = std::getenv("DESSIN_BRUTE_CAP");
    if (env == nullptr || *env == '\0') return 9;
    const long value = std::strtol(env, nullptr, 10);
    if (value < 1) return 9;
    if (value > 11) {
        static bool warned = false;
        if (!warned) {
            std::cerr << "warning: DESSIN_BRUTE_CAP clamped to 11\n";
            warned = true;
        }
        return 11;
    }
    return static_cast<int>(value);
}

}  // namespace dessin
