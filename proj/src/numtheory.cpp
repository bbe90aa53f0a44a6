#include "dessin/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace dessin {

namespace {

void require_positive(std::int64_t m, const char* who) {
    if (m < 1) {
        throw std::invalid_argument(std::string(who) + ": argument must be >= 1");
    }
}

// (prime, exponent) pairs by trial division; desk-scale inputs only.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t m) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

}  // namespace

std::vector<std::int64_t> divisors(std::int64_t m) {
    require_positive(m, "divisors");
    std::vector<std::int64_t> out{1};
    for (auto [p, e] : factorize(m)) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t m) {
    require_positive(m, "prime_divisors");
    std::vector<std::int64_t> out;
    for (auto [p, e] : factorize(m)) out.push_back(p);
    return out;
}

int moebius(std::int64_t m) {
    require_positive(m, "moebius");
    int sign = 1;
    for (auto [p, e] : factorize(m)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::int64_t euler_phi(std::int64_t m) {
    require_positive(m, "euler_phi");
    std::int64_t phi = m;
    for (auto [p, e] : factorize(m)) phi -= phi / p;
    return phi;
}

BigInt elem_sym(std::int64_t n, std::int64_t m) {
    if (n < 1) throw std::invalid_argument("elem_sym: n must be >= 1");
    if (m < 0 || m > n) throw std::invalid_argument("elem_sym: need 0 <= m <= n");

    static std::mutex mu;
    static std::map<std::int64_t, std::vector<BigInt>> rows;
    std::lock_guard<std::mutex> lock(mu);
    auto it = rows.find(n);
    if (it == rows.end()) {
        // Coefficient row of prod_{k=1..n} (x + k): row[j] = s_j(1..n).
        std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
        row[0] = 1;
        for (std::int64_t k = 1; k <= n; ++k) {
            for (std::int64_t j = k; j >= 1; --j) row[j] += k * row[j - 1];
        }
        it = rows.emplace(n, std::move(row)).first;
    }
    return it->second[static_cast<std::size_t>(m)];
}

BigInt f_coeff(std::int64_t n, std::int64_t m) {
    if (m < 0 || m > n) throw std::invalid_argument("f_coeff: need 0 <= m <= n");
    if (m % 2 == 0) return 0;
    return 2 * elem_sym(n, m);
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
    BigInt result = 1;
    for (std::int64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

}  // namespace dessin
