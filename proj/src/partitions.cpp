#include "dessin/partitions.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace dessin {

namespace {

void require_context(std::int64_t N, std::int64_t L, std::int64_t n) {
    if (N < 1 || n < 1 || N % n != 0) {
        throw std::invalid_argument("partition context: n must divide N");
    }
    if (L < 1 || L > N) {
        throw std::invalid_argument("partition context: need 1 <= L <= N");
    }
}

void require_prime_of_context(const DivisorPartition& lambda, std::int64_t p) {
    const std::int64_t q = lambda.edges / lambda.power;
    if (p < 2 || q % p != 0 || euler_phi(p) != p - 1) {
        throw std::invalid_argument("expected a prime divisor of N/n");
    }
}

}  // namespace

std::int64_t DivisorPartition::multiplicity(std::int64_t k) const {
    return std::count(parts.begin(), parts.end(), k);
}

std::vector<DivisorPartition> enumerate_lambda(std::int64_t N, std::int64_t L,
                                               std::int64_t n) {
    require_context(N, L, n);
    std::vector<std::int64_t> divs = divisors(N / n);
    std::sort(divs.rbegin(), divs.rend());

    std::vector<DivisorPartition> out;
    std::vector<std::int64_t> cur;
    // Recursive descent over parts, largest first; descending lexicographic
    // output order falls out of the divisor ordering.
    auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t max_part) -> void {
        if (remaining == 0) {
            out.push_back(DivisorPartition{cur, N, L, n});
            return;
        }
        for (std::int64_t d : divs) {
            if (d > max_part || d > remaining) continue;
            cur.push_back(d);
            self(self, remaining - d, d);
            cur.pop_back();
        }
    };
    rec(rec, L, L);
    return out;
}

std::vector<DivisorPartition> lambda_by_length(std::int64_t N, std::int64_t L,
                                               std::int64_t n, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("lambda_by_length: m must be >= 1");
    std::vector<DivisorPartition> out;
    for (auto& lambda : enumerate_lambda(N, L, n)) {
        if (lambda.length() == m) out.push_back(std::move(lambda));
    }
    return out;
}

BigInt delta(const DivisorPartition& lambda) {
    BigInt product = 1;
    for (std::int64_t l : lambda.parts) product *= l;
    return product;
}

BigRat b_coeff(const DivisorPartition& lambda) {
    BigInt numerator = factorial(lambda.length());
    std::int64_t run = 1;
    for (std::size_t j = 1; j <= lambda.parts.size(); ++j) {
        if (j < lambda.parts.size() && lambda.parts[j] == lambda.parts[j - 1]) {
            ++run;
        } else {
            numerator /= factorial(run);
            run = 1;
        }
    }
    return BigRat(numerator, delta(lambda));
}

std::int64_t i_zero(const DivisorPartition& lambda, std::int64_t p) {
    require_prime_of_context(lambda, p);
    return std::count_if(lambda.parts.begin(), lambda.parts.end(),
                         [p](std::int64_t l) { return std::gcd(l, p) == 1; });
}

std::int64_t i_count(const DivisorPartition& lambda, std::int64_t p) {
    require_prime_of_context(lambda, p);
    const std::int64_t q = lambda.edges / lambda.power;
    return std::count_if(lambda.parts.begin(), lambda.parts.end(),
                         [p, q](std::int64_t l) { return q % (p * l) == 0; });
}

BigRat a_factor(const DivisorPartition& lambda, std::int64_t p) {
    const std::int64_t i0 = i_zero(lambda, p);
    const std::int64_t i = i_count(lambda, p);
    assert(i0 <= i);
    const BigRat one_minus(p - 1, p);
    const BigRat minus(-1, p);
    BigRat result = 1;
    for (std::int64_t k = 0; k < i - i0; ++k) result *= one_minus;
    BigRat head = 1, tail = 1;
    for (std::int64_t k = 0; k <= i0; ++k) {
        head *= one_minus;
        tail *= minus;
    }
    return result * (head - tail);
}

}  // namespace dessin
