#pragma once

#include <cstdint>
#include <vector>

#include "dessin/numtheory.hpp"

namespace dessin {

// A partition of L into parts each dividing N/n, parts non-increasing.
// Carries its (N, L, n) context so the prime-local coefficients can
// validate p against the prime divisors of N/n.
struct DivisorPartition {
    std::vector<std::int64_t> parts;  // l_1 >= ... >= l_nu >= 1
    std::int64_t edges = 0;           // N
    std::int64_t sum = 0;             // L
    std::int64_t power = 0;           // n, a divisor of N

    std::int64_t length() const { return static_cast<std::int64_t>(parts.size()); }

    // Multiplicity of k among the parts.
    std::int64_t multiplicity(std::int64_t k) const;

    bool operator==(const DivisorPartition& o) const { return parts == o.parts; }
};

// All partitions of L into parts from the divisors of N/n, in descending
// lexicographic order. Requires n | N and 1 <= L <= N.
std::vector<DivisorPartition> enumerate_lambda(std::int64_t N, std::int64_t L,
                                               std::int64_t n);

// The subset of enumerate_lambda with exactly m parts.
std::vector<DivisorPartition> lambda_by_length(std::int64_t N, std::int64_t L,
                                               std::int64_t n, std::int64_t m);

// Product of the parts.
BigInt delta(const DivisorPartition& lambda);

// nu! / (nu_1! ... nu_L! * Delta): multinomial over distinct orderings
// divided by the part product. Always a positive rational.
BigRat b_coeff(const DivisorPartition& lambda);

// Number of parts coprime to p. Requires p | N/n.
std::int64_t i_zero(const DivisorPartition& lambda, std::int64_t p);

// Number of parts l_j with p*l_j dividing N/n. Requires p | N/n.
std::int64_t i_count(const DivisorPartition& lambda, std::int64_t p);

// (1-1/p)^(i-i0) * ((1-1/p)^(i0+1) - (-1/p)^(i0+1)). Equals 1 when i = 0.
BigRat a_factor(const DivisorPartition& lambda, std::int64_t p);

}  // namespace dessin
