#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dessin/numtheory.hpp"

namespace dessin {

// Signals the empty case when L and N have different parity.
struct ParityError : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised by upsilon when N/n does not divide h; theorem-level callers
// pre-filter to the admissible divisor set and never see it.
struct DivisorConstraintError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Class counts refined by automorphism order r, plus the total.
struct ClassCountReport {
    std::int64_t edges = 0;               // N
    std::int64_t parameter = 0;           // L or h
    std::map<std::int64_t, BigInt> per_r; // keyed by r | N, ascending
    BigInt total;
};

// Number of N-cycles tau commuting with sigma0^n such that tau*sigma0 has
// exactly L cycles. Evaluated in exact rationals; integrality is asserted.
BigInt psi(std::int64_t N, std::int64_t L, std::int64_t n);

// Number of n-cycles w (excluding the inverse of the standard n-cycle)
// such that w * (1 2 ... n) fixes at least j points. j = 0 gives (n-1)! - 1.
BigInt sigma_j(std::int64_t n, std::int64_t j);

// Number of N-cycles tau commuting with sigma0^n such that tau*sigma0 has
// exactly h fixed points. Defined only when N/n divides h.
BigInt upsilon(std::int64_t N, std::int64_t h, std::int64_t n);

// Classes of two-vertex dessins with N edges, L faces and automorphism
// group of order exactly r.
BigInt count_d1_r(std::int64_t N, std::int64_t L, std::int64_t r);

// Per-r counts and total over all r | N. The total is recomputed through
// the double-sum form and checked for agreement.
ClassCountReport count_d1(std::int64_t N, std::int64_t L);

// Classes with N edges and h faces of degree 2, automorphism order r.
BigInt count_d2_r(std::int64_t N, std::int64_t h, std::int64_t r);

ClassCountReport count_d2(std::int64_t N, std::int64_t h);

// Dual interpretations (L single-degree vertices / one face, and the
// degree-1 vertex variant): same values by the duality theorems, exposed
// under their own names so reports can label them.
BigInt count_dual_d1_r(std::int64_t N, std::int64_t L, std::int64_t r);
BigInt count_dual_d2_r(std::int64_t N, std::int64_t h, std::int64_t r);

// (N - L) / 2; throws ParityError when N and L differ in parity.
std::int64_t genus(std::int64_t N, std::int64_t L);

struct IdentityCheck {
    std::string name;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

// Evaluates every specialized closed form whose hypotheses hold at
// (N, L, h) and compares it with the general formulas. Failures are
// reported, not thrown.
std::vector<IdentityCheck> crosscheck_identities(std::int64_t N, std::int64_t L,
                                                 std::int64_t h);

}  // namespace dessin
