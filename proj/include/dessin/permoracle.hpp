#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "dessin/numtheory.hpp"

namespace dessin {

// A permutation of {1..N} in one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int x) const { return images_[static_cast<std::size_t>(x) - 1]; }
    const std::vector<int>& images() const { return images_; }

    // Function composition: (a * b)(x) = a(b(x)).
    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

// The standard N-cycle (1 2 ... N).
Permutation sigma0(int N);

struct CycleStats {
    int cycles = 0;
    int fixed_points = 0;
    std::vector<int> lengths;  // ascending
};

CycleStats cycle_counts(const Permutation& pi);

// True iff tau commutes with sigma0^n. Requires n | degree.
bool commutes_with_power(const Permutation& tau, int n);

// Parameters of an N-cycle in the centralizer of sigma0^n: an n-cycle omega
// on {1..n}, residue shifts u_2..u_n in [0, N/n), and a unit b coprime to
// N/n (b = 0 exactly when n = N).
struct CentralizerCycleData {
    Permutation omega;
    std::vector<int> shifts;  // u_2, ..., u_n; u_1 = 0 is implicit
    int unit = 0;             // b
};

// The N-cycle determined by the data; commutes with sigma0^n by
// construction. For n = 1 this is sigma0^b.
Permutation rho_from_data(const CentralizerCycleData& data, int N);

enum class CycleGenStrategy { Filter, Construct };

// All N-cycles commuting with sigma0^n, each exactly once. Filter sweeps
// the (N-1)! N-cycles; Construct enumerates the parameter space above.
std::vector<Permutation> centralizer_n_cycles(int N, int n, CycleGenStrategy strategy);

// Visits every N-cycle of S_N exactly once, written with start point 1.
void for_each_n_cycle(int N, const std::function<void(const Permutation&)>& fn);

// Conjugation-orbit counts of N-cycles tau passing a predicate on
// tau * sigma0, refined by automorphism order r = N / orbit size.
struct PairClassification {
    std::map<std::int64_t, BigInt> per_r;
    BigInt total;
};

PairClassification classify_pairs_by_faces(int N, int faces);
PairClassification classify_pairs_by_deg2(int N, int deg2_faces);

// |{N-cycles tau in C(sigma0^n) : tau*sigma0 has L cycles}| by brute force.
BigInt oracle_T_centralizer(int N, int L, int n);

// Same with "exactly h fixed points" in place of the cycle count.
BigInt oracle_V_centralizer(int N, int h, int n);

// Number of n-cycles w in S_n whose product with (1 2 ... n) has exactly
// m cycles.
BigInt oracle_R_m(int n, int m);

// Number of n-cycles w in S_n whose product with (1 2 ... n) fixes exactly
// j points.
BigInt oracle_sigma_fixed(int n, int j);

// Enumeration bound: DESSIN_BRUTE_CAP if set (hard cap 11), else 9.
int brute_force_cap();

}  // namespace dessin
