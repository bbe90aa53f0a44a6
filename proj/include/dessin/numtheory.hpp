#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dessin {

// All counts are exact: unbounded integers and reduced rationals throughout.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Raised when a value that must be a non-negative integer by a counting
// argument comes out fractional or negative. Must never fire on valid input.
struct IntegralityError : std::logic_error {
    using std::logic_error::logic_error;
};

// Positive divisors of m, ascending. Throws std::invalid_argument for m < 1.
std::vector<std::int64_t> divisors(std::int64_t m);

// Distinct prime divisors of m, ascending; empty for m = 1.
std::vector<std::int64_t> prime_divisors(std::int64_t m);

// Moebius function, in {-1, 0, 1}.
int moebius(std::int64_t m);

// Euler totient.
std::int64_t euler_phi(std::int64_t m);

// Elementary symmetric polynomial s_m evaluated at (1, 2, ..., n).
// Requires 0 <= m <= n. Rows are memoized per n.
BigInt elem_sym(std::int64_t n, std::int64_t m);

// (1 - (-1)^m) * s_m(1..n): zero for even m, twice elem_sym for odd m.
BigInt f_coeff(std::int64_t n, std::int64_t m);

// Binomial coefficient; returns 0 when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

// n! as a BigInt. Requires n >= 0.
BigInt factorial(std::int64_t n);

}  // namespace dessin
