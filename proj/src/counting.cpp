#include "dessin/counting.hpp"

#include <cassert>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "dessin/partitions.hpp"

namespace dessin {

namespace {

BigInt int_pow(BigInt base, std::int64_t e) {
    BigInt result = 1;  // 0^0 = 1 by convention
    for (std::int64_t k = 0; k < e; ++k) result *= base;
    return result;
}

BigRat rat_pow(const BigRat& base, std::int64_t e) {
    BigRat result = 1;
    for (std::int64_t k = 0; k < e; ++k) result *= base;
    return result;
}

BigInt require_count(const BigRat& value, const char* who) {
    if (boost::multiprecision::denominator(value) != 1) {
        throw IntegralityError(std::string(who) + ": non-integer result");
    }
    BigInt n = boost::multiprecision::numerator(value);
    if (n < 0) {
        throw IntegralityError(std::string(who) + ": negative count");
    }
    return n;
}

bool is_prime(std::int64_t m) {
    if (m < 2) return false;
    auto ps = prime_divisors(m);
    return ps.size() == 1 && ps[0] == m;
}

}  // namespace

BigInt psi(std::int64_t N, std::int64_t L, std::int64_t n) {
    if (N < 1 || n < 1 || N % n != 0) {
        throw std::invalid_argument("psi: n must divide N");
    }
    if (L < 1 || L > N) throw std::invalid_argument("psi: need 1 <= L <= N");

    static std::mutex mu;
    static std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, BigInt> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({N, L, n});
        if (it != memo.end()) return it->second;
    }

    const auto primes = prime_divisors(N / n);
    BigRat sum = 0;
    for (const auto& lambda : enumerate_lambda(N, L, n)) {
        const std::int64_t m = lambda.length();
        if (m > n) continue;
        const BigInt f = f_coeff(n, n - m + 1);
        if (f == 0) continue;
        BigRat term = b_coeff(lambda);
        for (std::int64_t p : primes) term *= a_factor(lambda, p);
        sum += BigRat(f) * term;
    }
    const BigRat prefactor(int_pow(N, n), int_pow(n, n + 1) * (n + 1));
    BigInt result = require_count(prefactor * sum, "psi");

    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_tuple(N, L, n), result);
    return result;
}

BigInt sigma_j(std::int64_t n, std::int64_t j) {
    if (n < 1) throw std::invalid_argument("sigma_j: n must be >= 1");
    if (j < 0 || j > n) throw std::invalid_argument("sigma_j: need 0 <= j <= n");
    if (j == 0) return factorial(n - 1) - 1;

    static std::mutex mu;
    static std::map<std::pair<std::int64_t, std::int64_t>, BigInt> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({n, j});
        if (it != memo.end()) return it->second;
    }

    BigRat inner = 0;
    for (std::int64_t m = 0; m <= n - j - 1; ++m) {
        BigRat term(1, factorial(m) * (j + m) * (n - j - m));
        inner += (m % 2 == 0) ? term : -term;
    }
    BigRat value = BigRat(factorial(n), factorial(j - 1)) * inner;
    BigInt tail = binomial(n - 1, j - 1);
    value += ((n - j) % 2 == 0) ? BigRat(tail) : BigRat(-tail);
    value -= 1;
    if (boost::multiprecision::denominator(value) != 1) {
        throw IntegralityError("sigma_j: non-integer result");
    }
    BigInt result = boost::multiprecision::numerator(value);
    assert(j < n || result == 0);  // trailing terms cancel at j = n

    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_pair(n, j), result);
    return result;
}

BigInt upsilon(std::int64_t N, std::int64_t h, std::int64_t n) {
    if (N < 1 || n < 1 || N % n != 0) {
        throw std::invalid_argument("upsilon: n must divide N");
    }
    if (h < 0 || h > N) throw std::invalid_argument("upsilon: need 0 <= h <= N");
    const std::int64_t q = N / n;
    if (h % q != 0) {
        throw DivisorConstraintError("upsilon: N/n must divide h");
    }
    const std::int64_t k = h * n / N;
    const std::int64_t phi = euler_phi(q);
    const BigRat ratio(N, n);
    const BigRat ratio_minus_one(N - n, n);

    BigRat sum = 0;
    for (std::int64_t m = k; m <= n - 1; ++m) {
        BigRat term = BigRat(binomial(m, k)) * phi;
        term *= rat_pow(ratio, n - m - 1);
        term *= rat_pow(ratio_minus_one, m - k);
        term *= BigRat(sigma_j(n, m) - sigma_j(n, m + 1));
        sum += term;
    }
    const std::int64_t np = n - k;
    const BigRat alt = (np % 2 == 0) ? BigRat(1) : BigRat(-1);
    BigRat boundary = BigRat(phi * n, N) * (rat_pow(ratio_minus_one, np) - alt) + alt;
    sum += BigRat(binomial(n, k)) * boundary;
    return require_count(sum, "upsilon");
}

BigInt count_d1_r(std::int64_t N, std::int64_t L, std::int64_t r) {
    if (r < 1 || N % r != 0) throw std::invalid_argument("count_d1_r: r must divide N");
    BigRat sum = 0;
    for (std::int64_t n : divisors(N / r)) {
        sum += BigRat(moebius(N / (n * r))) * BigRat(psi(N, L, n));
    }
    return require_count(BigRat(r, N) * sum, "count_d1_r");
}

ClassCountReport count_d1(std::int64_t N, std::int64_t L) {
    ClassCountReport report;
    report.edges = N;
    report.parameter = L;
    report.total = 0;
    for (std::int64_t r : divisors(N)) {
        BigInt c = count_d1_r(N, L, r);
        report.total += c;
        report.per_r.emplace(r, std::move(c));
    }
    // Independent total through the double-sum form of the theorem.
    BigRat alt_total = 0;
    for (std::int64_t u : divisors(N)) {
        BigRat inner = 0;
        for (std::int64_t n : divisors(u)) {
            inner += BigRat(moebius(u / n)) * BigRat(psi(N, L, n));
        }
        alt_total += inner / u;
    }
    if (BigRat(report.total) != alt_total) {
        throw IntegralityError("count_d1: double-sum total disagrees");
    }
    return report;
}

BigInt count_d2_r(std::int64_t N, std::int64_t h, std::int64_t r) {
    if (r < 1 || N % r != 0) throw std::invalid_argument("count_d2_r: r must divide N");
    if (h < 0 || h > N) throw std::invalid_argument("count_d2_r: need 0 <= h <= N");
    BigRat sum = 0;
    for (std::int64_t n : divisors(N / r)) {
        if (h % (N / n) != 0) continue;  // restrict to D*
        sum += BigRat(moebius(N / (n * r))) * BigRat(upsilon(N, h, n));
    }
    return require_count(BigRat(r, N) * sum, "count_d2_r");
}

ClassCountReport count_d2(std::int64_t N, std::int64_t h) {
    ClassCountReport report;
    report.edges = N;
    report.parameter = h;
    report.total = 0;
    for (std::int64_t r : divisors(N)) {
        BigInt c = count_d2_r(N, h, r);
        report.total += c;
        report.per_r.emplace(r, std::move(c));
    }
    return report;
}

BigInt count_dual_d1_r(std::int64_t N, std::int64_t L, std::int64_t r) {
    return count_d1_r(N, L, r);
}

BigInt count_dual_d2_r(std::int64_t N, std::int64_t h, std::int64_t r) {
    return count_d2_r(N, h, r);
}

std::int64_t genus(std::int64_t N, std::int64_t L) {
    if (L < 1 || L > N) throw std::invalid_argument("genus: need 1 <= L <= N");
    if ((N - L) % 2 != 0) {
        throw ParityError("genus: no two-vertex dessin when L and N differ in parity");
    }
    return (N - L) / 2;
}

namespace {

std::string str(const BigInt& v) { return v.str(); }

std::string str(const std::map<std::int64_t, BigInt>& m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [r, c] : m) {
        if (!first) os << ", ";
        os << r << ":" << c;
        first = false;
    }
    os << "}";
    return os.str();
}

void add_check(std::vector<IdentityCheck>& out, std::string name, const BigInt& lhs,
               const BigInt& rhs) {
    out.push_back({std::move(name), lhs == rhs, str(lhs), str(rhs)});
}

// Closed form for one face and odd edge count.
BigInt one_face_closed_form(std::int64_t N, std::int64_t r) {
    BigRat sum = 0;
    for (std::int64_t n : divisors(N / r)) {
        BigRat term(moebius(N / (n * r)) * int_pow(N, n - 1) * factorial(n - 1),
                    int_pow(n, n) * (n + 1));
        for (std::int64_t p : prime_divisors(N / n)) term *= BigRat(p - 2, p);
        sum += term;
    }
    return require_count(BigRat(2 * r) * sum, "one_face_closed_form");
}

// Closed form for two faces and even edge count.
BigInt two_face_closed_form(std::int64_t N, std::int64_t r) {
    BigRat odd_sum = 0, even_sum = 0;
    for (std::int64_t n : divisors(N / r)) {
        BigRat base(moebius(N / (n * r)) * int_pow(N, n - 1) * factorial(n - 1),
                    int_pow(n, n) * (n + 1));
        if (n % 2 == 1) {
            for (std::int64_t p : prime_divisors(N / n)) {
                if (p != 2) base *= BigRat(p - 2, p);
            }
            odd_sum += base;
        } else {
            BigRat harmonic = 0;
            for (std::int64_t j = 1; j <= n; ++j) harmonic += BigRat(1, j);
            base *= harmonic;
            for (std::int64_t p : prime_divisors(N / n)) {
                base *= BigRat(p * p - 3 * p + 3, p * p);
            }
            even_sum += base;
        }
    }
    const std::int64_t front = (N / 2) % 2 == 0 ? 2 : 4;  // 3 - (-1)^(N/2)
    return require_count(BigRat(front * r, 4) * odd_sum + BigRat(2 * r) * even_sum,
                         "two_face_closed_form");
}

}  // namespace

std::vector<IdentityCheck> crosscheck_identities(std::int64_t N, std::int64_t L,
                                                 std::int64_t h) {
    std::vector<IdentityCheck> out;
    const bool parity_ok = (N - L) % 2 == 0;
    const bool prime_N = is_prime(N);

    if (!parity_ok) {
        add_check(out, "parity-vanishing: |D1| = 0", count_d1(N, L).total, 0);
    }
    if (L == N) {
        auto report = count_d1(N, L);
        std::map<std::int64_t, BigInt> expected;
        for (std::int64_t r : divisors(N)) expected.emplace(r, r == N ? 1 : 0);
        out.push_back({"faces-equal-edges: D1 concentrated at r = N",
                       report.per_r == expected && report.total == 1,
                       str(report.per_r), str(expected)});
    }
    if (L == 1 && N % 2 == 1) {
        for (std::int64_t r : divisors(N)) {
            add_check(out, "one-face closed form, r = " + std::to_string(r),
                      count_d1_r(N, L, r), one_face_closed_form(N, r));
        }
    }
    if (L == 2 && N % 2 == 0) {
        for (std::int64_t r : divisors(N)) {
            add_check(out, "two-face closed form, r = " + std::to_string(r),
                      count_d1_r(N, L, r), two_face_closed_form(N, r));
        }
    }
    if (prime_N && parity_ok) {
        if (L == 1) {
            BigRat lhs = BigRat(2, N) * (BigRat(factorial(N - 1), N + 1) + 1) - 1;
            add_check(out, "prime edges, one face: |D1,1|", count_d1_r(N, 1, 1),
                      require_count(lhs, "prime-one-face"));
            add_check(out, "prime edges, one face: |D1,N| = N - 2",
                      count_d1_r(N, 1, N), BigInt(N - 2));
        } else if (L < N) {
            BigRat lhs(2 * elem_sym(N, N - L + 1), BigInt(N) * N * (N + 1));
            add_check(out, "prime edges, middle faces: |D1,1|", count_d1_r(N, L, 1),
                      require_count(lhs, "prime-middle-faces"));
            add_check(out, "prime edges, middle faces: |D1,N| = 0",
                      count_d1_r(N, L, N), 0);
        } else {
            add_check(out, "prime edges, L = N: |D1,1| = 0", count_d1_r(N, N, 1), 0);
            add_check(out, "prime edges, L = N: |D1,N| = 1", count_d1_r(N, N, N), 1);
        }
    }
    if (h >= 1 && h < N && std::gcd(h, N) == 1) {
        BigInt rhs = require_count(BigRat(sigma_j(N, h) - sigma_j(N, h + 1), N),
                                   "coprime-deg2");
        auto report = count_d2(N, h);
        add_check(out, "deg-2 count coprime to N: total", report.total, rhs);
        add_check(out, "deg-2 count coprime to N: |D2,1|", report.per_r.at(1), rhs);
    }
    if (prime_N && h < N) {
        if (h == 0) {
            BigRat lhs = BigRat(factorial(N - 1) + 2 + ((N % 2 == 0) ? 1 : -1), N);
            for (std::int64_t m = 1; m <= N - 1; ++m) {
                BigRat term(factorial(N - 1), factorial(m) * (N - m));
                lhs += (m % 2 == 0) ? term : -term;
            }
            lhs -= 1;
            add_check(out, "prime edges, h = 0: |D2,1|", count_d2_r(N, 0, 1),
                      require_count(lhs, "prime-deg2-zero"));
            add_check(out, "prime edges, h = 0: |D2,N| = N - 2",
                      count_d2_r(N, 0, N), BigInt(N - 2));
        } else {
            BigInt rhs = require_count(BigRat(sigma_j(N, h) - sigma_j(N, h + 1), N),
                                       "prime-deg2");
            add_check(out, "prime edges, h > 0: |D2,1|", count_d2_r(N, h, 1), rhs);
            add_check(out, "prime edges, h > 0: |D2,N| = 0", count_d2_r(N, h, N), 0);
        }
    }
    if (h == N - 1 || h == N - 2) {
        add_check(out, "near-saturated deg-2 faces: |D2| = 0", count_d2(N, h).total, 0);
    }
    return out;
}

}  // namespace dessin
