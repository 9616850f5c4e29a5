#ifndef CIRCNUT_NUMTHEORY_HPP
#define CIRCNUT_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

namespace circnut::nt {

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;

    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization in ascending order of primes. Trial division only.
using Factorization = std::vector<PrimePower>;

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n);

/// Throws std::invalid_argument for n = 0.
Factorization factorize(std::uint64_t n);

/// All positive divisors of n, ascending. Throws for n = 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

int mobius(std::uint64_t n);

/// Largest b >= 3 with b < D (e^gamma log log b + 2.51 / log log b), scanning
/// b = 3 .. 2 D^2. Floating-point diagnostic only: values within a relative
/// band of 1e-12 of the threshold count as satisfying the inequality.
std::uint64_t eq7_bound(std::uint64_t degree);

/// Every b >= 3 with euler_phi(b) <= degree, ascending.
///
/// Exhaustive over 3 <= b <= 2 D^2, which is rigorous because
/// euler_phi(b) >= sqrt(b / 2) for all b >= 3 (checked for every scanned b).
/// Results are memoized per degree; the cache is safe for concurrent use.
const std::vector<std::uint64_t>& totient_bounded(std::uint64_t degree);

}  // namespace circnut::nt

#endif  // CIRCNUT_NUMTHEORY_HPP
