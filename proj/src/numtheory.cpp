#include "circnut/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace circnut::nt {

namespace {

void require_positive(std::uint64_t n, const char* what) {
    if (n == 0) {
        throw std::invalid_argument(std::string(what) + ": argument must be positive");
    }
}

std::vector<std::uint64_t> small_primes_upto(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Segmented totient sieve over [3, limit], collecting b with phi(b) <= degree.
std::vector<std::uint64_t> scan_totients(std::uint64_t degree, std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 3) return out;
    const auto primes = small_primes_upto(isqrt(limit));
    constexpr std::uint64_t kBlock = 1u << 18;
    std::vector<std::uint64_t> phi(kBlock), rest(kBlock);
    for (std::uint64_t lo = 3; lo <= limit; lo += kBlock) {
        const std::uint64_t hi = std::min(limit, lo + kBlock - 1);
        const std::uint64_t len = hi - lo + 1;
        for (std::uint64_t i = 0; i < len; ++i) phi[i] = rest[i] = lo + i;
        for (std::uint64_t p : primes) {
            if (p * p > hi) break;
            for (std::uint64_t m = ((lo + p - 1) / p) * p; m <= hi; m += p) {
                const std::uint64_t i = m - lo;
                phi[i] -= phi[i] / p;
                while (rest[i] % p == 0) rest[i] /= p;
            }
        }
        for (std::uint64_t i = 0; i < len; ++i) {
            if (rest[i] > 1) phi[i] -= phi[i] / rest[i];
            const std::uint64_t b = lo + i;
            if (2 * phi[i] * phi[i] < b) {
                throw std::logic_error("totient lower bound sqrt(b/2) violated at b=" +
                                       std::to_string(b));
            }
            if (phi[i] <= degree) out.push_back(b);
        }
    }
    return out;
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Factorization factorize(std::uint64_t n) {
    require_positive(n, "factorize");
    Factorization f;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.push_back({p, e});
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    require_positive(n, "divisors");
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

std::uint64_t euler_phi(std::uint64_t n) {
    require_positive(n, "euler_phi");
    std::uint64_t phi = n;
    for (const auto& [p, e] : factorize(n)) phi -= phi / p;
    return phi;
}

int mobius(std::uint64_t n) {
    require_positive(n, "mobius");
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t eq7_bound(std::uint64_t degree) {
    if (degree < 2) throw std::invalid_argument("eq7_bound: degree must be at least 2");
    constexpr double kEulerGamma = 0.57721566490153286061;
    constexpr double kRelTol = 1e-12;
    const double egamma = std::exp(kEulerGamma);
    const double d = static_cast<double>(degree);
    std::uint64_t best = 3;
    const std::uint64_t limit = 2 * degree * degree;
    for (std::uint64_t b = 3; b <= limit; ++b) {
        const double ll = std::log(std::log(static_cast<double>(b)));
        const double f = d * (egamma * ll + 2.51 / ll);
        const double bd = static_cast<double>(b);
        if (bd < f || (bd - f) <= kRelTol * f) best = b;
    }
    return best;
}

const std::vector<std::uint64_t>& totient_bounded(std::uint64_t degree) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::vector<std::uint64_t>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(degree); it != cache.end()) return it->second;
    }
    auto list = scan_totients(degree, 2 * degree * degree);
    std::lock_guard lock(mu);
    return cache.try_emplace(degree, std::move(list)).first->second;
}

}  // namespace circnut::nt
