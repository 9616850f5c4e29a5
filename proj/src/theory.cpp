#include "circnut/theory.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "circnut/numtheory.hpp"
#include "circnut/oracle.hpp"

namespace circnut::theory {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw PreconditionError(msg);
}

}  // namespace

bool theorem1_feasible(std::uint64_t n, std::uint64_t d) {
    if (d % 4 == 0) return n % 2 == 0 && n >= d + 4;
    if (d % 4 == 2) return n % 4 == 0 && n >= d + 6;
    return false;
}

bool theorem3_predicate(std::uint64_t n, std::uint64_t x, std::uint64_t t) {
    require(x >= 1 && t >= 1, "theorem3: x and t must be positive");
    require(n % 2 == 0, "theorem3: n must be even");
    require(n >= 2 * x + 4 * t, "theorem3: need n >= 2x + 4t");
    const std::uint64_t half = n / 2;
    return nt::gcd(half, t) == 1 && nt::gcd(half, 2 * x + 2 * t - 1) == 1;
}

bool theorem2_predicate(std::uint64_t n, std::uint64_t d) {
    require(d >= 4 && d % 4 == 0, "theorem2: d must be a positive multiple of 4");
    require(n % 2 == 0, "theorem2: n must be even");
    require(n >= d + 4, "theorem2: need n >= d + 4");
    return nt::gcd(n, d / 2 + 1) == 1 && nt::gcd(n / 2, d / 4) == 1;
}

bool lemma5_predicate(std::uint64_t t, std::uint64_t n) {
    require(t % 2 == 1, "lemma5: t must be odd");
    require(n % 2 == 0, "lemma5: n must be even");
    require(n >= 4 * t + 4, "lemma5: need n >= 4t + 4");
    return (t % 10 == 1 && n % 5 == 0) || (t % 18 == 15 && n % 9 == 0);
}

bool theorem6_applicable(std::uint64_t t) { return t % 2 == 1 && t >= 3 && t % 10 != 1 && t % 18 != 15; }

std::optional<std::uint64_t> claim1_unique_remainder(std::uint64_t t, std::uint64_t p) {
    require(t >= 3 && t % 2 == 1, "claim1: t must be odd and at least 3");
    require(t % 10 != 1, "claim1: t must not be 1 mod 10");
    require(p >= 5 && nt::is_prime(p), "claim1: p must be a prime at least 5");
    const std::array<std::uint64_t, 8> exps = {4 * t + 3, 3 * t + 2, 3 * t + 1, 2 * t + 2,
                                               2 * t + 1, t + 2,     t + 1,     0};
    std::optional<std::uint64_t> best;
    for (std::uint64_t e : exps) {
        const auto hits = std::count_if(exps.begin(), exps.end(), [&](std::uint64_t f) { return f % p == e % p; });
        if (hits == 1 && (!best || e < *best)) best = e;
    }
    return best;
}

bool lemma7_exhaustive(std::uint64_t t, bool allow_large) {
    require(t >= 2 && t % 2 == 0, "lemma7: t must be even and at least 2");
    require(allow_large || t <= kLemma7MaxT, "lemma7: t above " + std::to_string(kLemma7MaxT) +
                                                 " needs an explicit override");
    const std::uint64_t n = 4 * t + 4;
    for (const auto& s : oracle::enumerate_balanced(n, t)) {
        if (oracle::oracle_is_nut(n, s)) return false;
    }
    return true;
}

std::optional<GeneratorSet> consecutive_nut_generator(std::uint64_t n, std::uint64_t t) {
    if (t == 0 || n % 2 == 1 || n < 4 * t + 4 || nt::gcd(n / 2, t) != 1) return std::nullopt;
    const std::uint64_t x = n % 4 == 0 ? n / 4 - t : (n - 2) / 4 - t;
    if (x == 0) return std::nullopt;
    return GeneratorSet::range(x, x + 2 * t - 1);
}

}  // namespace circnut::theory
