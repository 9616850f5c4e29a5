#ifndef CIRCNUT_THEORY_HPP
#define CIRCNUT_THEORY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "circnut/circulant.hpp"

namespace circnut::theory {

// Closed-form criteria for circulant nut graphs. Each predicate is checked in
// the test suite against both the cyclotomic verdict and the matrix oracle.

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Necessary conditions for a vertex-transitive nut graph of order n and
/// degree d: d = 0 (mod 4), n even, n >= d + 4; or d = 2 (mod 4),
/// n = 0 (mod 4), n >= d + 6.
///
/// Not sufficient for circulants: (12, 8) is feasible here, yet no 8-regular
/// circulant nut graph of order 12 exists (see lemma7_exhaustive).
bool theorem1_feasible(std::uint64_t n, std::uint64_t d);

/// Circ(n, {x, ..., x+2t-1}) is nut iff gcd(n/2, t) = gcd(n/2, 2x+2t-1) = 1.
/// Requires n even and n >= 2x + 4t.
bool theorem3_predicate(std::uint64_t n, std::uint64_t x, std::uint64_t t);

/// Circ(n, {1, ..., d/2}) is nut iff gcd(n, d/2+1) = 1 and gcd(n/2, d/4) = 1.
/// Requires n even, d = 0 (mod 4), n >= d + 4.
bool theorem2_predicate(std::uint64_t n, std::uint64_t d);

/// t = 1 (mod 10) with 5 | n, or t = 15 (mod 18) with 9 | n. When true,
/// Circ(n, S_t) is not nut. Requires t odd, n even, n >= 4t + 4.
bool lemma5_predicate(std::uint64_t t, std::uint64_t n);

/// t odd, t >= 3, t != 1 (mod 10), t != 15 (mod 18): S_t is universal.
bool theorem6_applicable(std::uint64_t t);

/// Smallest element of {4t+3, 3t+2, 3t+1, 2t+2, 2t+1, t+2, t+1, 0} whose
/// residue modulo p occurs exactly once among the eight residues.
/// Requires t odd >= 3, t != 1 (mod 10), p prime >= 5.
std::optional<std::uint64_t> claim1_unique_remainder(std::uint64_t t, std::uint64_t p);

inline constexpr std::uint64_t kLemma7MaxT = 6;

/// True iff no balanced 2t-subset of {1, ..., 2t+1} gives a nut graph of
/// order 4t + 4 (checked with the matrix oracle). Requires t even, t >= 2,
/// and t <= 6 unless allow_large is set.
bool lemma7_exhaustive(std::uint64_t t, bool allow_large = false);

/// Consecutive generator set {x, ..., x+2t-1} giving a 4t-regular nut graph
/// of order n, when gcd(n/2, t) = 1 and n >= 4t + 4 is even:
/// x = n/4 - t for n = 0 (mod 4), x = (n-2)/4 - t for n = 2 (mod 4).
/// Returns nullopt when the construction does not apply.
std::optional<GeneratorSet> consecutive_nut_generator(std::uint64_t n, std::uint64_t t);

}  // namespace circnut::theory

#endif  // CIRCNUT_THEORY_HPP
