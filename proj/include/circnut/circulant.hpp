#ifndef CIRCNUT_CIRCULANT_HPP
#define CIRCNUT_CIRCULANT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circnut/polynomial.hpp"

namespace circnut {

/// Strictly increasing, nonempty set of positive step sizes.
class GeneratorSet {
public:
    /// Sorts the input. Throws std::invalid_argument on empty input, zero
    /// elements or duplicates.
    explicit GeneratorSet(std::vector<std::uint64_t> elements);

    /// {lo, ..., hi}
    static GeneratorSet range(std::uint64_t lo, std::uint64_t hi);
    /// {1, ..., hi} with the listed elements removed.
    static GeneratorSet range_without(std::uint64_t hi, std::span<const std::uint64_t> removed);
    /// S_t = {1, ..., 2t+1} \ {t}
    static GeneratorSet almost_consecutive(std::uint64_t t);

    /// Parses "1,2,4" (comma-separated positive integers, no duplicates).
    static GeneratorSet parse(std::string_view text);

    const std::vector<std::uint64_t>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    std::uint64_t max() const { return elements_.back(); }
    bool contains(std::uint64_t s) const;

    std::size_t odd_count() const;
    std::size_t even_count() const { return size() - odd_count(); }
    bool balanced() const { return odd_count() == even_count(); }

    std::string to_string() const;

    auto operator<=>(const GeneratorSet&) const = default;

private:
    std::vector<std::uint64_t> elements_;
};

enum class NutReason {
    Nut,
    OddOrder,
    HalfOrderGenerator,
    UnbalancedParity,
    CyclotomicWitness,
    GeneratorTooLarge,
};

std::string_view to_string(NutReason reason);

struct NutVerdict {
    bool is_nut = false;
    NutReason reason = NutReason::Nut;
    /// Set only for CyclotomicWitness: b >= 3, b | n, Phi_b divides rep_poly.
    std::optional<std::uint64_t> witness_b;
};

struct UniversalityReport {
    bool universal = false;
    bool balanced = false;
    std::uint64_t degree_bound = 0;  // 2 max(S)
    std::uint64_t min_order = 0;     // 2 max(S) + 2
    std::vector<std::uint64_t> scanned_b;
    std::vector<std::uint64_t> failing_b;
};

/// Thrown when a generator exceeds half the order.
class GeneratorTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// y^{max S} P(y) = sum over s of (y^{max S + s} + y^{max S - s}).
IntPoly pstar(const GeneratorSet& s);

/// (y - 1) P*_{S_t}(y), the 8-term polynomial with exponents
/// 4t+3, 3t+2, 3t+1, 2t+2, 2t+1, t+2, t+1, 0. Requires t >= 2.
IntPoly q_poly(std::uint64_t t);

/// Order-n polynomial whose value at omega^j is the j-th eigenvalue:
/// sum over s < n/2 of (y^s + y^{n-s}), plus a single y^{n/2} when n/2 is in S.
IntPoly rep_poly(const GeneratorSet& s, std::uint64_t n);

/// Nut verdict for Circ(n, S) via cyclotomic divisibility.
///
/// The eigenvalues P(omega^j) for j in 1 .. n/2-1 are exactly the values of
/// P at the primitive b-th roots of unity over the divisors b >= 3 of n
/// (take j = n/b and its multiples coprime to b), so scanning divisors of n
/// is equivalent to scanning j.
NutVerdict is_nut(const GeneratorSet& s, std::uint64_t n);

/// Multiplicity of eigenvalue 0 of the adjacency matrix of Circ(n, S):
/// the sum of phi(b) over divisors b >= 2 of n with Phi_b | rep_poly.
std::uint64_t zero_multiplicity(const GeneratorSet& s, std::uint64_t n);

struct UniversalityOptions {
    /// Stop scanning at the first failing b (failing_b then has one entry).
    bool stop_at_first_failure = false;
};

/// Decides whether Circ(n, S) is a nut graph for every even n >= 2 max(S) + 2.
///
/// A failing b >= 3 divides infinitely many admissible orders, so every
/// failure is genuine. Roots of P* that are not roots of unity never occur
/// as circulant eigenvalues and are irrelevant.
UniversalityReport is_universal(const GeneratorSet& s, UniversalityOptions opts = {});

/// (b, P*(y) mod Phi_b) for every b >= 3 with phi(b) <= 2 max(S).
std::vector<std::pair<std::uint64_t, IntPoly>> pstar_remainder_table(const GeneratorSet& s);

/// For r = 0 .. b-1: the remainder of (Q_{S_t} folded modulo y^b - 1) by
/// Phi_b, for any t = r (mod b). Checks that two representatives agree.
/// Throws std::invalid_argument for b < 3.
std::vector<std::pair<std::uint64_t, IntPoly>> appendix_table(std::uint64_t b);

/// The moduli whose remainder tables appear in the published appendix.
inline constexpr std::uint64_t kAppendixModuli[] = {3, 5, 6, 7, 10, 14, 15, 21, 30, 42};

}  // namespace circnut

#endif  // CIRCNUT_CIRCULANT_HPP
