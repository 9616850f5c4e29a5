#ifndef CIRCNUT_SEARCH_HPP
#define CIRCNUT_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circnut/circulant.hpp"

namespace circnut::search {

/// {1, ..., 2t+1} \ {p} for odd t, or {1, ..., 2t+2} \ {q, r} for even t,
/// together with its universality certificate.
struct UniversalCandidate {
    std::uint64_t t = 0;
    std::vector<std::uint64_t> removed;
    GeneratorSet set;
    UniversalityReport report;
};

enum class SearchMode { First, All };

/// Smallest odd p such that {1, ..., 2t+1} \ {p} is universal. Requires t
/// odd, t >= 3. nullopt would be a counterexample to the odd-t conjecture.
std::optional<UniversalCandidate> find_pt(std::uint64_t t);

/// Pairs q < r of opposite parity, in lexicographic order, such that
/// {1, ..., 2t+2} \ {q, r} is universal. Requires t even, t >= 4.
std::vector<UniversalCandidate> find_qt_rt(std::uint64_t t, SearchMode mode);

enum class RowKind {
    AlmostConsecutive,  // S_t itself
    OddReplacement,     // {1, ..., 2t+1} \ {p}, p != t
    EvenPair,           // {1, ..., 2t+2} \ {q, r}
    NotFound,
};

std::string to_string(RowKind kind);

struct ScanRecord {
    std::uint64_t t = 0;
    bool theorem6_applicable = false;
    RowKind kind = RowKind::NotFound;
    std::optional<UniversalCandidate> candidate;
};

/// Per-t summaries for t_lo <= t <= t_hi. Work is spread over
/// `parallel_width` threads; `on_record`, when given, is called serially in
/// ascending t as soon as each prefix of the range completes. The returned
/// content does not depend on the width.
std::vector<ScanRecord> scan_range(std::uint64_t t_lo, std::uint64_t t_hi, unsigned parallel_width,
                                   const std::function<void(const ScanRecord&)>& on_record = {});

/// Single row of the generator table, e.g. "11 & $\{1,\dots,23\}\setminus\{5\}$ \\".
std::string latex_row(const ScanRecord& rec);

}  // namespace circnut::search

#endif  // CIRCNUT_SEARCH_HPP
