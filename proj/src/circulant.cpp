#include "circnut/circulant.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "circnut/cyclotomic.hpp"
#include "circnut/numtheory.hpp"

namespace circnut {

GeneratorSet::GeneratorSet(std::vector<std::uint64_t> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("generator set must be nonempty");
    std::sort(elements_.begin(), elements_.end());
    if (elements_.front() == 0) throw std::invalid_argument("generators must be positive");
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
        throw std::invalid_argument("generator set contains duplicates");
    }
}

GeneratorSet GeneratorSet::range(std::uint64_t lo, std::uint64_t hi) {
    if (lo == 0 || lo > hi) throw std::invalid_argument("range: need 1 <= lo <= hi");
    std::vector<std::uint64_t> v;
    for (std::uint64_t s = lo; s <= hi; ++s) v.push_back(s);
    return GeneratorSet(std::move(v));
}

GeneratorSet GeneratorSet::range_without(std::uint64_t hi, std::span<const std::uint64_t> removed) {
    std::vector<std::uint64_t> v;
    for (std::uint64_t s = 1; s <= hi; ++s) {
        if (std::find(removed.begin(), removed.end(), s) == removed.end()) v.push_back(s);
    }
    return GeneratorSet(std::move(v));
}

GeneratorSet GeneratorSet::almost_consecutive(std::uint64_t t) {
    if (t < 1) throw std::invalid_argument("almost_consecutive: t must be positive");
    const std::uint64_t removed[] = {t};
    return range_without(2 * t + 1, removed);
}

GeneratorSet GeneratorSet::parse(std::string_view text) {
    std::vector<std::uint64_t> v;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        std::uint64_t value = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size() || value == 0) {
            throw std::invalid_argument("malformed generator set '" + std::string(text) +
                                        "': expected comma-separated positive integers");
        }
        v.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return GeneratorSet(std::move(v));
}

bool GeneratorSet::contains(std::uint64_t s) const {
    return std::binary_search(elements_.begin(), elements_.end(), s);
}

std::size_t GeneratorSet::odd_count() const {
    return static_cast<std::size_t>(
        std::count_if(elements_.begin(), elements_.end(), [](std::uint64_t s) { return s % 2 == 1; }));
}

std::string GeneratorSet::to_string() const {
    std::string out;
    for (std::uint64_t s : elements_) {
        if (!out.empty()) out += ',';
        out += std::to_string(s);
    }
    return out;
}

std::string_view to_string(NutReason reason) {
    switch (reason) {
        case NutReason::Nut: return "Nut";
        case NutReason::OddOrder: return "OddOrder";
        case NutReason::HalfOrderGenerator: return "HalfOrderGenerator";
        case NutReason::UnbalancedParity: return "UnbalancedParity";
        case NutReason::CyclotomicWitness: return "CyclotomicWitness";
        case NutReason::GeneratorTooLarge: return "GeneratorTooLarge";
    }
    return "?";
}

IntPoly pstar(const GeneratorSet& s) {
    const std::uint64_t m = s.max();
    std::vector<Integer> c(2 * m + 1);
    for (std::uint64_t e : s.elements()) {
        c[m + e] += 1;
        c[m - e] += 1;
    }
    return IntPoly(std::move(c));
}

IntPoly q_poly(std::uint64_t t) {
    if (t < 2) throw std::invalid_argument("q_poly: t must be at least 2");
    std::vector<Integer> c(4 * t + 4);
    c[4 * t + 3] += 1;
    c[3 * t + 2] -= 1;
    c[3 * t + 1] += 1;
    c[2 * t + 2] -= 1;
    c[2 * t + 1] += 1;
    c[t + 2] -= 1;
    c[t + 1] += 1;
    c[0] -= 1;
    return IntPoly(std::move(c));
}

IntPoly rep_poly(const GeneratorSet& s, std::uint64_t n) {
    if (2 * s.max() > n) {
        throw GeneratorTooLarge("generator " + std::to_string(s.max()) + " exceeds half the order " +
                                std::to_string(n));
    }
    std::vector<Integer> c(n);
    for (std::uint64_t e : s.elements()) {
        if (2 * e == n) {
            c[e] += 1;
        } else {
            c[e] += 1;
            c[n - e] += 1;
        }
    }
    return IntPoly(std::move(c));
}

NutVerdict is_nut(const GeneratorSet& s, std::uint64_t n) {
    if (2 * s.max() > n) return {false, NutReason::GeneratorTooLarge, std::nullopt};
    if (n % 2 == 1) return {false, NutReason::OddOrder, std::nullopt};
    if (s.contains(n / 2)) return {false, NutReason::HalfOrderGenerator, std::nullopt};
    if (!s.balanced()) return {false, NutReason::UnbalancedParity, std::nullopt};
    const IntPoly p = rep_poly(s, n);
    for (std::uint64_t b : nt::divisors(n)) {
        if (b < 3) continue;
        if (phi_divides(b, p)) return {false, NutReason::CyclotomicWitness, b};
    }
    return {true, NutReason::Nut, std::nullopt};
}

std::uint64_t zero_multiplicity(const GeneratorSet& s, std::uint64_t n) {
    const IntPoly p = rep_poly(s, n);
    std::uint64_t total = 0;
    for (std::uint64_t b : nt::divisors(n)) {
        if (b >= 2 && phi_divides(b, p)) total += nt::euler_phi(b);
    }
    return total;
}

UniversalityReport is_universal(const GeneratorSet& s, UniversalityOptions opts) {
    UniversalityReport report;
    report.balanced = s.balanced();
    report.degree_bound = 2 * s.max();
    report.min_order = 2 * s.max() + 2;
    const IntPoly p = pstar(s);
    for (std::uint64_t b : nt::totient_bounded(report.degree_bound)) {
        report.scanned_b.push_back(b);
        if (phi_divides(b, p)) {
            report.failing_b.push_back(b);
            if (opts.stop_at_first_failure) break;
        }
    }
    report.universal = report.balanced && report.failing_b.empty();
    return report;
}

std::vector<std::pair<std::uint64_t, IntPoly>> pstar_remainder_table(const GeneratorSet& s) {
    const IntPoly p = pstar(s);
    std::vector<std::pair<std::uint64_t, IntPoly>> rows;
    for (std::uint64_t b : nt::totient_bounded(2 * s.max())) {
        rows.emplace_back(b, remainder(p, cyclotomic(b)));
    }
    return rows;
}

std::vector<std::pair<std::uint64_t, IntPoly>> appendix_table(std::uint64_t b) {
    if (b < 3) throw std::invalid_argument("appendix_table: b must be at least 3");
    const IntPoly& phi = cyclotomic(b);
    std::vector<std::pair<std::uint64_t, IntPoly>> rows;
    for (std::uint64_t r = 0; r < b; ++r) {
        const std::uint64_t t1 = r >= 2 ? r : r + b;
        const std::uint64_t t2 = t1 + b;
        IntPoly rem = remainder(reduce_cyclic(q_poly(t1), b), phi);
        if (!(rem == remainder(reduce_cyclic(q_poly(t2), b), phi))) {
            throw std::logic_error("appendix_table: remainder depends on representative of t mod " +
                                   std::to_string(b));
        }
        rows.emplace_back(r, std::move(rem));
    }
    return rows;
}

}  // namespace circnut
