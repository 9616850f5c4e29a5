#include "circnut/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "circnut/theory.hpp"

namespace circnut::search {

namespace {

// Cheap rejection first; the returned report is always the full scan.
std::optional<UniversalCandidate> certify(std::uint64_t t, std::vector<std::uint64_t> removed,
                                          std::uint64_t top) {
    GeneratorSet set = GeneratorSet::range_without(top, removed);
    if (!set.balanced()) throw std::logic_error("search produced an unbalanced candidate " + set.to_string());
    UniversalityReport quick = is_universal(set, {.stop_at_first_failure = true});
    if (!quick.universal) return std::nullopt;
    return UniversalCandidate{t, std::move(removed), std::move(set), std::move(quick)};
}

ScanRecord scan_one(std::uint64_t t) {
    ScanRecord rec;
    rec.t = t;
    rec.theorem6_applicable = theory::theorem6_applicable(t);
    if (t % 2 == 1) {
        if (rec.theorem6_applicable) {
            if (auto c = certify(t, {t}, 2 * t + 1)) {
                rec.kind = RowKind::AlmostConsecutive;
                rec.candidate = std::move(c);
                return rec;
            }
        }
        if (auto c = find_pt(t)) {
            rec.kind = c->removed.front() == t ? RowKind::AlmostConsecutive : RowKind::OddReplacement;
            rec.candidate = std::move(c);
        }
    } else {
        auto found = find_qt_rt(t, SearchMode::First);
        if (!found.empty()) {
            rec.kind = RowKind::EvenPair;
            rec.candidate = std::move(found.front());
        }
    }
    return rec;
}

std::string braces(std::uint64_t v) {
    const std::string s = std::to_string(v);
    return s.size() == 1 ? s : "{" + s + "}";
}

}  // namespace

std::optional<UniversalCandidate> find_pt(std::uint64_t t) {
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("find_pt: t must be odd and at least 3");
    for (std::uint64_t p = 1; p <= 2 * t + 1; p += 2) {
        if (auto c = certify(t, {p}, 2 * t + 1)) return c;
    }
    return std::nullopt;
}

std::vector<UniversalCandidate> find_qt_rt(std::uint64_t t, SearchMode mode) {
    if (t < 4 || t % 2 == 1) throw std::invalid_argument("find_qt_rt: t must be even and at least 4");
    std::vector<UniversalCandidate> out;
    const std::uint64_t top = 2 * t + 2;
    for (std::uint64_t q = 1; q <= top; ++q) {
        for (std::uint64_t r = q + 1; r <= top; r += 2) {
            if (auto c = certify(t, {q, r}, top)) {
                out.push_back(std::move(*c));
                if (mode == SearchMode::First) return out;
            }
        }
    }
    return out;
}

std::string to_string(RowKind kind) {
    switch (kind) {
        case RowKind::AlmostConsecutive: return "almost_consecutive";
        case RowKind::OddReplacement: return "odd_replacement";
        case RowKind::EvenPair: return "even_pair";
        case RowKind::NotFound: return "not_found";
    }
    return "?";
}

std::vector<ScanRecord> scan_range(std::uint64_t t_lo, std::uint64_t t_hi, unsigned parallel_width,
                                   const std::function<void(const ScanRecord&)>& on_record) {
    if (t_lo < 3 || t_lo > t_hi) throw std::invalid_argument("scan_range: need 3 <= t_lo <= t_hi");
    if (parallel_width == 0) throw std::invalid_argument("scan_range: width must be positive");
    const std::size_t count = t_hi - t_lo + 1;
    std::vector<std::optional<ScanRecord>> slots(count);
    std::mutex mu;
    std::size_t flushed = 0;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            ScanRecord rec = scan_one(t_lo + i);
            std::lock_guard lock(mu);
            slots[i] = std::move(rec);
            while (flushed < count && slots[flushed]) {
                if (on_record) on_record(*slots[flushed]);
                ++flushed;
            }
        }
    };

    const unsigned width = static_cast<unsigned>(std::min<std::size_t>(parallel_width, count));
    if (width == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < width; ++k) pool.emplace_back(worker);
    }

    std::vector<ScanRecord> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::string latex_row(const ScanRecord& rec) {
    std::string set;
    switch (rec.kind) {
        case RowKind::AlmostConsecutive:
            set = "S_" + braces(rec.t);
            break;
        case RowKind::OddReplacement:
        case RowKind::EvenPair: {
            const auto& c = *rec.candidate;
            const std::uint64_t top = rec.t % 2 == 1 ? 2 * rec.t + 1 : 2 * rec.t + 2;
            set = "\\{1,\\dots," + std::to_string(top) + "\\}\\setminus\\{";
            for (std::size_t i = 0; i < c.removed.size(); ++i) {
                if (i) set += ",";
                set += std::to_string(c.removed[i]);
            }
            set += "\\}";
            break;
        }
        case RowKind::NotFound:
            set = "\\text{none}";
            break;
    }
    return std::to_string(rec.t) + " & $" + set + "$ \\\\";
}

}  // namespace circnut::search
