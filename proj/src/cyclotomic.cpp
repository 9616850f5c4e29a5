#include "circnut/cyclotomic.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "circnut/numtheory.hpp"

namespace circnut {

namespace {

struct CyclotomicCache {
    std::shared_mutex mu;
    // unique_ptr keeps returned references stable across rehashing.
    std::unordered_map<std::uint64_t, std::unique_ptr<const IntPoly>> entries;
};

CyclotomicCache& cache() {
    static CyclotomicCache c;
    return c;
}

IntPoly compute_cyclotomic(std::uint64_t b) {
    IntPoly denom{1};
    for (std::uint64_t d : nt::divisors(b)) {
        if (d == b) break;
        denom = denom * cyclotomic(d);
    }
    DivRem qr = divrem(IntPoly::x_pow_minus_one(b), denom);
    if (!qr.remainder.is_zero()) {
        throw std::logic_error("cyclotomic: inexact division for b=" + std::to_string(b));
    }
    return std::move(qr.quotient);
}

}  // namespace

const IntPoly& cyclotomic(std::uint64_t b) {
    if (b == 0) throw std::invalid_argument("cyclotomic: index must be positive");
    auto& c = cache();
    {
        std::shared_lock lock(c.mu);
        if (auto it = c.entries.find(b); it != c.entries.end()) return *it->second;
    }
    auto value = std::make_unique<const IntPoly>(compute_cyclotomic(b));
    std::unique_lock lock(c.mu);
    auto it = c.entries.try_emplace(b, std::move(value)).first;
    return *it->second;
}

bool phi_divides(std::uint64_t b, const IntPoly& p) {
    const IntPoly& phi = cyclotomic(b);
    // y^b = 1 modulo Phi_b, so folding exponents first leaves the remainder unchanged.
    const IntPoly folded = reduce_cyclic(p, b);
    if (folded.is_zero()) return true;
    if (folded.degree() < phi.degree()) return false;
    return remainder(folded, phi).is_zero();
}

}  // namespace circnut
