#ifndef CIRCNUT_CYCLOTOMIC_HPP
#define CIRCNUT_CYCLOTOMIC_HPP

#include <cstdint>
#include <memory>

#include "circnut/polynomial.hpp"

namespace circnut {

/// The b-th cyclotomic polynomial, from
///   Phi_b(y) = (y^b - 1) / prod_{d | b, d < b} Phi_d(y).
///
/// Results live in a process-wide append-only cache. Concurrent callers may
/// compute the same entry twice; only complete values are ever published.
/// Throws std::invalid_argument for b = 0.
const IntPoly& cyclotomic(std::uint64_t b);

/// True iff Phi_b divides p exactly.
bool phi_divides(std::uint64_t b, const IntPoly& p);

}  // namespace circnut

#endif  // CIRCNUT_CYCLOTOMIC_HPP
