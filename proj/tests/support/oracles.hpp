#ifndef CIRCNUT_TESTS_ORACLES_HPP
#define CIRCNUT_TESTS_ORACLES_HPP

// Test-only reference computations. Nothing here calls the code paths it is
// used to check.

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circnut/circulant.hpp"

namespace circnut::testing {

std::uint64_t brute_phi(std::uint64_t n);
std::vector<std::uint64_t> brute_divisors(std::uint64_t n);
int brute_mobius(std::uint64_t n);

/// prod_{d | n} (y^d - 1)^{mu(n/d)}, as numerator / denominator with a zero
/// remainder check.
IntPoly mobius_product_cyclotomic(std::uint64_t n);

/// Multiplicity of eigenvalue 0 of Circ(n, S) from the floating-point
/// spectrum lambda_j = sum over s of 2 cos(2 pi j s / n) (single term when 2s = n).
std::uint64_t float_zero_multiplicity(std::uint64_t n, const GeneratorSet& s);

/// Coefficient fold over exponents modulo b, written term by term.
std::vector<long> brute_fold(const std::vector<long>& coeffs, std::size_t b);

/// Removes spaces and braces so differently spaced LaTeX compares equal.
std::string normalize_latex(const std::string& s);

/// Rows "b & $poly$ \\" of the published S_3 remainder table.
std::vector<std::pair<std::uint64_t, std::string>> load_pstar_s3_table();

/// Published appendix rows keyed by modulus b, each (t mod b, LaTeX poly).
std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, std::string>>> load_appendix_tables();

/// Published generator table: odd t -> p_t (p_t == t for rows listing S_t)
/// and even t -> (q_t, r_t).
std::map<std::uint64_t, std::uint64_t> table2_odd();
std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> table2_even();

/// Minimal JSON Schema subset: type, properties, required, items, enum,
/// minimum, additionalProperties=false, oneOf over types. Returns an error
/// description or nullopt.
std::optional<std::string> validate_schema(const nlohmann::json& instance, const nlohmann::json& schema,
                                           const std::string& path = "$");

nlohmann::json load_schema(const std::string& name);

}  // namespace circnut::testing

#endif  // CIRCNUT_TESTS_ORACLES_HPP
