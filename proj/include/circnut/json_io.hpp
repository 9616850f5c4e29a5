#ifndef CIRCNUT_JSON_IO_HPP
#define CIRCNUT_JSON_IO_HPP

#include <json.hpp>

#include <cstdint>

#include "circnut/circulant.hpp"
#include "circnut/oracle.hpp"
#include "circnut/polynomial.hpp"
#include "circnut/search.hpp"

namespace circnut::json_io {

using nlohmann::json;

/// Machine-word integers become JSON numbers; anything larger becomes a
/// decimal string so no precision is lost.
json integer(const Integer& v);

json generator_set(const GeneratorSet& s);

json nut_check(const GeneratorSet& s, std::uint64_t n, const NutVerdict& verdict,
               std::uint64_t zero_multiplicity);

json universality(const GeneratorSet& s, const UniversalityReport& report);

json oracle_result(std::uint64_t n, const GeneratorSet& s, const oracle::KernelResult& k);

json candidate(const search::UniversalCandidate& c);

json scan_record(const search::ScanRecord& rec);

json error(std::string_view code, std::string_view message);

}  // namespace circnut::json_io

#endif  // CIRCNUT_JSON_IO_HPP
