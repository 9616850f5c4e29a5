#include "circnut/json_io.hpp"

namespace circnut::json_io {

json integer(const Integer& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) return v.get_si();
    return v.get_str();
}

json generator_set(const GeneratorSet& s) { return s.elements(); }

json nut_check(const GeneratorSet& s, std::uint64_t n, const NutVerdict& verdict,
               std::uint64_t zero_multiplicity) {
    json j = {
        {"order", n},
        {"set", generator_set(s)},
        {"is_nut", verdict.is_nut},
        {"reason", std::string(to_string(verdict.reason))},
        {"zero_multiplicity", zero_multiplicity},
    };
    if (verdict.witness_b) j["witness_b"] = *verdict.witness_b;
    return j;
}

json universality(const GeneratorSet& s, const UniversalityReport& report) {
    return {
        {"set", generator_set(s)},
        {"universal", report.universal},
        {"balanced", report.balanced},
        {"degree_bound", report.degree_bound},
        {"min_order", report.min_order},
        {"scanned_b", report.scanned_b},
        {"failing_b", report.failing_b},
    };
}

json oracle_result(std::uint64_t n, const GeneratorSet& s, const oracle::KernelResult& k) {
    json basis = json::array();
    for (const auto& v : k.basis) {
        json row = json::array();
        for (const auto& e : v) row.push_back(integer(e));
        basis.push_back(std::move(row));
    }
    return {
        {"order", n},
        {"set", generator_set(s)},
        {"nullity", k.nullity},
        {"kernel_basis", std::move(basis)},
        {"is_nut", k.nullity == 1 && k.full_support},
    };
}

json candidate(const search::UniversalCandidate& c) {
    return {
        {"t", c.t},
        {"removed", c.removed},
        {"report", universality(c.set, c.report)},
    };
}

json scan_record(const search::ScanRecord& rec) {
    json j = {
        {"t", rec.t},
        {"theorem6_applicable", rec.theorem6_applicable},
        {"kind", search::to_string(rec.kind)},
    };
    j["candidate"] = rec.candidate ? candidate(*rec.candidate) : json(nullptr);
    return j;
}

json error(std::string_view code, std::string_view message) {
    return {{"error", std::string(code)}, {"message", std::string(message)}};
}

}  // namespace circnut::json_io
