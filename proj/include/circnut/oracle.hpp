#ifndef CIRCNUT_ORACLE_HPP
#define CIRCNUT_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "circnut/circulant.hpp"
#include "circnut/polynomial.hpp"

namespace circnut::oracle {

// Ground truth for the cyclotomic route: exact linear algebra on the
// adjacency matrix itself, sharing no code with the polynomial checks.

/// Dense row-major matrix of exact integers.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Integer> apply(const std::vector<Integer>& v) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Integer> data_;
};

struct KernelResult {
    std::size_t nullity = 0;
    std::size_t rank = 0;
    /// Integer vectors with content 1 and positive last nonzero entry.
    std::vector<std::vector<Integer>> basis;
    /// Nullity is 1 and the kernel vector has no zero entry.
    bool full_support = false;
};

class OracleCapExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultOracleCap = 512;

/// Order cap for oracle computations: CIRCNUT_ORACLE_CAP if set, else 512.
std::uint64_t oracle_cap();

/// Adjacency matrix of Circ(n, S). Throws GeneratorTooLarge when
/// max(S) > n/2 and OracleCapExceeded when n exceeds the cap.
IntMatrix adjacency(std::uint64_t n, const GeneratorSet& s, std::optional<std::uint64_t> cap = {});

/// Kernel of a square matrix by fraction-free (Bareiss) elimination with row
/// pivoting followed by exact rational back-substitution.
KernelResult kernel(const IntMatrix& m);

KernelResult adjacency_kernel(std::uint64_t n, const GeneratorSet& s, std::optional<std::uint64_t> cap = {});

/// Nullity exactly 1 with a kernel vector free of zero entries.
bool oracle_is_nut(std::uint64_t n, const GeneratorSet& s, std::optional<std::uint64_t> cap = {});

/// All 2t-element subsets of {1, ..., n/2 - 1} with t odd and t even members,
/// in lexicographic order of their sorted elements. Empty when none exist.
std::vector<GeneratorSet> enumerate_balanced(std::uint64_t n, std::uint64_t t);

}  // namespace circnut::oracle

#endif  // CIRCNUT_ORACLE_HPP
