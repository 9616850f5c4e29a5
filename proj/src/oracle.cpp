#include "circnut/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

namespace circnut::oracle {

namespace {

using Rational = mpq_class;

// Fraction-free row echelon form in place; returns the pivot columns.
std::vector<std::size_t> bareiss_echelon(IntMatrix& a) {
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    Integer t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r) {
            for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        }
        const Integer& piv = a(r, c);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            const Integer lead = a(i, c);
            for (std::size_t j = c + 1; j < a.cols(); ++j) {
                t = piv * a(i, j);
                t -= lead * a(r, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<Integer> to_primitive(const std::vector<Rational>& x) {
    Integer den = 1;
    for (const auto& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> v;
    v.reserve(x.size());
    Integer g = 0;
    for (const auto& q : x) {
        v.push_back(q.get_num() * (den / q.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
    }
    if (g == 0) return v;
    auto last = std::find_if(v.rbegin(), v.rend(), [](const Integer& e) { return e != 0; });
    if (*last < 0) g = -g;
    for (auto& e : v) e /= g;
    return v;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& v) const {
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
        }
    }
    return out;
}

std::uint64_t oracle_cap() {
    const char* env = std::getenv("CIRCNUT_ORACLE_CAP");
    if (env == nullptr || *env == '\0') return kDefaultOracleCap;
    std::uint64_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value == 0) {
        throw std::invalid_argument("CIRCNUT_ORACLE_CAP must be a positive integer");
    }
    return value;
}

IntMatrix adjacency(std::uint64_t n, const GeneratorSet& s, std::optional<std::uint64_t> cap) {
    const std::uint64_t limit = cap.value_or(oracle_cap());
    if (n > limit) {
        throw OracleCapExceeded("order " + std::to_string(n) + " exceeds oracle cap " + std::to_string(limit) +
                                " (set CIRCNUT_ORACLE_CAP to override)");
    }
    if (2 * s.max() > n) {
        throw GeneratorTooLarge("generator " + std::to_string(s.max()) + " exceeds half the order " +
                                std::to_string(n));
    }
    IntMatrix m(n, n);
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t e : s.elements()) {
            m(i, (i + e) % n) = 1;
            m(i, (i + n - e) % n) = 1;
        }
    }
    return m;
}

KernelResult kernel(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("kernel: matrix must be square");
    IntMatrix ech = m;
    const std::vector<std::size_t> pivots = bareiss_echelon(ech);
    const std::size_t n = m.cols();

    KernelResult out;
    out.rank = pivots.size();
    out.nullity = n - out.rank;

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(n);
        x[f] = 1;
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t pc = pivots[k];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < n; ++j) {
                if (ech(k, j) != 0 && x[j] != 0) acc += Rational(ech(k, j)) * x[j];
            }
            x[pc] = -acc / Rational(ech(k, pc));
            x[pc].canonicalize();
        }
        out.basis.push_back(to_primitive(x));
    }
    if (out.nullity == 1) {
        const auto& v = out.basis.front();
        out.full_support = std::none_of(v.begin(), v.end(), [](const Integer& e) { return e == 0; });
    }
    return out;
}

KernelResult adjacency_kernel(std::uint64_t n, const GeneratorSet& s, std::optional<std::uint64_t> cap) {
    return kernel(adjacency(n, s, cap));
}

bool oracle_is_nut(std::uint64_t n, const GeneratorSet& s, std::optional<std::uint64_t> cap) {
    const KernelResult k = adjacency_kernel(n, s, cap);
    return k.nullity == 1 && k.full_support;
}

std::vector<GeneratorSet> enumerate_balanced(std::uint64_t n, std::uint64_t t) {
    std::vector<GeneratorSet> out;
    if (n < 2 || t == 0) return out;
    const std::uint64_t top = n / 2 - 1;
    std::vector<std::uint64_t> cur;
    auto rec = [&](auto&& self, std::uint64_t next, std::uint64_t odds, std::uint64_t evens) -> void {
        if (odds == t && evens == t) {
            out.emplace_back(cur);
            return;
        }
        for (std::uint64_t s = next; s <= top; ++s) {
            const bool odd = s % 2 == 1;
            if (odd ? odds == t : evens == t) continue;
            cur.push_back(s);
            self(self, s + 1, odds + (odd ? 1 : 0), evens + (odd ? 0 : 1));
            cur.pop_back();
        }
    };
    rec(rec, 1, 0, 0);
    return out;
}

}  // namespace circnut::oracle
