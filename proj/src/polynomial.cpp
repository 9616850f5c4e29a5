#include "circnut/polynomial.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <optional>
#include <utility>

namespace circnut {

namespace {

// Fast paths run on machine words and fall back to GMP on any overflow, so
// results are always exact.

bool fits_int64(const Integer& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

std::optional<std::vector<long>> to_words(const std::vector<Integer>& v) {
    static_assert(sizeof(long) == 8, "64-bit long required");
    std::vector<long> out;
    out.reserve(v.size());
    for (const auto& c : v) {
        if (!fits_int64(c)) return std::nullopt;
        out.push_back(c.get_si());
    }
    return out;
}

Integer from_int128(__int128 v) {
    if (v >= LONG_MIN && v <= LONG_MAX) return Integer(static_cast<long>(v));
    const bool neg = v < 0;
    unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer hi(static_cast<unsigned long>(m >> 64));
    Integer lo(static_cast<unsigned long>(m & ~0ULL));
    Integer r = (hi << 64) + lo;
    return neg ? Integer(-r) : r;
}

bool small_enough_for_mul(const std::vector<Integer>& v) {
    constexpr long kLimit = 1L << 31;
    return std::all_of(v.begin(), v.end(), [](const Integer& c) {
        return fits_int64(c) && std::labs(c.get_si()) < kLimit;
    });
}

// Remainder (and optionally quotient) of a by monic d on machine words.
// Returns false on overflow.
bool divrem_words(std::vector<long>& rem, const std::vector<long>& d, std::vector<long>* quot) {
    const std::size_t dd = d.size() - 1;
    if (rem.size() <= dd) return true;
    if (quot) quot->assign(rem.size() - dd, 0);
    for (std::size_t i = rem.size() - 1; i >= dd; --i) {
        const long q = rem[i];
        if (q != 0) {
            if (quot) (*quot)[i - dd] = q;
            const std::size_t base = i - dd;
            for (std::size_t j = 0; j < dd; ++j) {
                if (d[j] == 0) continue;
                long prod;
                if (__builtin_mul_overflow(q, d[j], &prod)) return false;
                if (__builtin_sub_overflow(rem[base + j], prod, &rem[base + j])) return false;
            }
            rem[i] = 0;
        }
        if (i == dd) break;
    }
    rem.resize(dd);
    return true;
}

void divrem_big(std::vector<Integer>& rem, const std::vector<Integer>& d, std::vector<Integer>* quot) {
    const std::size_t dd = d.size() - 1;
    if (rem.size() <= dd) return;
    if (quot) quot->assign(rem.size() - dd, 0);
    Integer q;
    for (std::size_t i = rem.size() - 1; i >= dd; --i) {
        if (rem[i] != 0) {
            q = rem[i];
            if (quot) (*quot)[i - dd] = q;
            const std::size_t base = i - dd;
            for (std::size_t j = 0; j < dd; ++j) {
                if (d[j] != 0) rem[base + j] -= q * d[j];
            }
            rem[i] = 0;
        }
        if (i == dd) break;
    }
    rem.resize(dd);
}

std::vector<Integer> widen(const std::vector<long>& v) {
    std::vector<Integer> out;
    out.reserve(v.size());
    for (long c : v) out.emplace_back(c);
    return out;
}

void check_divisor(const IntPoly& d) {
    if (d.is_zero()) throw NonMonicDivisor("divrem: zero divisor");
    if (!d.is_monic()) {
        throw NonMonicDivisor("divrem: divisor " + d.to_string() + " is not monic");
    }
}

std::string render(const std::vector<Integer>& c, bool latex) {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        const bool neg = c[k] < 0;
        const Integer mag = abs(c[k]);
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str();
        out += 'y';
        if (k > 1) {
            out += latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::monomial(const Integer& coeff, std::size_t exponent) {
    if (coeff == 0) return {};
    std::vector<Integer> c(exponent + 1);
    c[exponent] = coeff;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t n) {
    std::vector<Integer> c(n + 1);
    c[n] += 1;
    c[0] -= 1;
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool IntPoly::is_palindromic() const { return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin()); }

std::size_t IntPoly::term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t n = a.size() + b.size() - 1;
    std::vector<Integer> out(n);
    if (small_enough_for_mul(a.coeffs_) && small_enough_for_mul(b.coeffs_)) {
        std::vector<long> aw, bw;
        for (const auto& c : a.coeffs_) aw.push_back(c.get_si());
        for (const auto& c : b.coeffs_) bw.push_back(c.get_si());
        std::vector<__int128> acc(n, 0);
        for (std::size_t i = 0; i < aw.size(); ++i) {
            if (aw[i] == 0) continue;
            for (std::size_t j = 0; j < bw.size(); ++j) {
                acc[i + j] += static_cast<__int128>(aw[i]) * bw[j];
            }
        }
        for (std::size_t k = 0; k < n; ++k) out[k] = from_int128(acc[k]);
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const { return render(coeffs_, false); }

std::string IntPoly::to_latex() const { return render(coeffs_, true); }

DivRem divrem(const IntPoly& a, const IntPoly& d) {
    check_divisor(d);
    if (auto aw = to_words(a.coeffs())) {
        if (auto dw = to_words(d.coeffs())) {
            std::vector<long> quot;
            if (divrem_words(*aw, *dw, &quot)) {
                return {IntPoly(widen(quot)), IntPoly(widen(*aw))};
            }
        }
    }
    std::vector<Integer> rem = a.coeffs();
    std::vector<Integer> quot;
    divrem_big(rem, d.coeffs(), &quot);
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly remainder(const IntPoly& a, const IntPoly& d) {
    check_divisor(d);
    if (auto aw = to_words(a.coeffs())) {
        if (auto dw = to_words(d.coeffs())) {
            if (divrem_words(*aw, *dw, nullptr)) return IntPoly(widen(*aw));
        }
    }
    std::vector<Integer> rem = a.coeffs();
    divrem_big(rem, d.coeffs(), nullptr);
    return IntPoly(std::move(rem));
}

IntPoly reduce_cyclic(const IntPoly& a, std::size_t b) {
    if (b == 0) throw std::invalid_argument("reduce_cyclic: modulus exponent must be positive");
    if (a.size() <= b) return a;
    std::vector<Integer> out(b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.coeffs()[i] != 0) out[i % b] += a.coeffs()[i];
    }
    return IntPoly(std::move(out));
}

}  // namespace circnut
