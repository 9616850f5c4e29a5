#ifndef CIRCNUT_POLYNOMIAL_HPP
#define CIRCNUT_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace circnut {

using Integer = mpz_class;

/// Degree reported for the zero polynomial.
inline constexpr std::ptrdiff_t kZeroPolyDegree = std::numeric_limits<std::ptrdiff_t>::min();

/// Thrown by divrem when the divisor is zero or its leading coefficient is not 1.
class NonMonicDivisor : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Dense univariate polynomial in y with exact integer coefficients.
///
/// Coefficients are stored in ascending exponent order and kept canonical:
/// the last stored coefficient is nonzero, and the zero polynomial is the
/// empty sequence.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    /// Ascending coefficients, e.g. {-1, 0, 1} is y^2 - 1.
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly monomial(const Integer& coeff, std::size_t exponent);
    /// y^n - 1
    static IntPoly x_pow_minus_one(std::size_t n);

    bool is_zero() const { return coeffs_.empty(); }
    std::ptrdiff_t degree() const {
        return coeffs_.empty() ? kZeroPolyDegree : static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
    }
    /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    /// Coefficient of y^i; zero past the degree.
    Integer coeff(std::size_t i) const;
    const Integer& leading() const;

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool is_palindromic() const;
    std::size_t term_count() const;

    Integer eval(const Integer& x) const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Canonical text form, e.g. "y^3 - 3y^2 + 3y - 1"; "0" for the zero polynomial.
    std::string to_string() const;
    /// LaTeX form with braced exponents, e.g. "2y^{3} - y^{2} + 1".
    std::string to_latex() const;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

struct DivRem {
    IntPoly quotient;
    IntPoly remainder;
};

/// Exact division by a monic divisor: a = d * quotient + remainder with
/// deg remainder < deg d. Throws NonMonicDivisor otherwise.
DivRem divrem(const IntPoly& a, const IntPoly& d);

/// Only the remainder of divrem; skips building the quotient.
IntPoly remainder(const IntPoly& a, const IntPoly& d);

/// Reduction modulo y^b - 1: exponents are folded modulo b. Throws for b = 0.
IntPoly reduce_cyclic(const IntPoly& a, std::size_t b);

}  // namespace circnut

#endif  // CIRCNUT_POLYNOMIAL_HPP
