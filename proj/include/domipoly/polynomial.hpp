#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "domipoly/errors.hpp"

namespace domipoly {

using BigInt = mpz_class;

/// Dense univariate polynomial with exact integer coefficients.
///
/// coeffs[i] is the coefficient of x^i. Invariant: the highest-index
/// coefficient is nonzero; the zero polynomial is the empty list.
class Polynomial {
public:
    Polynomial() = default;  // zero polynomial
    explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial one() { return constant(1); }
    static Polynomial x() { return monomial(1); }
    static Polynomial constant(BigInt c);
    static Polynomial monomial(std::size_t deg, BigInt coeff = 1);
    /// (1+x)^e, built from exact binomial coefficients.
    static Polynomial one_plus_x_pow(unsigned long e);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of a nonzero polynomial; throws UndefinedDegreeError on zero.
    std::size_t degree() const;
    /// Smallest i with coeffs[i] != 0; throws UndefinedDegreeError on zero.
    std::size_t min_degree() const;
    /// Coefficient of x^i (zero beyond the degree).
    const BigInt& coeff(std::size_t i) const;
    std::span<const BigInt> coeffs() const { return coeffs_; }

    BigInt eval_int(const BigInt& t) const;

    /// Strips the factor x^min_degree; returns the quotient. Requires nonzero.
    Polynomial shifted_down(std::size_t m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// {"coeffs":["0","2","1"]} — decimal strings, lowest degree first.
    std::string to_json() const;
    /// Human-readable form, highest degree first: "x^3 + 3x^2 + x".
    std::string to_string() const;

private:
    std::vector<BigInt> coeffs_;
    void normalize();
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
Polynomial pow(const Polynomial& base, unsigned long e);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace domipoly
