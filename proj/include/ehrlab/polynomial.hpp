#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ehrlab/exact.hpp"

namespace ehrlab {

// Univariate polynomial with exact rational coefficients, stored dense in
// ascending degree with trailing zeros trimmed. The zero polynomial is the
// empty coefficient list and reports degree -1 (stand-in for minus infinity).
// Two polynomials are equal iff their coefficient sequences are equal.
class UniPolynomial {
public:
    UniPolynomial() = default;
    explicit UniPolynomial(std::vector<Rat> coefficients);

    static UniPolynomial constant(const Rat& value);
    static UniPolynomial monomial(std::size_t degree, const Rat& coefficient);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    /// Coefficient of x^k; zero beyond the degree.
    Rat coefficient(std::size_t k) const;
    Rat leading_coefficient() const;  // throws on the zero polynomial

    Rat operator()(const Int& x) const;
    Rat operator()(const Rat& x) const;

    UniPolynomial& operator+=(const UniPolynomial& rhs);
    UniPolynomial& operator-=(const UniPolynomial& rhs);
    UniPolynomial& operator*=(const UniPolynomial& rhs);
    UniPolynomial& operator*=(const Rat& scalar);

    friend UniPolynomial operator+(UniPolynomial a, const UniPolynomial& b) { return a += b; }
    friend UniPolynomial operator-(UniPolynomial a, const UniPolynomial& b) { return a -= b; }
    friend UniPolynomial operator*(UniPolynomial a, const UniPolynomial& b) { return a *= b; }
    friend UniPolynomial operator*(UniPolynomial a, const Rat& s) { return a *= s; }

    bool operator==(const UniPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

    /// Serialized form: "p/q" strings, ascending degree (the wire format).
    std::vector<std::string> to_strings() const;
    static UniPolynomial from_strings(const std::vector<std::string>& coefficients);

    /// Human-readable rendering with explicit fractions, highest degree first.
    std::string pretty(std::string_view variable = "n") const;

private:
    std::vector<Rat> coeffs_;

    void trim();
};

/// Unique polynomial of degree < |points| through all (x, y) pairs, exactly.
/// Throws std::invalid_argument("degenerate interpolation nodes") on repeated x.
UniPolynomial interpolate_polynomial(const std::vector<std::pair<Int, Rat>>& points);

/// The degree-(ell+1) polynomial p with p(n) = sum_{j=1}^{n+1} j^ell for all
/// integers n >= 0, recovered by exact interpolation at n = 0..ell+1.
UniPolynomial power_sum_polynomial(unsigned long ell);

}  // namespace ehrlab
