#pragma once

#include <string>
#include <vector>

#include "permpoly/bigint.h"

namespace permpoly {

/// Dense univariate polynomial with exact integer coefficients; index =
/// degree. Always trimmed: the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    static IntPolynomial constant(BigInt c);
    static IntPolynomial monomial(BigInt c, int degree);
    /// x^2 + c, the building block of the closed forms.
    static IntPolynomial x2_plus(BigInt c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coefficient(int k) const;

    IntPolynomial pow(unsigned e) const;
    /// p(x^2).
    IntPolynomial in_square() const;
    BigInt evaluate(const BigInt& x) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    IntPolynomial& operator*=(const BigInt& c);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Ascending in x, e.g. "4 + 9x^2 + 6x^4 + x^6".
    std::string pretty() const;
    /// Ascending coefficient array, e.g. "[4,0,9,0,6,0,1]".
    std::string to_json() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

}  // namespace permpoly
