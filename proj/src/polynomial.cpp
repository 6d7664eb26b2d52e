#include "permpoly/polynomial.h"

#include <algorithm>
#include <sstream>

namespace permpoly {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

IntPolynomial IntPolynomial::monomial(BigInt c, int degree) {
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
    v.back() = std::move(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x2_plus(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c), 0, 1}); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial result = constant(1), base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

IntPolynomial IntPolynomial::in_square() const {
    std::vector<BigInt> out(coeffs_.empty() ? 0 : 2 * coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
    return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPolynomial::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) out << mag;
        if (k >= 1) out << "x";
        if (k >= 2) out << "^" << k;
    }
    return out.str();
}

std::string IntPolynomial::to_json() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out << (k ? "," : "") << coeffs_[k];
    out << "]";
    return out.str();
}

}  // namespace permpoly
