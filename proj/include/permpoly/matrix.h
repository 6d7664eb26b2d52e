#pragma once

#include <vector>

#include "permpoly/bigint.h"
#include "permpoly/graph.h"
#include "permpoly/polynomial.h"

namespace permpoly {

/// Largest order for which `permanent` runs (Ryser, 2^n n steps).
inline constexpr int kPermanentBound = 24;

/// Square matrix of arbitrary-precision integers, row major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int order) : n_(order), data_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(int order);

    int order() const { return n_; }
    BigInt& operator()(int r, int c) { return data_[index(r, c)]; }
    const BigInt& operator()(int r, int c) const { return data_[index(r, c)]; }

    IntMatrix transposed() const;
    IntMatrix principal(const std::vector<int>& rows) const;
    bool is_skew_symmetric() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c); }
    int n_ = 0;
    std::vector<BigInt> data_;
};

/// Fraction-free (Bareiss) elimination with row pivoting.
BigInt determinant(IntMatrix m);

/// Ryser inclusion-exclusion. Throws TooLargeForOracle when order > bound.
BigInt permanent(const IntMatrix& m, int bound = kPermanentBound);

/// det(xI - M) by evaluating det(kI - M) at k = 0..n and interpolating.
IntPolynomial charpoly(const IntMatrix& m);

struct Orientation;

IntMatrix adjacency_matrix(const Graph& g);
/// +1 at (tail, head), -1 at (head, tail).
IntMatrix skew_adjacency_matrix(const Graph& g, const Orientation& o);

}  // namespace permpoly
