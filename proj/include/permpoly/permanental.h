#pragma once

#include <span>
#include <vector>

#include "permpoly/embedding.h"
#include "permpoly/graph.h"
#include "permpoly/matrix.h"
#include "permpoly/orientation.h"
#include "permpoly/polynomial.h"

namespace permpoly {

inline constexpr int kPermPolyOracleBound = 18;

/// per(xI - A(G)) by summing principal subpermanents of every order.
/// Throws TooLargeForOracle when n > bound.
IntPolynomial perm_poly_oracle(const Graph& g, int bound = kPermPolyOracleBound);

/// det(xI - A(G^e)) for the per-block face-parity orientation G^e.
/// Throws NotBipartiteError, Disconnected, ContainsEvenK23.
IntPolynomial perm_poly_fast(const Graph& g);
IntPolynomial perm_poly_fast(const Graph& g, const RotationEmbedding& emb);

/// Skew biadjacency block: rows are side 0 ascending, columns side 1
/// ascending. Throws UnbalancedParts.
IntMatrix skew_biadjacency_matrix(const Graph& g, const Coloring& coloring, const Orientation& o);

/// det(x^2 I + B^T B) for the skew biadjacency matrix B of `o`.
/// Throws UnbalancedParts, ContainsEvenK23.
IntPolynomial perm_poly_biadjacency(const Graph& g, const Coloring& coloring, const Orientation& o);
IntPolynomial perm_poly_biadjacency(const Graph& g);

/// Characteristic polynomial det(xI - A(G)).
IntPolynomial characteristic_polynomial(const Graph& g);

/// Permanental polynomial of s paths of length three between two hubs:
/// (x^2+s-1)(x^2+1)^s + (x^2+1)^s + s (x^2+s-1)(x^2+1)^(s-1).
IntPolynomial closed_form_G1(int s);

/// Permanental polynomial of the star prism with length-three handles:
/// (x^2+2+r)(x^2+2)^(2r-2) (x^4+(3+r)x^2+r+2).
IntPolynomial closed_form_G2(int r);

/// Matrix with diagonal a and every off-diagonal entry b.
IntMatrix constant_off_diagonal_matrix(std::span<const BigInt> a, const BigInt& b);

/// (1 + b sum 1/(a_i - b)) prod (a_i - b), evaluated over the rationals.
/// Throws PoleInput when some a_i == b.
BigInt structured_det_closed_form(std::span<const BigInt> a, const BigInt& b);

/// Determinant of constant_off_diagonal_matrix(a, b); uses the closed form
/// and falls back to elimination when b hits a diagonal entry.
BigInt structured_det_Dn(std::span<const BigInt> a, const BigInt& b);

/// For bipartite G without cycles of length 0 mod 4: flips the signs of
/// the characteristic polynomial, sum (-1)^k a_2k x^(n-2k) -> sum a_2k x^(n-2k).
/// Throws HasCycleLengthDivisibleBy4, NotBipartiteError, TooLargeForOracle.
IntPolynomial borowiecki_transfer(const Graph& g, int bound = kCycleOracleBound);

}  // namespace permpoly
