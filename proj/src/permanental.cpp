#include "permpoly/permanental.h"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "permpoly/resonance.h"

namespace permpoly {

IntPolynomial perm_poly_oracle(const Graph& g, int bound) {
    const int n = g.num_vertices();
    if (n > bound || n > 30)
        throw Error(ErrorKind::TooLargeForOracle, "permanental polynomial oracle limited to n <= " + std::to_string(bound));
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= 1U << e.v;
        adj[static_cast<std::size_t>(e.v)] |= 1U << e.u;
    }
    const IntMatrix a = adjacency_matrix(g);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, 0);
    const std::uint32_t limit = n == 0 ? 1U : (1U << n);
    for (std::uint32_t subset = 0; subset < limit; ++subset) {
        std::vector<int> rows;
        bool has_empty_row = false;
        for (int v = 0; v < n; ++v) {
            if (!((subset >> v) & 1U)) continue;
            rows.push_back(v);
            if ((adj[static_cast<std::size_t>(v)] & subset) == 0) has_empty_row = true;
        }
        if (has_empty_row) continue;
        const int k = static_cast<int>(rows.size());
        const BigInt per = permanent(a.principal(rows));
        auto& slot = coeffs[static_cast<std::size_t>(n - k)];
        if (k % 2 == 0) slot += per;
        else slot -= per;
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial characteristic_polynomial(const Graph& g) { return charpoly(adjacency_matrix(g)); }

namespace {

void require_connected_bipartite(const Graph& g) {
    bipartition(g);
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "permanental polynomial route needs a connected graph");
}

void require_no_even_k23(const Graph& g) {
    if (!contains_no_even_k23(g).verdict)
        throw Error(ErrorKind::ContainsEvenK23, "graph contains an even subdivision of K2,3");
}

}  // namespace

IntPolynomial perm_poly_fast(const Graph& g) {
    require_connected_bipartite(g);
    return charpoly(skew_adjacency_matrix(g, orient_graph(g)));
}

IntPolynomial perm_poly_fast(const Graph& g, const RotationEmbedding& emb) {
    require_connected_bipartite(g);
    return charpoly(skew_adjacency_matrix(g, orient_graph(g, emb)));
}

IntMatrix skew_biadjacency_matrix(const Graph& g, const Coloring& coloring, const Orientation& o) {
    check_orientation(g, o);
    const auto u = coloring.part(0), v = coloring.part(1);
    if (u.size() != v.size())
        throw Error(ErrorKind::UnbalancedParts,
                    "parts have sizes " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
    std::vector<int> row_of(static_cast<std::size_t>(g.num_vertices()), -1), col_of(row_of);
    for (std::size_t i = 0; i < u.size(); ++i) row_of[static_cast<std::size_t>(u[i])] = static_cast<int>(i);
    for (std::size_t j = 0; j < v.size(); ++j) col_of[static_cast<std::size_t>(v[j])] = static_cast<int>(j);
    IntMatrix b(static_cast<int>(u.size()));
    for (const auto& [t, h] : o.direction) {
        if (row_of[static_cast<std::size_t>(t)] >= 0) b(row_of[static_cast<std::size_t>(t)], col_of[static_cast<std::size_t>(h)]) = 1;
        else b(row_of[static_cast<std::size_t>(h)], col_of[static_cast<std::size_t>(t)]) = -1;
    }
    return b;
}

IntPolynomial perm_poly_biadjacency(const Graph& g, const Coloring& coloring, const Orientation& o) {
    const IntMatrix b = skew_biadjacency_matrix(g, coloring, o);
    require_no_even_k23(g);
    // det(yI + B^T B) = charpoly(-B^T B) at y = x^2
    return charpoly(-(b.transposed() * b)).in_square();
}

IntPolynomial perm_poly_biadjacency(const Graph& g) {
    require_connected_bipartite(g);
    const Coloring coloring = bipartition(g);
    if (coloring.part(0).size() != coloring.part(1).size())
        throw Error(ErrorKind::UnbalancedParts, "parts have different sizes");
    return perm_poly_biadjacency(g, coloring, orient_graph(g));
}

IntPolynomial closed_form_G1(int s) {
    if (s < 2) throw Error(ErrorKind::InvalidInput, "closed form for G1 needs s >= 2");
    const auto us = static_cast<unsigned>(s);
    const IntPolynomial hub = IntPolynomial::x2_plus(s - 1);
    const IntPolynomial path = IntPolynomial::x2_plus(1);
    return hub * path.pow(us) + path.pow(us) + hub * path.pow(us - 1) * BigInt(s);
}

IntPolynomial closed_form_G2(int r) {
    if (r < 1) throw Error(ErrorKind::InvalidInput, "closed form for G2 needs r >= 1");
    const IntPolynomial quartic(std::vector<BigInt>{r + 2, 0, 3 + r, 0, 1});
    return IntPolynomial::x2_plus(2 + r) * IntPolynomial::x2_plus(2).pow(static_cast<unsigned>(2 * r - 2)) * quartic;
}

IntMatrix constant_off_diagonal_matrix(std::span<const BigInt> a, const BigInt& b) {
    const int n = static_cast<int>(a.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = i == j ? a[static_cast<std::size_t>(i)] : b;
    return m;
}

BigInt structured_det_closed_form(std::span<const BigInt> a, const BigInt& b) {
    Rational sum = 0;
    BigInt prod = 1;
    for (const BigInt& ai : a) {
        if (ai == b) throw Error(ErrorKind::PoleInput, "off-diagonal value equals a diagonal entry");
        sum += Rational(1, ai - b);
        prod *= ai - b;
    }
    const Rational value = (Rational(1) + Rational(b) * sum) * Rational(prod);
    if (boost::multiprecision::denominator(value) != 1) throw std::logic_error("structured determinant is not integral");
    return boost::multiprecision::numerator(value);
}

BigInt structured_det_Dn(std::span<const BigInt> a, const BigInt& b) {
    try {
        return structured_det_closed_form(a, b);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::PoleInput) throw;
        return determinant(constant_off_diagonal_matrix(a, b));
    }
}

IntPolynomial borowiecki_transfer(const Graph& g, int bound) {
    bipartition(g);
    for (const Cycle& c : enumerate_cycles(g, bound))
        if (c.length() % 4 == 0)
            throw Error(ErrorKind::HasCycleLengthDivisibleBy4, "cycle of length " + std::to_string(c.length()));
    const IntPolynomial phi = characteristic_polynomial(g);
    const int n = g.num_vertices();
    std::vector<BigInt> coeffs = phi.coeffs();
    for (int d = 0; d <= n; ++d) {
        // coefficient of x^(n-2k) carries (-1)^k
        if ((n - d) % 4 == 2) coeffs[static_cast<std::size_t>(d)] = -coeffs[static_cast<std::size_t>(d)];
    }
    return IntPolynomial(std::move(coeffs));
}

}  // namespace permpoly
