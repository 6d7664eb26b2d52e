#include <doctest.h>

#include <random>

#include "permpoly/generators.h"
#include "permpoly/matrix.h"
#include "permpoly/orientation.h"
#include "permpoly/permanental.h"
#include "permpoly/resonance.h"
#include "support/oracles.h"
#include "support/random_graphs.h"

using namespace permpoly;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidInput;
}

void check_bipartite_structure(const Graph& g, const IntPolynomial& p) {
    for (int k = 0; k <= p.degree(); ++k) {
        if ((g.num_vertices() - k) % 2) CHECK(p.coefficient(k) == 0);
        else CHECK(p.coefficient(k) >= 0);
    }
    const BigInt m = count_perfect_matchings(g);
    CHECK(p.coefficient(0) == m * m);
}

}  // namespace

TEST_CASE("perm_poly_oracle on small graphs") {
    CHECK(perm_poly_oracle(gen_path(2)) == IntPolynomial{1, 0, 1});
    CHECK(perm_poly_oracle(gen_cycle(4)) == IntPolynomial{4, 0, 4, 0, 1});
    CHECK(perm_poly_oracle(gen_cycle(6)) == IntPolynomial{4, 0, 9, 0, 6, 0, 1});
    CHECK(kind_of([] { perm_poly_oracle(gen_cycle(20)); }) == ErrorKind::TooLargeForOracle);
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = sample::planar_bipartite_block(rng, 9);
        CHECK(perm_poly_oracle(g) == oracle::permutation_perm_poly(g));
    }
    // non-bipartite inputs too
    CHECK(perm_poly_oracle(gen_complete(4)) == oracle::permutation_perm_poly(gen_complete(4)));
}

TEST_CASE("perm_poly_fast") {
    CHECK(perm_poly_fast(gen_cycle(6)) == IntPolynomial{4, 0, 9, 0, 6, 0, 1});
    CHECK(perm_poly_fast(gen_G1(2)) == perm_poly_fast(gen_cycle(6)));
    CHECK(kind_of([] { perm_poly_fast(gen_cube()); }) == ErrorKind::ContainsEvenK23);
    CHECK_THROWS_AS(perm_poly_fast(gen_cycle(5)), NotBipartiteError);
}

TEST_CASE("routes agree on generated and random graphs") {
    std::vector<Graph> graphs{gen_G1(2), gen_G1(3), gen_G1(4), gen_G2(1), gen_G2(2), gen_hex_chain(2, ""), gen_hex_chain(3, "L"), gen_theta(1, 3, 5)};
    std::mt19937_64 rng(79);
    while (graphs.size() < 40) {
        const Graph g = sample::planar_bipartite_block(rng, 12);
        if (is_block_1cr(g).resonant) graphs.push_back(g);
    }
    for (const Graph& g : graphs) {
        const IntPolynomial fast = perm_poly_fast(g);
        CHECK(fast == perm_poly_oracle(g));
        check_bipartite_structure(g, fast);
        const Coloring c = bipartition(g);
        if (c.part(0).size() == c.part(1).size()) CHECK(perm_poly_biadjacency(g) == fast);
        else CHECK(kind_of([&] { perm_poly_biadjacency(g); }) == ErrorKind::UnbalancedParts);
    }
}

TEST_CASE("biadjacency route examples") {
    CHECK(perm_poly_biadjacency(gen_path(2)) == IntPolynomial{1, 0, 1});
    CHECK(perm_poly_biadjacency(gen_cycle(4)) == IntPolynomial{4, 0, 4, 0, 1});
    const Graph c4 = gen_cycle(4);
    const Coloring col = bipartition(c4);
    const Orientation o = orient_graph(c4);
    const IntMatrix b = skew_biadjacency_matrix(c4, col, o);
    CHECK(b.transposed() * b == IntMatrix{{2, 0}, {0, 2}});
    CHECK(kind_of([] { perm_poly_biadjacency(gen_cube()); }) == ErrorKind::ContainsEvenK23);
    for (int s = 2; s <= 5; ++s) CHECK(perm_poly_biadjacency(gen_G1(s)) == closed_form_G1(s));
}

TEST_CASE("closed forms") {
    CHECK(closed_form_G1(2) == IntPolynomial{4, 0, 9, 0, 6, 0, 1});
    CHECK(closed_form_G1(3).degree() == 8);
    CHECK(closed_form_G1(3).coefficient(0) == 9);
    for (int s = 2; s <= 9; ++s) CHECK(closed_form_G1(s).coefficient(0) == s * s);
    CHECK(closed_form_G2(1) == IntPolynomial{9, 0, 15, 0, 7, 0, 1});
    CHECK(count_perfect_matchings(gen_G2(1)) == 3);
    for (int r = 1; r <= 6; ++r) CHECK(closed_form_G2(r).degree() == 4 * r + 2);
    // the rational form (1 + r/(x^2+2)) (x^2+2)^(2r-1) q(x) times (x^2+2) at a few points
    for (int r = 1; r <= 4; ++r)
        for (int x = 0; x <= 3; ++x) {
            const BigInt y = x * x + 2;
            BigInt lhs = closed_form_G2(r).evaluate(x);
            BigInt rhs = (y + r) * boost::multiprecision::pow(y, static_cast<unsigned>(2 * r - 2)) * (BigInt(x) * x * x * x + (3 + r) * x * x + r + 2);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("closed forms equal the fast route") {
    for (int s = 2; s <= 6; ++s) CHECK(perm_poly_fast(gen_G1(s)) == closed_form_G1(s));
    for (int r = 1; r <= 3; ++r) CHECK(perm_poly_fast(gen_G2(r)) == closed_form_G2(r));
    CHECK(perm_poly_fast(gen_G2(1)) == IntPolynomial{9, 0, 15, 0, 7, 0, 1});
}

TEST_CASE("structured determinant") {
    const std::vector<BigInt> one{5};
    CHECK(structured_det_Dn(one, 0) == 5);
    const std::vector<BigInt> three{3, 3, 3};
    CHECK(structured_det_Dn(three, 1) == 20);
    CHECK(structured_det_closed_form(three, 1) == 20);
    CHECK(determinant(constant_off_diagonal_matrix(three, 1)) == 20);
    const std::vector<BigInt> pole{2, 4, 7};
    CHECK(kind_of([&] { structured_det_closed_form(pole, 4); }) == ErrorKind::PoleInput);
    CHECK(structured_det_Dn(pole, 4) == determinant(constant_off_diagonal_matrix(pole, 4)));
    std::mt19937_64 rng(83);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<BigInt> a(6);
        for (auto& x : a) x = d(rng);
        const BigInt b = d(rng);
        if (std::find(a.begin(), a.end(), b) != a.end()) continue;
        CHECK(structured_det_closed_form(a, b) == oracle::leibniz_determinant(constant_off_diagonal_matrix(a, b)));
    }
}

TEST_CASE("sign flip of the characteristic polynomial") {
    CHECK(characteristic_polynomial(gen_cycle(6)) == IntPolynomial{-4, 0, 9, 0, -6, 0, 1});
    CHECK(borowiecki_transfer(gen_cycle(6)) == IntPolynomial{4, 0, 9, 0, 6, 0, 1});
    CHECK(kind_of([] { borowiecki_transfer(gen_cycle(4)); }) == ErrorKind::HasCycleLengthDivisibleBy4);
    CHECK(borowiecki_transfer(gen_hex_chain(2, "")) == perm_poly_fast(gen_hex_chain(2, "")));
    CHECK(borowiecki_transfer(gen_hex_chain(4, "B")) == perm_poly_fast(gen_hex_chain(4, "B")));
}

TEST_CASE("any orientation: det and per of induced subgraphs") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = sample::planar_bipartite_block(rng, 8);
        const Orientation o = oracle::random_orientation(g, rng);
        const IntMatrix skew = skew_adjacency_matrix(g, o);
        const IntMatrix adj = adjacency_matrix(g);
        const int n = g.num_vertices();
        for (int mask = 1; mask < 1 << n; ++mask) {
            std::vector<int> rows;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) rows.push_back(v);
            CHECK(determinant(skew.principal(rows)) <= permanent(adj.principal(rows)));
        }
    }
}

TEST_CASE("charpoly of a skew adjacency matrix equals pi iff every cycle is odd") {
    std::mt19937_64 rng(97);
    int agree = 0, differ = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = sample::planar_bipartite_block(rng, 10);
        const IntPolynomial pi = perm_poly_oracle(g);
        const Orientation o = oracle::random_orientation(g, rng);
        const bool odd = verify_all_cycles_odd(g, o);
        CHECK((charpoly(skew_adjacency_matrix(g, o)) == pi) == odd);
        (odd ? agree : differ) += 1;
    }
    CHECK(differ > 0);
}

TEST_CASE("odd-cycle orientations give one characteristic polynomial") {
    const Graph g = gen_G1(3);
    std::mt19937_64 rng(101);
    const IntPolynomial reference = perm_poly_fast(g);
    int hits = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Orientation o = oracle::random_orientation(g, rng);
        if (!verify_all_cycles_odd(g, o)) continue;
        ++hits;
        CHECK(charpoly(skew_adjacency_matrix(g, o)) == reference);
    }
    CHECK(hits > 0);
}
