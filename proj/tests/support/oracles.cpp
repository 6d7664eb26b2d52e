#include "support/oracles.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

template <class Entry, class Combine>
void for_each_permutation(int n, Combine&& visit) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        visit(perm, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

BigInt leibniz_determinant(const IntMatrix& m) {
    if (m.order() > 9) throw std::invalid_argument("leibniz_determinant: n too large");
    BigInt sum = 0;
    for_each_permutation<BigInt>(m.order(), [&](const std::vector<int>& p, int sign) {
        BigInt term = sign;
        for (int i = 0; i < m.order() && term != 0; ++i) term *= m(i, p[static_cast<std::size_t>(i)]);
        sum += term;
    });
    return sum;
}

BigInt naive_permanent(const IntMatrix& m) {
    if (m.order() > 9) throw std::invalid_argument("naive_permanent: n too large");
    BigInt sum = 0;
    for_each_permutation<BigInt>(m.order(), [&](const std::vector<int>& p, int) {
        BigInt term = 1;
        for (int i = 0; i < m.order() && term != 0; ++i) term *= m(i, p[static_cast<std::size_t>(i)]);
        sum += term;
    });
    return sum;
}

IntPolynomial permutation_perm_poly(const Graph& g) {
    const int n = g.num_vertices();
    if (n > 9) throw std::invalid_argument("permutation_perm_poly: n too large");
    IntPolynomial sum;
    const IntPolynomial x{0, 1};
    for_each_permutation<IntPolynomial>(n, [&](const std::vector<int>& p, int) {
        IntPolynomial term{1};
        for (int i = 0; i < n; ++i) {
            const int j = p[static_cast<std::size_t>(i)];
            if (i == j) term *= x;
            else if (g.adjacent(i, j)) term *= IntPolynomial{-1};
            else return;
        }
        sum += term;
    });
    return sum;
}

namespace {

// all simple paths from s to t with at least two edges, as interior bitmasks
void collect_paths(const Graph& g, int s, int t, int v, std::uint64_t used, int len, std::vector<std::uint64_t>& out) {
    for (int w : g.neighbors(v)) {
        if (w == t) {
            if (len + 1 >= 2) out.push_back(used & ~(1ULL << s));
            continue;
        }
        if (used >> w & 1ULL) continue;
        collect_paths(g, s, t, w, used | 1ULL << w, len + 1, out);
    }
}

}  // namespace

bool has_k23_subdivision(const Graph& g) {
    const int n = g.num_vertices();
    if (n > 20) throw std::invalid_argument("has_k23_subdivision: n too large");
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.degree(s) < 3 || g.degree(t) < 3) continue;
            std::vector<std::uint64_t> paths;
            collect_paths(g, s, t, s, 1ULL << s, 0, paths);
            std::sort(paths.begin(), paths.end());
            paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
            for (std::size_t a = 0; a < paths.size(); ++a)
                for (std::size_t b = a + 1; b < paths.size(); ++b) {
                    if (paths[a] & paths[b]) continue;
                    for (std::size_t c = b + 1; c < paths.size(); ++c)
                        if (!(paths[c] & (paths[a] | paths[b]))) return true;
                }
        }
    return false;
}

namespace {

bool connected_without(const Graph& g, int removed) {
    const int n = g.num_vertices();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int start = removed == 0 ? 1 : 0;
    if (start >= n) return true;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (w != removed && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n - (removed >= 0 ? 1 : 0);
}

}  // namespace

bool two_connected_by_deletion(const Graph& g) {
    if (g.num_vertices() < 3 || !connected_without(g, -1)) return false;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!connected_without(g, v)) return false;
    return true;
}

namespace {

BigInt match_rec(const Graph& g, std::vector<char>& used) {
    int v = 0;
    while (v < g.num_vertices() && used[static_cast<std::size_t>(v)]) ++v;
    if (v == g.num_vertices()) return 1;
    used[static_cast<std::size_t>(v)] = 1;
    BigInt total = 0;
    for (int w : g.neighbors(v))
        if (!used[static_cast<std::size_t>(w)]) {
            used[static_cast<std::size_t>(w)] = 1;
            total += match_rec(g, used);
            used[static_cast<std::size_t>(w)] = 0;
        }
    used[static_cast<std::size_t>(v)] = 0;
    return total;
}

}  // namespace

BigInt naive_matchings(const Graph& g) {
    std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
    return match_rec(g, used);
}

permpoly::Orientation random_orientation(const Graph& g, std::mt19937_64& rng) {
    permpoly::Orientation o;
    std::bernoulli_distribution flip(0.5);
    for (const auto& e : g.edges()) o.direction.push_back(flip(rng) ? std::pair(e.u, e.v) : std::pair(e.v, e.u));
    return o;
}

BigInt trace_of_power(const Graph& g, int k) {
    const IntMatrix a = permpoly::adjacency_matrix(g);
    IntMatrix p = IntMatrix::identity(g.num_vertices());
    for (int i = 0; i < k; ++i) p = p * a;
    BigInt t = 0;
    for (int i = 0; i < g.num_vertices(); ++i) t += p(i, i);
    return t;
}

}  // namespace oracle
