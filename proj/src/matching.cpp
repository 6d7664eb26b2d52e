#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "permpoly/graph.h"

namespace permpoly {

namespace {

// Matches the lowest remaining vertex against each remaining neighbour;
// memoised on the set of remaining vertices.
class MatchingCounter {
public:
    explicit MatchingCounter(const Graph& g) : adj_(static_cast<std::size_t>(g.num_vertices()), 0) {
        if (g.num_vertices() > 64)
            throw Error(ErrorKind::TooLargeForOracle, "perfect matching count limited to n <= 64");
        for (const Edge& e : g.edges()) {
            adj_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
            adj_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
        }
    }

    BigInt count(std::uint64_t remaining) {
        if (remaining == 0) return 1;
        if (std::popcount(remaining) % 2 != 0) return 0;
        if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;
        const int v = std::countr_zero(remaining);
        const std::uint64_t rest = remaining & ~(std::uint64_t{1} << v);
        std::uint64_t options = adj_[static_cast<std::size_t>(v)] & rest;
        BigInt total = 0;
        while (options) {
            const int w = std::countr_zero(options);
            options &= options - 1;
            total += count(rest & ~(std::uint64_t{1} << w));
        }
        memo_.emplace(remaining, total);
        return total;
    }

private:
    std::vector<std::uint64_t> adj_;
    std::unordered_map<std::uint64_t, BigInt> memo_;
};

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

BigInt count_perfect_matchings(const Graph& g) {
    if (g.num_vertices() % 2 != 0) return 0;
    MatchingCounter counter(g);
    return counter.count(full_mask(g.num_vertices()));
}

bool has_perfect_matching(const Graph& g) { return count_perfect_matchings(g) > 0; }

bool is_nice_cycle(const Graph& g, const Cycle& c) {
    return has_perfect_matching(remove_vertices(g, c.vertices).graph);
}

bool is_elementary(const Graph& g) {
    if (!has_perfect_matching(g)) return false;
    for (const Edge& e : g.edges()) {
        const Vertex pair[] = {e.u, e.v};
        if (!has_perfect_matching(remove_vertices(g, pair).graph)) return false;
    }
    return true;
}

}  // namespace permpoly
