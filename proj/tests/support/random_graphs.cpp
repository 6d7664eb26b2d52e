#include "support/random_graphs.h"

#include <algorithm>
#include <numeric>

#include "permpoly/embedding.h"

namespace sample {

using permpoly::Graph;
using permpoly::Vertex;

namespace {

Graph relabel(int n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::mt19937_64& rng) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> out;
    for (auto [u, v] : edges) out.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    std::shuffle(out.begin(), out.end(), rng);
    return permpoly::build_graph(n, out);
}

}  // namespace

Graph planar_bipartite_block(std::mt19937_64& rng, int max_n) {
    std::uniform_int_distribution<int> half(2, std::max(2, std::min(4, max_n / 2)));
    const int len = 2 * half(rng);
    std::vector<int> color;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < len; ++i) {
        color.push_back(i % 2);
        edges.emplace_back(i, (i + 1) % len);
    }
    int n = len;
    std::uniform_int_distribution<int> ear_count(0, 6);
    const int ears = ear_count(rng);
    for (int attempt = 0, added = 0; added < ears && attempt < 40; ++attempt) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        const Vertex x = pick(rng), y = pick(rng);
        if (x == y) continue;
        const bool differ = color[static_cast<std::size_t>(x)] != color[static_cast<std::size_t>(y)];
        // ear length parity must keep the colouring proper
        std::vector<int> lengths;
        for (int l = 1; l <= 5; ++l)
            if ((l % 2 == 1) == differ && n + l - 1 <= max_n) lengths.push_back(l);
        if (lengths.empty()) continue;
        const int l = lengths[std::uniform_int_distribution<std::size_t>(0, lengths.size() - 1)(rng)];
        if (l == 1 && std::find_if(edges.begin(), edges.end(), [&](auto e) { return (e.first == x && e.second == y) || (e.first == y && e.second == x); }) != edges.end())
            continue;
        auto trial = edges;
        auto trial_color = color;
        Vertex prev = x;
        for (int i = 1; i < l; ++i) {
            const Vertex w = n + i - 1;
            trial_color.push_back(1 - trial_color[static_cast<std::size_t>(prev)]);
            trial.emplace_back(prev, w);
            prev = w;
        }
        trial.emplace_back(prev, y);
        const int trial_n = n + l - 1;
        if (!permpoly::is_planar(permpoly::build_graph(trial_n, trial))) continue;
        edges = std::move(trial);
        color = std::move(trial_color);
        n = trial_n;
        ++added;
    }
    return relabel(n, edges, rng);
}

std::vector<std::vector<long long>> random_entries(std::mt19937_64& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
    for (auto& row : m)
        for (auto& x : row) x = d(rng);
    return m;
}

}  // namespace sample
