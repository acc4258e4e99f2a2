#pragma once

#include <utility>
#include <vector>

#include "hubres/graph.hpp"
#include "hubres/util.hpp"

namespace hubres::testing {

inline Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, std::move(e));
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) e.emplace_back(v, w);
    return Graph(n, std::move(e));
}

inline Graph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph(leaves + 1, std::move(e));
}

inline Graph complete_bipartite(int p, int q) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < p; ++v)
        for (int w = 0; w < q; ++w) e.emplace_back(v, p + w);
    return Graph(p + q, std::move(e));
}

// Erdos-Renyi style graph without isolated vertices; resamples until valid.
inline Graph random_graph(int n, double p, SplitMix64& rng) {
    for (;;) {
        std::vector<std::pair<int, int>> e;
        std::vector<int> deg(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                if (rng.next_double() < p) {
                    e.emplace_back(v, w);
                    ++deg[v];
                    ++deg[w];
                }
        bool ok = true;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 0) ok = false;
        if (ok) return Graph(n, std::move(e));
    }
}

inline Graph random_connected_graph(int n, double p, SplitMix64& rng) {
    for (;;) {
        Graph g = random_graph(n, p, rng);
        if (is_connected(g)) return g;
    }
}

// Disjoint union of random connected blocks (every block has >= 2 vertices).
inline Graph random_disconnected_graph(int blocks, int block_size, double p, SplitMix64& rng) {
    std::vector<std::pair<int, int>> e;
    int base = 0;
    for (int b = 0; b < blocks; ++b) {
        Graph g = random_connected_graph(block_size, p, rng);
        for (auto [v, w] : g.edges()) e.emplace_back(base + v, base + w);
        base += block_size;
    }
    return Graph(base, std::move(e));
}

}  // namespace hubres::testing
