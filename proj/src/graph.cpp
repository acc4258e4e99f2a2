#include "hubres/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace hubres {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 2)
        throw std::invalid_argument("graph needs at least 2 vertices, got " + std::to_string(n));
    std::set<std::pair<int, int>> seen;
    edges_.reserve(edges.size());
    for (auto [v, w] : edges) {
        if (v < 0 || v >= n || w < 0 || w >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(v) +
                                        "," + std::to_string(w) + ")");
        if (v == w)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
        if (v > w) std::swap(v, w);
        if (!seen.insert({v, w}).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(v) + "," +
                                        std::to_string(w) + ")");
        edges_.emplace_back(v, w);
    }
    std::sort(edges_.begin(), edges_.end());
    adj_.assign(n_, {});
    for (auto [v, w] : edges_) {
        adj_[v].push_back(w);
        adj_[w].push_back(v);
    }
    for (int v = 0; v < n_; ++v) {
        if (adj_[v].empty())
            throw std::invalid_argument("isolated vertex " + std::to_string(v));
        std::sort(adj_[v].begin(), adj_[v].end());
    }
}

bool Graph::adjacent(int v, int w) const {
    const auto& nb = adj_[v];
    return std::binary_search(nb.begin(), nb.end(), w);
}

bool Graph::is_regular() const {
    for (int v = 1; v < n_; ++v)
        if (degree(v) != degree(0)) return false;
    return true;
}

Matrix Graph::adjacency_matrix() const {
    Matrix a = Matrix::Zero(n_, n_);
    for (auto [v, w] : edges_) {
        a(v, w) = 1.0;
        a(w, v) = 1.0;
    }
    return a;
}

Vector Graph::degree_vector() const {
    Vector k(n_);
    for (int v = 0; v < n_; ++v) k(v) = static_cast<double>(degree(v));
    return k;
}

Components connected_components(const Graph& g) {
    const int n = g.order();
    Components c{0, std::vector<int>(n, -1)};
    for (int s = 0; s < n; ++s) {
        if (c.label[s] != -1) continue;
        std::deque<int> queue{s};
        c.label[s] = c.count;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (c.label[w] == -1) {
                    c.label[w] = c.count;
                    queue.push_back(w);
                }
            }
        }
        ++c.count;
    }
    return c;
}

bool is_connected(const Graph& g) { return connected_components(g).count == 1; }

namespace {

// Breadth-first distances from s; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int s) {
    std::vector<int> dist(g.order(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

// Unit-capacity max flow from s to t by repeated shortest augmenting paths.
// Residual capacities live in a dense matrix; fine at the sizes we handle.
int unit_max_flow(const Graph& g, int s, int t) {
    const int n = g.order();
    std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
    for (auto [v, w] : g.edges()) {
        cap[v][w] = 1;
        cap[w][v] = 1;
    }
    int flow = 0;
    for (;;) {
        std::vector<int> parent(n, -1);
        parent[s] = s;
        std::deque<int> queue{s};
        while (!queue.empty() && parent[t] == -1) {
            int v = queue.front();
            queue.pop_front();
            for (int w = 0; w < n; ++w) {
                if (cap[v][w] > 0 && parent[w] == -1) {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if (parent[t] == -1) return flow;
        for (int v = t; v != s; v = parent[v]) {
            cap[parent[v]][v] -= 1;
            cap[v][parent[v]] += 1;
        }
        ++flow;
    }
}

}  // namespace

int diameter(const Graph& g) {
    int best = 0;
    for (int s = 0; s < g.order(); ++s) {
        auto dist = bfs_distances(g, s);
        for (int d : dist) {
            if (d == -1) throw std::invalid_argument("diameter requires a connected graph");
            best = std::max(best, d);
        }
    }
    return best;
}

int edge_connectivity(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("edge connectivity requires a connected graph");
    int best = g.order();
    for (int t = 1; t < g.order(); ++t) best = std::min(best, unit_max_flow(g, 0, t));
    return best;
}

GraphStats graph_stats(const Graph& g) {
    const int n = g.order();
    GraphStats s;
    s.n = n;
    s.m = g.size();

    std::vector<int> degs(n);
    for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
    std::vector<int> sorted = degs;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    s.min_degree = sorted.back();
    s.max_degree = sorted.front();
    s.second_max_degree = sorted[1];
    s.degree_square_sum = 0.0;
    for (int d : degs) s.degree_square_sum += static_cast<double>(d) * d;
    s.regular = (s.min_degree == s.max_degree);

    s.min_neighbor_degree.resize(n);
    s.max_neighbor_degree.resize(n);
    s.triangles.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        int lo = n, hi = 0;
        const auto& nb = g.neighbors(v);
        for (int w : nb) {
            lo = std::min(lo, degs[w]);
            hi = std::max(hi, degs[w]);
        }
        s.min_neighbor_degree[v] = lo;
        s.max_neighbor_degree[v] = hi;
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (g.adjacent(nb[i], nb[j])) ++s.triangles[v];
    }

    s.components = connected_components(g).count;
    if (s.components == 1) {
        s.diameter = diameter(g);
        s.edge_connectivity = edge_connectivity(g);
    }
    return s;
}

}  // namespace hubres
