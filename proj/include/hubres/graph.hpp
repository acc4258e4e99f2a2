#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hubres {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Simple undirected graph, no self-loops, no multi-edges, and every vertex
// has at least one neighbor. Vertices are 0..n-1. Immutable once built.
class Graph {
  public:
    // Throws std::invalid_argument on n < 2, vertex ids out of range,
    // self-loops, duplicate edges, or isolated vertices.
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool adjacent(int v, int w) const;
    bool is_regular() const;

    Matrix adjacency_matrix() const;
    Vector degree_vector() const;

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;       // each stored with v < w
    std::vector<std::vector<int>> adj_;            // sorted neighbor lists
};

// Connected-component labels (0-based), one per vertex, plus the count.
struct Components {
    int count;
    std::vector<int> label;
};

Components connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Longest shortest-path length. Throws std::invalid_argument if disconnected.
int diameter(const Graph& g);

// Minimum number of edges whose removal disconnects the graph, computed as
// the minimum over t of a unit-capacity max-flow from a fixed source.
// Throws std::invalid_argument if disconnected.
int edge_connectivity(const Graph& g);

// Degree extremes, Zagreb-type sums, neighborhood degree extremes, triangle
// counts, and (for connected graphs) diameter and edge connectivity.
struct GraphStats {
    int n = 0;
    int m = 0;
    int min_degree = 0;                 // delta
    int max_degree = 0;                 // Delta
    int second_max_degree = 0;          // second entry of the sorted sequence
    double degree_square_sum = 0.0;     // sum of squared degrees
    std::vector<int> min_neighbor_degree;
    std::vector<int> max_neighbor_degree;
    std::vector<int> triangles;         // triangles through each vertex
    int components = 0;
    bool regular = false;
    std::optional<int> diameter;
    std::optional<int> edge_connectivity;
};

GraphStats graph_stats(const Graph& g);

}  // namespace hubres
