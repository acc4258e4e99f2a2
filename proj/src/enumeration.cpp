#include "hubres/enumeration.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <unordered_set>

#include "hubres/graph6.hpp"

namespace hubres {

namespace {

inline int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j

inline bool mask_edge(GraphMask mask, int i, int j) {
    if (i > j) std::swap(i, j);
    return (mask >> pair_bit(i, j)) & 1u;
}

std::array<int, 8> mask_degrees(GraphMask mask, int n) {
    std::array<int, 8> deg{};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask_edge(mask, i, j)) {
                ++deg[i];
                ++deg[j];
            }
    return deg;
}

bool mask_connected(GraphMask mask, int n) {
    std::array<std::uint32_t, 8> nb{};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask_edge(mask, i, j)) {
                nb[i] |= 1u << j;
                nb[j] |= 1u << i;
            }
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier & (1u << v)) next |= nb[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1u;
}

// Relabeling search over degree-ascending labelings: new labels are handed
// out one at a time, only to vertices whose degree matches the sorted
// degree sequence at that position, and the upper-triangle bitstring grows
// column by column so partial labelings compare against a reference
// bitstring prefix (bit (0,1) is the most significant).
struct LabelSearch {
    int n;
    GraphMask mask;
    std::array<int, 8> deg;
    std::array<int, 8> sorted_deg;
    std::array<int, 8> chosen{};
    std::array<bool, 8> used{};

    LabelSearch(GraphMask m, int order) : n(order), mask(m), deg(mask_degrees(m, order)) {
        for (int v = 0; v < n; ++v) sorted_deg[v] = deg[v];
        std::sort(sorted_deg.begin(), sorted_deg.begin() + n);
    }

    // Bits of column j for `candidate` against chosen[0..j-1], packed into
    // mask positions.
    GraphMask column_bits(int j, int candidate) const {
        GraphMask bits = 0;
        for (int i = 0; i < j; ++i)
            if (mask_edge(mask, chosen[i], candidate)) bits |= 1u << pair_bit(i, j);
        return bits;
    }

    // Lexicographic comparison of column-j bits against a reference value,
    // earlier pairs more significant. Returns -1/0/+1.
    int compare_column(int j, GraphMask bits, GraphMask ref) const {
        for (int i = 0; i < j; ++i) {
            const GraphMask probe = GraphMask(1) << pair_bit(i, j);
            const bool a = bits & probe, b = ref & probe;
            if (a != b) return b ? -1 : +1;  // 0 where ref has 1: smaller
        }
        return 0;
    }

    // Complete columns start..n-1 greedily, always taking the candidate
    // with the smallest column bits. Achievable, close to minimal, and any
    // strictly smaller prefix stays strictly smaller whatever follows.
    GraphMask greedy_complete(int start, GraphMask prefix) {
        for (int j = start; j < n; ++j) {
            int pick = -1;
            GraphMask pick_bits = 0;
            for (int v = 0; v < n; ++v) {
                if (used[v] || deg[v] != sorted_deg[j]) continue;
                const GraphMask bits = column_bits(j, v);
                if (pick == -1 || compare_column(j, bits, pick_bits) < 0) {
                    pick = v;
                    pick_bits = bits;
                }
            }
            chosen[j] = pick;
            used[pick] = true;
            prefix |= pick_bits;
        }
        for (int j = start; j < n; ++j) used[chosen[j]] = false;
        return prefix;
    }

    bool found_equal = false;
    std::optional<GraphMask> smaller;

    // Look for a labeling strictly below `ref`. Branches tie with ref until
    // a column goes strictly smaller; then one greedy completion yields an
    // achievable witness and the search stops. Reaching depth n while tied
    // sets found_equal.
    void dfs(int j, GraphMask prefix, GraphMask ref) {
        if (smaller) return;
        if (j == n) {
            found_equal = true;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || deg[v] != sorted_deg[j]) continue;
            const GraphMask bits = column_bits(j, v);
            const int cmp = compare_column(j, bits, ref);
            if (cmp > 0) continue;
            if (cmp < 0) {
                chosen[j] = v;
                used[v] = true;
                smaller = greedy_complete(j + 1, prefix | bits);
                used[v] = false;
                return;
            }
            chosen[j] = v;
            used[v] = true;
            dfs(j + 1, prefix | bits, ref);
            used[v] = false;
            if (smaller) return;
        }
    }

    std::optional<GraphMask> find_below(GraphMask ref) {
        found_equal = false;
        smaller.reset();
        used.fill(false);
        dfs(0, 0, ref);
        return smaller;
    }
};

}  // namespace

Graph mask_to_graph(GraphMask mask, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask_edge(mask, i, j)) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

GraphMask graph_to_mask(const Graph& g) {
    if (g.order() > 8) throw std::invalid_argument("bitmask form supports n <= 8");
    GraphMask mask = 0;
    for (auto [v, w] : g.edges()) mask |= 1u << pair_bit(v, w);
    return mask;
}

GraphMask canonical_form(GraphMask mask, int n) {
    LabelSearch search(mask, n);
    GraphMask best = search.greedy_complete(0, 0);
    while (auto improved = search.find_below(best)) best = *improved;
    return best;
}

bool is_canonical(GraphMask mask, int n) {
    LabelSearch search(mask, n);
    const auto below = search.find_below(mask);
    return !below && search.found_equal;
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 2 || n > 7)
        throw std::invalid_argument(
            "built-in enumeration covers 2 <= n <= 7; larger orders come from a corpus file");
    std::vector<Graph> out;
    const GraphMask end = GraphMask(1) << (n * (n - 1) / 2);
    for (GraphMask mask = 0; mask < end; ++mask) {
        if (!mask_connected(mask, n)) continue;
        if (!is_canonical(mask, n)) continue;
        out.push_back(mask_to_graph(mask, n));
    }
    return out;
}

std::int64_t count_connected_classes_bruteforce(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("brute-force bucketing is for 2 <= n <= 6");
    std::unordered_set<GraphMask> classes;
    const GraphMask end = GraphMask(1) << (n * (n - 1) / 2);
    for (GraphMask mask = 0; mask < end; ++mask) {
        if (!mask_connected(mask, n)) continue;
        classes.insert(canonical_form(mask, n));
    }
    return static_cast<std::int64_t>(classes.size());
}

std::vector<std::string> generate_connected_corpus(int n) {
    if (n < 2 || n > 8) throw std::invalid_argument("corpus generation covers 2 <= n <= 8");
    // Grow one vertex at a time: every graph on k vertices arises from some
    // graph on k-1 vertices by attaching a new last vertex to a subset.
    std::vector<GraphMask> level{0u};  // the 1-vertex graph
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<GraphMask> next;
        for (GraphMask base : level) {
            for (std::uint32_t subset = 0; subset < (1u << (k - 1)); ++subset) {
                GraphMask grown = base;
                for (int i = 0; i < k - 1; ++i)
                    if (subset & (1u << i)) grown |= 1u << pair_bit(i, k - 1);
                next.insert(canonical_form(grown, k));
            }
        }
        level.assign(next.begin(), next.end());
        std::sort(level.begin(), level.end());
    }
    std::vector<std::string> tokens;
    for (GraphMask mask : level) {
        if (!mask_connected(mask, n)) continue;
        tokens.push_back(write_graph6(mask_to_graph(mask, n)));
    }
    std::sort(tokens.begin(), tokens.end());
    return tokens;
}

CorpusValidation validate_corpus(const std::vector<std::string>& tokens, int expected_n) {
    CorpusValidation v;
    v.n = expected_n;
    v.all_connected = true;
    v.all_distinct = true;
    std::unordered_set<GraphMask> forms;
    for (const auto& token : tokens) {
        const Graph g = parse_graph6(token);
        if (g.order() != expected_n)
            throw std::invalid_argument("corpus token \"" + token + "\" has order " +
                                        std::to_string(g.order()) + ", expected " +
                                        std::to_string(expected_n));
        ++v.count;
        if (!is_connected(g)) v.all_connected = false;
        if (!forms.insert(canonical_form(graph_to_mask(g), g.order())).second)
            v.all_distinct = false;
    }
    return v;
}

}  // namespace hubres
