#include <doctest.h>

#include <algorithm>
#include <set>

#include "hubres/enumeration.hpp"
#include "hubres/graph6.hpp"
#include "support.hpp"

using namespace hubres;
namespace tg = hubres::testing;

namespace {

// relabel a graph by a permutation drawn from rng (Fisher-Yates)
Graph relabel(const Graph& g, SplitMix64& rng) {
    std::vector<int> perm(g.order());
    for (int i = 0; i < g.order(); ++i) perm[i] = i;
    for (int i = g.order() - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [v, w] : g.edges()) edges.push_back({perm[v], perm[w]});
    return Graph(g.order(), edges);
}

}  // namespace

TEST_SUITE_BEGIN("enumeration");

TEST_CASE("mask round trip") {
    SplitMix64 rng(10101);
    for (int n = 2; n <= 7; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            const Graph g = tg::random_graph(n, 0.5, rng);
            const GraphMask mask = graph_to_mask(g);
            const Graph back = mask_to_graph(mask, n);
            CHECK(back.edges() == g.edges());
            CHECK(graph_to_mask(back) == mask);
        }
    }
}

TEST_CASE("canonical form is a relabeling invariant") {
    SplitMix64 rng(232323);
    for (int n = 3; n <= 7; ++n) {
        for (int rep = 0; rep < 40; ++rep) {
            const Graph g = tg::random_graph(n, 0.5, rng);
            const GraphMask base = canonical_form(graph_to_mask(g), n);
            for (int shuffle = 0; shuffle < 5; ++shuffle) {
                const Graph h = relabel(g, rng);
                CHECK(canonical_form(graph_to_mask(h), n) == base);
            }
        }
    }
}

TEST_CASE("exactly one labeled representative per class is canonical") {
    // every canonical form reproduces itself, and a mask is flagged
    // canonical exactly when it equals its own canonical form
    SplitMix64 rng(777777);
    for (int n = 3; n <= 6; ++n) {
        for (int rep = 0; rep < 30; ++rep) {
            const Graph g = tg::random_graph(n, 0.5, rng);
            const GraphMask mask = graph_to_mask(g);
            const GraphMask canon = canonical_form(mask, n);
            CHECK(canonical_form(canon, n) == canon);
            CHECK(is_canonical(canon, n));
            CHECK(is_canonical(mask, n) == (mask == canon));
        }
    }
}

TEST_CASE("connected graph counts by isomorphism class") {
    CHECK(enumerate_connected(2).size() == 1);
    CHECK(enumerate_connected(3).size() == 2);
    CHECK(enumerate_connected(4).size() == 6);
    CHECK(enumerate_connected(5).size() == 21);
    CHECK(enumerate_connected(6).size() == 112);
    CHECK_THROWS_AS(enumerate_connected(8), std::invalid_argument);
}

TEST_CASE("mask-scan enumeration matches the labeled brute force") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(count_connected_classes_bruteforce(n) ==
              static_cast<std::int64_t>(enumerate_connected(n).size()));
    }
}

TEST_CASE("every enumerated graph is connected, canonical and distinct") {
    const auto graphs = enumerate_connected(6);
    std::set<GraphMask> seen;
    for (const Graph& g : graphs) {
        CHECK(is_connected(g));
        const GraphMask mask = graph_to_mask(g);
        CHECK(is_canonical(mask, 6));
        CHECK(seen.insert(canonical_form(mask, 6)).second);
    }
}

TEST_CASE("corpus generation by vertex extension") {
    for (int n = 2; n <= 6; ++n) {
        const auto tokens = generate_connected_corpus(n);
        CHECK(std::is_sorted(tokens.begin(), tokens.end()));

        // same classes as the mask scan
        std::set<std::string> expected;
        for (const Graph& g : enumerate_connected(n))
            expected.insert(write_graph6(mask_to_graph(canonical_form(graph_to_mask(g), n), n)));
        CHECK(std::set<std::string>(tokens.begin(), tokens.end()) == expected);

        const CorpusValidation v = validate_corpus(tokens, n);
        CHECK(v.n == n);
        CHECK(v.count == static_cast<std::int64_t>(tokens.size()));
        CHECK(v.all_connected);
        CHECK(v.all_distinct);
    }
}

TEST_CASE("corpus validation flags defects") {
    auto tokens = generate_connected_corpus(5);
    tokens.push_back(tokens.front());  // duplicate class
    const CorpusValidation dup = validate_corpus(tokens, 5);
    CHECK_FALSE(dup.all_distinct);

    CHECK_THROWS_AS(validate_corpus({"Bg"}, 5), std::invalid_argument);  // wrong order
    CHECK_THROWS_AS(validate_corpus({"not graph6 at all"}, 5), std::invalid_argument);
}

TEST_SUITE_END();
