#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hubres/graph.hpp"

namespace hubres {

// Graphs on n vertices are carried as upper-triangle bitmasks in graph6
// bit order: bit j(j-1)/2 + i holds the pair (i,j), i < j.
using GraphMask = std::uint32_t;

Graph mask_to_graph(GraphMask mask, int n);
GraphMask graph_to_mask(const Graph& g);

// A labeled graph is canonical when no degree-ascending relabeling produces
// a lexicographically smaller upper-triangle bitstring (bit (0,1) first).
// Isomorphic graphs share one canonical form.
GraphMask canonical_form(GraphMask mask, int n);
bool is_canonical(GraphMask mask, int n);

// All connected graphs on n vertices, one per isomorphism class, by
// scanning bitmasks in increasing order and keeping canonical connected
// ones. Deliberately capped at n <= 7; larger orders come from a corpus
// file instead.
std::vector<Graph> enumerate_connected(int n);

// Slow cross-check: bucket every labeled connected graph on n vertices by
// canonical form and return the bucket count. Intended for n <= 6.
std::int64_t count_connected_classes_bruteforce(int n);

// Connected graphs on n <= 8 vertices as graph6 tokens, built by repeated
// one-vertex extension with canonical deduplication, sorted by token. This
// is how a corpus file for n = 8 is produced offline.
std::vector<std::string> generate_connected_corpus(int n);

// Count and well-formedness check for a corpus: every token parses, every
// graph has the expected order and is connected, canonical forms are
// pairwise distinct.
struct CorpusValidation {
    int n = 0;
    std::int64_t count = 0;
    bool all_connected = false;
    bool all_distinct = false;
};

CorpusValidation validate_corpus(const std::vector<std::string>& tokens, int expected_n);

}  // namespace hubres
