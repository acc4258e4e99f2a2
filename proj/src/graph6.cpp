#include "hubres/graph6.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hubres {

Graph parse_graph6(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty graph6 token");
    for (char c : token)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6 byte out of range in \"" + token + "\"");
    const int n = token[0] - 63;
    if (n < 2 || n > 62)
        throw std::invalid_argument("graph6 order " + std::to_string(n) +
                                    " outside supported range 2..62");
    const int bits = n * (n - 1) / 2;
    const size_t need = 1 + (bits + 5) / 6;
    if (token.size() != need)
        throw std::invalid_argument("graph6 token \"" + token + "\" has wrong length for n=" +
                                    std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    int idx = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++idx) {
            const int byte = token[1 + idx / 6] - 63;
            const int bit = (byte >> (5 - idx % 6)) & 1;
            if (bit) edges.emplace_back(row, col);
        }
    }
    // Padding bits must be zero.
    for (int i = bits; i < static_cast<int>(need - 1) * 6; ++i) {
        const int byte = token[1 + i / 6] - 63;
        if ((byte >> (5 - i % 6)) & 1)
            throw std::invalid_argument("graph6 token \"" + token + "\" has nonzero padding");
    }
    return Graph(n, std::move(edges));
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 writer supports n <= 62");
    const int bits = n * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, char(63));
    out[0] = static_cast<char>(63 + n);
    int idx = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++idx) {
            if (g.adjacent(row, col)) out[1 + idx / 6] += (1 << (5 - idx % 6));
        }
    }
    return out;
}

std::vector<std::string> read_graph6_lines(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        tokens.push_back(line);
    }
    return tokens;
}

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    int max_id = -1;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream fields(line);
        long u, w;
        if (!(fields >> u)) continue;  // blank or comment-only line
        if (!(fields >> w))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected two vertex ids");
        std::string extra;
        if (fields >> extra)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing token \"" +
                                        extra + "\"");
        if (u < 0 || w < 0)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": negative vertex id");
        if (u == w)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": self-loop at " +
                                        std::to_string(u));
        int a = static_cast<int>(std::min(u, w)), b = static_cast<int>(std::max(u, w));
        max_id = std::max(max_id, b);
        if (seen.insert({a, b}).second) edges.emplace_back(a, b);
    }
    if (edges.empty()) throw std::invalid_argument("edge list contains no edges");
    // The Graph constructor rejects any id in 0..max_id with no incident
    // edge, so gaps in the numbering surface as errors rather than being
    // silently compacted.
    return Graph(max_id + 1, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open edge list file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

}  // namespace hubres
