#include "evictlab/graph_io.hpp"

#include <istream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace evictlab {

namespace {

constexpr int g6_bias = 63;

// Decodes N(n) and returns the offset where the adjacency bytes start.
std::pair<int, size_t> parse_g6_order(std::string_view text) {
    if (text.empty()) throw ParseError(ParseError::Kind::bad_header, "graph6: empty record");
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw ParseError(ParseError::Kind::too_large, "graph6: 8-byte order form exceeds 64-vertex capacity");
        if (text.size() < 4) throw ParseError(ParseError::Kind::truncated, "graph6: truncated order field");
        long n = 0;
        for (int i = 1; i <= 3; ++i) {
            unsigned char c = static_cast<unsigned char>(text[static_cast<size_t>(i)]);
            if (c < 63 || c > 126) throw ParseError(ParseError::Kind::bad_char, "graph6: order byte out of range");
            n = (n << 6) | (c - g6_bias);
        }
        if (n < 63) throw ParseError(ParseError::Kind::bad_header, "graph6: long order form used for n < 63");
        if (n > max_vertices)
            throw ParseError(ParseError::Kind::too_large, "graph6: n = " + std::to_string(n) + " exceeds 64-vertex capacity");
        return {static_cast<int>(n), 4};
    }
    if (c0 < 63 || c0 > 126) throw ParseError(ParseError::Kind::bad_header, "graph6: bad order byte");
    return {c0 - g6_bias, 1};
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    auto [n, offset] = parse_g6_order(text);
    if (n < 1) throw ParseError(ParseError::Kind::bad_header, "graph6: empty graph (n = 0) not supported");

    long pairs = static_cast<long>(n) * (n - 1) / 2;
    size_t expect = static_cast<size_t>((pairs + 5) / 6);
    if (text.size() - offset < expect)
        throw ParseError(ParseError::Kind::truncated, "graph6: record shorter than adjacency data");
    if (text.size() - offset > expect)
        throw ParseError(ParseError::Kind::bad_format, "graph6: trailing bytes after adjacency data");

    Graph g(n);
    long bit = 0;
    for (size_t i = offset; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError(ParseError::Kind::bad_char, "graph6: adjacency byte out of range");
        int group = c - g6_bias;
        for (int b = 5; b >= 0 && bit < pairs; --b, ++bit) {
            if (!(group >> b & 1)) continue;
            // bit index -> column-major upper-triangle pair (u, v)
            long rem = bit;
            int v = 1;
            while (rem >= v) rem -= v, ++v;
            g.add_edge(static_cast<int>(rem), v);
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    int n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + g6_bias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + g6_bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + g6_bias));
        out.push_back(static_cast<char>((n & 63) + g6_bias));
    }
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = group << 1 | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + g6_bias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + g6_bias));
    return out;
}

std::vector<Graph> parse_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind(">>", 0) == 0) continue;  // format header
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

Graph parse_edge_list(std::istream& in) {
    long n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError(ParseError::Kind::bad_header, "edge list: missing \"n m\" header");
    if (n < 1) throw ParseError(ParseError::Kind::bad_header, "edge list: vertex count must be positive");
    if (n > max_vertices)
        throw ParseError(ParseError::Kind::too_large, "edge list: n = " + std::to_string(n) + " exceeds 64-vertex capacity");
    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        long u = 0, v = 0;
        if (!(in >> u >> v)) throw ParseError(ParseError::Kind::truncated, "edge list: fewer edges than header declares");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(ParseError::Kind::bad_format, "edge list: endpoint out of range");
        if (u == v) throw ParseError(ParseError::Kind::bad_format, "edge list: loop edge rejected");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.size() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

std::string emit_graph_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.size();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    j["name"] = g.name();
    return j.dump();
}

}  // namespace evictlab
