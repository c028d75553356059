#include "cgraphs/graph_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace cgraphs {

namespace {

constexpr long kMaxOrder = 100000;  // allocation guard for the dense adjacency

std::string offset_text(std::size_t offset) {
    return " at byte " + std::to_string(offset);
}

int payload_byte(std::string_view text, std::size_t pos) {
    if (pos >= text.size())
        throw Graph6Error(Graph6Error::Kind::Truncated, text.size(),
                          "graph6 input truncated" + offset_text(text.size()));
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw Graph6Error(Graph6Error::Kind::OutOfRange, pos,
                          "graph6 byte out of range [63,126]" + offset_text(pos));
    return c - 63;
}

}  // namespace

std::string_view format_name(GraphFormat f) {
    switch (f) {
        case GraphFormat::Graph6: return "graph6";
        case GraphFormat::EdgeList: return "edgelist";
        case GraphFormat::Json: return "json";
    }
    return "unknown";
}

std::optional<GraphFormat> parse_format_name(std::string_view name) {
    if (name == "graph6") return GraphFormat::Graph6;
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "json") return GraphFormat::Json;
    return std::nullopt;
}

Graph parse_graph6(std::string_view text) {
    if (text.empty())
        throw Graph6Error(Graph6Error::Kind::BadHeader, 0, "empty graph6 input");

    std::size_t pos = 0;
    long n = 0;
    int first = payload_byte(text, pos);
    if (first != 63) {  // '~' is 126, payload value 63
        n = first;
        pos = 1;
    } else {
        int second = payload_byte(text, 1);
        if (second != 63) {
            n = 0;
            for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | payload_byte(text, i);
            pos = 4;
            if (n <= 62)
                throw Graph6Error(Graph6Error::Kind::BadHeader, 0,
                                  "non-minimal graph6 size header for n=" + std::to_string(n));
        } else {
            n = 0;
            for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | payload_byte(text, i);
            pos = 8;
            if (n <= 258047)
                throw Graph6Error(Graph6Error::Kind::BadHeader, 0,
                                  "non-minimal graph6 size header for n=" + std::to_string(n));
        }
    }
    if (n > kMaxOrder)
        throw Graph6Error(Graph6Error::Kind::BadHeader, 0,
                          "graph6 order " + std::to_string(n) + " exceeds the supported maximum");

    Graph g(static_cast<int>(n));
    long bits = n * (n - 1) / 2;
    long nbytes = (bits + 5) / 6;
    long bit_index = 0;
    long row = 0, col = 1;  // upper triangle, column by column
    for (long b = 0; b < nbytes; ++b) {
        int value = payload_byte(text, pos);
        for (int s = 5; s >= 0; --s, ++bit_index) {
            int bit = (value >> s) & 1;
            if (bit_index >= bits) {
                if (bit != 0)
                    throw Graph6Error(Graph6Error::Kind::BadPadding, pos,
                                      "nonzero graph6 padding bits" + offset_text(pos));
                continue;
            }
            if (bit) g.add_edge(static_cast<int>(row), static_cast<int>(col));
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
        ++pos;
    }
    if (pos != text.size())
        throw Graph6Error(Graph6Error::Kind::TrailingBytes, pos,
                          "trailing bytes after graph6 payload" + offset_text(pos));
    return g;
}

std::string emit_graph6(const Graph& g) {
    long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    }
    int value = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + value));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (value << (6 - filled))));
    return out;
}

Graph parse_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    long n = 0;
    if (!(in >> n) || n < 0) throw std::invalid_argument("edge list must start with the vertex count");
    if (n > kMaxOrder) throw std::invalid_argument("edge list vertex count too large");
    Graph g(static_cast<int>(n));
    long u = 0, v = 0;
    while (in >> u) {
        if (!(in >> v)) throw std::invalid_argument("edge list has a dangling endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge list vertex out of range");
        if (u == v) throw std::invalid_argument("edge list contains a loop");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof()) throw std::invalid_argument("edge list contains a non-integer token");
    return g;
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.order() << "\n";
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out << u << " " << v << "\n";
    return out.str();
}

Graph parse_graph_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("adj"))
        throw std::invalid_argument("graph json needs fields \"n\" and \"adj\"");
    long n = j.at("n").get<long>();
    if (n < 0 || n > kMaxOrder) throw std::invalid_argument("graph json vertex count out of range");
    const auto& adj = j.at("adj");
    if (!adj.is_array() || static_cast<long>(adj.size()) != n)
        throw std::invalid_argument("graph json \"adj\" must list every vertex");
    Graph g(static_cast<int>(n));
    for (long u = 0; u < n; ++u) {
        for (const auto& entry : adj.at(static_cast<std::size_t>(u))) {
            long v = entry.get<long>();
            if (v < 0 || v >= n) throw std::invalid_argument("graph json neighbor out of range");
            if (v == u) throw std::invalid_argument("graph json contains a loop");
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
    }
    // Symmetry: every listed arc must appear in both directions.
    for (long u = 0; u < n; ++u) {
        std::vector<long> listed;
        for (const auto& entry : adj.at(static_cast<std::size_t>(u))) listed.push_back(entry.get<long>());
        for (long v = 0; v < n; ++v) {
            bool has = std::find(listed.begin(), listed.end(), v) != listed.end();
            if (has != g.adjacent(static_cast<int>(u), static_cast<int>(v)))
                throw std::invalid_argument("graph json adjacency lists are not symmetric");
        }
    }
    return g;
}

std::string emit_graph_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.order();
    auto adj = nlohmann::ordered_json::array();
    for (int u = 0; u < g.order(); ++u) {
        auto row = nlohmann::ordered_json::array();
        for (int v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v)) row.push_back(v);
        adj.push_back(std::move(row));
    }
    j["adj"] = std::move(adj);
    return j.dump(2);
}

Graph parse_graph(std::string_view text, GraphFormat f) {
    switch (f) {
        case GraphFormat::Graph6: return parse_graph6(text);
        case GraphFormat::EdgeList: return parse_edgelist(text);
        case GraphFormat::Json: return parse_graph_json(text);
    }
    throw std::invalid_argument("unknown graph format");
}

std::string emit_graph(const Graph& g, GraphFormat f) {
    switch (f) {
        case GraphFormat::Graph6: return emit_graph6(g);
        case GraphFormat::EdgeList: return emit_edgelist(g);
        case GraphFormat::Json: return emit_graph_json(g);
    }
    throw std::invalid_argument("unknown graph format");
}

}  // namespace cgraphs
