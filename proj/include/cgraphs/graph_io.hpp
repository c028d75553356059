#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cgraphs/graph.hpp"

namespace cgraphs {

enum class GraphFormat { Graph6, EdgeList, Json };

std::string_view format_name(GraphFormat f);
std::optional<GraphFormat> parse_format_name(std::string_view name);

class Graph6Error : public std::runtime_error {
  public:
    enum class Kind { BadHeader, OutOfRange, Truncated, BadPadding, TrailingBytes };

    Graph6Error(Kind kind, std::size_t offset, const std::string& message)
        : std::runtime_error(message), kind_(kind), offset_(offset) {}

    Kind kind() const { return kind_; }
    std::size_t offset() const { return offset_; }

  private:
    Kind kind_;
    std::size_t offset_;
};

// Strict graph6: minimal-length size header, upper triangle column by column
// packed big-endian into 6-bit groups, each byte offset by 63.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// First line is the vertex count, then one "u v" pair per line, 0-indexed.
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

// {"n": <order>, "adj": [sorted neighbor lists]}.
Graph parse_graph_json(std::string_view text);
std::string emit_graph_json(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat f);
std::string emit_graph(const Graph& g, GraphFormat f);

}  // namespace cgraphs
