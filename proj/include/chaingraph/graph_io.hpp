#ifndef CHAINGRAPH_GRAPH_IO_HPP
#define CHAINGRAPH_GRAPH_IO_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <chaingraph/chain_graph.hpp>

namespace chaingraph {

// Graph file grammar, one statement per line:
//
//   # comment
//   vertex <id>
//   <id> -> <id>
//   <id> -- <id>
//
// Identifiers are runs of letters, digits and underscores. Edges declare
// their endpoints implicitly.

struct GraphStatement {
    enum class Kind { vertex, arrow, line };

    Kind kind = Kind::vertex;
    Vertex first;
    Vertex second;  // empty for vertex declarations
    std::size_t line = 0;
    std::size_t column = 0;
};

struct GraphDocument {
    std::string source;
    std::vector<GraphStatement> statements;
};

/// Syntax only; throws ParseError with 1-based line and column.
GraphDocument parse_document(std::string_view text);

/// Builds the graph described by a document. Construction errors are rethrown
/// as LocatedError naming the offending statement lines.
ChainGraph build_graph(const GraphDocument& document);

ChainGraph parse_graph(std::string_view text);
ChainGraph read_graph_file(const std::filesystem::path& path);

/// Canonical listing: isolated vertices, then lines, then arrows, each sorted.
/// parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const ChainGraph& g);

}  // namespace chaingraph

#endif  // CHAINGRAPH_GRAPH_IO_HPP
