#include <chaingraph/graph_io.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace chaingraph {

namespace {

struct Token {
    std::string text;
    std::size_t column;
    bool identifier;
};

bool identifier_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else if (identifier_char(c)) {
            auto start = i;
            while (i < line.size() && identifier_char(line[i])) ++i;
            tokens.push_back({std::string(line.substr(start, i - start)), start + 1, true});
        } else if (c == '-' && i + 1 < line.size() && (line[i + 1] == '>' || line[i + 1] == '-')) {
            tokens.push_back({std::string(line.substr(i, 2)), i + 1, false});
            i += 2;
        } else {
            throw ParseError(line_no, i + 1, std::string("unexpected character '") + c + "'");
        }
    }
    return tokens;
}

std::string join_lines(const std::vector<std::size_t>& lines) {
    std::string text;
    for (auto l : lines) text += (text.empty() ? "" : ", ") + std::to_string(l);
    return text;
}

}  // namespace

GraphDocument parse_document(std::string_view text) {
    GraphDocument doc;
    doc.source = std::string(text);
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = text.substr(start, end - start);
        ++line_no;
        const auto tokens = tokenize(line, line_no);

        if (tokens.size() == 2 && tokens[0].identifier && tokens[0].text == "vertex" && tokens[1].identifier) {
            doc.statements.push_back({GraphStatement::Kind::vertex, tokens[1].text, {}, line_no, tokens[0].column});
        } else if (tokens.size() == 3 && tokens[0].identifier && !tokens[1].identifier && tokens[2].identifier) {
            const auto kind = tokens[1].text == "->" ? GraphStatement::Kind::arrow : GraphStatement::Kind::line;
            doc.statements.push_back({kind, tokens[0].text, tokens[2].text, line_no, tokens[0].column});
        } else if (!tokens.empty()) {
            // Point at the first token that breaks the expected shape.
            std::size_t bad = 0;
            if (tokens.size() > 3) {
                bad = 3;
            } else if (tokens.size() == 3) {
                bad = !tokens[0].identifier ? 0 : (tokens[1].identifier ? 1 : 2);
            } else if (tokens.size() == 2) {
                bad = tokens[0].identifier ? 1 : 0;
            }
            throw ParseError(line_no, tokens[bad].column,
                             "expected 'vertex <id>', '<id> -> <id>' or '<id> -- <id>'");
        }
        start = end + 1;
    }
    return doc;
}

ChainGraph build_graph(const GraphDocument& document) {
    std::vector<Vertex> vertices;
    std::set<Vertex> seen;
    std::vector<Edge> directed, undirected;
    auto declare = [&](const Vertex& v) {
        if (seen.insert(v).second) vertices.push_back(v);
    };
    for (const auto& st : document.statements) {
        declare(st.first);
        if (st.kind == GraphStatement::Kind::vertex) continue;
        declare(st.second);
        (st.kind == GraphStatement::Kind::arrow ? directed : undirected).emplace_back(st.first, st.second);
    }

    try {
        return ChainGraph::build(vertices, directed, undirected);
    } catch (const SelfLoop& e) {
        std::vector<std::size_t> lines;
        for (const auto& st : document.statements)
            if (st.kind != GraphStatement::Kind::vertex && st.first == st.second) lines.push_back(st.line);
        throw LocatedError(e.kind(), "line " + join_lines(lines) + ": " + e.what(), lines);
    } catch (const SemiDirectedCycle& e) {
        // Every statement contributing an edge of the witness cycle.
        std::set<std::size_t> involved;
        const auto& w = e.witness();
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            for (const auto& st : document.statements) {
                if (st.kind == GraphStatement::Kind::vertex) continue;
                const bool forward = st.first == w[k] && st.second == w[k + 1];
                const bool backward = st.first == w[k + 1] && st.second == w[k];
                // A line step may come from a line statement or from two opposite arrows.
                if (forward || (backward && (st.kind == GraphStatement::Kind::line ||
                                             std::any_of(document.statements.begin(),
                                                         document.statements.end(), [&](const auto& o) {
                                                             return o.kind == GraphStatement::Kind::arrow &&
                                                                    o.first == w[k] && o.second == w[k + 1];
                                                         })))) {
                    involved.insert(st.line);
                }
            }
        }
        std::vector<std::size_t> lines(involved.begin(), involved.end());
        throw LocatedError(e.kind(), std::string(e.what()) + " (lines " + join_lines(lines) + ")", lines);
    }
}

ChainGraph parse_graph(std::string_view text) { return build_graph(parse_document(text)); }

ChainGraph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IoError", "cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string serialize_graph(const ChainGraph& g) {
    std::ostringstream out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool isolated = true;
        for (std::size_t j = 0; j < g.size() && isolated; ++j) isolated = !g.adjacent_at(i, j);
        if (isolated) out << "vertex " << g.vertices()[i] << '\n';
    }
    for (const auto& [v, w] : g.lines()) out << v << " -- " << w << '\n';
    for (const auto& [v, w] : g.arrows()) out << v << " -> " << w << '\n';
    return out.str();
}

}  // namespace chaingraph
