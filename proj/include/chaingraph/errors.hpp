#ifndef CHAINGRAPH_ERRORS_HPP
#define CHAINGRAPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace chaingraph {

/// Base class of every domain error raised by the library. `kind()` is the
/// stable error name reported by the command-line tool.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class SelfLoop : public Error {
public:
    explicit SelfLoop(const std::string& vertex)
        : Error("SelfLoop", "self-loop at vertex '" + vertex + "'"), vertex_(vertex) {}
    const std::string& vertex() const noexcept { return vertex_; }

private:
    std::string vertex_;
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(const std::string& vertex)
        : Error("UnknownVertex", "unknown vertex '" + vertex + "'"), vertex_(vertex) {}
    const std::string& vertex() const noexcept { return vertex_; }

private:
    std::string vertex_;
};

class DuplicateVertex : public Error {
public:
    explicit DuplicateVertex(const std::string& vertex)
        : Error("DuplicateVertex", "vertex '" + vertex + "' declared twice"), vertex_(vertex) {}
    const std::string& vertex() const noexcept { return vertex_; }

private:
    std::string vertex_;
};

/// The witness is a closed walk v0, v1, ..., vk = v0 in which every step is an
/// edge of the offending graph and at least one step is an arrow.
class SemiDirectedCycle : public Error {
public:
    explicit SemiDirectedCycle(std::vector<std::string> witness);
    const std::vector<std::string>& witness() const noexcept { return witness_; }

private:
    std::vector<std::string> witness_;
};

class Overlap : public Error {
public:
    explicit Overlap(const std::string& message) : Error("Overlap", message) {}
};

class NotUndirected : public Error {
public:
    NotUndirected() : Error("NotUndirected", "graph contains directed edges") {}
};

class NotAdg : public Error {
public:
    NotAdg() : Error("NotAdg", "graph contains undirected edges") {}
};

class TooLarge : public Error {
public:
    TooLarge(std::size_t size, std::size_t limit)
        : Error("TooLarge", "input size " + std::to_string(size) + " exceeds limit " +
                                std::to_string(limit)) {}
};

class VertexMismatch : public Error {
public:
    VertexMismatch() : Error("VertexMismatch", "graphs have different vertex sets") {}
};

class NumericalFailure : public Error {
public:
    explicit NumericalFailure(const std::string& message) : Error("NumericalFailure", message) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("ParseError", "line " + std::to_string(line) + ", column " +
                                  std::to_string(column) + ": " + message),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A graph-construction error traced back to the statements of a graph file.
/// `kind()` is the kind of the underlying error.
class LocatedError : public Error {
public:
    LocatedError(const std::string& kind, const std::string& message, std::vector<std::size_t> lines)
        : Error(kind, message), lines_(std::move(lines)) {}
    const std::vector<std::size_t>& lines() const noexcept { return lines_; }

private:
    std::vector<std::size_t> lines_;
};

}  // namespace chaingraph

#endif  // CHAINGRAPH_ERRORS_HPP
