#ifndef TAP_ERRORS_HPP
#define TAP_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tap {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by the .tap text reader. Lines and columns are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error("line " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

enum class SurfaceDefect {
    Empty,         // no triangles at all
    EdgeOveruse,   // an edge lies in three or more triangles
    PinchedVertex, // a vertex whose link is not a single fan
    Disconnected,  // the triangle adjacency graph has several components
};

// Raised when a triangulation fails to be a connected compact surface.
// The message names the offending simplex.
class SurfaceError : public Error {
public:
    SurfaceError(SurfaceDefect defect, const std::string& msg) : Error(msg), defect_(defect) {}

    SurfaceDefect defect() const { return defect_; }

private:
    SurfaceDefect defect_;
};

// Unfolding a decorated graph would exceed the vertex cap.
class SizeCapExceeded : public Error {
public:
    explicit SizeCapExceeded(std::uint64_t cap)
        : Error("tree unfolding exceeds the vertex cap of " + std::to_string(cap)), cap_(cap) {}

    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t cap_;
};

// A development stage beyond the configured stage cap was requested.
class StageCapExceeded : public Error {
public:
    StageCapExceeded(std::uint64_t requested, std::uint64_t cap)
        : Error("development stage " + std::to_string(requested) + " exceeds the cap of " +
                std::to_string(cap)),
          requested_(requested),
          cap_(cap) {}

    std::uint64_t requested() const { return requested_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t requested_;
    std::uint64_t cap_;
};

// apply_move was handed a move that is not applicable to the tree.
class InapplicableMove : public Error {
public:
    explicit InapplicableMove(const std::string& msg) : Error(msg) {}
};

// The Cantor-Bendixson oracle accepts only trees whose ordinary vertices
// all have plain type O.
class NotLoopOnly : public Error {
public:
    explicit NotLoopOnly(const std::string& msg) : Error(msg) {}
};

} // namespace tap

#endif
