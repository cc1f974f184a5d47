#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vicolor/graph.hpp"

namespace vicolor {

/// Malformed graph6 or JSON input. `offset` is the byte position of the
/// offending character within the parsed text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset)
    {
    }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// line terminators are accepted; anything else outside the encoding,
/// nonzero padding bits and bytes outside 63..126 raise ParseError.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding (no header, no newline).
std::string to_graph6(const Graph& g);

/// {"n": int, "edges": [[u,v],...]}
Graph parse_adjacency_json(std::string_view text);
std::string to_adjacency_json(const Graph& g);

/// Accepts either encoding: text starting with '{' is JSON, anything else graph6.
Graph parse_graph(std::string_view text);

}  // namespace vicolor
