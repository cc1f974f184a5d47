#include "vicolor/io.hpp"

#include <cstdint>

#include "json.hpp"

namespace vicolor {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kSmallLimit = 62;
constexpr int kMediumLimit = 258047;

int decode_byte(std::string_view text, std::size_t pos)
{
    if (pos >= text.size())
        throw ParseError("truncated graph6 data", pos);
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw ParseError("byte out of graph6 range", pos);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    std::size_t pos = 0;
    if (text.starts_with(kHeader))
        pos = kHeader.size();
    if (pos >= text.size())
        throw ParseError("empty graph6 string", pos);

    std::int64_t n = 0;
    int first = decode_byte(text, pos);
    if (first < 63) {
        n = first;
        pos += 1;
    } else {
        // 126 prefix: 3 further bytes (18 bits), or 126 126 and 6 bytes (36 bits)
        std::size_t width = 3;
        pos += 1;
        if (pos < text.size() && text[pos] == '~') {
            width = 6;
            pos += 1;
        }
        for (std::size_t i = 0; i < width; ++i)
            n = (n << 6) | decode_byte(text, pos + i);
        if ((width == 3 && n <= kSmallLimit) || (width == 6 && n <= kMediumLimit))
            throw ParseError("non-canonical graph6 size header", pos - 1);
        if (n > (1 << 20))
            throw ParseError("graph6 vertex count too large", pos);
        pos += width;
    }

    const auto vertices = static_cast<int>(n);
    const std::int64_t bits = n * (n - 1) / 2;
    const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() < pos + bytes)
        throw ParseError("truncated graph6 bit vector", text.size());
    if (text.size() > pos + bytes)
        throw ParseError("trailing data after graph6 bit vector", pos + bytes);

    std::vector<Edge> edges;
    std::int64_t k = 0;
    for (std::size_t b = 0; b < bytes; ++b) {
        const int value = decode_byte(text, pos + b);
        for (int shift = 5; shift >= 0; --shift, ++k) {
            const bool bit = (value >> shift) & 1;
            if (k >= bits) {
                if (bit)
                    throw ParseError("nonzero graph6 padding bit", pos + b);
                continue;
            }
            if (bit) {
                // bit k encodes pair (i, j), i < j, in column-major order
                int j = 1;
                std::int64_t start = 0;
                while (start + j <= k) {
                    start += j;
                    ++j;
                }
                edges.push_back({static_cast<int>(k - start), j});
            }
        }
    }
    return Graph(vertices, std::move(edges));
}

std::string to_graph6(const Graph& g)
{
    const std::int64_t n = g.vertex_count();
    std::string out;
    if (n <= kSmallLimit) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= kMediumLimit) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_adjacency_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw ParseError("adjacency JSON needs fields \"n\" and \"edges\"", 0);
    try {
        const int n = doc.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : doc.at("edges"))
            edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
        return Graph(n, std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed adjacency JSON: ") + e.what(), 0);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid graph: ") + e.what(), 0);
    }
}

std::string to_adjacency_json(const Graph& g)
{
    nlohmann::ordered_json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges())
        doc["edges"].push_back({e.u, e.v});
    return doc.dump();
}

Graph parse_graph(std::string_view text)
{
    std::size_t first = text.find_first_not_of(" \t");
    if (first != std::string_view::npos && text[first] == '{')
        return parse_adjacency_json(text);
    return parse_graph6(text);
}

}  // namespace vicolor
