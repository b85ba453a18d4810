#include "ramsey/graph6.hpp"

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char ch) {
    int value = static_cast<unsigned char>(ch) - 63;
    if (value < 0 || value > 63) throw ParseError("graph6: byte outside the printable range 63..126");
    return value;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input");
    if (text.front() == ':' || text.front() == '&') throw ParseError("graph6: sparse6/digraph6 input is not supported");

    int n = 0;
    std::size_t pos = 0;
    if (text[0] != '~') {
        n = sextet(text[0]);
        pos = 1;
    } else {
        if (text.size() < 2 || text[1] == '~') throw ParseError("graph6: vertex count out of range (n > 64)");
        if (text.size() < 4) throw ParseError("graph6: truncated size header");
        long wide = (long{sextet(text[1])} << 12) | (long{sextet(text[2])} << 6) | sextet(text[3]);
        if (wide < 63) throw ParseError("graph6: non-canonical size header");
        if (wide > kMaxVertices) throw ParseError("graph6: vertex count out of range (n > 64)");
        n = static_cast<int>(wide);
        pos = 4;
    }

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw ParseError("graph6: expected " + std::to_string(bytes) + " body bytes for n = " + std::to_string(n) +
                         ", found " + std::to_string(text.size() - pos));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = sextet(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
        }
    }
    if (bytes > 0) {
        int last = sextet(text[pos + bytes - 1]);
        int pad = static_cast<int>(bytes * 6 - bits);
        if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

} // namespace ramsey
