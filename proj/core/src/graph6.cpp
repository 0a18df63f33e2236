#include "qorder/graph6.hpp"

#include <stdexcept>

namespace qorder {

// Upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
// packed big-endian into 6-bit groups, each offset by 63.

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxVertices) throw std::invalid_argument("emit_graph6: order > 62");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_graph6: empty input");
    std::size_t pos = 0;
    if (text.compare(0, 10, ">>graph6<<") == 0) pos = 10;
    if (pos >= text.size()) throw std::invalid_argument("parse_graph6: missing length byte");
    int c0 = static_cast<unsigned char>(text[pos]) - 63;
    if (c0 < 0 || c0 > kMaxVertices)
        throw std::invalid_argument("parse_graph6: order byte out of supported range");
    const int n = c0;
    ++pos;
    const int nbits = n * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() - pos < nbytes)
        throw std::invalid_argument("parse_graph6: truncated bit section");
    if (text.size() - pos > nbytes)
        throw std::invalid_argument("parse_graph6: trailing garbage");
    std::vector<Edge> es;
    int bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = static_cast<unsigned char>(text[pos + bit / 6]) - 63;
            if (byte < 0 || byte > 63)
                throw std::invalid_argument("parse_graph6: byte out of range");
            if ((byte >> (5 - bit % 6)) & 1) es.push_back({u, v});
        }
    }
    // padding bits must be zero
    for (int b = bit; b < static_cast<int>(nbytes) * 6; ++b) {
        int byte = static_cast<unsigned char>(text[pos + b / 6]) - 63;
        if (byte < 0 || byte > 63)
            throw std::invalid_argument("parse_graph6: byte out of range");
        if ((byte >> (5 - b % 6)) & 1)
            throw std::invalid_argument("parse_graph6: nonzero padding");
    }
    return make_graph(n, es);
}

}  // namespace qorder
