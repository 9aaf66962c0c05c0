#include "frustrix/sgio.hpp"

#include <sstream>

namespace frustrix {

std::string graph6_encode(const SignedGraph& g) {
    int n = g.vertex_count();
    if (n > 62) throw capacity_error("graph6 supports n <= 62");
    if (!g.is_simple()) throw construction_error("graph6 has no multigraph form");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bit = 0;
    int acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bit = 0;
            }
        }
    if (bit) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
    return out;
}

SignedGraph graph6_decode(const std::string& text) {
    if (text.empty()) throw parse_error("empty graph6 string");
    std::size_t at = 0;
    int n = text[at] - 63;
    if (n < 0 || n > 62) throw parse_error("graph6: unsupported vertex count byte");
    ++at;
    int bits_needed = n * (n - 1) / 2;
    int bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<int>(text.size() - at) != bytes_needed)
        throw parse_error("graph6: wrong length for " + std::to_string(n) + " vertices");
    std::vector<Edge> es;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int c = text[at + bit / 6] - 63;
            if (c < 0 || c > 63) throw parse_error("graph6: byte out of range");
            if ((c >> (5 - bit % 6)) & 1) es.push_back(Edge{i, j, Sign::Plus});
        }
    return SignedGraph(n, std::move(es));
}

std::string to_signed_line(const SignedGraph& g) {
    std::string out = graph6_encode(g);
    if (g.edge_count() > 0) {
        out.push_back(' ');
        out += g.signature_bits().hex();
    }
    return out;
}

SignedGraph from_signed_line(const std::string& line) {
    std::istringstream in(line);
    std::string g6, hexpart;
    in >> g6;
    in >> hexpart;
    if (g6.empty()) throw parse_error("empty line");
    SignedGraph g = graph6_decode(g6);
    if (g.edge_count() == 0) {
        if (!hexpart.empty()) throw parse_error("signature hex given for an edgeless graph");
        return g;
    }
    if (hexpart.empty()) throw parse_error("missing signature hex");
    return g.with_signature(SignatureBits::from_hex(hexpart, g.edge_count()));
}

std::vector<SignedGraph> read_graph6_lines(const std::string& text) {
    std::vector<SignedGraph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

}  // namespace frustrix
