#include "cliquebound/graph6.hpp"

#include <cstddef>

namespace cliquebound {

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 63 <= n <= 258047: '~' then n in three 6-bit bytes, high first.
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view s) {
    if (s.empty()) throw parse_error("empty graph6 string", 0);

    std::size_t pos = 0;
    long n;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw parse_error("graph6 orders above 258047 are not supported", 1);
        if (s.size() < 4) throw parse_error("truncated graph6 order", s.size());
        n = 0;
        for (pos = 1; pos <= 3; ++pos) {
            unsigned char c = static_cast<unsigned char>(s[pos]);
            if (c < 63 || c > 126)
                throw parse_error("graph6 byte out of range", pos);
            n = (n << 6) | (c - 63);
        }
    } else {
        unsigned char c = static_cast<unsigned char>(s[0]);
        if (c < 63 || c > 126) throw parse_error("graph6 byte out of range", 0);
        n = c - 63;
        pos = 1;
    }
    if (n < 1 || n > kMaxVertices)
        throw parse_error("graph order " + std::to_string(n) +
                              " outside supported range [1, 64]",
                          0);

    const long nbits = n * (n - 1) / 2;
    const std::size_t ngroups = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() != pos + ngroups)
        throw parse_error("graph6 body has wrong length", s.size());

    Graph g(static_cast<int>(n));
    long bit = 0;
    int i = 0, j = 1;
    for (std::size_t gi = 0; gi < ngroups; ++gi, ++pos) {
        unsigned char c = static_cast<unsigned char>(s[pos]);
        if (c < 63 || c > 126) throw parse_error("graph6 byte out of range", pos);
        int group = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            int val = (group >> b) & 1;
            if (bit >= nbits) {
                if (val != 0) throw parse_error("nonzero graph6 padding bits", pos);
                continue;
            }
            if (val) g = g.with_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

}  // namespace cliquebound
