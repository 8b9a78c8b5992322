#include "cliquebound/canonical.hpp"

#include <algorithm>

#include "cliquebound/graph6.hpp"

namespace cliquebound {
namespace detail {
namespace {

// Encoding bit b(i,j) = j(j-1)/2 + i for positions i < j, stored MSB-first
// so that lexicographic comparison of the words equals comparison of the
// bit string. Placing canonical position p reveals the contiguous bit range
// [p(p-1)/2, p(p+1)/2).

int cmp_prefix(const std::uint64_t* a, const std::uint64_t* b, int nbits) {
    int full = nbits >> 6;
    for (int w = 0; w < full; ++w)
        if (a[w] != b[w]) return a[w] < b[w] ? -1 : 1;
    int rem = nbits & 63;
    if (rem) {
        std::uint64_t mask = ~std::uint64_t{0} << (64 - rem);
        std::uint64_t x = a[full] & mask, y = b[full] & mask;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

// Vertex colors from iterated neighborhood refinement. Colors depend only
// on the isomorphism type: initial color is uniform, each round re-ranks
// vertices by (own color, sorted neighbor colors). Cells only ever split,
// so a stable distinct-color count means a stable partition.
int refine_colors(int n, const VertexSet* adj, std::array<std::uint8_t, kCanonMaxOrder>& color) {
    color.fill(0);
    int ncolors = 1;
    using Sig = std::array<std::uint8_t, kCanonMaxOrder + 1>;
    std::array<Sig, kCanonMaxOrder> sig;
    std::array<std::uint8_t, kCanonMaxOrder> order;
    for (;;) {
        for (int v = 0; v < n; ++v) {
            Sig& s = sig[v];
            s.fill(0xFF);
            s[0] = color[v];
            int len = 1;
            for (VertexSet nb = adj[v]; nb;) s[len++] = color[pop_vertex(nb)];
            std::sort(s.begin() + 1, s.begin() + len);
        }
        for (int v = 0; v < n; ++v) order[v] = static_cast<std::uint8_t>(v);
        std::sort(order.begin(), order.begin() + n,
                  [&](std::uint8_t a, std::uint8_t b) { return sig[a] < sig[b]; });
        int next = 0;
        std::array<std::uint8_t, kCanonMaxOrder> newcolor{};
        for (int idx = 0; idx < n; ++idx) {
            if (idx > 0 && sig[order[idx]] != sig[order[idx - 1]]) ++next;
            newcolor[order[idx]] = static_cast<std::uint8_t>(next);
        }
        color = newcolor;
        if (next + 1 == ncolors) return ncolors;
        ncolors = next + 1;
    }
}

struct Search {
    int n = 0;
    const VertexSet* adj = nullptr;
    std::array<std::uint8_t, kCanonMaxOrder> color{};
    std::array<std::uint8_t, kCanonMaxOrder> pos_color{};
    std::array<std::uint64_t, 2> cur{};
    std::array<std::uint64_t, 2> best{};
    std::array<std::uint8_t, kCanonMaxOrder> perm{};
    std::array<std::uint8_t, kCanonMaxOrder> best_perm{};
    VertexSet used = 0;
    bool have_best = false;

    void write_column(int p, unsigned value) {
        // value holds p bits, bit for i=0 most significant.
        int base = p * (p - 1) / 2;
        for (int i = 0; i < p; ++i) {
            int b = base + i;
            std::uint64_t mask = std::uint64_t{1} << (63 - (b & 63));
            if ((value >> (p - 1 - i)) & 1)
                cur[b >> 6] |= mask;
            else
                cur[b >> 6] &= ~mask;
        }
    }

    void dfs(int p) {
        if (p == n) {
            int nbits = n * (n - 1) / 2;
            if (!have_best || cmp_prefix(cur.data(), best.data(), nbits) < 0) {
                best = cur;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        struct Cand {
            unsigned col;
            std::uint8_t v;
        };
        std::array<Cand, kCanonMaxOrder> cand;
        int ncand = 0;
        for (int v = 0; v < n; ++v) {
            if ((used & vbit(v)) || color[v] != pos_color[p]) continue;
            unsigned c = 0;
            for (int i = 0; i < p; ++i)
                c = (c << 1) | static_cast<unsigned>((adj[perm[i]] >> v) & 1);
            cand[ncand++] = {c, static_cast<std::uint8_t>(v)};
        }
        std::sort(cand.begin(), cand.begin() + ncand, [](const Cand& a, const Cand& b) {
            return a.col != b.col ? a.col < b.col : a.v < b.v;
        });
        std::array<std::uint8_t, kCanonMaxOrder> tried;
        int ntried = 0;
        int base_bits = p * (p - 1) / 2;
        for (int ci = 0; ci < ncand; ++ci) {
            auto [c, v] = cand[ci];
            bool redundant = false;
            for (int t = 0; t < ntried && !redundant; ++t) {
                std::uint8_t u = tried[t];
                if (cand_col(u, p) != c) continue;
                VertexSet both = vbit(u) | vbit(v);
                if ((adj[u] & ~both) == (adj[v] & ~both)) redundant = true;
            }
            if (redundant) continue;
            tried[ntried++] = v;
            write_column(p, c);
            if (have_best && cmp_prefix(cur.data(), best.data(), base_bits + p) > 0)
                continue;
            perm[p] = v;
            used |= vbit(v);
            dfs(p + 1);
            used &= ~vbit(v);
        }
    }

    unsigned cand_col(std::uint8_t v, int p) const {
        unsigned c = 0;
        for (int i = 0; i < p; ++i)
            c = (c << 1) | static_cast<unsigned>((adj[perm[i]] >> v) & 1);
        return c;
    }
};

}  // namespace

CanonicalLabeling canonical_labeling_raw(int n, const VertexSet* adj) {
    CanonicalLabeling result;
    result.key.n = static_cast<std::uint8_t>(n);
    if (n == 1) {
        result.position_to_vertex[0] = 0;
        return result;
    }

    Search s;
    s.n = n;
    s.adj = adj;
    int ncolors = refine_colors(n, adj, s.color);

    // Positions take colors in ascending order.
    {
        int p = 0;
        for (int c = 0; c < ncolors; ++c)
            for (int v = 0; v < n; ++v)
                if (s.color[v] == c) s.pos_color[p++] = static_cast<std::uint8_t>(c);
    }

    if (ncolors == n) {
        // Discrete partition: the ordering is forced.
        for (int v = 0; v < n; ++v) s.best_perm[s.color[v]] = static_cast<std::uint8_t>(v);
        for (int p = 0; p < n; ++p) {
            s.perm[p] = s.best_perm[p];
            unsigned c = s.cand_col(s.best_perm[p], p);
            s.write_column(p, c);
        }
        s.best = s.cur;
    } else {
        s.dfs(0);
    }

    result.key.words = s.best;
    result.position_to_vertex = s.best_perm;
    return result;
}

}  // namespace detail

namespace {

void check_canon_order(const Graph& g) {
    if (g.order() > kCanonMaxOrder)
        throw parameter_error("canonical labeling supports at most " +
                              std::to_string(kCanonMaxOrder) + " vertices, got " +
                              std::to_string(g.order()));
}

}  // namespace

Graph canonical_graph(const Graph& g) {
    check_canon_order(g);
    auto lab = detail::canonical_labeling_raw(g.order(), g.rows().data());
    Graph out(g.order());
    for (int p = 0; p < g.order(); ++p)
        for (int q = p + 1; q < g.order(); ++q)
            if (g.has_edge(lab.position_to_vertex[p], lab.position_to_vertex[q]))
                out = out.with_edge(p, q);
    return out;
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    check_canon_order(a);
    auto ka = detail::canonical_labeling_raw(a.order(), a.rows().data());
    auto kb = detail::canonical_labeling_raw(b.order(), b.rows().data());
    return ka.key == kb.key;
}

}  // namespace cliquebound
