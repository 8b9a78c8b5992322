#include "cliquebound/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace cliquebound {
namespace detail {

void rows_from_key(const CanonKey& key, VertexSet* rows) {
    const int n = key.n;
    for (int v = 0; v < n; ++v) rows[v] = 0;
    int b = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++b) {
            if ((key.words[b >> 6] >> (63 - (b & 63))) & 1) {
                rows[i] |= vbit(j);
                rows[j] |= vbit(i);
            }
        }
    }
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

VertexSet drop_bit(VertexSet s, int v) {
    VertexSet low = s & (vbit(v) - 1);
    return low | ((s >> 1) & ~(vbit(v) - 1));
}

struct Level {
    int order = 0;
    std::vector<VertexSet> rows;  // stride = order
    std::vector<CanonKey> keys;

    std::size_t size() const { return keys.size(); }
};

struct ChunkOutput {
    std::vector<VertexSet> rows;
    std::vector<CanonKey> keys;
    std::uint64_t candidates = 0;
    std::uint64_t accepted = 0;
};

struct Expander {
    const Level& parents;
    int child_order;  // parents.order + 1
    bool final_level;
    const std::function<bool(const Graph&)>* filter;
    const std::function<void(const Graph&, int)>* visit;
    SearchLimiter* limiter;

    // Expands one parent; appends accepted canonical children to `out`.
    void expand_parent(std::size_t pi, ChunkOutput& out, int worker,
                       std::vector<CanonKey>& seen) const {
        const int j = parents.order;
        const VertexSet* prow = parents.rows.data() + pi * j;
        const CanonKey& pkey = parents.keys[pi];
        seen.clear();

        std::array<VertexSet, kMaxEnumerationOrder> child{};
        const VertexSet mask_limit = VertexSet{1} << j;
        for (VertexSet mask = 0; mask < mask_limit; ++mask) {
            ++out.candidates;
            if (limiter && (out.candidates & 255) == 0 && !limiter->charge(256))
                throw budget_exhausted("enumeration budget exhausted");
            for (int i = 0; i < j; ++i)
                child[i] = prow[i] | (((mask >> i) & 1) << j);
            child[j] = mask;

            if (*filter &&
                !(*filter)(Graph::from_adjacency(child_order, {child.data(),
                                                 static_cast<size_t>(child_order)})))
                continue;

            auto lab = canonical_labeling_raw(child_order, child.data());
            int vlast = lab.position_to_vertex[child_order - 1];
            if (vlast != j) {
                // Deleting the canonical last vertex must reproduce the
                // parent class, otherwise this child belongs to another
                // parent and will be produced there.
                std::array<VertexSet, kMaxEnumerationOrder> del{};
                int w = 0;
                for (int i = 0; i < child_order; ++i) {
                    if (i == vlast) continue;
                    del[w++] = drop_bit(child[i], vlast);
                }
                if (canonical_labeling_raw(j, del.data()).key != pkey) continue;
            }
            bool dup = false;
            for (const CanonKey& k : seen)
                if (k == lab.key) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            seen.push_back(lab.key);

            ++out.accepted;
            std::array<VertexSet, kMaxEnumerationOrder> canon{};
            rows_from_key(lab.key, canon.data());
            if (final_level) {
                (*visit)(Graph::from_adjacency(child_order,
                                               {canon.data(), static_cast<size_t>(child_order)}),
                         worker);
            } else {
                out.rows.insert(out.rows.end(), canon.begin(), canon.begin() + child_order);
                out.keys.push_back(lab.key);
            }
        }
    }
};

}  // namespace
}  // namespace detail

EnumerateStats enumerate_graphs(int n, const std::function<void(const Graph&, int)>& visit,
                                const EnumerateOptions& opts) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw parameter_error("enumeration order must be in [1, " +
                              std::to_string(kMaxEnumerationOrder) + "], got " +
                              std::to_string(n));
    EnumerateStats stats;

    Graph single(1);
    if (opts.hereditary_filter && !opts.hereditary_filter(single)) return stats;
    if (n == 1) {
        visit(single, 0);
        stats.classes = 1;
        return stats;
    }

    using detail::Level;
    Level level;
    level.order = 1;
    level.rows = {0};
    level.keys = {detail::canonical_labeling_raw(1, level.rows.data()).key};

    const int workers = detail::resolve_workers(opts.workers);

    for (int child_order = 2; child_order <= n; ++child_order) {
        const bool final_level = child_order == n;
        detail::Expander expander{level,    child_order,  final_level,
                                  &opts.hereditary_filter, &visit, opts.limiter};

        const std::size_t nparents = level.size();
        const std::size_t chunk_size = 64;
        const std::size_t nchunks = (nparents + chunk_size - 1) / chunk_size;
        std::vector<detail::ChunkOutput> outputs(nchunks);

        std::atomic<std::size_t> next_chunk{0};
        std::atomic<bool> budget_hit{false};
        std::exception_ptr first_error;
        std::mutex error_mutex;

        auto worker_fn = [&](int worker_index) {
            for (;;) {
                std::size_t c = next_chunk.fetch_add(1);
                if (c >= nchunks || budget_hit.load(std::memory_order_relaxed)) return;
                detail::ChunkOutput& out = outputs[c];
                std::vector<CanonKey> seen;
                std::size_t lo = c * chunk_size;
                std::size_t hi = std::min(nparents, lo + chunk_size);
                try {
                    for (std::size_t pi = lo; pi < hi; ++pi)
                        expander.expand_parent(pi, out, worker_index, seen);
                } catch (const budget_exhausted&) {
                    budget_hit.store(true, std::memory_order_relaxed);
                    return;
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    budget_hit.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        };

        if (workers <= 1 || nchunks <= 1) {
            worker_fn(0);
        } else {
            std::vector<std::thread> pool;
            int nthreads = static_cast<int>(std::min<std::size_t>(workers, nchunks));
            pool.reserve(nthreads);
            for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker_fn, t);
            for (auto& t : pool) t.join();
        }
        if (first_error) std::rethrow_exception(first_error);

        Level next;
        next.order = child_order;
        for (detail::ChunkOutput& out : outputs) {
            stats.candidates += out.candidates;
            if (final_level)
                stats.classes += out.accepted;
            else {
                next.rows.insert(next.rows.end(), out.rows.begin(), out.rows.end());
                next.keys.insert(next.keys.end(), out.keys.begin(), out.keys.end());
            }
        }
        if (budget_hit.load()) {
            stats.complete = false;
            return stats;
        }
        if (!final_level) {
            level = std::move(next);
            if (level.size() == 0) return stats;  // filter emptied the class
        }
    }
    return stats;
}

}  // namespace cliquebound
