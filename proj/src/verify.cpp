#include "cliquebound/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <set>
#include <string>

#include "cliquebound/bounds.hpp"
#include "cliquebound/cliques.hpp"
#include "cliquebound/connectivity.hpp"
#include "cliquebound/constructions.hpp"
#include "cliquebound/cycles.hpp"
#include "cliquebound/enumerate.hpp"
#include "cliquebound/graph6.hpp"

namespace cliquebound {
namespace {

// Running maximum plus the graphs attaining it. The list is capped, the
// count is exact.
struct AchieverSet {
    std::uint64_t max = 0;
    std::uint64_t count = 0;
    std::vector<std::string> list;
    bool truncated = false;

    void offer(std::uint64_t value, const std::string& g6, std::size_t cap) {
        if (value > max) {
            max = value;
            count = 0;
            list.clear();
            truncated = false;
        }
        if (value == max) {
            ++count;
            if (list.size() < cap)
                list.push_back(g6);
            else
                truncated = true;
        }
    }

    void merge(const AchieverSet& o, std::size_t cap) {
        if (o.count == 0) return;
        if (count == 0 || o.max > max) {
            *this = o;
            return;
        }
        if (o.max < max) return;
        count += o.count;
        for (const auto& g6 : o.list) {
            if (list.size() < cap)
                list.push_back(g6);
            else
                truncated = true;
        }
        truncated = truncated || o.truncated;
    }
};

struct ScanPerS {
    AchieverSet restricted;  // graphs passing the final class predicate
    AchieverSet all;         // every member of the hereditary class
};

struct ScanOutcome {
    std::vector<ScanPerS> per_s;  // parallel to the requested s values
    std::uint64_t classes = 0;
    std::uint64_t restricted_count = 0;
    bool complete = true;
    double elapsed_seconds = 0.0;
};

// One pass over the hereditary class on n vertices: clique counts computed
// once per class representative, maxima tracked for every requested s both
// for the whole class and under the final predicate.
ScanOutcome scan_class(int n, const std::function<bool(const Graph&)>& hereditary,
                       const std::function<bool(const Graph&)>& final_predicate,
                       const std::vector<int>& s_values, const VerifyOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    const int workers = detail::resolve_workers(opts.workers);
    std::vector<ScanOutcome> acc(static_cast<std::size_t>(workers));
    for (auto& a : acc) a.per_s.resize(s_values.size());

    auto visit = [&](const Graph& g, int worker) {
        ScanOutcome& out = acc[static_cast<std::size_t>(worker)];
        ++out.classes;
        std::array<std::uint64_t, kMaxEnumerationOrder + 1> counts{};
        detail::clique_counts_raw(g.order(), g.rows().data(), counts.data(), opts.limiter);
        bool restricted = final_predicate && final_predicate(g);
        if (restricted) ++out.restricted_count;
        // The enumerator hands out canonically labeled representatives, so
        // plain graph6 of g is already the canonical string.
        std::string g6;
        for (std::size_t i = 0; i < s_values.size(); ++i) {
            int s = s_values[i];
            std::uint64_t cnt =
                s <= g.order() ? counts[static_cast<std::size_t>(s)] : 0;
            ScanPerS& slot = out.per_s[i];
            if ((restricted && cnt >= slot.restricted.max) || cnt >= slot.all.max)
                if (g6.empty()) g6 = to_graph6(g);
            if (restricted) slot.restricted.offer(cnt, g6, opts.achiever_cap);
            slot.all.offer(cnt, g6, opts.achiever_cap);
        }
    };

    EnumerateOptions eopts;
    eopts.workers = workers;
    eopts.limiter = opts.limiter;
    eopts.hereditary_filter = hereditary;
    EnumerateStats stats = enumerate_graphs(n, visit, eopts);

    ScanOutcome merged;
    merged.per_s.resize(s_values.size());
    merged.complete = stats.complete;
    for (const auto& a : acc) {
        merged.classes += a.classes;
        merged.restricted_count += a.restricted_count;
        for (std::size_t i = 0; i < s_values.size(); ++i) {
            merged.per_s[i].restricted.merge(a.per_s[i].restricted, opts.achiever_cap);
            merged.per_s[i].all.merge(a.per_s[i].all, opts.achiever_cap);
        }
    }
    merged.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return merged;
}

std::function<bool(const Graph&)> circumference_below(int k, SearchLimiter* limiter) {
    // The enumerator grows graphs by appending the highest-index vertex, so
    // any cycle not through it already existed in the accepted parent.
    return [k, limiter](const Graph& g) {
        return !detail::cycle_at_least_through_raw(g.order(), g.rows().data(),
                                                   g.order() - 1, k, limiter);
    };
}

std::function<bool(const Graph&)> path_free(int k, SearchLimiter* limiter) {
    return [k, limiter](const Graph& g) { return !has_path_on(g, k, limiter); };
}

void finalize_achievers(VerifyReport& r, AchieverSet& a) {
    std::sort(a.list.begin(), a.list.end());
    r.achievers = std::move(a.list);
    r.achievers_truncated = a.truncated;
    r.achiever_count = a.count;
}

void set_violation(VerifyReport& r) {
    if (!r.holds && !r.achievers.empty()) r.counterexample = r.achievers.front();
}

void check_enum_order(int n) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw parameter_error("verification enumerates graphs; order must be in [1, " +
                              std::to_string(kMaxEnumerationOrder) + "]");
}

VerifyReport base_report(const char* theorem, int n, int k, int s,
                         const ScanOutcome& scan) {
    VerifyReport r;
    r.theorem = theorem;
    r.n = n;
    r.k = k;
    r.s = s;
    r.graphs_enumerated = scan.classes;
    r.complete = scan.complete;
    r.elapsed_seconds = scan.elapsed_seconds;
    return r;
}

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

VerifyReport build_cycle(int n, int k, int s, const ScanOutcome& scan, ScanPerS slot) {
    VerifyReport r = base_report("cycle", n, k, s, scan);
    r.graphs_in_class = scan.restricted_count;
    TwoPointMax b = cycle_bound(n, k, s);
    r.bound = Rational(b.value);
    r.bound_floor = b.value;
    r.observed_max = slot.restricted.max;
    r.holds = static_cast<BigInt>(r.observed_max) <= b.value;
    r.attainment_expected = true;
    r.attained = static_cast<BigInt>(r.observed_max) == b.value;
    Graph h2 = h_graph(n, k, 2);
    Graph ht = h_graph(n, k, cycle_endpoint_part(k));
    r.expected_achievers = sorted_unique({canonical_form(h2), canonical_form(ht)});
    r.construction_attains = count_cliques(h2, s) == r.observed_max ||
                             count_cliques(ht, s) == r.observed_max;
    finalize_achievers(r, slot.restricted);
    set_violation(r);
    return r;
}

VerifyReport build_uniqueness(int n, int k, const ScanOutcome& scan, ScanPerS slot) {
    VerifyReport r = base_report("uniqueness", n, k, 2, scan);
    r.graphs_in_class = scan.restricted_count;
    TwoPointMax b = cycle_bound(n, k, 2);
    r.bound = Rational(b.value);
    r.bound_floor = b.value;
    r.observed_max = slot.restricted.max;
    bool bound_ok = static_cast<BigInt>(r.observed_max) <= b.value;
    r.attainment_expected = true;
    r.attained = static_cast<BigInt>(r.observed_max) == b.value;
    Graph h2 = h_graph(n, k, 2);
    Graph ht = h_graph(n, k, cycle_endpoint_part(k));
    r.expected_achievers = sorted_unique({canonical_form(h2), canonical_form(ht)});
    r.construction_attains = count_cliques(h2, 2) == r.observed_max ||
                             count_cliques(ht, 2) == r.observed_max;
    finalize_achievers(r, slot.restricted);
    r.uniqueness_checked = true;
    r.uniqueness_holds = bound_ok;
    if (r.attained) {
        if (r.achievers_truncated) r.uniqueness_holds = false;
        for (const auto& g6 : r.achievers) {
            if (std::find(r.expected_achievers.begin(), r.expected_achievers.end(), g6) ==
                r.expected_achievers.end()) {
                r.uniqueness_holds = false;
                r.counterexample = g6;
                break;
            }
        }
    }
    r.holds = bound_ok && r.uniqueness_holds;
    if (!bound_ok) set_violation(r);
    return r;
}

VerifyReport build_cycle_all(int n, int k, int s, const ScanOutcome& scan, ScanPerS slot) {
    VerifyReport r = base_report("cycle-all", n, k, s, scan);
    r.graphs_in_class = scan.classes;
    Rational bound = cycle_bound_all_graphs(n, k, s);
    r.bound = bound;
    r.bound_floor = bound.floor();
    r.observed_max = slot.all.max;
    Rational observed(static_cast<BigInt>(r.observed_max));
    r.holds = observed <= bound;
    r.attainment_expected = (n - 1) % (k - 2) == 0;
    r.attained = observed == bound;
    if (r.attainment_expected) {
        Graph extremal = eg_cycle_extremal(n, k);
        r.expected_achievers = {canonical_form(extremal)};
        r.construction_attains = count_cliques(extremal, s) == r.observed_max;
    }
    finalize_achievers(r, slot.all);
    set_violation(r);
    return r;
}

VerifyReport build_path(int n, int k, int s, const ScanOutcome& scan, ScanPerS slot) {
    VerifyReport r = base_report("path", n, k, s, scan);
    r.graphs_in_class = scan.restricted_count;
    TwoPointMax b = path_bound(n, k, s);
    r.bound = Rational(b.value);
    r.bound_floor = b.value;
    r.observed_max = slot.restricted.max;
    r.holds = static_cast<BigInt>(r.observed_max) <= b.value;
    r.attainment_expected = true;
    r.attained = static_cast<BigInt>(r.observed_max) == b.value;
    Graph h1 = h_graph(n, k - 1, 1);
    Graph ht = h_graph(n, k - 1, path_endpoint_part(k));
    r.expected_achievers = sorted_unique({canonical_form(h1), canonical_form(ht)});
    r.construction_attains = count_cliques(h1, s) == r.observed_max ||
                             count_cliques(ht, s) == r.observed_max;
    finalize_achievers(r, slot.restricted);
    set_violation(r);
    return r;
}

VerifyReport build_path_all(int n, int k, int s, const ScanOutcome& scan, ScanPerS slot) {
    VerifyReport r = base_report("path-all", n, k, s, scan);
    r.graphs_in_class = scan.classes;
    Rational bound = path_bound_all_graphs(n, k, s);
    r.bound = bound;
    r.bound_floor = bound.floor();
    r.observed_max = slot.all.max;
    Rational observed(static_cast<BigInt>(r.observed_max));
    r.holds = observed <= bound;
    r.attainment_expected = n % (k - 1) == 0;
    r.attained = observed == bound;
    if (r.attainment_expected) {
        Graph extremal = eg_path_extremal(n, k);
        r.expected_achievers = {canonical_form(extremal)};
        r.construction_attains = count_cliques(extremal, s) == r.observed_max;
    }
    finalize_achievers(r, slot.all);
    set_violation(r);
    return r;
}

bool is_2connected_pred(const Graph& g) { return is_2connected(g); }
bool is_connected_pred(const Graph& g) { return is_connected(g); }

void check_s(int s) {
    if (s < 2) throw parameter_error("clique size s must be at least 2");
}

}  // namespace

VerifyReport verify_cycle_theorem(int n, int k, int s, const VerifyOptions& opts) {
    if (k < 5 || n < k) throw parameter_error("cycle theorem needs n >= k >= 5");
    check_s(s);
    check_enum_order(n);
    ScanOutcome scan = scan_class(n, circumference_below(k, opts.limiter),
                                  is_2connected_pred, {s}, opts);
    return build_cycle(n, k, s, scan, scan.per_s[0]);
}

VerifyReport verify_uniqueness(int n, int k, const VerifyOptions& opts) {
    if (k < 5 || n < k) throw parameter_error("uniqueness check needs n >= k >= 5");
    check_enum_order(n);
    ScanOutcome scan = scan_class(n, circumference_below(k, opts.limiter),
                                  is_2connected_pred, {2}, opts);
    return build_uniqueness(n, k, scan, scan.per_s[0]);
}

VerifyReport verify_cycle_corollary(int n, int k, int s, const VerifyOptions& opts) {
    if (k < 4) throw parameter_error("cycle corollary needs k >= 4");
    check_s(s);
    check_enum_order(n);
    ScanOutcome scan =
        scan_class(n, circumference_below(k, opts.limiter), nullptr, {s}, opts);
    return build_cycle_all(n, k, s, scan, scan.per_s[0]);
}

VerifyReport verify_path_theorem(int n, int k, int s, const VerifyOptions& opts) {
    if (k < 4 || n < k) throw parameter_error("path theorem needs n >= k >= 4");
    check_s(s);
    check_enum_order(n);
    ScanOutcome scan =
        scan_class(n, path_free(k, opts.limiter), is_connected_pred, {s}, opts);
    return build_path(n, k, s, scan, scan.per_s[0]);
}

VerifyReport verify_path_corollary(int n, int k, int s, const VerifyOptions& opts) {
    if (k < 3) throw parameter_error("path corollary needs k >= 3");
    check_s(s);
    check_enum_order(n);
    ScanOutcome scan = scan_class(n, path_free(k, opts.limiter), nullptr, {s}, opts);
    return build_path_all(n, k, s, scan, scan.per_s[0]);
}

std::vector<VerifyReport> sweep(const SweepSpec& spec, const VerifyOptions& opts) {
    std::set<std::string> all{"cycle", "uniqueness", "cycle-all", "path", "path-all"};
    std::set<std::string> chosen;
    for (const auto& t : spec.theorems) {
        if (!all.count(t)) throw parameter_error("unknown theorem '" + t + "'");
        chosen.insert(t);
    }
    if (chosen.empty()) chosen = all;

    std::vector<VerifyReport> out;
    const int s_lo = std::max(2, spec.s_lo);

    auto append = [&out](VerifyReport r) -> bool {
        out.push_back(std::move(r));
        const VerifyReport& b = out.back();
        return b.complete && b.holds;  // stop on violation or budget
    };

    for (int n = spec.n_lo; n <= spec.n_hi; ++n) {
        check_enum_order(n);
        for (int k = spec.k_lo; k <= spec.k_hi; ++k) {
            bool want_cycle = chosen.count("cycle") && k >= 5 && n >= k;
            bool want_uniq = chosen.count("uniqueness") && k >= 5 && n >= k;
            bool want_cycle_all = chosen.count("cycle-all") && k >= 4;
            bool want_path = chosen.count("path") && k >= 4 && n >= k;
            bool want_path_all = chosen.count("path-all") && k >= 3;

            std::vector<int> s_values;
            for (int s = s_lo; s <= spec.s_hi; ++s) s_values.push_back(s);

            if (want_cycle || want_uniq || want_cycle_all) {
                std::vector<int> scan_s = s_values;
                if (want_uniq &&
                    std::find(scan_s.begin(), scan_s.end(), 2) == scan_s.end())
                    scan_s.push_back(2);
                if (!scan_s.empty()) {
                    ScanOutcome scan =
                        scan_class(n, circumference_below(k, opts.limiter),
                                   is_2connected_pred, scan_s, opts);
                    for (std::size_t i = 0; i < s_values.size(); ++i)
                        if (want_cycle &&
                            !append(build_cycle(n, k, s_values[i], scan, scan.per_s[i])))
                            return out;
                    if (want_uniq) {
                        std::size_t slot2 = static_cast<std::size_t>(
                            std::find(scan_s.begin(), scan_s.end(), 2) - scan_s.begin());
                        if (!append(build_uniqueness(n, k, scan, scan.per_s[slot2])))
                            return out;
                    }
                    for (std::size_t i = 0; i < s_values.size(); ++i)
                        if (want_cycle_all &&
                            !append(build_cycle_all(n, k, s_values[i], scan, scan.per_s[i])))
                            return out;
                }
            }
            if ((want_path || want_path_all) && !s_values.empty()) {
                ScanOutcome scan = scan_class(n, path_free(k, opts.limiter),
                                              is_connected_pred, s_values, opts);
                for (std::size_t i = 0; i < s_values.size(); ++i) {
                    if (want_path &&
                        !append(build_path(n, k, s_values[i], scan, scan.per_s[i])))
                        return out;
                    if (want_path_all &&
                        !append(build_path_all(n, k, s_values[i], scan, scan.per_s[i])))
                        return out;
                }
            }
        }
    }
    return out;
}

}  // namespace cliquebound
