#pragma once

#include "cliquebound/rational.hpp"

namespace cliquebound {

// C(n, r); 0 when r < 0, r > n, or n < 0. Exact, overflow-checked.
BigInt binom(long long n, long long r);

// Parameters of the three-part extremal family: parts A (size a),
// B (size n-k+a), C (size k-2a), with all A-B edges plus a complete graph
// on A∪C. Domain: k >= 3, n >= k, 1 <= a < k/2.
struct HParams {
    int n, k, a;
    void validate() const;
};

// Number of s-cliques in the three-part extremal graph:
// C(k-a, s) + (n-k+a) * C(a, s-1). Requires s >= 2 and valid HParams.
BigInt extremal_clique_count(int n, int k, int a, int s);

// max over the two admissible endpoint part sizes, with attainment flags
// (both true on a tie).
struct TwoPointMax {
    BigInt value;
    int a_first, a_second;
    bool first_attains, second_attains;
};

// Upper bound on the number of s-cliques in a 2-connected n-vertex graph
// with circumference < k: max at part sizes a = 2 and a = floor((k-1)/2).
// Domain: n >= k >= 5, s >= 2.
TwoPointMax cycle_bound(int n, int k, int s);

// Upper bound for connected n-vertex graphs with no path on k vertices:
// max of the counts at (k-1, a=1) and (k-1, a=floor((k-2)/2)).
// Domain: n >= k >= 4, s >= 2.
TwoPointMax path_bound(int n, int k, int s);

// Bound for ALL n-vertex graphs with circumference < k:
// (n-1)/(k-2) * C(k-1, s). Domain: n >= 1, k >= 3, s >= 2.
Rational cycle_bound_all_graphs(int n, int k, int s);

// Bound for ALL n-vertex graphs with no path on k vertices:
// n/(k-1) * C(k-1, s). Domain: n >= 1, k >= 3, s >= 2.
Rational path_bound_all_graphs(int n, int k, int s);

// True iff the discrete second differences of the clique-count formula in
// the part size a are all nonnegative on [1, floor((k-1)/2)], so the
// integer maximum sits at an endpoint. Vacuously true when the domain has
// fewer than three points.
bool convexity_check(int n, int k, int s);

// floor((k-1)/2): the larger admissible part size for the cycle bound.
inline int cycle_endpoint_part(int k) { return (k - 1) / 2; }
// floor((k-2)/2): the larger part size for the path bound (applied at k-1).
inline int path_endpoint_part(int k) { return (k - 2) / 2; }

}  // namespace cliquebound
