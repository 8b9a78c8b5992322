#include "cliquebound/bounds.hpp"

#include <algorithm>
#include <string>

namespace cliquebound {

BigInt binom(long long n, long long r) {
    if (n < 0 || r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigInt result = 1;
    for (long long i = 1; i <= r; ++i) {
        // Multiply before dividing; the intermediate result / i is always
        // integral because result holds C(n - r + i - 1, i - 1) * ... exactly.
        result = checked::mul(result, n - r + i) / i;
    }
    return result;
}

void HParams::validate() const {
    if (k < 3) throw parameter_error("part construction needs k >= 3");
    if (n < k) throw parameter_error("part construction needs n >= k");
    if (a < 1 || 2 * a >= k)
        throw parameter_error("part size a must satisfy 1 <= a < k/2, got a=" +
                              std::to_string(a) + " for k=" + std::to_string(k));
}

namespace {

void check_s(int s) {
    if (s < 2) throw parameter_error("clique size s must be at least 2");
}

TwoPointMax max_at_endpoints(int n, int k, int a_first, int a_second, int s) {
    BigInt first = extremal_clique_count(n, k, a_first, s);
    BigInt second = extremal_clique_count(n, k, a_second, s);
    TwoPointMax out{std::max(first, second), a_first, a_second,
                    first >= second, second >= first};
    return out;
}

}  // namespace

BigInt extremal_clique_count(int n, int k, int a, int s) {
    HParams{n, k, a}.validate();
    check_s(s);
    return checked::add(binom(k - a, s),
                        checked::mul(n - k + a, binom(a, s - 1)));
}

TwoPointMax cycle_bound(int n, int k, int s) {
    if (k < 5) throw parameter_error("cycle bound needs k >= 5");
    if (n < k) throw parameter_error("cycle bound needs n >= k");
    check_s(s);
    return max_at_endpoints(n, k, 2, cycle_endpoint_part(k), s);
}

TwoPointMax path_bound(int n, int k, int s) {
    if (k < 4) throw parameter_error("path bound needs k >= 4");
    if (n < k) throw parameter_error("path bound needs n >= k");
    check_s(s);
    return max_at_endpoints(n, k - 1, 1, path_endpoint_part(k), s);
}

Rational cycle_bound_all_graphs(int n, int k, int s) {
    if (k <= 2) throw parameter_error("cycle bound needs k >= 3");
    if (n < 1) throw parameter_error("graph order must be positive");
    check_s(s);
    return Rational(n - 1, k - 2) * Rational(binom(k - 1, s));
}

Rational path_bound_all_graphs(int n, int k, int s) {
    if (k <= 2) throw parameter_error("path bound needs k >= 3");
    if (n < 1) throw parameter_error("graph order must be positive");
    check_s(s);
    return Rational(n, k - 1) * Rational(binom(k - 1, s));
}

bool convexity_check(int n, int k, int s) {
    if (n < k) throw parameter_error("convexity domain needs n >= k");
    check_s(s);
    int t = cycle_endpoint_part(k);
    for (int a = 2; a + 1 <= t; ++a) {
        BigInt lo = extremal_clique_count(n, k, a - 1, s);
        BigInt mid = extremal_clique_count(n, k, a, s);
        BigInt hi = extremal_clique_count(n, k, a + 1, s);
        if (hi - mid < mid - lo) return false;
    }
    return true;
}

}  // namespace cliquebound
