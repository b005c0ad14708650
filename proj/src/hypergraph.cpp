#include "setpair/hypergraph.hpp"

#include <algorithm>
#include <set>

namespace setpair {

Hypergraph::Hypergraph(int ground_n, int rank) : n_(ground_n), r_(rank) {
    if (ground_n < 0 || ground_n > 63) throw RangeError("Hypergraph: ground size out of range");
    if (rank < 0 || rank > ground_n) throw RangeError("Hypergraph: rank out of range");
}

Hypergraph::Hypergraph(int ground_n, int rank, std::vector<std::uint64_t> edges)
    : Hypergraph(ground_n, rank) {
    std::uint64_t limit = (ground_n == 63) ? ~std::uint64_t(0) >> 1
                                           : (std::uint64_t(1) << ground_n) - 1;
    for (std::uint64_t e : edges) {
        if ((e & ~limit) != 0) throw RangeError("Hypergraph: edge outside [n]");
        if (std::popcount(e) != rank) throw RangeError("Hypergraph: edge has wrong cardinality");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

bool Hypergraph::contains(std::uint64_t e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Hypergraph::is_subfamily_of(const Hypergraph& other) const {
    return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

BigInt binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

double real_binom(double x, int k) {
    if (k < 0) return 0.0;
    double num = 1.0, den = 1.0;
    for (int i = 0; i < k; ++i) {
        num *= x - i;
        den *= i + 1;
    }
    return num / den;
}

Hypergraph upper_shadow(const Hypergraph& h, int b) {
    if (b < 0) throw RangeError("upper_shadow: negative b");
    if (h.rank() + b > h.ground_n()) throw RangeError("upper_shadow: rank + b exceeds n");
    std::uint64_t full = (h.ground_n() == 63) ? ~std::uint64_t(0) >> 1
                                              : (std::uint64_t(1) << h.ground_n()) - 1;
    std::set<std::uint64_t> out;
    for (std::uint64_t e : h.edges())
        for (std::uint64_t add : k_subsets_of(full & ~e, b)) out.insert(e | add);
    return Hypergraph(h.ground_n(), h.rank() + b,
                      std::vector<std::uint64_t>(out.begin(), out.end()));
}

Hypergraph lower_shadow(const Hypergraph& h, int b_prime) {
    if (b_prime < 0) throw RangeError("lower_shadow: negative b'");
    if (b_prime > h.rank()) throw RangeError("lower_shadow: b' exceeds rank");
    std::set<std::uint64_t> out;
    for (std::uint64_t e : h.edges())
        for (std::uint64_t s : k_subsets_of(e, b_prime)) out.insert(s);
    return Hypergraph(h.ground_n(), b_prime, std::vector<std::uint64_t>(out.begin(), out.end()));
}

bool is_t_intersecting(const Hypergraph& h, int t) {
    if (t <= 0) return true;
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i; j < es.size(); ++j)
            if (std::popcount(es[i] & es[j]) < t) return false;
    return true;
}

Hypergraph full_star(int n, int r, int center) {
    if (center < 1 || center > n) throw RangeError("full_star: center outside [n]");
    if (r < 1 || r > n) throw RangeError("full_star: rank outside [1, n]");
    std::uint64_t c = std::uint64_t(1) << (center - 1);
    std::uint64_t full = (n == 63) ? ~std::uint64_t(0) >> 1 : (std::uint64_t(1) << n) - 1;
    std::vector<std::uint64_t> edges;
    for (std::uint64_t rest : k_subsets_of(full & ~c, r - 1)) edges.push_back(rest | c);
    return Hypergraph(n, r, std::move(edges));
}

std::optional<int> is_full_star(const Hypergraph& h) {
    if (h.rank() < 1 || h.empty()) return std::nullopt;
    if (BigInt(static_cast<unsigned long>(h.size())) != binom(h.ground_n() - 1, h.rank() - 1))
        return std::nullopt;
    std::uint64_t common = ~std::uint64_t(0);
    for (std::uint64_t e : h.edges()) common &= e;
    if (common == 0) return std::nullopt;
    return std::countr_zero(common) + 1;  // smallest qualifying center
}

Hypergraph colex_initial_segment(std::uint64_t m, int k, int n) {
    if (k < 0 || k > n) throw RangeError("colex_initial_segment: rank out of range");
    if (BigInt(m) > binom(n, k)) throw RangeError("colex_initial_segment: m exceeds C(n,k)");
    std::vector<std::uint64_t> edges;
    edges.reserve(m);
    std::uint64_t v = (k == 0) ? 0 : (std::uint64_t(1) << k) - 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        edges.push_back(v);
        if (k == 0) break;
        std::uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return Hypergraph(n, k, std::move(edges));
}

std::uint64_t kk_min_lower_shadow(std::uint64_t m, int k, int k_prime, int n) {
    if (k_prime < 0 || k_prime > k) throw RangeError("kk_min_lower_shadow: k' out of range");
    return lower_shadow(colex_initial_segment(m, k, n), k_prime).size();
}

double lovasz_kk_bound(std::uint64_t m, int k, int drop) {
    if (m < 1) throw RangeError("lovasz_kk_bound: m must be at least 1");
    if (drop < 0 || drop > k) throw RangeError("lovasz_kk_bound: drop out of range");
    double lo = k, hi = k;
    while (real_binom(hi, k) < static_cast<double>(m)) hi = hi * 2 + 1;
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        double mid = (lo + hi) / 2;
        if (real_binom(mid, k) < static_cast<double>(m))
            lo = mid;
        else
            hi = mid;
    }
    return real_binom((lo + hi) / 2, k - drop);
}

LymReport local_lym_intersecting_check(const Hypergraph& h, int b) {
    int n = h.ground_n(), a = h.rank();
    if (!is_t_intersecting(h, 1))
        throw PreconditionError("local_lym_intersecting_check: hypergraph is not intersecting");
    if (2 * a > n)
        throw PreconditionError("local_lym_intersecting_check: requires 2*rank <= n");
    if (b < 0 || a + b > n)
        throw PreconditionError("local_lym_intersecting_check: requires rank + b <= n");
    LymReport rep;
    rep.lhs = make_ratio(static_cast<long>(upper_shadow(h, b).size()), binom(n - 1, a + b - 1));
    rep.rhs = make_ratio(static_cast<long>(h.size()), binom(n - 1, a - 1));
    rep.holds = rep.lhs >= rep.rhs;
    rep.equality = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace setpair
