#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setpair/rational.hpp"
#include "setpair/subset.hpp"

namespace setpair {

// r-uniform hypergraph on [n].  Edges are stored canonically in
// reverse-colex descending order (ascending as bitmask integers), so
// equality, hashing and serialization are deterministic.
class Hypergraph {
  public:
    Hypergraph(int ground_n, int rank);
    Hypergraph(int ground_n, int rank, std::vector<std::uint64_t> edges);

    int ground_n() const { return n_; }
    int rank() const { return r_; }
    const std::vector<std::uint64_t>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    bool contains(std::uint64_t e) const;
    bool is_subfamily_of(const Hypergraph& other) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

  private:
    int n_ = 0;
    int r_ = 0;
    std::vector<std::uint64_t> edges_;
};

// C(n, k), exactly; 0 when k < 0 or k > n.
BigInt binom(long n, long k);

// Generalized binomial x(x-1)...(x-k+1)/k! for real x.
double real_binom(double x, int k);

// {B in ([n] choose r+b) : some edge of h is contained in B}
Hypergraph upper_shadow(const Hypergraph& h, int b);

// {B in ([n] choose b') : B is contained in some edge of h}
Hypergraph lower_shadow(const Hypergraph& h, int b_prime);

// Every ordered pair of edges (including an edge with itself) meets in at
// least t elements; plain "intersecting" is t = 1.
bool is_t_intersecting(const Hypergraph& h, int t);

// All r-subsets of [n] containing `center`; size C(n-1, r-1).
Hypergraph full_star(int n, int r, int center);

// The center if h is exactly a full 1-star; smallest qualifying center on
// ties (e.g. r = n).
std::optional<int> is_full_star(const Hypergraph& h);

// First m k-subsets of [n] in colex order.
Hypergraph colex_initial_segment(std::uint64_t m, int k, int n);

// Exact minimum of |lower_shadow(H, k')| over all m-edge k-uniform H on [n];
// the minimum is attained by the colex initial segment (Kruskal-Katona).
std::uint64_t kk_min_lower_shadow(std::uint64_t m, int k, int k_prime, int n);

// Solves C(x, k) = m for real x >= k by bisection, then returns
// C(x, k - drop).  Advisory lower bound on the (k-drop)-lower-shadow size;
// the only floating-point computation in the library.
double lovasz_kk_bound(std::uint64_t m, int k, int drop);

struct LymReport {
    BigRatio lhs;
    BigRatio rhs;
    bool holds = false;
    bool equality = false;
};

// Local LYM for an intersecting hypergraph:
//   |upper_shadow(h, b)| / C(n-1, a+b-1)  >=  |h| / C(n-1, a-1).
// Requires h 1-intersecting, 2a <= n and a + b <= n.
LymReport local_lym_intersecting_check(const Hypergraph& h, int b);

}  // namespace setpair
