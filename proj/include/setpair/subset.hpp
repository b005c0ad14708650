#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "setpair/error.hpp"

namespace setpair {

enum class Ordering { LT, EQ, GT };

// A finite subset of [n] = {1,...,n}, bit-encoded: bit i-1 holds element i.
struct SubsetMask {
    int ground_n = 0;
    std::uint64_t bits = 0;

    SubsetMask() = default;
    SubsetMask(int n, std::uint64_t b) : ground_n(n), bits(b) {
        if (n < 0 || n > 63) throw RangeError("SubsetMask: ground size out of range");
        if (n < 63 && (b >> n) != 0)
            throw RangeError("SubsetMask: element outside [n]");
    }

    static SubsetMask from_elements(int n, const std::vector<int>& elems) {
        std::uint64_t b = 0;
        for (int e : elems) {
            if (e < 1 || e > n) throw RangeError("SubsetMask: element outside [n]");
            b |= std::uint64_t(1) << (e - 1);
        }
        return SubsetMask(n, b);
    }

    int card() const { return std::popcount(bits); }
    bool contains(int e) const { return e >= 1 && e <= ground_n && (bits >> (e - 1)) & 1; }
    SubsetMask complement() const {
        std::uint64_t full = (ground_n == 63) ? ~std::uint64_t(0) >> 1
                                              : (std::uint64_t(1) << ground_n) - 1;
        return SubsetMask(ground_n, full & ~bits);
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(card());
        for (std::uint64_t b = bits; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
};

// Largest element of a nonempty mask, 1-indexed.
inline int top_element(std::uint64_t bits) { return 64 - std::countl_zero(bits); }

// Reverse colex on equal-cardinality masks: a > b iff the largest element of
// the symmetric difference lies in b.
inline bool revcolex_mask_greater(std::uint64_t a, std::uint64_t b) {
    std::uint64_t d = a ^ b;
    if (d == 0) return false;
    return (b >> (top_element(d) - 1)) & 1;
}

// Total order on ([n] choose r); comparing sets of different cardinality (or
// ground set) is an invalid comparison.
inline Ordering revcolex_compare(const SubsetMask& a, const SubsetMask& b) {
    if (a.ground_n != b.ground_n || a.card() != b.card())
        throw PreconditionError("revcolex_compare: cardinality or ground-set mismatch");
    if (a.bits == b.bits) return Ordering::EQ;
    return revcolex_mask_greater(a.bits, b.bits) ? Ordering::GT : Ordering::LT;
}

// All k-subsets of [n] as masks, in colex order.  For equal-size sets colex
// order coincides with numeric order of the masks, so this is also
// reverse-colex descending - the canonical storage order used throughout.
inline std::vector<std::uint64_t> k_subsets(int n, int k) {
    if (k < 0 || n < 0) throw RangeError("k_subsets: negative argument");
    std::vector<std::uint64_t> out;
    if (k > n) return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::uint64_t v = (std::uint64_t(1) << k) - 1;
    std::uint64_t limit = (n == 63) ? ~std::uint64_t(0) >> 1 : (std::uint64_t(1) << n) - 1;
    while (v <= limit) {
        out.push_back(v);
        std::uint64_t t = v | (v - 1);  // Gosper's hack
        if (t == ~std::uint64_t(0)) break;
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

// k-subsets of an arbitrary (possibly sparse) mask, in colex order.
inline std::vector<std::uint64_t> k_subsets_of(std::uint64_t pool, int k) {
    std::vector<int> pos;
    for (std::uint64_t b = pool; b != 0; b &= b - 1) pos.push_back(std::countr_zero(b));
    std::vector<std::uint64_t> out;
    if (k < 0 || k > static_cast<int>(pos.size())) return out;
    for (std::uint64_t idxs : k_subsets(static_cast<int>(pos.size()), k)) {
        std::uint64_t m = 0;
        for (std::uint64_t b = idxs; b != 0; b &= b - 1)
            m |= std::uint64_t(1) << pos[std::countr_zero(b)];
        out.push_back(m);
    }
    return out;
}

}  // namespace setpair
