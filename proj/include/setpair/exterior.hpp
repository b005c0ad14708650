#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "setpair/hypergraph.hpp"
#include "setpair/linalg.hpp"
#include "setpair/rational.hpp"
#include "setpair/subset.hpp"

namespace setpair {

// Sparse grade-r element of the r-th exterior power of Q^n.  Terms are keyed
// by bitmask in a std::map, so iteration runs in ascending mask order, which
// is reverse-colex descending; begin() is therefore the initial set.
class Multivector {
  public:
    Multivector(int ground_n, int grade);

    // f_A with coefficient 1.
    static Multivector basis_element(int ground_n, std::uint64_t mask);

    // Grade-1 vector from coordinates.
    static Multivector from_vector(const QVec& v);

    int ground_n() const { return n_; }
    int grade() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::uint64_t, BigRatio>& terms() const { return terms_; }

    BigRatio coeff(std::uint64_t mask) const;
    void add_term(std::uint64_t mask, const BigRatio& c);

    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    Multivector& operator*=(const BigRatio& c);
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, const BigRatio& c) { return a *= c; }
    friend bool operator==(const Multivector&, const Multivector&) = default;

  private:
    int n_ = 0;
    int r_ = 0;
    std::map<std::uint64_t, BigRatio> terms_;
};

// Sign of the permutation sorting the concatenation of the ascending lists
// of a and b (disjoint masks): parity of the inversion count.
int wedge_sign(std::uint64_t a, std::uint64_t b);

// Bilinear extension of f_A ^ f_B = 0 if A and B meet, else +-f_{A u B}.
// Grade overflow (r + s > n) is an error.
Multivector wedge(const Multivector& u, const Multivector& v);

// Reverse-colex maximum support set of a nonzero multivector.
SubsetMask initial_set(const Multivector& w);

// Invertible rational n x n matrix; column j holds the basis vector f_{j+1}.
// Invertibility is checked at construction and the determinant cached.
class BasisMatrix {
  public:
    explicit BasisMatrix(QMat columns);
    static BasisMatrix identity(int n);

    int n() const { return n_; }
    QVec column(int j) const;  // 0-based
    const BigRatio& det() const { return det_; }
    BasisMatrix inverse() const;

  private:
    int n_ = 0;
    QMat cols_;  // cols_[j] = f_{j+1} coordinates
    BigRatio det_;
};

// f_A = wedge of F's columns indexed by A in increasing order, expanded in
// the standard basis.
Multivector basis_monomial(const BasisMatrix& f, const SubsetMask& a);

// Linear extension of e_S -> wedge of m's columns over S.  Applying the
// inverse matrix converts standard coordinates to F-coordinates.
Multivector change_basis(const BasisMatrix& m, const Multivector& w);

// Subspace of the r-th exterior power in reduced echelon form with
// reverse-colex pivot discipline: each basis vector's pivot is its initial
// set, pivot coefficient 1, pivots eliminated from all other rows, and rows
// ordered with pivots strictly decreasing in reverse colex.
class ExteriorSubspace {
  public:
    ExteriorSubspace(int ground_n, int grade);

    int ground_n() const { return n_; }
    int grade() const { return r_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Multivector>& basis() const { return basis_; }
    const std::vector<std::uint64_t>& pivots() const { return pivots_; }

    // Residual of w after eliminating all pivot coordinates.
    Multivector reduce(Multivector w) const;
    bool contains(const Multivector& w) const;
    void insert(Multivector w);  // no-op if w already in the span

    friend bool operator==(const ExteriorSubspace&, const ExteriorSubspace&) = default;

  private:
    int n_ = 0;
    int r_ = 0;
    std::vector<Multivector> basis_;
    std::vector<std::uint64_t> pivots_;  // ascending mask order
};

// Gaussian elimination into the canonical echelon form; zero vectors dropped.
ExteriorSubspace echelonize(int ground_n, int grade, const std::vector<Multivector>& vectors);

// Pivot sets of the echelon basis; equals {ins(w) : w in W, w != 0} and has
// size dim(W).
Hypergraph initial_hypergraph(const ExteriorSubspace& w);

// Initial hypergraph with respect to an arbitrary basis F: converts the
// stored basis to F-coordinates and reads the pivots there.
Hypergraph initial_hypergraph_wrt(const BasisMatrix& f, const ExteriorSubspace& w);

// span{f_A : A in h} with respect to F; dim = |h|.
ExteriorSubspace monomial_subspace(const BasisMatrix& f, const Hypergraph& h);

// v ^ w = 0 for all basis pairs including the diagonal (sufficient by
// bilinearity; the diagonal matters for even grade).
bool is_self_annihilating(const ExteriorSubspace& w);

// Echelonized span of pairwise basis wedges.
ExteriorSubspace wedge_spaces(const ExteriorSubspace& u, const ExteriorSubspace& w);

// W wedged with the full c-th exterior power of the ambient space.
ExteriorSubspace wedge_with_full_power(const ExteriorSubspace& w, int c);

// Wedge of the stored echelon basis of T, normalized so the coefficient of
// the initial set is 1 (canonical representative of the "unique up to a
// constant" decomposable form).
Multivector wedge_of_subspace(const RationalSubspace& t);

}  // namespace setpair
