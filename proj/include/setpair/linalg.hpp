#pragma once

#include <vector>

#include "setpair/rational.hpp"
#include "setpair/subset.hpp"

namespace setpair {

using QVec = std::vector<BigRatio>;
using QMat = std::vector<QVec>;  // row-major

// In-place reduced row echelon form.  Zero rows are removed; returns the
// pivot column of each remaining row (strictly increasing).
std::vector<int> rref(QMat& m);

int rank_of(QMat m);

// Basis of {x : m x = 0}; vectors have size = column count of m.
QMat kernel_basis(const QMat& m, int cols);

BigRatio determinant(QMat m);

// Inverse of a square matrix; throws PreconditionError if singular.
QMat mat_inverse(const QMat& m);

QVec mat_vec(const QMat& m, const QVec& v);

bool is_zero_vec(const QVec& v);

// Subspace of Q^n stored as a reduced row-echelon basis (canonical, so two
// equal subspaces compare equal row by row).
class RationalSubspace {
  public:
    explicit RationalSubspace(int ambient);
    RationalSubspace(int ambient, QMat spanning);

    // Coordinate subspace span{e_i : i in s}.
    static RationalSubspace coordinate(int ambient, const SubsetMask& s);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const QMat& basis() const { return rows_; }
    const std::vector<int>& pivot_cols() const { return pivots_; }

    bool contains(const QVec& v) const;
    bool contains(const RationalSubspace& other) const;

    // Coefficients x with sum x_i * basis_row_i = v; requires v in the span.
    QVec coordinates_of(const QVec& v) const;

    RationalSubspace sum(const RationalSubspace& other) const;
    RationalSubspace intersect(const RationalSubspace& other) const;

    friend bool operator==(const RationalSubspace&, const RationalSubspace&) = default;

  private:
    int ambient_ = 0;
    QMat rows_;
    std::vector<int> pivots_;
};

struct SubspaceOps {
    int intersection_dim = 0;
    int sum_dim = 0;
    QMat intersection_basis;
};

// dim(A cap B) = dim A + dim B - dim(A + B), with the intersection basis
// recovered from the kernel of the stacked bases.
SubspaceOps subspace_ops(const RationalSubspace& a, const RationalSubspace& b);

}  // namespace setpair
