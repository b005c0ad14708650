#include "setpair/linalg.hpp"

#include <algorithm>

namespace setpair {

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[r], m[sel]);
        BigRatio inv = m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            BigRatio f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

int rank_of(QMat m) { return static_cast<int>(rref(m).size()); }

QMat kernel_basis(const QMat& m, int cols) {
    QMat red = m;
    std::vector<int> pivots = rref(red);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    QMat out;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, BigRatio(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red[i][free];
        out.push_back(std::move(v));
    }
    return out;
}

BigRatio determinant(QMat m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw PreconditionError("determinant: matrix not square");
    BigRatio det(1);
    for (int c = 0; c < n; ++c) {
        int sel = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) return BigRatio(0);
        if (sel != c) {
            std::swap(m[c], m[sel]);
            det = -det;
        }
        det *= m[c][c];
        BigRatio inv = m[c][c];
        for (int j = c; j < n; ++j) m[c][j] /= inv;
        for (int i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            BigRatio f = m[i][c];
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

QMat mat_inverse(const QMat& m) {
    const int n = static_cast<int>(m.size());
    QMat aug(n, QVec(2 * n, BigRatio(0)));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n)
            throw PreconditionError("mat_inverse: matrix not square");
        for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots[n - 1] != n - 1))
        throw PreconditionError("mat_inverse: singular matrix");
    QMat inv(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

QVec mat_vec(const QMat& m, const QVec& v) {
    QVec out(m.size(), BigRatio(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw PreconditionError("mat_vec: size mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    }
    return out;
}

bool is_zero_vec(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const BigRatio& x) { return x == 0; });
}

RationalSubspace::RationalSubspace(int ambient) : ambient_(ambient) {
    if (ambient < 0) throw RangeError("RationalSubspace: negative ambient dimension");
}

RationalSubspace::RationalSubspace(int ambient, QMat spanning) : RationalSubspace(ambient) {
    for (const auto& row : spanning)
        if (static_cast<int>(row.size()) != ambient)
            throw PreconditionError("RationalSubspace: vector has wrong ambient dimension");
    pivots_ = rref(spanning);
    rows_ = std::move(spanning);
}

RationalSubspace RationalSubspace::coordinate(int ambient, const SubsetMask& s) {
    QMat rows;
    for (int e : s.elements()) {
        if (e > ambient) throw RangeError("RationalSubspace::coordinate: element outside ambient");
        QVec v(ambient, BigRatio(0));
        v[e - 1] = 1;
        rows.push_back(std::move(v));
    }
    return RationalSubspace(ambient, std::move(rows));
}

bool RationalSubspace::contains(const QVec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw PreconditionError("RationalSubspace::contains: ambient mismatch");
    QVec rem = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const BigRatio& f = rem[pivots_[i]];
        if (f == 0) continue;
        BigRatio c = f;
        for (int j = 0; j < ambient_; ++j) rem[j] -= c * rows_[i][j];
    }
    return is_zero_vec(rem);
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

QVec RationalSubspace::coordinates_of(const QVec& v) const {
    // Rows are in reduced echelon form, so the pivot entries of v are the
    // coefficients directly.
    QVec coords(rows_.size());
    QVec rec(ambient_, BigRatio(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        coords[i] = v[pivots_[i]];
        for (int j = 0; j < ambient_; ++j) rec[j] += coords[i] * rows_[i][j];
    }
    if (rec != v) throw PreconditionError("coordinates_of: vector not in the subspace");
    return coords;
}

RationalSubspace RationalSubspace::sum(const RationalSubspace& other) const {
    if (ambient_ != other.ambient_) throw PreconditionError("sum: ambient mismatch");
    QMat rows = rows_;
    rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
    return RationalSubspace(ambient_, std::move(rows));
}

RationalSubspace RationalSubspace::intersect(const RationalSubspace& other) const {
    return RationalSubspace(ambient_, subspace_ops(*this, other).intersection_basis);
}

SubspaceOps subspace_ops(const RationalSubspace& a, const RationalSubspace& b) {
    if (a.ambient() != b.ambient()) throw PreconditionError("subspace_ops: ambient mismatch");
    const int n = a.ambient();
    SubspaceOps ops;
    ops.sum_dim = a.sum(b).dim();
    ops.intersection_dim = a.dim() + b.dim() - ops.sum_dim;

    // Columns: a-basis coefficients x, then b-basis coefficients y, with
    // sum x_i a_i - sum y_j b_j = 0.  Kernel rows give intersection vectors.
    const int p = a.dim(), q = b.dim();
    QMat sys(n, QVec(p + q, BigRatio(0)));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j) sys[j][i] = a.basis()[i][j];
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < n; ++j) sys[j][p + i] = -b.basis()[i][j];
    for (const QVec& ker : kernel_basis(sys, p + q)) {
        QVec v(n, BigRatio(0));
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < n; ++j) v[j] += ker[i] * a.basis()[i][j];
        if (!is_zero_vec(v)) ops.intersection_basis.push_back(std::move(v));
    }
    QMat canon = ops.intersection_basis;
    rref(canon);
    ops.intersection_basis = std::move(canon);
    if (static_cast<int>(ops.intersection_basis.size()) != ops.intersection_dim)
        throw InvariantError("subspace_ops: kernel dimension mismatch");
    return ops;
}

}  // namespace setpair
