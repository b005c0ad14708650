#include "setpair/exterior.hpp"

#include <algorithm>

namespace setpair {

Multivector::Multivector(int ground_n, int grade) : n_(ground_n), r_(grade) {
    if (ground_n < 0 || ground_n > 63) throw RangeError("Multivector: ground size out of range");
    if (grade < 0 || grade > ground_n) throw GradeError("Multivector: grade out of range");
}

Multivector Multivector::basis_element(int ground_n, std::uint64_t mask) {
    Multivector m(ground_n, std::popcount(mask));
    if (ground_n < 63 && (mask >> ground_n) != 0)
        throw RangeError("Multivector: mask outside [n]");
    m.terms_[mask] = 1;
    return m;
}

Multivector Multivector::from_vector(const QVec& v) {
    Multivector m(static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) m.terms_[std::uint64_t(1) << i] = v[i];
    return m;
}

BigRatio Multivector::coeff(std::uint64_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? BigRatio(0) : it->second;
}

void Multivector::add_term(std::uint64_t mask, const BigRatio& c) {
    if (std::popcount(mask) != r_) throw GradeError("add_term: wrong cardinality");
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(mask, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Multivector& Multivector::operator+=(const Multivector& o) {
    if (n_ != o.n_ || r_ != o.r_) throw GradeError("multivector sum: shape mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    if (n_ != o.n_ || r_ != o.r_) throw GradeError("multivector difference: shape mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Multivector& Multivector::operator*=(const BigRatio& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

int wedge_sign(std::uint64_t a, std::uint64_t b) {
    // Inversions between the ascending lists: pairs (x in a, y in b, x > y).
    int inv = 0;
    for (std::uint64_t rest = a; rest != 0; rest &= rest - 1) {
        int x = std::countr_zero(rest);
        inv += std::popcount(b & ((std::uint64_t(1) << x) - 1));
    }
    return (inv & 1) ? -1 : 1;
}

Multivector wedge(const Multivector& u, const Multivector& v) {
    if (u.ground_n() != v.ground_n()) throw GradeError("wedge: ground-set mismatch");
    int n = u.ground_n();
    if (u.grade() + v.grade() > n) throw GradeError("wedge: grade overflow");
    Multivector out(n, u.grade() + v.grade());
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            if ((a & b) != 0) continue;
            out.add_term(a | b, ca * cb * wedge_sign(a, b));
        }
    return out;
}

SubsetMask initial_set(const Multivector& w) {
    if (w.is_zero()) throw PreconditionError("initial_set: zero multivector");
    return SubsetMask(w.ground_n(), w.terms().begin()->first);
}

BasisMatrix::BasisMatrix(QMat columns) : n_(static_cast<int>(columns.size())) {
    for (const auto& col : columns)
        if (static_cast<int>(col.size()) != n_)
            throw PreconditionError("BasisMatrix: columns must have length n");
    // determinant of the matrix whose j-th column is columns[j]
    QMat rows(n_, QVec(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) rows[i][j] = columns[j][i];
    det_ = determinant(rows);
    if (det_ == 0) throw PreconditionError("BasisMatrix: singular matrix");
    cols_ = std::move(columns);
}

BasisMatrix BasisMatrix::identity(int n) {
    QMat cols(n, QVec(n, BigRatio(0)));
    for (int j = 0; j < n; ++j) cols[j][j] = 1;
    return BasisMatrix(std::move(cols));
}

QVec BasisMatrix::column(int j) const {
    if (j < 0 || j >= n_) throw RangeError("BasisMatrix::column: index out of range");
    return cols_[j];
}

BasisMatrix BasisMatrix::inverse() const {
    QMat rows(n_, QVec(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) rows[i][j] = cols_[j][i];
    QMat inv = mat_inverse(rows);
    QMat cols(n_, QVec(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) cols[j][i] = inv[i][j];
    return BasisMatrix(std::move(cols));
}

Multivector basis_monomial(const BasisMatrix& f, const SubsetMask& a) {
    if (a.card() == 0) throw PreconditionError("basis_monomial: empty index set");
    if (a.ground_n != f.n()) throw PreconditionError("basis_monomial: ground-set mismatch");
    Multivector acc(f.n(), 0);
    bool first = true;
    for (int e : a.elements()) {
        Multivector col = Multivector::from_vector(f.column(e - 1));
        acc = first ? col : wedge(acc, col);
        first = false;
    }
    return acc;
}

Multivector change_basis(const BasisMatrix& m, const Multivector& w) {
    if (m.n() != w.ground_n()) throw PreconditionError("change_basis: ground-set mismatch");
    Multivector out(w.ground_n(), w.grade());
    for (const auto& [mask, c] : w.terms()) {
        Multivector img = basis_monomial(m, SubsetMask(w.ground_n(), mask));
        img *= c;
        out += img;
    }
    return out;
}

ExteriorSubspace::ExteriorSubspace(int ground_n, int grade) : n_(ground_n), r_(grade) {
    if (ground_n < 0 || ground_n > 63)
        throw RangeError("ExteriorSubspace: ground size out of range");
    if (grade < 0 || grade > ground_n) throw GradeError("ExteriorSubspace: grade out of range");
}

Multivector ExteriorSubspace::reduce(Multivector w) const {
    if (w.ground_n() != n_ || w.grade() != r_)
        throw GradeError("ExteriorSubspace::reduce: shape mismatch");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        BigRatio c = w.coeff(pivots_[i]);
        if (c == 0) continue;
        Multivector sub = basis_[i];
        sub *= c;
        w -= sub;
    }
    return w;
}

bool ExteriorSubspace::contains(const Multivector& w) const { return reduce(w).is_zero(); }

void ExteriorSubspace::insert(Multivector w) {
    w = reduce(std::move(w));
    if (w.is_zero()) return;
    std::uint64_t piv = initial_set(w).bits;
    BigRatio lead = w.coeff(piv);
    w *= make_ratio(1, 1) / lead;
    // eliminate the new pivot from existing rows, then place by pivot order
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        BigRatio c = basis_[i].coeff(piv);
        if (c == 0) continue;
        Multivector sub = w;
        sub *= c;
        basis_[i] -= sub;
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    basis_.insert(basis_.begin() + idx, std::move(w));
}

ExteriorSubspace echelonize(int ground_n, int grade, const std::vector<Multivector>& vectors) {
    ExteriorSubspace w(ground_n, grade);
    for (const Multivector& v : vectors) {
        if (v.ground_n() != ground_n || v.grade() != grade)
            throw GradeError("echelonize: mixed grades or ground sets");
        w.insert(v);
    }
    return w;
}

Hypergraph initial_hypergraph(const ExteriorSubspace& w) {
    return Hypergraph(w.ground_n(), w.grade(), w.pivots());
}

Hypergraph initial_hypergraph_wrt(const BasisMatrix& f, const ExteriorSubspace& w) {
    BasisMatrix finv = f.inverse();
    std::vector<Multivector> conv;
    conv.reserve(w.basis().size());
    for (const Multivector& b : w.basis()) conv.push_back(change_basis(finv, b));
    return initial_hypergraph(echelonize(w.ground_n(), w.grade(), conv));
}

ExteriorSubspace monomial_subspace(const BasisMatrix& f, const Hypergraph& h) {
    std::vector<Multivector> vecs;
    vecs.reserve(h.size());
    for (std::uint64_t e : h.edges())
        vecs.push_back(basis_monomial(f, SubsetMask(h.ground_n(), e)));
    return echelonize(h.ground_n(), h.rank(), vecs);
}

bool is_self_annihilating(const ExteriorSubspace& w) {
    // Above grade n/2 every product has grade > n and vanishes identically.
    if (2 * w.grade() > w.ground_n()) return true;
    const auto& bs = w.basis();
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i; j < bs.size(); ++j)
            if (!wedge(bs[i], bs[j]).is_zero()) return false;
    return true;
}

ExteriorSubspace wedge_spaces(const ExteriorSubspace& u, const ExteriorSubspace& w) {
    if (u.ground_n() != w.ground_n()) throw GradeError("wedge_spaces: ground-set mismatch");
    if (u.grade() + w.grade() > u.ground_n()) throw GradeError("wedge_spaces: grade overflow");
    std::vector<Multivector> prods;
    for (const Multivector& a : u.basis())
        for (const Multivector& b : w.basis()) prods.push_back(wedge(a, b));
    return echelonize(u.ground_n(), u.grade() + w.grade(), prods);
}

ExteriorSubspace wedge_with_full_power(const ExteriorSubspace& w, int c) {
    if (c < 0) throw RangeError("wedge_with_full_power: negative power");
    if (w.grade() + c > w.ground_n()) throw GradeError("wedge_with_full_power: grade overflow");
    if (c == 0) return w;
    std::vector<Multivector> prods;
    for (const Multivector& b : w.basis())
        for (std::uint64_t j : k_subsets(w.ground_n(), c))
            prods.push_back(wedge(b, Multivector::basis_element(w.ground_n(), j)));
    return echelonize(w.ground_n(), w.grade() + c, prods);
}

Multivector wedge_of_subspace(const RationalSubspace& t) {
    if (t.dim() == 0) throw PreconditionError("wedge_of_subspace: zero-dimensional subspace");
    Multivector acc = Multivector::from_vector(t.basis()[0]);
    for (int i = 1; i < t.dim(); ++i) acc = wedge(acc, Multivector::from_vector(t.basis()[i]));
    if (acc.is_zero()) throw InvariantError("wedge_of_subspace: basis wedge vanished");
    BigRatio lead = acc.coeff(initial_set(acc).bits);
    acc *= make_ratio(1, 1) / lead;
    return acc;
}

}  // namespace setpair
