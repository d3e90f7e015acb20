#include "fogq/qmatrix.hpp"

#include "fogq/berkowitz.hpp"
#include "fogq/errors.hpp"

namespace fogq {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::from_rows(const std::vector<std::vector<Rat>>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    QMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw invariant_error("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QMat QMat::transpose() const {
    QMat m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

QMat QMat::kron(const QMat& o) const {
    QMat m(r_ * o.r_, c_ * o.c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            const Rat& s = at(i, j);
            if (s == 0) continue;
            for (int k = 0; k < o.r_; ++k)
                for (int l = 0; l < o.c_; ++l)
                    m.at(i * o.r_ + k, j * o.c_ + l) = s * o.at(k, l);
        }
    return m;
}

QMat QMat::col(int j) const { return cols_slice(j, 1); }

QMat QMat::cols_slice(int j0, int n) const {
    QMat m(r_, n);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = at(i, j0 + j);
    return m;
}

QMat QMat::hjoin(const QMat& a, const QMat& b) {
    if (a.r_ != b.r_) throw invariant_error("hjoin row mismatch");
    QMat m(a.r_, a.c_ + b.c_);
    for (int i = 0; i < a.r_; ++i) {
        for (int j = 0; j < a.c_; ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.c_; ++j) m.at(i, a.c_ + j) = b.at(i, j);
    }
    return m;
}

QMat operator*(const QMat& a, const QMat& b) {
    if (a.cols() != b.rows()) throw invariant_error("mul shape mismatch");
    QMat m(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& s = a.at(i, k);
            if (s == 0) continue;
            for (int j = 0; j < b.cols(); ++j) m.at(i, j) += s * b.at(k, j);
        }
    return m;
}

QMat operator+(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw invariant_error("add shape mismatch");
    QMat m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) + b.at(i, j);
    return m;
}

QMat operator-(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw invariant_error("sub shape mismatch");
    QMat m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) - b.at(i, j);
    return m;
}

QMat operator*(const Rat& s, const QMat& a) {
    QMat m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = s * a.at(i, j);
    return m;
}

std::vector<int> QMat::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
        int piv = -1;
        for (int i = row; i < r_; ++i)
            if (at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < c_; ++j) std::swap(at(piv, j), at(row, j));
        Rat inv = 1 / at(row, col);
        for (int j = col; j < c_; ++j) at(row, j) *= inv;
        for (int i = 0; i < r_; ++i) {
            if (i == row || at(i, col) == 0) continue;
            Rat f = at(i, col);
            for (int j = col; j < c_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int QMat::rank() const {
    QMat m = *this;
    return int(m.rref().size());
}

Rat QMat::det() const {
    if (r_ != c_) throw invariant_error("det of non-square matrix");
    QMat m = *this;
    Rat d = 1;
    for (int col = 0; col < c_; ++col) {
        int piv = -1;
        for (int i = col; i < r_; ++i)
            if (m.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rat inv = 1 / m.at(col, col);
        for (int i = col + 1; i < r_; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat f = m.at(i, col) * inv;
            for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

QMat QMat::inverse() const {
    if (r_ != c_) throw invariant_error("inverse of non-square matrix");
    QMat aug = hjoin(*this, identity(r_));
    auto piv = aug.rref();
    if (int(piv.size()) != r_ || (r_ > 0 && piv.back() >= r_))
        throw invariant_error("matrix not invertible");
    return aug.cols_slice(r_, r_);
}

QMat QMat::kernel() const {
    QMat m = *this;
    auto piv = m.rref();
    std::vector<int> free_cols;
    {
        size_t k = 0;
        for (int j = 0; j < c_; ++j) {
            if (k < piv.size() && piv[k] == j) { ++k; continue; }
            free_cols.push_back(j);
        }
    }
    QMat ker(c_, int(free_cols.size()));
    for (int t = 0; t < int(free_cols.size()); ++t) {
        int j = free_cols[t];
        ker.at(j, t) = 1;
        for (int i = 0; i < int(piv.size()); ++i) ker.at(piv[i], t) = -m.at(i, j);
    }
    return ker;
}

QMat QMat::primitive_columns() const {
    QMat m = *this;
    for (int j = 0; j < c_; ++j) {
        Int l = 1;
        for (int i = 0; i < r_; ++i) l = lcm(l, Int(m.at(i, j).get_den()));
        Int g = 0;
        for (int i = 0; i < r_; ++i) {
            m.at(i, j) *= Rat(l);
            m.at(i, j).canonicalize();
            g = gcd(g, Int(m.at(i, j).get_num()));
        }
        if (g == 0) continue;
        int lead = 0;
        while (m.at(lead, j) == 0) ++lead;
        if (m.at(lead, j) < 0) g = -g;
        for (int i = 0; i < r_; ++i) {
            m.at(i, j) /= Rat(g);
            m.at(i, j).canonicalize();
        }
    }
    return m;
}

QMat QMat::column_space() const {
    QMat t = transpose();
    auto piv = t.rref();
    QMat basis(r_, int(piv.size()));
    for (int i = 0; i < int(piv.size()); ++i)
        for (int j = 0; j < r_; ++j) basis.at(j, i) = t.at(i, j);
    return basis.primitive_columns();
}

bool QMat::span_contains(const QMat& basis, const QMat& v) {
    if (basis.rows() != v.rows()) throw invariant_error("span shape mismatch");
    return hjoin(basis, v).rank() == basis.rank();
}

std::optional<QMat> QMat::solve(const QMat& b) const {
    if (b.rows() != r_) throw invariant_error("solve shape mismatch");
    QMat aug = hjoin(*this, b);
    auto piv = aug.rref();
    for (int p : piv)
        if (p >= c_) return std::nullopt;
    QMat x(c_, b.cols());
    for (int i = 0; i < int(piv.size()); ++i)
        for (int j = 0; j < b.cols(); ++j) x.at(piv[i], j) = aug.at(i, c_ + j);
    return x;
}

QPoly QMat::charpoly_q() const {
    if (r_ != c_) throw invariant_error("charpoly of non-square matrix");
    auto desc = berkowitz_charpoly<Rat>(
        r_, [&](int i, int j) { return at(i, j); }, Rat(0), Rat(1));
    std::vector<Rat> asc(desc.rbegin(), desc.rend());
    return QPoly(asc);
}

IntPoly QMat::charpoly() const { return IntPoly::from_q(charpoly_q()); }

QMat eval_poly(const QPoly& p, const QMat& m) {
    if (m.rows() != m.cols()) throw invariant_error("eval_poly needs square matrix");
    QMat acc(m.rows(), m.cols());
    for (int k = p.deg(); k >= 0; --k) {
        acc = acc * m;
        for (int i = 0; i < m.rows(); ++i) acc.at(i, i) += p.coeff(k);
    }
    return acc;
}

} // namespace fogq
