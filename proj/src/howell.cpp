#include "fogq/howell.hpp"

#include "fogq/errors.hpp"

namespace fogq {

void ModMatrix::reduce() {
    Int m = modulus();
    for (Int& x : a) {
        x %= m;
        if (x < 0) x += m;
    }
}

bool ModMatrix::is_zero() const {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

Int inv_mod(const Int& u, const Int& pN) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), u.get_mpz_t(), pN.get_mpz_t()))
        throw invariant_error("non-unit inversion mod " + pN.get_str());
    return r;
}

namespace {

void row_scale(ModMatrix& m, int i, const Int& s, const Int& pN) {
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = m.at(i, j) * s % pN;
}

void row_axpy(ModMatrix& m, int dst, int src, const Int& f, const Int& pN) {
    if (f == 0) return;
    for (int j = 0; j < m.cols; ++j) {
        m.at(dst, j) = (m.at(dst, j) - f * m.at(src, j)) % pN;
        if (m.at(dst, j) < 0) m.at(dst, j) += pN;
    }
}

} // namespace

ModMatrix howell_form(ModMatrix m) {
    m.reduce();
    const Int pN = m.modulus();
    // 1. triangularize with valuation pivoting, appending shadow rows
    //    p^{N-e} * (pivot row) so later columns see the full span
    std::vector<std::vector<Int>> rows;
    for (int i = 0; i < m.rows; ++i)
        rows.emplace_back(m.a.begin() + size_t(i) * m.cols, m.a.begin() + size_t(i + 1) * m.cols);

    struct Pivot {
        int row, col;
        long e;
    };
    std::vector<Pivot> pivots;
    size_t top = 0;
    for (int col = 0; col < m.cols && top < rows.size(); ++col) {
        long best = m.N;
        size_t who = rows.size();
        for (size_t i = top; i < rows.size(); ++i) {
            long v = valuation(rows[i][size_t(col)], m.p, m.N);
            if (v < best) { best = v; who = i; }
        }
        if (who == rows.size()) continue;
        std::swap(rows[top], rows[who]);
        Int pe = pow_int(m.p, (unsigned long)best);
        Int unit = rows[top][size_t(col)] / pe;
        Int uinv = inv_mod(unit, pN);
        for (Int& x : rows[top]) x = x * uinv % pN;
        for (size_t i = top + 1; i < rows.size(); ++i) {
            const Int& x = rows[i][size_t(col)];
            if (x == 0) continue;
            Int f = x / pe; // valuation >= best, exact
            for (int j = 0; j < m.cols; ++j) {
                rows[i][size_t(j)] = (rows[i][size_t(j)] - f * rows[top][size_t(j)]) % pN;
                if (rows[i][size_t(j)] < 0) rows[i][size_t(j)] += pN;
            }
        }
        if (best > 0) {
            // shadow: annihilator of the pivot, lives in later columns
            Int sh = pow_int(m.p, (unsigned long)(m.N - best));
            std::vector<Int> shadow(rows[top]);
            for (Int& x : shadow) x = x * sh % pN;
            rows.push_back(std::move(shadow));
        }
        pivots.push_back({int(top), col, best});
        ++top;
    }
    // 2. reduce above each pivot modulo the pivot p^e
    for (const Pivot& pv : pivots) {
        Int pe = pow_int(m.p, (unsigned long)pv.e);
        for (int i = 0; i < pv.row; ++i) {
            Int f = rows[size_t(i)][size_t(pv.col)] / pe;
            if (f == 0) continue;
            for (int j = 0; j < m.cols; ++j) {
                rows[size_t(i)][size_t(j)] =
                    (rows[size_t(i)][size_t(j)] - f * rows[size_t(pv.row)][size_t(j)]) % pN;
                if (rows[size_t(i)][size_t(j)] < 0) rows[size_t(i)][size_t(j)] += pN;
            }
        }
    }
    ModMatrix out(m.p, m.N, int(pivots.size()), m.cols);
    for (size_t i = 0; i < pivots.size(); ++i)
        for (int j = 0; j < m.cols; ++j) out.at(int(i), j) = rows[i][size_t(j)];
    return out;
}

bool howell_contains(const ModMatrix& H, std::vector<Int> v) {
    if (int(v.size()) != H.cols) throw invariant_error("howell_contains dimension mismatch");
    const Int pN = H.modulus();
    for (Int& x : v) {
        x %= pN;
        if (x < 0) x += pN;
    }
    int row = 0;
    for (int col = 0; col < H.cols; ++col) {
        if (row < H.rows && H.at(row, col) != 0) {
            long e = valuation(H.at(row, col), H.p, H.N);
            Int pe = pow_int(H.p, (unsigned long)e);
            if (v[size_t(col)] % pe != 0) return false;
            Int f = v[size_t(col)] / pe;
            for (int j = col; j < H.cols; ++j) {
                v[size_t(j)] = (v[size_t(j)] - f * H.at(row, j)) % pN;
                if (v[size_t(j)] < 0) v[size_t(j)] += pN;
            }
            ++row;
        } else if (v[size_t(col)] != 0) {
            return false;
        }
    }
    return true;
}

namespace {

// staircase P A U with global-minimum-valuation pivoting; row ops do not
// change the right kernel, column ops are tracked in U
struct Staircase {
    ModMatrix A;
    ModMatrix U; // cols x cols, invertible
    struct Pivot {
        int row, col;
        long e;
    };
    std::vector<Pivot> pivots;
};

Staircase staircase(const ModMatrix& m0) {
    Staircase s{m0, ModMatrix(m0.p, m0.N, m0.cols, m0.cols), {}};
    s.A.reduce();
    for (int j = 0; j < m0.cols; ++j) s.U.at(j, j) = 1;
    const Int pN = m0.modulus();
    std::vector<bool> col_used(size_t(m0.cols), false);
    int r = 0;
    while (r < s.A.rows) {
        long best = s.A.N;
        int bi = -1, bj = -1;
        for (int i = r; i < s.A.rows; ++i)
            for (int j = 0; j < s.A.cols; ++j) {
                if (col_used[size_t(j)]) continue;
                long v = valuation(s.A.at(i, j), s.A.p, s.A.N);
                if (v < best) { best = v; bi = i; bj = j; }
            }
        if (bi < 0) break;
        if (bi != r)
            for (int j = 0; j < s.A.cols; ++j) std::swap(s.A.at(bi, j), s.A.at(r, j));
        Int pe = pow_int(s.A.p, (unsigned long)best);
        Int unit = s.A.at(r, bj) / pe;
        Int uinv = inv_mod(unit, pN);
        for (int i = 0; i < s.A.rows; ++i) s.A.at(i, bj) = s.A.at(i, bj) * uinv % pN;
        for (int i = 0; i < s.U.rows; ++i) s.U.at(i, bj) = s.U.at(i, bj) * uinv % pN;
        // clear the pivot row across other unused columns (column ops)
        for (int j = 0; j < s.A.cols; ++j) {
            if (j == bj || col_used[size_t(j)]) continue;
            const Int& x = s.A.at(r, j);
            if (x == 0) continue;
            Int f = x / pe; // global min valuation makes this exact
            for (int i = 0; i < s.A.rows; ++i) {
                s.A.at(i, j) = (s.A.at(i, j) - f * s.A.at(i, bj)) % pN;
                if (s.A.at(i, j) < 0) s.A.at(i, j) += pN;
            }
            for (int i = 0; i < s.U.rows; ++i) {
                s.U.at(i, j) = (s.U.at(i, j) - f * s.U.at(i, bj)) % pN;
                if (s.U.at(i, j) < 0) s.U.at(i, j) += pN;
            }
        }
        // clear the pivot column below (row ops)
        for (int i = r + 1; i < s.A.rows; ++i) {
            const Int& x = s.A.at(i, bj);
            if (x == 0) continue;
            Int f = x / pe;
            row_axpy(s.A, i, r, f, pN);
        }
        col_used[size_t(bj)] = true;
        s.pivots.push_back({r, bj, best});
        ++r;
    }
    return s;
}

} // namespace

ModMatrix kernel_mod(const ModMatrix& m) {
    Staircase s = staircase(m);
    const Int pN = m.modulus();
    std::vector<bool> is_pivot(size_t(m.cols), false);
    ModMatrix gens(m.p, m.N, 0, m.cols);
    std::vector<Int> rows;
    int ngen = 0;
    for (const auto& pv : s.pivots) {
        is_pivot[size_t(pv.col)] = true;
        if (pv.e == 0) continue; // unit pivot: no kernel contribution
        Int sh = pow_int(m.p, (unsigned long)(m.N - pv.e));
        for (int i = 0; i < m.cols; ++i) rows.push_back(s.U.at(i, pv.col) * sh % pN);
        ++ngen;
    }
    for (int j = 0; j < m.cols; ++j) {
        if (is_pivot[size_t(j)]) continue;
        for (int i = 0; i < m.cols; ++i) rows.push_back(s.U.at(i, j));
        ++ngen;
    }
    gens.rows = ngen;
    gens.a = std::move(rows);
    return howell_form(std::move(gens));
}

std::optional<std::vector<Int>> solve_mod(const ModMatrix& m, const std::vector<Int>& b) {
    if (int(b.size()) != m.rows) throw invariant_error("solve_mod dimension mismatch");
    const Int pN = m.modulus();
    // augment b as an extra tracked column hit by the same row operations;
    // rerun the staircase with the vector riding along
    ModMatrix aug(m.p, m.N, m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[size_t(i)];
    }
    aug.reduce();
    // column ops must never touch the last column: temporarily mark it used
    // by running the staircase on the first cols columns only
    Staircase s{aug, ModMatrix(m.p, m.N, m.cols, m.cols), {}};
    for (int j = 0; j < m.cols; ++j) s.U.at(j, j) = 1;
    std::vector<bool> col_used(size_t(m.cols), false);
    int r = 0;
    while (r < s.A.rows) {
        long best = s.A.N;
        int bi = -1, bj = -1;
        for (int i = r; i < s.A.rows; ++i)
            for (int j = 0; j < m.cols; ++j) {
                if (col_used[size_t(j)]) continue;
                long v = valuation(s.A.at(i, j), s.A.p, s.A.N);
                if (v < best) { best = v; bi = i; bj = j; }
            }
        if (bi < 0) break;
        if (bi != r)
            for (int j = 0; j <= m.cols; ++j) std::swap(s.A.at(bi, j), s.A.at(r, j));
        Int pe = pow_int(s.A.p, (unsigned long)best);
        Int unit = s.A.at(r, bj) / pe;
        Int uinv = inv_mod(unit, pN);
        for (int i = 0; i < s.A.rows; ++i) s.A.at(i, bj) = s.A.at(i, bj) * uinv % pN;
        for (int i = 0; i < s.U.rows; ++i) s.U.at(i, bj) = s.U.at(i, bj) * uinv % pN;
        for (int j = 0; j < m.cols; ++j) {
            if (j == bj || col_used[size_t(j)]) continue;
            const Int& x = s.A.at(r, j);
            if (x == 0) continue;
            Int f = x / pe;
            for (int i = 0; i < s.A.rows; ++i) {
                s.A.at(i, j) = (s.A.at(i, j) - f * s.A.at(i, bj)) % pN;
                if (s.A.at(i, j) < 0) s.A.at(i, j) += pN;
            }
            for (int i = 0; i < s.U.rows; ++i) {
                s.U.at(i, j) = (s.U.at(i, j) - f * s.U.at(i, bj)) % pN;
                if (s.U.at(i, j) < 0) s.U.at(i, j) += pN;
            }
        }
        for (int i = r + 1; i < s.A.rows; ++i) {
            const Int& x = s.A.at(i, bj);
            if (x == 0) continue;
            Int f = x / pe;
            row_axpy(s.A, i, r, f, pN);
        }
        col_used[size_t(bj)] = true;
        s.pivots.push_back({r, bj, best});
        ++r;
    }
    // now solve the staircase: pivot p^e * y_col = rhs at each pivot row,
    // and every pivotless row must have zero rhs
    std::vector<Int> y(size_t(m.cols), Int(0));
    std::vector<bool> pivot_row(size_t(m.rows), false);
    for (const auto& pv : s.pivots) {
        pivot_row[size_t(pv.row)] = true;
        Int pe = pow_int(m.p, (unsigned long)pv.e);
        const Int& rhs = s.A.at(pv.row, m.cols);
        if (rhs % pe != 0) return std::nullopt;
        y[size_t(pv.col)] = rhs / pe % pN;
    }
    for (int i = 0; i < m.rows; ++i)
        if (!pivot_row[size_t(i)] && s.A.at(i, m.cols) != 0) return std::nullopt;
    std::vector<Int> x(size_t(m.cols), Int(0));
    for (int i = 0; i < m.cols; ++i) {
        Int acc = 0;
        for (int j = 0; j < m.cols; ++j) acc += s.U.at(i, j) * y[size_t(j)];
        x[size_t(i)] = acc % pN;
        if (x[size_t(i)] < 0) x[size_t(i)] += pN;
    }
    return x;
}

} // namespace fogq
