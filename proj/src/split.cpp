#include "fogq/split.hpp"

#include <algorithm>
#include <sstream>

#include "fogq/errors.hpp"
#include "fogq/howell.hpp"

namespace fogq {

namespace {

// solve A X - X B = C mod p^N for X (rows(A) x rows(B)); nullopt if inconsistent
std::optional<std::vector<std::vector<Int>>> solve_sylvester(
    const std::vector<std::vector<Int>>& a, const std::vector<std::vector<Int>>& b,
    const std::vector<std::vector<Int>>& c, const Int& p, long N) {
    const int da = int(a.size()), db = int(b.size());
    ModMatrix s(p, N, da * db, da * db);
    // vec column-major: (I (x) A - B^T (x) I) vec(X) = vec(C)
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) {
            int row = j * da + i;
            for (int k = 0; k < da; ++k) s.at(row, j * da + k) += a[size_t(i)][size_t(k)];
            for (int l = 0; l < db; ++l) s.at(row, l * da + i) -= b[size_t(l)][size_t(j)];
        }
    s.reduce();
    std::vector<Int> rhs(size_t(da) * db);
    Int mod = pow_int(p, (unsigned long)N);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) {
            Int v = c[size_t(i)][size_t(j)] % mod;
            if (v < 0) v += mod;
            rhs[size_t(j) * da + i] = v;
        }
    auto x = solve_mod(s, rhs);
    if (!x) return std::nullopt;
    std::vector<std::vector<Int>> out(size_t(da), std::vector<Int>(size_t(db), Int(0)));
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) out[size_t(i)][size_t(j)] = (*x)[size_t(j) * da + i];
    return out;
}

} // namespace

SplitResult canonical_split(const OgusObject& m, const Int& p) {
    const LocalDatum* ld = m.local_at(p);
    if (!ld) throw input_error("prime " + p.get_str() + " not stored");
    const int n = m.dim;
    const long N = ld->frob.prec();

    std::vector<long> weights;
    std::vector<int> offs{0};
    for (const auto& s : m.filt.steps) {
        weights.push_back(s.weight);
        offs.push_back(s.basis.cols());
    }
    const int t = int(weights.size());
    if (offs.back() != n) throw invariant_error("filtration does not span the space");

    SplitResult out;
    out.p = p;
    if (t == 1) {
        out.prec = N;
        out.parts.push_back({weights[0], PadicMat::identity(p, N, n), n});
        return out;
    }

    QMat A = adapted_basis(m.filt, n);
    Rat detA = A.det();
    if (detA.get_num() % p == 0)
        throw precision_error("adapted filtration frame is not a basis mod p");
    QMat lift(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lift.at(i, j) = Rat(ld->frob.at(i, j));
    QMat conj = A.inverse() * lift * A;

    Int modN = pow_int(p, (unsigned long)N);
    auto to_res = [&](const Rat& x) -> Int {
        Int num = x.get_num() % modN, den = x.get_den() % modN;
        if (num < 0) num += modN;
        return num * inv_mod(den, modN) % modN;
    };
    std::vector<std::vector<Int>> E(size_t(n), std::vector<Int>(size_t(n), Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) E[size_t(i)][size_t(j)] = to_res(conj.at(i, j));

    auto block_of = [&](int idx) {
        int b = 0;
        while (offs[size_t(b) + 1] <= idx) ++b;
        return b;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (block_of(i) > block_of(j) && E[size_t(i)][size_t(j)] % modN != 0)
                throw invariant_error("Frobenius does not preserve the filtration mod p^N");

    auto sub_block = [&](int bi, int bj, const Int& mod) {
        int r0 = offs[size_t(bi)], r1 = offs[size_t(bi) + 1];
        int c0 = offs[size_t(bj)], c1 = offs[size_t(bj) + 1];
        std::vector<std::vector<Int>> b(size_t(r1 - r0), std::vector<Int>(size_t(c1 - c0), Int(0)));
        for (int i = r0; i < r1; ++i)
            for (int j = c0; j < c1; ++j) b[size_t(i - r0)][size_t(j - c0)] = E[size_t(i)][size_t(j)] % mod;
        return b;
    };

    // unipotent T = I + X straightening conj into block-diagonal form; drop
    // precision until every Sylvester block solves integrally
    long Nw = N;
    std::vector<std::vector<std::vector<std::vector<Int>>>> X;
    for (; Nw >= 1; --Nw) {
        Int mod = pow_int(p, (unsigned long)Nw);
        X.assign(size_t(t), std::vector<std::vector<std::vector<Int>>>(size_t(t)));
        bool ok = true;
        for (int span = 1; span < t && ok; ++span)
            for (int bi = 0; bi + span < t && ok; ++bi) {
                int bj = bi + span;
                int di = offs[size_t(bi) + 1] - offs[size_t(bi)];
                int dj = offs[size_t(bj) + 1] - offs[size_t(bj)];
                // rhs = -(E_ij + sum_{bi<k<bj} E_ik X_kj)
                auto rhs = sub_block(bi, bj, mod);
                for (int k = bi + 1; k < bj; ++k) {
                    auto eik = sub_block(bi, k, mod);
                    const auto& xkj = X[size_t(k)][size_t(bj)];
                    int dk = offs[size_t(k) + 1] - offs[size_t(k)];
                    for (int i = 0; i < di; ++i)
                        for (int j = 0; j < dj; ++j)
                            for (int l = 0; l < dk; ++l)
                                rhs[size_t(i)][size_t(j)] += eik[size_t(i)][size_t(l)] * xkj[size_t(l)][size_t(j)];
                }
                for (auto& row : rhs)
                    for (auto& v : row) {
                        v = (-v) % mod;
                        if (v < 0) v += mod;
                    }
                auto sol = solve_sylvester(sub_block(bi, bi, mod), sub_block(bj, bj, mod),
                                           rhs, p, Nw);
                if (!sol) ok = false;
                else X[size_t(bi)][size_t(bj)] = *sol;
            }
        if (ok) break;
    }
    if (Nw < 1)
        throw precision_error("weight splitting is not integral at the stored precision");

    PadicMat T(p, Nw, n);
    for (int i = 0; i < n; ++i) T.at(i, i) = 1;
    for (int bi = 0; bi < t; ++bi)
        for (int bj = bi + 1; bj < t; ++bj) {
            const auto& x = X[size_t(bi)][size_t(bj)];
            if (x.empty()) continue;
            for (size_t i = 0; i < x.size(); ++i)
                for (size_t j = 0; j < x[i].size(); ++j)
                    T.at(offs[size_t(bi)] + int(i), offs[size_t(bj)] + int(j)) = x[i][j];
        }
    PadicMat Tinv = T.inv_unit();
    PadicMat Amod(p, Nw, n);
    Int modW = Amod.modulus();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int num = A.at(i, j).get_num() % modW, den = A.at(i, j).get_den() % modW;
            if (num < 0) num += modW;
            Amod.at(i, j) = num * inv_mod(den, modW) % modW;
        }
    PadicMat Ainv = Amod.inv_unit();

    out.prec = Nw;
    PadicMat frobW = ld->frob.reduce_to(Nw);
    PadicMat sum(p, Nw, n);
    for (int b = 0; b < t; ++b) {
        PadicMat sel(p, Nw, n);
        for (int i = offs[size_t(b)]; i < offs[size_t(b) + 1]; ++i) sel.at(i, i) = 1;
        PadicMat proj = padic_mat_mul(padic_mat_mul(Amod, T),
                                      padic_mat_mul(sel, padic_mat_mul(Tinv, Ainv)));
        // invariants of the construction, cheap to certify outright
        if (!padic_mat_agree(padic_mat_mul(proj, proj), proj))
            throw invariant_error("projector is not idempotent");
        if (!padic_mat_agree(padic_mat_mul(proj, frobW), padic_mat_mul(frobW, proj)))
            throw invariant_error("projector does not commute with Frobenius");
        sum = padic_mat_add(sum, proj);

        ModMatrix rows(p, Nw, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rows.at(i, j) = proj.at(i, j);
        ModMatrix h = howell_form(rows);
        int rank = 0;
        for (int i = 0; i < h.rows; ++i)
            for (int j = 0; j < h.cols; ++j)
                if (h.at(i, j) != 0) {
                    if (h.at(i, j) % p != 0) ++rank;
                    break;
                }
        out.parts.push_back({weights[size_t(b)], proj, rank});
    }
    if (!padic_mat_agree(sum, PadicMat::identity(p, Nw, n)))
        throw invariant_error("projectors do not sum to the identity");

    // image of the partial sums must recover the filtration mod p^prec
    ModMatrix running(p, Nw, 0, n);
    for (int b = 0; b < t; ++b) {
        ModMatrix cols(p, Nw, n + running.rows, n);
        for (int i = 0; i < running.rows; ++i)
            for (int j = 0; j < n; ++j) cols.at(i, j) = running.at(i, j);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                cols.at(running.rows + i, j) = out.parts[size_t(b)].projector.at(j, i);
        running = howell_form(cols);
        QMat w = m.filt.steps[size_t(b)].basis.primitive_columns();
        ModMatrix wrows(p, Nw, w.cols(), n);
        for (int c = 0; c < w.cols(); ++c)
            for (int i = 0; i < n; ++i) {
                Int v = w.at(i, c).get_num() % modW;
                if (v < 0) v += modW;
                wrows.at(c, i) = v;
            }
        ModMatrix wh = howell_form(wrows);
        if (!(wh.rows == running.rows && wh.a == running.a))
            throw invariant_error("projector images do not match the filtration");
    }
    return out;
}

std::string SplitResult::str() const {
    std::ostringstream os;
    os << "canonical splitting at p = " << p.get_str() << ", precision " << prec << "\n";
    for (const auto& part : parts)
        os << "  weight " << part.weight << ": projector of rank " << part.rank << "\n";
    return os.str();
}

} // namespace fogq
