#include "fogq/hom.hpp"

#include <algorithm>
#include <sstream>

#include "fogq/errors.hpp"
#include "fogq/howell.hpp"
#include "fogq/lll.hpp"

namespace fogq {

namespace {

struct SharedPrime {
    const LocalDatum* a;
    const LocalDatum* b;
    long sys_prec; // precision of the commutation system after shift alignment
};

std::vector<SharedPrime> shared_primes(const OgusObject& a, const OgusObject& b) {
    std::vector<SharedPrime> out;
    for (const auto& la : a.locals) {
        const LocalDatum* lb = b.local_at(la.p);
        if (!lb) continue;
        long s = std::min(la.frob.shift(), lb->frob.shift());
        long prec = std::min(la.frob.shift() + la.frob.prec(),
                             lb->frob.shift() + lb->frob.prec()) - s;
        if (prec >= 1) out.push_back({&la, lb, prec});
    }
    if (out.empty()) throw input_error("objects share no primes at usable precision");
    return out;
}

// K vec(f) = 0 encodes f phi_src = phi_dst f modulo p^sys_prec, with vec
// stacking the columns of the dst.dim x src.dim unknown f
ModMatrix commutation_system(const SharedPrime& sp) {
    const PadicMat& A = sp.a->frob;
    const PadicMat& B = sp.b->frob;
    const int na = A.dim(), nb = B.dim(), D = na * nb;
    long s = std::min(A.shift(), B.shift());
    ModMatrix K(A.p(), sp.sys_prec, D, D);
    Int fa = pow_int(A.p(), (unsigned long)(A.shift() - s));
    Int fb = pow_int(A.p(), (unsigned long)(B.shift() - s));
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < na; ++j) {
            int row = j * nb + i;
            for (int k = 0; k < na; ++k) K.at(row, k * nb + i) += fa * A.at(k, j);
            for (int l = 0; l < nb; ++l) K.at(row, j * nb + l) -= fb * B.at(i, l);
        }
    K.reduce();
    return K;
}

// rational columns whose reductions span the rows' span mod p^N: entrywise
// reconstruction, with a short-vector search through the preimage lattice
// when reconstruction fails
QMat lift_span(const std::vector<std::vector<Int>>& gens, const Int& p, long N,
               const Int& B, int D) {
    Int mod = pow_int(p, (unsigned long)N);
    std::vector<std::vector<Rat>> cols;
    bool need_lattice = false;
    for (const auto& g : gens) {
        std::vector<Rat> v(size_t(D), Rat(0));
        bool ok = true;
        for (int i = 0; i < D && ok; ++i) {
            auto r = rational_reconstruct(g[size_t(i)], mod, B);
            if (!r) ok = false;
            else v[size_t(i)] = *r;
        }
        if (ok) cols.push_back(std::move(v));
        else need_lattice = true;
    }
    if (need_lattice) {
        std::vector<std::vector<Int>> L = gens;
        for (int i = 0; i < D; ++i) {
            std::vector<Int> e(size_t(D), Int(0));
            e[size_t(i)] = mod;
            L.push_back(std::move(e));
        }
        L = lll_reduce(hnf_rows(std::move(L), D));
        for (const auto& row : L) {
            Int mx(0);
            for (const auto& x : row) mx = std::max(mx, Int(abs(x)));
            if (mx > B) continue;
            std::vector<Rat> v(size_t(D), Rat(0));
            for (int i = 0; i < D; ++i) v[size_t(i)] = Rat(row[size_t(i)]);
            cols.push_back(std::move(v));
        }
    }
    QMat V(D, int(cols.size()));
    for (int c = 0; c < V.cols(); ++c)
        for (int i = 0; i < D; ++i) V.at(i, c) = cols[size_t(c)][size_t(i)];
    return V.column_space();
}

std::vector<std::vector<Int>> kernel_rows(const ModMatrix& m) {
    ModMatrix k = kernel_mod(m);
    std::vector<std::vector<Int>> rows;
    for (int i = 0; i < k.rows; ++i) {
        std::vector<Int> r(size_t(k.cols));
        for (int j = 0; j < k.cols; ++j) r[size_t(j)] = k.at(i, j);
        rows.push_back(std::move(r));
    }
    return rows;
}

QMat left_annihilator(const QMat& w) { return w.transpose().kernel().transpose(); }

// rows C with C vec(f) = 0 iff f maps each W_k(a) into W_k(b)
QMat filtration_constraints(const OgusObject& a, const OgusObject& b) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& step : a.filt.steps) {
        QMat wb = b.filt.space_at(step.weight, b.dim);
        if (wb.cols() == b.dim) continue;
        QMat c = step.basis.transpose().kron(left_annihilator(wb));
        for (int i = 0; i < c.rows(); ++i) {
            std::vector<Rat> r(size_t(c.cols()));
            for (int j = 0; j < c.cols(); ++j) r[size_t(j)] = c.at(i, j);
            rows.push_back(std::move(r));
        }
    }
    if (rows.empty()) return QMat(0, a.dim * b.dim);
    return QMat::from_rows(rows);
}

QMat cut_span(const QMat& v, const QMat& c) {
    if (v.cols() == 0 || c.rows() == 0) return v;
    QMat k = (c * v).kernel();
    if (k.cols() == 0) return QMat(v.rows(), 0);
    return (v * k).column_space();
}

// intersect the rational span with the commutation kernel at another prime
QMat refine_at(const QMat& v, const SharedPrime& sp) {
    if (v.cols() == 0) return v;
    ModMatrix K = commutation_system(sp);
    QMat vp = v.primitive_columns();
    Int mod = K.modulus();
    ModMatrix w(K.p, sp.sys_prec, K.rows, vp.cols());
    for (int r = 0; r < K.rows; ++r)
        for (int c = 0; c < vp.cols(); ++c) {
            Int s(0);
            for (int k = 0; k < K.cols; ++k) s += K.at(r, k) * vp.at(k, c).get_num();
            s %= mod;
            if (s < 0) s += mod;
            w.at(r, c) = s;
        }
    auto gens = kernel_rows(w);
    QMat combos = lift_span(gens, K.p, sp.sys_prec,
                            default_recon_bound(mod), vp.cols());
    if (combos.cols() == vp.cols()) return v;
    return (vp * combos).column_space();
}

bool commutes_at(const QMat& f, const SharedPrime& sp) {
    const PadicMat& A = sp.a->frob;
    const PadicMat& B = sp.b->frob;
    long s = std::min(A.shift(), B.shift());
    Int mod = pow_int(A.p(), (unsigned long)sp.sys_prec);
    Int fa = pow_int(A.p(), (unsigned long)(A.shift() - s));
    Int fb = pow_int(A.p(), (unsigned long)(B.shift() - s));
    for (int i = 0; i < B.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j) {
            Int acc(0);
            for (int k = 0; k < A.dim(); ++k)
                acc += fa * f.at(i, k).get_num() * A.at(k, j);
            for (int l = 0; l < B.dim(); ++l)
                acc -= fb * B.at(i, l) * f.at(l, j).get_num();
            if (acc % mod != 0) return false;
        }
    return true;
}

bool filtration_compatible(const QMat& f, const OgusObject& a, const OgusObject& b) {
    for (const auto& step : a.filt.steps) {
        QMat wb = b.filt.space_at(step.weight, b.dim);
        QMat img = f * step.basis;
        if (wb.cols() == 0) {
            for (int i = 0; i < img.rows(); ++i)
                for (int j = 0; j < img.cols(); ++j)
                    if (img.at(i, j) != 0) return false;
        } else if (!QMat::span_contains(wb, img)) {
            return false;
        }
    }
    return true;
}

} // namespace

HomResult hom_space(const OgusObject& a, const OgusObject& b,
                    std::optional<Int> height_bound) {
    auto sps = shared_primes(a, b);
    size_t pin = 0;
    for (size_t i = 1; i < sps.size(); ++i) {
        Int mi = pow_int(sps[i].a->p, (unsigned long)sps[i].sys_prec);
        Int mp = pow_int(sps[pin].a->p, (unsigned long)sps[pin].sys_prec);
        if (mi > mp) pin = i;
    }
    const SharedPrime& sp0 = sps[pin];
    const int D = a.dim * b.dim;
    Int mod0 = pow_int(sp0.a->p, (unsigned long)sp0.sys_prec);
    Int bound = height_bound ? *height_bound : default_recon_bound(mod0);
    if (bound < 1) throw precision_error("height bound below 1; store more precision");

    QMat v = lift_span(kernel_rows(commutation_system(sp0)), sp0.a->p, sp0.sys_prec,
                       bound, D);
    v = cut_span(v, filtration_constraints(a, b));
    for (size_t i = 0; i < sps.size(); ++i)
        if (i != pin) v = refine_at(v, sps[i]);

    HomResult out;
    out.pin_prime = sp0.a->p;
    out.pin_prec = sp0.sys_prec;
    QMat vp = v.primitive_columns();
    for (int c = 0; c < vp.cols(); ++c) {
        QMat f(b.dim, a.dim);
        for (int j = 0; j < a.dim; ++j)
            for (int i = 0; i < b.dim; ++i) f.at(i, j) = vp.at(j * b.dim + i, c);
        MorphismCandidate mc;
        mc.f = f;
        mc.filtration_compatible = filtration_compatible(f, a, b);
        bool all = mc.filtration_compatible;
        for (const auto& sp : sps) {
            if (commutes_at(f, sp)) mc.verified_primes.push_back(sp.a->p);
            else all = false;
        }
        if (!all) continue; // lattice noise, not a morphism
        mc.status = mc.verified_primes.size() >= 2 ? "verified" : "unconfirmed";
        out.basis.push_back(std::move(mc));
    }
    return out;
}

QMat invariants(const OgusObject& m, std::optional<Int> height_bound) {
    auto u = unit_object(m.primes(), m.min_prec());
    auto h = hom_space(u, m, height_bound);
    QMat v(m.dim, int(h.basis.size()));
    for (size_t c = 0; c < h.basis.size(); ++c)
        for (int i = 0; i < m.dim; ++i) v.at(i, int(c)) = h.basis[c].f.at(i, 0);
    return v.column_space();
}

std::string HomResult::str() const {
    std::ostringstream os;
    os << "hom rank " << rank() << ", reconstructed mod " << pin_prime.get_str() << "^"
       << pin_prec << "\n";
    for (size_t k = 0; k < basis.size(); ++k) {
        const auto& mc = basis[k];
        os << "  [" << k << "] " << mc.status << ", commutes mod p^N at {";
        for (size_t i = 0; i < mc.verified_primes.size(); ++i)
            os << (i ? ", " : "") << mc.verified_primes[i].get_str();
        os << "}, f = [";
        for (int i = 0; i < mc.f.rows(); ++i) {
            if (i) os << "; ";
            for (int j = 0; j < mc.f.cols(); ++j)
                os << (j ? ", " : "") << rat_str(mc.f.at(i, j));
        }
        os << "]\n";
    }
    return os.str();
}

} // namespace fogq
