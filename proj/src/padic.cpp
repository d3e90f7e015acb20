#include "fogq/padic.hpp"

#include "fogq/berkowitz.hpp"
#include "fogq/errors.hpp"
#include "fogq/qmatrix.hpp"

namespace fogq {

namespace {

void require_same_prime(const Int& a, const Int& b) {
    if (a != b) throw input_error("prime mismatch: " + a.get_str() + " vs " + b.get_str());
}

} // namespace

PadicInt::PadicInt(const Int& p_in, long N_in, const Int& value) : p(p_in), N(N_in) {
    if (p < 3 || !is_prime(p)) throw input_error("p must be an odd prime");
    if (N < 1) throw input_error("precision must be >= 1");
    Int m = modulus();
    r = value % m;
    if (r < 0) r += m;
}

PadicInt padic_add(const PadicInt& x, const PadicInt& y) {
    require_same_prime(x.p, y.p);
    return PadicInt(x.p, std::min(x.N, y.N), x.r + y.r);
}

PadicInt padic_mul(const PadicInt& x, const PadicInt& y) {
    require_same_prime(x.p, y.p);
    return PadicInt(x.p, std::min(x.N, y.N), x.r * y.r);
}

PadicInt padic_inv(const PadicInt& x) {
    if (x.r % x.p == 0) throw invariant_error("non-unit inversion at p = " + x.p.get_str());
    return PadicInt(x.p, x.N, inv_mod(x.r, x.modulus()));
}

PadicMat::PadicMat(const Int& p, long N, int n, long val_shift)
    : p_(p), N_(N), n_(n), shift_(val_shift), a_(size_t(n) * n, Int(0)) {
    if (p_ < 3 || !is_prime(p_)) throw input_error("p must be an odd prime");
    if (N_ < 1) throw input_error("precision must be >= 1");
    if (n_ < 0) throw input_error("negative dimension");
}

PadicMat PadicMat::identity(const Int& p, long N, int n) {
    PadicMat m(p, N, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void PadicMat::reduce() {
    Int m = modulus();
    for (Int& x : a_) {
        x %= m;
        if (x < 0) x += m;
    }
}

PadicMat PadicMat::reduce_to(long N2) const {
    if (N2 > N_) throw precision_error("cannot raise precision");
    PadicMat m(p_, N2, n_, shift_);
    m.a_ = a_;
    m.reduce();
    return m;
}

PadicMat PadicMat::with_shift(long ds) const {
    PadicMat m = *this;
    m.shift_ += ds;
    return m;
}

PadicMat PadicMat::transpose() const {
    PadicMat m(p_, N_, n_, shift_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
    return m;
}

PadicMat PadicMat::kron(const PadicMat& o) const {
    require_same_prime(p_, o.p_);
    PadicMat m(p_, std::min(N_, o.N_), n_ * o.n_, shift_ + o.shift_);
    Int mod = m.modulus();
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (at(i, j) == 0) continue;
            for (int k = 0; k < o.n_; ++k)
                for (int l = 0; l < o.n_; ++l)
                    m.at(i * o.n_ + k, j * o.n_ + l) = at(i, j) * o.at(k, l) % mod;
        }
    return m;
}

std::pair<long, Int> PadicMat::det_val_unit() const {
    QMat lift(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) lift.at(i, j) = Rat(at(i, j));
    Rat d = lift.det();
    Int det = d.get_num(); // integer matrix, integer det
    Int mod = modulus();
    Int res = det % mod;
    if (res < 0) res += mod;
    if (res == 0)
        throw precision_error("determinant vanishes mod p^N (precision exhausted)");
    long v = valuation(res, p_, N_);
    Int unit = (res / pow_int(p_, (unsigned long)v)) % mod;
    return {v, unit};
}

PadicMat PadicMat::inv_general() const {
    QMat lift(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) lift.at(i, j) = Rat(at(i, j));
    Rat d = lift.det();
    Int det = d.get_num();
    Int mod = modulus();
    Int res = det % mod;
    if (res < 0) res += mod;
    if (res == 0)
        throw precision_error("determinant vanishes mod p^N (precision exhausted)");
    long v = valuation(res, p_, N_);
    if (v >= N_) throw precision_error("no precision left after inverting");
    // adjugate is integral: adj = det * lift^{-1}; stored^{-1} = p^{-v} u^{-1} adj
    QMat adj = Rat(det) * lift.inverse();
    long N2 = N_ - v;
    PadicMat out(p_, N2, n_, -shift_ - v);
    Int mod2 = out.modulus();
    Int unit = (res / pow_int(p_, (unsigned long)v)) % mod2;
    Int uinv = inv_mod(unit, mod2);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Rat& e = adj.at(i, j);
            if (e.get_den() != 1) throw invariant_error("adjugate not integral");
            Int x = e.get_num() * uinv % mod2;
            if (x < 0) x += mod2;
            out.at(i, j) = x;
        }
    return out;
}

PadicMat PadicMat::inv_unit() const {
    auto [v, unit] = det_val_unit();
    if (v != 0)
        throw invariant_error("non-unit determinant (Frobenius not invertible at this precision)");
    return inv_general();
}

namespace {

struct ME {
    Int v;
    const Int* m;
};
ME operator+(const ME& a, const ME& b) { return {(a.v + b.v) % *a.m, a.m}; }
ME operator-(const ME& a, const ME& b) {
    Int r = (a.v - b.v) % *a.m;
    if (r < 0) r += *a.m;
    return {r, a.m};
}
ME operator*(const ME& a, const ME& b) { return {a.v * b.v % *a.m, a.m}; }

} // namespace

std::vector<Int> PadicMat::charpoly_mod() const {
    Int mod = modulus();
    auto desc = berkowitz_charpoly<ME>(
        n_, [&](int i, int j) { return ME{at(i, j), &mod}; }, ME{Int(0), &mod}, ME{Int(1), &mod});
    std::vector<Int> asc(desc.size());
    for (size_t i = 0; i < desc.size(); ++i) asc[desc.size() - 1 - i] = desc[i].v;
    return asc;
}

ModMatrix PadicMat::to_mod() const {
    ModMatrix m(p_, N_, n_, n_);
    m.a = a_;
    m.reduce();
    return m;
}

bool PadicMat::operator==(const PadicMat& o) const {
    return p_ == o.p_ && N_ == o.N_ && n_ == o.n_ && shift_ == o.shift_ && a_ == o.a_;
}

PadicMat padic_mat_mul(const PadicMat& a, const PadicMat& b) {
    require_same_prime(a.p(), b.p());
    if (a.dim() != b.dim()) throw input_error("dimension mismatch");
    PadicMat m(a.p(), std::min(a.prec(), b.prec()), a.dim(), a.shift() + b.shift());
    Int mod = m.modulus();
    for (int i = 0; i < a.dim(); ++i)
        for (int k = 0; k < a.dim(); ++k) {
            Int s = a.at(i, k) % mod;
            if (s == 0) continue;
            for (int j = 0; j < a.dim(); ++j)
                m.at(i, j) = (m.at(i, j) + s * b.at(k, j)) % mod;
        }
    return m;
}

PadicMat padic_mat_add(const PadicMat& a, const PadicMat& b) {
    require_same_prime(a.p(), b.p());
    if (a.dim() != b.dim()) throw input_error("dimension mismatch");
    long s = std::min(a.shift(), b.shift());
    long prec = std::min(a.shift() + a.prec(), b.shift() + b.prec()) - s;
    if (prec < 1) throw precision_error("no overlapping precision in sum");
    PadicMat m(a.p(), prec, a.dim(), s);
    Int mod = m.modulus();
    Int fa = pow_int(a.p(), (unsigned long)(a.shift() - s));
    Int fb = pow_int(b.p(), (unsigned long)(b.shift() - s));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            Int x = (fa * a.at(i, j) + fb * b.at(i, j)) % mod;
            if (x < 0) x += mod;
            m.at(i, j) = x;
        }
    return m;
}

PadicMat padic_mat_sub(const PadicMat& a, const PadicMat& b) {
    return padic_mat_add(a, padic_mat_scale(Int(-1), b));
}

PadicMat padic_mat_scale(const Int& s, const PadicMat& a) {
    PadicMat m = a;
    Int mod = m.modulus();
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            Int x = s * m.at(i, j) % mod;
            if (x < 0) x += mod;
            m.at(i, j) = x;
        }
    return m;
}

bool padic_mat_agree(const PadicMat& a, const PadicMat& b) {
    if (a.p() != b.p() || a.dim() != b.dim()) return false;
    long s = std::min(a.shift(), b.shift());
    long prec = std::min(a.shift() + a.prec(), b.shift() + b.prec()) - s;
    if (prec < 1) return true; // nothing comparable
    Int mod = pow_int(a.p(), (unsigned long)prec);
    Int fa = pow_int(a.p(), (unsigned long)(a.shift() - s));
    Int fb = pow_int(b.p(), (unsigned long)(b.shift() - s));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            Int d = (fa * a.at(i, j) - fb * b.at(i, j)) % mod;
            if (d != 0) return false;
        }
    return true;
}

ModMatrix howell_kernel(const PadicMat& m) {
    if (m.shift() != 0) throw input_error("howell_kernel requires shift 0");
    return kernel_mod(m.to_mod());
}

} // namespace fogq
