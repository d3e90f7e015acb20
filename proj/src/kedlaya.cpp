#include "fogq/kedlaya.hpp"

#include <algorithm>
#include <map>

#include "fogq/errors.hpp"
#include "fogq/howell.hpp"

namespace fogq {

namespace {

long ceil_log(const Int& p, const Int& m) {
    long e = 0;
    Int v(1);
    while (v < m) { v *= p; ++e; }
    return e;
}

QPoly from_int(const IntPoly& f) { return f.to_q(); }

// substitute x -> x^p
IntPoly compose_power(const IntPoly& f, long p) {
    std::vector<Int> c(size_t(f.deg()) * p + 1, Int(0));
    for (long i = 0; i <= f.deg(); ++i) c[size_t(i * p)] = f.coeff(i);
    return IntPoly(c);
}

struct Reducer {
    QPoly f, df; // f and f', with u f + v f' = 1
    QPoly u, v;
    int d;       // deg f = 2g + 1

    explicit Reducer(const IntPoly& fi) : f(from_int(fi)), df(f.derivative()), d(f.deg()) {
        auto x = xgcd(f, df);
        if (x.g.deg() != 0) throw input_error("f must be squarefree");
        Rat inv = Rat(1) / x.g.coeff(0);
        u = inv * x.u;
        v = inv * x.v;
    }

    // split A = a f + b f' with deg b < deg f
    void bezout(const QPoly& a_in, QPoly& a, QPoly& b) const {
        b = divmod(a_in * v, f).second;
        a = divmod(a_in - b * df, f).first;
    }

    // pole ladder for A dx / y^(2t+1), t >= 1: returns the numerator one
    // rung down, A' dx / y^(2t-1)
    QPoly odd_step(const QPoly& num, long t) const {
        QPoly a, b;
        bezout(num, a, b);
        return a + Rat(2, 2 * t - 1) * b.derivative();
    }

    // A dx / y^(2m) -> A' dx / y^(2m-2), m >= 2
    QPoly even_step(const QPoly& num, long m) const {
        QPoly a, b;
        bezout(num, a, b);
        return a + Rat(1, m - 1) * b.derivative();
    }

    // bottom of the odd tower: quotient by the exact forms d(x^s y) until
    // deg < 2g; coordinates on x^i dx/y
    std::vector<Rat> odd_bottom(QPoly num) const {
        while (num.deg() >= d - 1) {
            long s = num.deg() - (d - 1);
            // d(x^s y) = [s x^(s-1) f + x^s f'/2] dx/y, leading (2s+d)/2 x^(s+d-1)
            std::vector<Rat> xc(size_t(s) + 1, Rat(0));
            xc.back() = 1;
            QPoly xs(xc);
            QPoly exact = Rat(s) * (xs_shift(xs, -1) * f) + Rat(1, 2) * (xs * df);
            num = num - (num.lead() / exact.lead()) * exact;
        }
        std::vector<Rat> out(size_t(d - 1), Rat(0));
        for (int i = 0; i < d - 1; ++i) out[size_t(i)] = num.coeff(i);
        return out;
    }

    // bottom of the even tower: A dx/y^2 with polynomial part split off
    std::vector<Rat> even_bottom(const QPoly& num) const {
        QPoly r = divmod(num, f).second;
        std::vector<Rat> out(size_t(d), Rat(0));
        for (int i = 0; i < d; ++i) out[size_t(i)] = r.coeff(i);
        return out;
    }

    static QPoly xs_shift(const QPoly& a, int by) {
        if (a.is_zero()) return a;
        if (by >= 0) {
            std::vector<Rat> c(size_t(a.deg() + by) + 1, Rat(0));
            for (int i = 0; i <= a.deg(); ++i) c[size_t(i + by)] = a.coeff(i);
            return QPoly(c);
        }
        std::vector<Rat> c;
        for (int i = -by; i <= a.deg(); ++i) c.push_back(a.coeff(i));
        return QPoly(c);
    }
};

Rat binom_half(int k) {
    // C(-1/2, k)
    Rat c(1);
    for (int i = 1; i <= k; ++i) c *= Rat(-1 - 2 * (i - 1), 2 * i);
    return c;
}

} // namespace

FrobeniusResult kedlaya_frobenius(const HyperCurve& c, const Int& p, long N,
                                  BasisKind kind, bool allow_small_p) {
    const int g = c.genus();
    const int d = 2 * g + 1;
    if (p < 3 || !is_prime(p)) throw input_error("p must be an odd prime");
    if (N < 1) throw input_error("precision must be >= 1");
    if (curve_disc(c) % p == 0) throw input_error("bad reduction at " + p.get_str());
    if (p <= 2 * g + 1 && !(allow_small_p && p == 3 && g == 1))
        throw input_error("p must exceed 2g+1 (pass the small-p flag for p=3, g=1)");

    long margin = ceil_log(p, Int(2 * N * d)) + 2 + (allow_small_p && p == 3 ? 2 : 0);
    const long K = N + margin; // series terms and working estimate

    const long pl = p.get_si();
    IntPoly D = compose_power(c.f, pl) - pow(c.f, (unsigned long)pl);
    Reducer red(c.f);

    // powers of D as rational polynomials, shared across basis columns
    std::vector<QPoly> dpow;
    dpow.push_back(QPoly(std::vector<Rat>{Rat(1)}));
    for (long k = 1; k < K; ++k) dpow.push_back(dpow.back() * from_int(D));

    const int dim = kind == BasisKind::projective ? 2 * g : 4 * g + 1;
    QMat frob(dim, dim);

    // odd columns: sigma(x^i dx/y) = p x^(pi+p-1) sum_k C(-1/2,k) D^k y^(-p(2k+1)) dx
    for (int i = 0; i < 2 * g; ++i) {
        std::map<long, QPoly, std::greater<long>> towers; // pole t of y^(2t+1)
        for (long k = 0; k < K; ++k) {
            long t = (pl * (2 * k + 1) - 1) / 2;
            Rat coef = Rat(p) * binom_half(int(k));
            QPoly term = coef * Reducer::xs_shift(dpow[size_t(k)], int(pl * i + pl - 1));
            auto it = towers.find(t);
            if (it == towers.end()) towers.emplace(t, term);
            else it->second = it->second + term;
        }
        QPoly acc;
        long t_cur = towers.begin()->first;
        for (auto& [t, poly] : towers) {
            while (t_cur > t) { acc = red.odd_step(acc, t_cur); --t_cur; }
            acc = acc + poly;
        }
        while (t_cur > 0) { acc = red.odd_step(acc, t_cur); --t_cur; }
        auto coords = red.odd_bottom(acc);
        for (int j = 0; j < 2 * g; ++j) frob.at(j, i) = coords[size_t(j)];
    }

    if (kind == BasisKind::open) {
        // even columns: sigma(x^i dx/y^2) = p x^(pi+p-1) sum_k (-1)^k D^k y^(-2p(k+1)) dx
        for (int i = 0; i <= 2 * g; ++i) {
            std::map<long, QPoly, std::greater<long>> towers; // pole m of y^(2m)
            for (long k = 0; k < K; ++k) {
                long m = pl * (k + 1);
                Rat coef(p);
                if (k % 2) coef = -coef;
                QPoly term = coef * Reducer::xs_shift(dpow[size_t(k)], int(pl * i + pl - 1));
                auto it = towers.find(m);
                if (it == towers.end()) towers.emplace(m, term);
                else it->second = it->second + term;
            }
            QPoly acc;
            long m_cur = towers.begin()->first;
            for (auto& [m, poly] : towers) {
                while (m_cur > m) { acc = red.even_step(acc, m_cur); --m_cur; }
                acc = acc + poly;
            }
            while (m_cur > 1) { acc = red.even_step(acc, m_cur); --m_cur; }
            auto coords = red.even_bottom(acc);
            for (int j = 0; j <= 2 * g; ++j) frob.at(2 * g + j, 2 * g + i) = coords[size_t(j)];
        }
    }

    PadicMat out(p, N, dim);
    Int mod = out.modulus();
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const Rat& x = frob.at(i, j);
            if (x.get_den() % p == 0)
                throw precision_error("reduction lost p-integrality; raise the precision");
            Int num = x.get_num() % mod, den = x.get_den() % mod;
            if (num < 0) num += mod;
            out.at(i, j) = num * inv_mod(den, mod) % mod;
        }
    return {out, kind, p, N};
}

IntPoly zeta_charpoly(const HyperCurve& c, const Int& p, long N, bool allow_small_p) {
    auto fr = kedlaya_frobenius(c, p, N, BasisKind::projective, allow_small_p);
    auto res = fr.matrix.charpoly_mod();
    Int mod = fr.matrix.modulus();
    const int ddim = 2 * c.genus();
    std::vector<Int> coeffs(size_t(ddim) + 1);
    coeffs[size_t(ddim)] = 1;
    for (int j = 1; j <= ddim; ++j) {
        auto pinned = pin_residue(res[size_t(ddim - j)], mod, weil_coeff_bound(ddim, j, p, 1));
        if (!pinned)
            throw precision_error("Weil window ambiguous mod p^" + std::to_string(N));
        coeffs[size_t(ddim - j)] = *pinned;
    }
    return IntPoly(coeffs);
}

OgusObject realise_h1(const HyperCurve& c, const std::vector<Int>& primes, long N,
                      BasisKind kind, bool allow_small_p) {
    if (primes.empty()) throw input_error("need at least one prime");
    std::vector<Int> ps = primes;
    std::sort(ps.begin(), ps.end());
    for (size_t i = 1; i < ps.size(); ++i)
        if (ps[i] == ps[i - 1]) throw input_error("duplicate prime " + ps[i].get_str());

    const int g = c.genus();
    OgusObject m;
    m.dim = kind == BasisKind::projective ? 2 * g : 4 * g + 1;
    m.labels = dr_basis(c, kind);
    if (kind == BasisKind::projective) {
        m.filt.steps = {{1, QMat::identity(m.dim)}};
    } else {
        QMat w1 = QMat::identity(m.dim).cols_slice(0, 2 * g);
        m.filt.steps = {{1, w1}, {2, QMat::identity(m.dim)}};
    }
    for (const Int& p : ps) {
        auto fr = kedlaya_frobenius(c, p, N, kind, allow_small_p);
        m.locals.push_back({p, N, fr.matrix});
    }
    auto rep = check(m);
    if (!rep.ok())
        throw invariant_error("realisation failed verification:\n" + rep.str());
    return m;
}

} // namespace fogq
