// End-to-end acceptance gate. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failed criteria.
#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "fogq/experiments.hpp"
#include "fogq/hom.hpp"
#include "fogq/kedlaya.hpp"
#include "fogq/serialize.hpp"
#include "fogq/split.hpp"

using namespace fogq;

namespace {

HyperCurve E1() { return parse_curve("y^2 = x^3 - x"); }
HyperCurve E2() { return parse_curve("y^2 = x^3 - x + 1"); }
HyperCurve E1p() { return parse_curve("y^2 = x^3 + 4x"); }
HyperCurve quintic() { return parse_curve("y^2 = x^5 + x + 3"); }

const long kPrimes[] = {5, 7, 11, 13};

// charpolys computed in criterion 1, reused by the purity criterion
std::vector<std::pair<IntPoly, Int>> g_proj_cps;

bool zeta_oracles(std::string& out) {
    int good = 0, total = 0;
    std::ostringstream bad;
    for (const auto& c : {E1(), E2(), E1p()})
        for (long p : kPrimes) {
            ++total;
            auto cp = zeta_charpoly(c, p, 2);
            g_proj_cps.push_back({cp, Int(p)});
            Int ap = -cp.coeff(1);
            if (point_count_oracle(c, p, 1).count == p + 1 - ap) ++good;
            else bad << " " << c.str() << "@" << p;
        }
    auto cp = zeta_charpoly(quintic(), 7, 3);
    Int s1 = -cp.coeff(3);
    Int s2 = s1 * s1 - 2 * cp.coeff(2);
    bool q7 = point_count_oracle(quintic(), 7, 1).count == 8 - s1;
    bool q49 = point_count_oracle(quintic(), 7, 2).count == 50 - s2;
    std::ostringstream os;
    os << good << "/" << total << " traces match enumeration"
       << (q7 ? "" : "; quintic F_7 count off")
       << (q49 ? "" : "; quintic F_49 count off") << bad.str();
    out = os.str();
    return good == total && q7 && q49;
}

bool purity(std::string& out) {
    int good = 0;
    for (const auto& [cp, p] : g_proj_cps)
        if (is_pure(cp, p, 1).pure()) ++good;
    out = std::to_string(good) + "/" + std::to_string(g_proj_cps.size()) +
          " projective charpolys pure of weight 1";
    return good == int(g_proj_cps.size());
}

bool mixed_split(std::string& out) {
    auto m = realise_h1(E1(), {Int(5), Int(13)}, 2, BasisKind::open);
    bool dims = m.dim == 5;
    bool prof = filtration_profile(m).str() == "[(1, 2), (2, 3)]";
    bool pure = check(m).ok();
    bool splits = true;
    for (long p : {5L, 13L}) {
        auto sp = canonical_split(m, Int(p));
        splits = splits && sp.prec == 2 && sp.parts.size() == 2 &&
                 sp.parts[0].rank == 2 && sp.parts[1].rank == 3;
        PadicMat total(Int(p), sp.prec, m.dim);
        for (const auto& part : sp.parts) {
            const auto& P = part.projector;
            splits = splits && padic_mat_agree(padic_mat_mul(P, P), P);
            total = padic_mat_add(total, P);
        }
        splits = splits && padic_mat_agree(total, PadicMat::identity(Int(p), sp.prec, m.dim));
    }
    std::ostringstream os;
    os << "dim " << m.dim << ", profile " << filtration_profile(m).str()
       << (pure ? ", pure at 5 and 13" : ", purity check failed")
       << (splits ? ", split ranks (2, 3) with exact projector identities"
                  : ", splitting failed");
    out = os.str();
    return dims && prof && pure && splits;
}

bool isogeny(std::string& out) {
    std::vector<Int> ps = {Int(5), Int(7), Int(13)};
    auto same = isogeny_detect(E1(), E1(), ps, 3);
    auto twisted = isogeny_detect(E1(), E1p(), ps, 3);
    auto cross = isogeny_detect(E1(), E2(), ps, 3);
    bool ok = same.rank == 1 && twisted.rank == 1 && cross.rank == 0 &&
              cross.status.find("proved 0") != std::string::npos &&
              cross.status.find("at 7") != std::string::npos;
    std::ostringstream os;
    os << "ranks " << same.rank << "/" << twisted.rank << "/" << cross.rank
       << " for (E1,E1)/(E1,E1')/(E1,E2); last status: " << cross.status;
    out = os.str();
    return ok;
}

bool tate(std::string& out) {
    std::vector<Int> ps = {Int(5), Int(13), Int(17)};
    auto r1 = tate_rank(E1(), E1(), ps, 3);
    auto r2 = tate_rank(E1(), E1p(), ps, 3);
    auto r3 = tate_rank(E1(), E2(), ps, 3);
    bool identity = true;
    for (const auto* r : {&r1, &r2, &r3})
        identity = identity && r->expected && r->rank == *r->expected &&
                   r->status.find("Kunneth identity holds") != std::string::npos;
    bool ok = r1.rank == 3 && r2.rank == 3 && r3.rank == 2 && identity;
    std::ostringstream os;
    os << "ranks " << r1.rank << "/" << r2.rank << "/" << r3.rank
       << " (want 3/3/2), Kunneth identity "
       << (identity ? "holds on all three" : "violated");
    out = os.str();
    return ok;
}

// --- criterion 6 helpers ---

struct LawSuite {
    std::mt19937_64 rng{987654321};
    long checks = 0;
    long failures = 0;

    long pick(long lo, long hi) { // inclusive
        return lo + long(rng() % (unsigned long)(hi - lo + 1));
    }

    void expect(bool ok) {
        ++checks;
        if (!ok) ++failures;
    }

    QMat unimodular() {
        QMat u = QMat::identity(2);
        for (int s = 0; s < 3; ++s) {
            QMat sh = QMat::identity(2);
            Rat k(pick(-3, 3));
            if (rng() & 1) sh.at(0, 1) = k;
            else sh.at(1, 0) = k;
            u = u * sh;
        }
        return u;
    }

    // pure weight-w object of dim 2 at two primes, Frobenius a conjugated
    // companion of T^2 - a T + p^w with |a| <= 2 p^{w/2}
    OgusObject random_pure(const std::vector<Int>& ps, long w) {
        OgusObject m;
        m.dim = 2;
        m.labels = {"u", "v"};
        m.filt.steps = {{w, QMat::identity(2)}};
        QMat u = unimodular();
        QMat ui = u.inverse();
        for (const Int& p : ps) {
            Int pw = pow_int(p, (unsigned long)w);
            long amax = long(isqrt(4 * pw).get_si());
            Rat a(pick(-amax, amax));
            QMat comp(2, 2);
            comp.at(0, 1) = -Rat(pw);
            comp.at(1, 0) = 1;
            comp.at(1, 1) = a;
            QMat conj = u * comp * ui;
            PadicMat f(p, 6, 2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) f.at(i, j) = conj.at(i, j).get_num();
            f.reduce();
            m.locals.push_back({p, 6, f});
        }
        return m;
    }

    static WeilProfile negated(const WeilProfile& pr) {
        WeilProfile r;
        for (auto it = pr.entries.rbegin(); it != pr.entries.rend(); ++it)
            r.entries.push_back({-it->first, it->second});
        return r;
    }

    static WeilProfile convolved(const WeilProfile& a, const WeilProfile& b) {
        std::map<long, int> sum;
        for (const auto& [wa, da] : a.entries)
            for (const auto& [wb, db] : b.entries) sum[wa + wb] += da * db;
        WeilProfile r;
        for (const auto& [w, d] : sum) r.entries.push_back({w, d});
        return r;
    }

    void run_once() {
        long p1 = kPrimes[pick(0, 2)];
        long p2 = kPrimes[pick(0, 3)];
        while (p2 <= p1) p2 = kPrimes[pick(0, 3)];
        std::vector<Int> ps = {Int(p1), Int(p2)};

        long wa = pick(0, 2);
        auto A = random_pure(ps, wa);
        long n = pick(-2, 2);

        // twist laws, byte identical after canonical serialization
        expect(serialize(tate_twist(tate_twist(A, n), -n)) == serialize(A));
        expect(serialize(tate_twist(tate_twist(A, n), 1)) ==
               serialize(tate_twist(A, n + 1)));
        expect(filtration_profile(tate_twist(A, n)) ==
               filtration_profile(A).shifted(-2 * n));

        // unit laws for the tensor product
        auto one = unit_object(ps, 6);
        for (const auto& prod : {tensor(one, A), tensor(A, one)}) {
            bool ok = prod.dim == A.dim &&
                      filtration_profile(prod) == filtration_profile(A);
            for (const Int& p : ps)
                ok = ok && prod.local_at(p)->frob == A.local_at(p)->frob;
            expect(ok);
        }

        // dual laws: involution, profile negation
        auto Ad = dual(A);
        expect(filtration_profile(Ad) == negated(filtration_profile(A)));
        {
            auto Add = dual(Ad);
            bool ok = filtration_profile(Add) == filtration_profile(A);
            for (const Int& p : ps)
                ok = ok && padic_mat_agree(Add.local_at(p)->frob, A.local_at(p)->frob);
            expect(ok);
        }

        // profile of a tensor product is the convolution of profiles
        long wb = pick(0, 2);
        auto B = random_pure(ps, wb);
        auto A2 = direct_sum(A, tate_twist(A, -1));
        expect(filtration_profile(tensor(A2, B)) ==
               convolved(filtration_profile(A2), filtration_profile(B)));

        // disjoint weight profiles leave no morphisms
        long wc = pick(0, 2);
        while (wc == wa) wc = pick(0, 2);
        expect(hom_space(A, random_pure(ps, wc)).rank() == 0);
    }
};

bool category_laws(std::string& out) {
    LawSuite suite;
    while (suite.checks < 10000) suite.run_once();
    out = std::to_string(suite.checks) + " randomized law checks, " +
          std::to_string(suite.failures) + " failures";
    return suite.failures == 0;
}

bool soundness(std::string& out) {
    int stable = 0, total = 0;
    for (const auto& c : {E1(), E2(), E1p()})
        for (long p : kPrimes) {
            ++total;
            auto lo = kedlaya_frobenius(c, p, 2, BasisKind::projective);
            auto hi = kedlaya_frobenius(c, p, 3, BasisKind::projective);
            if (padic_mat_agree(lo.matrix, hi.matrix.reduce_to(2))) ++stable;
        }
    ++total;
    auto qlo = kedlaya_frobenius(quintic(), 7, 3, BasisKind::projective);
    auto qhi = kedlaya_frobenius(quintic(), 7, 4, BasisKind::projective);
    if (padic_mat_agree(qlo.matrix, qhi.matrix.reduce_to(3))) ++stable;

    std::mt19937_64 rng(424242);
    Int m = pow_int(13, 6);
    Int B = default_recon_bound(m);
    long bl = B.get_si();
    int trips = 0;
    for (int i = 0; i < 1000; ++i) {
        long num = long(rng() % (unsigned long)(2 * bl + 1)) - bl;
        long den = 1 + long(rng() % (unsigned long)bl);
        if (den % 13 == 0) den += 1;
        Rat want(num, den);
        want.canonicalize();
        Int r = (num % m + m) * inv_mod(den, m) % m;
        auto got = rational_reconstruct(r, m, B);
        if (got && *got == want) ++trips;
    }
    out = std::to_string(stable) + "/" + std::to_string(total) +
          " Frobenius runs stable mod p^N; " + std::to_string(trips) +
          "/1000 reconstruction round trips";
    return stable == total && trips == 1000;
}

struct Criterion {
    const char* name;
    bool (*fn)(std::string&);
    double limit_s; // 0 = no stated limit
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"zeta/oracle agreement", zeta_oracles, 60.0},
        {"purity of projective charpolys", purity, 0},
        {"mixed weights and canonical splitting", mixed_split, 0},
        {"isogeny detection", isogeny, 120.0},
        {"divisor-class rank on products", tate, 0},
        {"category laws (randomized)", category_laws, 0},
        {"numerical soundness", soundness, 0},
    };
    int failed = 0;
    int idx = 0;
    for (const auto& c : criteria) {
        ++idx;
        std::string detail;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs > c.limit_s) {
            ok = false;
            detail += " [over " + std::to_string(long(c.limit_s)) + " s budget]";
        }
        if (!ok) ++failed;
        std::cout << "criterion " << idx << " (" << c.name << "): "
                  << (ok ? "PASS" : "FAIL") << " - " << detail << "  ["
                  << std::fixed << std::setprecision(1) << secs << " s]\n";
    }
    std::cout << (failed ? "acceptance: FAILURES present\n" : "acceptance: all criteria pass\n");
    return failed;
}
