#include "fogq/weil.hpp"

#include <algorithm>
#include <sstream>

#include "fogq/errors.hpp"
#include "fogq/roots.hpp"

namespace fogq {

int WeilProfile::total() const {
    int t = 0;
    for (auto& [w, m] : entries) t += m;
    return t;
}

bool WeilProfile::has_weight(long w) const { return multiplicity(w) > 0; }

int WeilProfile::multiplicity(long w) const {
    for (auto& [wt, m] : entries)
        if (wt == w) return m;
    return 0;
}

WeilProfile WeilProfile::shifted(long delta) const {
    WeilProfile p = *this;
    for (auto& [w, m] : p.entries) w += delta;
    return p;
}

std::string WeilProfile::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ", ";
        os << "(" << entries[i].first << ", " << entries[i].second << ")";
    }
    os << "]";
    return os.str();
}

namespace {

void require_weil_input(const IntPoly& cp, const Int& q) {
    if (cp.is_zero() || cp.lead() != 1) throw input_error("characteristic polynomial must be monic");
    if (cp.c[0] == 0) throw input_error("zero constant term (Frobenius not invertible)");
    if (q < 3 || !prime_power_base(q)) throw input_error("q must be an odd prime power");
}

Rat default_eps(const IntPoly& cp, const Int& q) {
    // Cauchy lower bound on root magnitudes; gaps between adjacent levels
    // q^{w/2}, q^{(w+1)/2} scale with the magnitude, so an eps built from L
    // stays below every gap in range
    int n = cp.deg();
    Rat ml(0);
    for (int j = 1; j <= n; ++j) {
        Rat t = abs(Rat(cp.c[j]) / Rat(cp.c[0]));
        if (t > ml) ml = t;
    }
    Rat L = 1 / (1 + ml);
    Rat eps = L * Rat(q - 1) / (4 * Rat(q + 1));
    return std::min(eps, Rat(1, 4));
}

struct TaggedCluster {
    RootCluster c;
    long w;
};

// every cluster is matched to the unique w with q^w in [lo^2, hi^2];
// eps is halved on straddles, up to 5 times
std::vector<TaggedCluster> tag_clusters(const IntPoly& cp, const Int& q, Rat eps) {
    require_weil_input(cp, q);
    if (eps <= 0) throw input_error("eps must be positive");
    bool saw_nomatch = false;
    for (int attempt = 0; attempt <= 5; ++attempt, eps /= 2) {
        auto clusters = certified_root_clusters(cp, eps);
        std::vector<TaggedCluster> tagged;
        bool ambiguous = false, nomatch = false;
        for (const auto& cl : clusters) {
            Rat lo2 = cl.magnitude_low * cl.magnitude_low;
            Rat hi2 = cl.magnitude_high * cl.magnitude_high;
            long w = 0;
            Rat qw(1);
            while (qw > lo2) { qw /= Rat(q); --w; }
            while (qw < lo2) { qw *= Rat(q); ++w; }
            std::vector<long> hits;
            while (qw <= hi2) {
                hits.push_back(w);
                qw *= Rat(q);
                ++w;
            }
            if (hits.empty()) { nomatch = true; break; }
            if (hits.size() > 1) { ambiguous = true; break; }
            tagged.push_back({cl, hits[0]});
        }
        saw_nomatch = nomatch;
        if (!ambiguous && !nomatch) return tagged;
    }
    if (saw_nomatch)
        throw invariant_error("root magnitude matches no integer weight for q = " + q.get_str());
    throw precision_error("cannot separate adjacent weight levels at requested eps");
}

WeilProfile profile_from_tags(const std::vector<TaggedCluster>& tagged) {
    WeilProfile prof;
    for (const auto& t : tagged) {
        bool merged = false;
        for (auto& [w, m] : prof.entries)
            if (w == t.w) { m += t.c.multiplicity; merged = true; break; }
        if (!merged) prof.entries.push_back({t.w, t.c.multiplicity});
    }
    std::sort(prof.entries.begin(), prof.entries.end());
    return prof;
}

} // namespace

WeilProfile weight_profile(const IntPoly& cp, const Int& q, const Rat& eps) {
    return profile_from_tags(tag_clusters(cp, q, eps));
}

WeilProfile weight_profile(const IntPoly& cp, const Int& q) {
    require_weil_input(cp, q);
    return weight_profile(cp, q, default_eps(cp, q));
}

PurityResult is_pure(const IntPoly& cp, const Int& q, long w) {
    PurityResult r;
    auto prof = weight_profile(cp, q);
    r.profile_pure =
        prof.entries.size() == 1 && prof.entries[0] == std::make_pair(w, cp.deg());
    // functional equation: root multiset stable under a -> q^w / a iff
    // a_0 a_{n-j} = a_j q^{wj} for all j (rational comparison covers w < 0)
    int n = cp.deg();
    bool ok = true;
    for (int j = 0; j <= n && ok; ++j)
        ok = Rat(cp.c[0]) * Rat(cp.c[size_t(n) - j]) == Rat(cp.c[j]) * rat_pow(q, w * long(j));
    r.palindrome = ok;
    return r;
}

namespace {

// complex arithmetic on mpf with explicit precision (no global default)
struct CF {
    mpf_class re, im;
};
CF cf_add(const CF& a, const CF& b) { return {mpf_class(a.re + b.re), mpf_class(a.im + b.im)}; }
CF cf_sub(const CF& a, const CF& b) { return {mpf_class(a.re - b.re), mpf_class(a.im - b.im)}; }
CF cf_mul(const CF& a, const CF& b) {
    return {mpf_class(a.re * b.re - a.im * b.im), mpf_class(a.re * b.im + a.im * b.re)};
}
CF cf_div(const CF& a, const CF& b) {
    mpf_class n2(b.re * b.re + b.im * b.im);
    return {mpf_class((a.re * b.re + a.im * b.im) / n2),
            mpf_class((a.im * b.re - a.re * b.im) / n2)};
}
mpf_class cf_abs(const CF& a) { return sqrt(mpf_class(a.re * a.re + a.im * a.im)); }

std::optional<Int> round_close(const mpf_class& x) {
    mpf_class half(0.5, x.get_prec());
    mpf_class fl(floor(x + half));
    Int z;
    mpz_set_f(z.get_mpz_t(), fl.get_mpf_t());
    mpf_class zm(z, x.get_prec());
    if (abs(x - zm) >= mpf_class(0.25, 64)) return std::nullopt;
    return z;
}

// Durand-Kerner / Weierstrass simultaneous iteration on a squarefree monic
// integer polynomial; empty result when it fails to settle at this precision
std::vector<CF> dk_roots(const IntPoly& s, unsigned long bits) {
    int n = s.deg();
    std::vector<mpf_class> coef;
    coef.reserve(size_t(n) + 1);
    for (int j = 0; j <= n; ++j) coef.emplace_back(s.c[j], bits);
    Rat mh(0);
    for (int j = 0; j < n; ++j) {
        Rat t = abs(Rat(s.c[j]));
        if (t > mh) mh = t;
    }
    mpf_class radius(Rat(1) + mh, bits);

    std::vector<CF> z(size_t(n), CF{mpf_class(0, bits), mpf_class(0, bits)});
    CF seed{mpf_class(0.4, bits), mpf_class(0.9, bits)};
    CF acc{mpf_class(1, bits), mpf_class(0, bits)};
    for (int k = 0; k < n; ++k) {
        acc = cf_mul(acc, seed);
        z[k] = {mpf_class(acc.re * radius), mpf_class(acc.im * radius)};
    }
    auto eval = [&](const CF& x) {
        CF v{mpf_class(0, bits), mpf_class(0, bits)};
        for (int j = n; j >= 0; --j) {
            v = cf_mul(v, x);
            v.re += coef[j];
        }
        return v;
    };
    mpf_class tol(1, bits);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), bits / 2);
    for (int iter = 0; iter < 400; ++iter) {
        mpf_class worst(0, bits);
        for (int k = 0; k < n; ++k) {
            CF denom{mpf_class(1, bits), mpf_class(0, bits)};
            for (int j = 0; j < n; ++j)
                if (j != k) denom = cf_mul(denom, cf_sub(z[k], z[j]));
            CF delta = cf_div(eval(z[k]), denom);
            z[k] = cf_sub(z[k], delta);
            mpf_class d = cf_abs(delta);
            if (d > worst) worst = d;
        }
        if (worst < tol * radius) return z;
    }
    return {};
}

IntPoly int_one() {
    IntPoly p;
    p.c = {Int(1)};
    return p;
}

// numeric factor extraction on a squarefree monic polynomial, certified after
// the fact by exact division and an exact purity re-check
IntPoly weight_factor_squarefree(const IntPoly& s, const Int& q, long w) {
    auto tagged = tag_clusters(s, q, default_eps(s, q));
    int target = 0;
    for (const auto& t : tagged)
        if (t.w == w) target += t.c.multiplicity;
    if (target == 0) return int_one();
    if (target == s.deg()) return s;

    for (unsigned long bits : {192ul, 384ul, 768ul, 1536ul}) {
        auto roots = dk_roots(s, bits);
        if (roots.empty()) continue;
        // assign every approximate root to the certified cluster whose
        // interval is nearest to its magnitude
        std::vector<int> per_cluster(tagged.size(), 0);
        std::vector<CF> selected;
        bool bad = false;
        for (const auto& z : roots) {
            mpf_class mag = cf_abs(z);
            int best = -1;
            mpf_class best_d(0, bits);
            for (size_t ci = 0; ci < tagged.size(); ++ci) {
                mpf_class lo(tagged[ci].c.magnitude_low, bits);
                mpf_class hi(tagged[ci].c.magnitude_high, bits);
                mpf_class d(0, bits);
                if (mag < lo) d = lo - mag;
                else if (mag > hi) d = mag - hi;
                if (best < 0 || d < best_d) { best = int(ci); best_d = d; }
            }
            per_cluster[size_t(best)]++;
            if (tagged[size_t(best)].w == w) selected.push_back(z);
        }
        for (size_t ci = 0; ci < tagged.size(); ++ci)
            if (per_cluster[ci] != tagged[ci].c.multiplicity) { bad = true; break; }
        if (bad || int(selected.size()) != target) continue;

        // expand prod (T - z) and round
        std::vector<CF> pc{CF{mpf_class(1, bits), mpf_class(0, bits)}};
        for (const CF& z : selected) {
            std::vector<CF> nx(pc.size() + 1, CF{mpf_class(0, bits), mpf_class(0, bits)});
            for (size_t i = 0; i < pc.size(); ++i) {
                nx[i + 1] = cf_add(nx[i + 1], pc[i]);
                nx[i] = cf_sub(nx[i], cf_mul(pc[i], z));
            }
            pc = nx;
        }
        IntPoly cand;
        cand.c.resize(pc.size());
        bool rounded = true;
        for (size_t i = 0; i < pc.size() && rounded; ++i) {
            auto zi = round_close(pc[i].re);
            mpf_class imag = abs(pc[i].im);
            if (!zi || imag >= mpf_class(0.25, 64)) rounded = false;
            else cand.c[i] = *zi;
        }
        if (!rounded) continue;
        cand.trim();
        if (cand.deg() != target || cand.lead() != 1) continue;
        try {
            divexact(s, cand);
        } catch (const error&) {
            continue;
        }
        auto prof = weight_profile(cand, q);
        if (prof.entries.size() == 1 && prof.entries[0] == std::make_pair(w, target))
            return cand;
    }
    throw precision_error("could not certify a weight factor at available precision");
}

} // namespace

IntPoly weight_factor(const IntPoly& cp, const Int& q, long w) {
    WeilProfile prof = weight_profile(cp, q);
    int target = prof.multiplicity(w);
    if (target == 0) return int_one();
    if (prof.entries.size() == 1) return cp;

    IntPoly result = int_one();
    for (const auto& [s, e] : squarefree_decomposition(cp)) {
        IntPoly fw = weight_factor_squarefree(s, q, w);
        for (int i = 0; i < e; ++i) result = result * fw;
    }
    if (result.deg() != target) throw precision_error("weight factor degree mismatch");
    divexact(cp, result); // exact over Z or throws
    if (result.deg() > 0) {
        auto check = weight_profile(result, q);
        if (!(check.entries.size() == 1 && check.entries[0] == std::make_pair(w, target)))
            throw precision_error("weight factor failed the purity re-check");
    }
    return result;
}

} // namespace fogq
