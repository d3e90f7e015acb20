#include "fogq/roots.hpp"

#include <algorithm>
#include <deque>

#include "fogq/errors.hpp"

namespace fogq {
namespace {

void trim_top(std::vector<Int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void strip_content(std::vector<Int>& c) {
    Int g = 0;
    for (const Int& x : c) g = gcd(g, x);
    if (g <= 1) return;
    for (Int& x : c) x /= g;
}

// roots of b in |w| < 1, b(0) != 0; nullopt when some chain constant vanishes.
// Marden: with every chain constant nonzero there is no root on |w| = 1 and
// the count is determined by the signs, flipping to m - count when negative.
std::optional<int> unit_disk_count(std::vector<Int> b) {
    trim_top(b);
    int m = int(b.size()) - 1;
    if (m <= 0) return 0;
    std::vector<Int> g(size_t(m), Int(0));
    for (int j = 0; j < m; ++j) g[j] = b[0] * b[j] - b[m] * b[size_t(m) - j];
    if (g[0] == 0) return std::nullopt;
    bool flip = g[0] < 0;
    strip_content(g);
    auto sub = unit_disk_count(std::move(g));
    if (!sub) return std::nullopt;
    return flip ? m - *sub : *sub;
}

} // namespace

std::optional<int> try_count_roots_in_disk(const IntPoly& f, const Rat& r) {
    if (f.is_zero()) throw input_error("root counting on the zero polynomial");
    if (r <= 0) return 0;
    size_t k = 0;
    while (k < f.c.size() && f.c[k] == 0) ++k;
    int zeros = int(k);
    int m = f.deg() - zeros;
    if (m == 0) return zeros;
    // scale z = r w with r = u/v: b_j = a_{j+k} u^j v^{m-j}, integral
    Int u = r.get_num(), v = r.get_den();
    std::vector<Int> b(size_t(m) + 1);
    Int up = 1;
    for (int j = 0; j <= m; ++j) {
        b[j] = f.c[k + j] * up * pow_int(v, m - j);
        up *= u;
    }
    auto c = unit_disk_count(std::move(b));
    if (!c) return std::nullopt;
    return zeros + *c;
}

int count_roots_in_disk(const IntPoly& f, const Rat& r) {
    auto c = try_count_roots_in_disk(f, r);
    if (!c) throw precision_error("degenerate radius in root counting");
    return *c;
}

namespace {

// fractions in [1/3, 2/3]: bisection points to try inside an interval, so a
// split always shrinks widths by a factor <= 2/3
const Rat kSplitPoints[] = {
    Rat(1, 2),  Rat(4, 9),  Rat(5, 9),  Rat(3, 7),   Rat(4, 7),  Rat(5, 11),
    Rat(6, 11), Rat(2, 5),  Rat(3, 5),  Rat(5, 12),  Rat(7, 12), Rat(3, 8),
    Rat(5, 8),  Rat(7, 16), Rat(9, 16), Rat(5, 13),  Rat(8, 13), Rat(7, 17),
    Rat(10, 17), Rat(9, 23), Rat(14, 23), Rat(11, 27), Rat(16, 27), Rat(1, 3),
    Rat(2, 3),
};

struct CountedRadius {
    Rat r;
    int count;
};

CountedRadius pick_radius(const IntPoly& f, const Rat& a, const Rat& b) {
    for (const Rat& t : kSplitPoints) {
        Rat r = a + t * (b - a);
        auto c = try_count_roots_in_disk(f, r);
        if (c) return {r, *c};
    }
    throw precision_error("no non-degenerate counting radius found");
}

} // namespace

std::vector<RootCluster> certified_root_clusters(const IntPoly& f, const Rat& eps) {
    if (f.is_zero()) throw input_error("root clusters of the zero polynomial");
    if (eps <= 0) throw input_error("eps must be positive");
    std::vector<RootCluster> out;
    size_t k = 0;
    while (k < f.c.size() && f.c[k] == 0) ++k;
    if (k > 0) out.push_back({Rat(0), Rat(0), int(k)});
    int d = f.deg() - int(k);
    if (d == 0) return out;
    IntPoly h;
    h.c.assign(f.c.begin() + k, f.c.end());

    // Cauchy bounds: every root has L < |z| < H
    Rat mh(0), ml(0);
    for (int j = 0; j < d; ++j) {
        Rat t = abs(Rat(h.c[j]) / Rat(h.c[d]));
        if (t > mh) mh = t;
    }
    for (int j = 1; j <= d; ++j) {
        Rat t = abs(Rat(h.c[j]) / Rat(h.c[0]));
        if (t > ml) ml = t;
    }
    Rat H = 1 + mh, L = 1 / (1 + ml);

    CountedRadius lo = pick_radius(h, L / 2, L);
    CountedRadius hi = pick_radius(h, H, 2 * H);
    if (lo.count != 0 || hi.count != d)
        throw invariant_error("root count does not match Cauchy bounds");

    struct Annulus {
        Rat rlo, rhi;
        int clo, chi; // strict disk counts at the two radii
    };
    std::deque<Annulus> work{{lo.r, hi.r, 0, d}};
    while (!work.empty()) {
        Annulus a = work.front();
        work.pop_front();
        if (a.chi == a.clo) continue;
        if (a.rhi - a.rlo <= eps) {
            out.push_back({a.rlo, a.rhi, a.chi - a.clo});
            continue;
        }
        Rat third = (a.rhi - a.rlo) / 3;
        CountedRadius mid = pick_radius(h, a.rlo + third, a.rhi - third);
        work.push_back({a.rlo, mid.r, a.clo, mid.count});
        work.push_back({mid.r, a.rhi, mid.count, a.chi});
    }
    std::sort(out.begin(), out.end(),
              [](const RootCluster& x, const RootCluster& y) { return x.magnitude_low < y.magnitude_low; });
    return out;
}

} // namespace fogq
