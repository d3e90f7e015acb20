#pragma once
#include <vector>

namespace fogq {

// division-free characteristic polynomial (Samuelson-Berkowitz), so it works
// both over Q and over Z/p^N. a(i,j) yields the entry; returns coefficients in
// descending order, leading 1 first.
template <class Elt, class Fn>
std::vector<Elt> berkowitz_charpoly(int n, Fn a, const Elt& zero, const Elt& one) {
    std::vector<Elt> v{one};
    if (n == 0) return v;
    v.push_back(zero - a(0, 0));
    for (int r = 2; r <= n; ++r) {
        // Toeplitz column for the leading r x r block:
        // t = (1, -a_rr, -(R C), -(R M C), ..., -(R M^{r-2} C))
        std::vector<Elt> t(size_t(r) + 1, zero);
        t[0] = one;
        t[1] = zero - a(r - 1, r - 1);
        std::vector<Elt> vec(size_t(r) - 1, zero);
        for (int i = 0; i < r - 1; ++i) vec[i] = a(i, r - 1);
        for (int k = 2; k <= r; ++k) {
            Elt s = zero;
            for (int j = 0; j < r - 1; ++j) s = s + a(r - 1, j) * vec[j];
            t[k] = zero - s;
            if (k < r) {
                std::vector<Elt> nv(size_t(r) - 1, zero);
                for (int i = 0; i < r - 1; ++i) {
                    Elt acc = zero;
                    for (int j = 0; j < r - 1; ++j) acc = acc + a(i, j) * vec[j];
                    nv[i] = acc;
                }
                vec = nv;
            }
        }
        std::vector<Elt> nv(size_t(r) + 1, zero);
        for (int i = 0; i <= r; ++i) {
            Elt acc = zero;
            for (int j = 0; j < int(v.size()); ++j) {
                int d = i - j;
                if (d < 0 || d > r) continue;
                acc = acc + t[d] * v[j];
            }
            nv[i] = acc;
        }
        v = std::move(nv);
    }
    return v;
}

} // namespace fogq
