#include "fogq/lll.hpp"

#include <algorithm>

#include "fogq/errors.hpp"

namespace fogq {

namespace {

Int nearest_int(const Rat& x) {
    // floor(x + 1/2)
    Rat y = x + Rat(1, 2);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
    return q;
}

void sub_scaled(std::vector<Int>& a, const Int& q, const std::vector<Int>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= q * b[i];
}

} // namespace

std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> rows, int cols) {
    for (const auto& r : rows)
        if (int(r.size()) != cols) throw input_error("ragged rows");
    size_t r = 0;
    for (int col = 0; col < cols && r < rows.size(); ++col) {
        for (;;) {
            size_t best = rows.size();
            for (size_t i = r; i < rows.size(); ++i) {
                if (rows[i][size_t(col)] == 0) continue;
                if (best == rows.size() ||
                    abs(rows[i][size_t(col)]) < abs(rows[best][size_t(col)]))
                    best = i;
            }
            if (best == rows.size()) break; // column clear below r
            std::swap(rows[r], rows[best]);
            bool clear = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][size_t(col)] == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), rows[i][size_t(col)].get_mpz_t(),
                           rows[r][size_t(col)].get_mpz_t());
                sub_scaled(rows[i], q, rows[r]);
                if (rows[i][size_t(col)] != 0) clear = false;
            }
            if (clear) break;
        }
        if (rows[r][size_t(col)] == 0) continue;
        if (rows[r][size_t(col)] < 0)
            for (auto& x : rows[r]) x = -x;
        for (size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][size_t(col)].get_mpz_t(),
                       rows[r][size_t(col)].get_mpz_t());
            sub_scaled(rows[i], q, rows[r]);
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<std::vector<Int>> lll_reduce(std::vector<std::vector<Int>> b) {
    const size_t n = b.size();
    if (n < 2) return b;
    const size_t D = b[0].size();

    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> norm2(n, Rat(0)); // squared Gram-Schmidt lengths

    auto gram_schmidt = [&]() {
        std::vector<std::vector<Rat>> star(n, std::vector<Rat>(D, Rat(0)));
        for (size_t i = 0; i < n; ++i) {
            for (size_t k = 0; k < D; ++k) star[i][k] = Rat(b[i][k]);
            for (size_t j = 0; j < i; ++j) {
                Rat dot(0);
                for (size_t k = 0; k < D; ++k) dot += Rat(b[i][k]) * star[j][k];
                if (norm2[j] == 0) throw invariant_error("dependent rows in lattice basis");
                mu[i][j] = dot / norm2[j];
                for (size_t k = 0; k < D; ++k) star[i][k] -= mu[i][j] * star[j][k];
            }
            Rat s(0);
            for (size_t k = 0; k < D; ++k) s += star[i][k] * star[i][k];
            norm2[i] = s;
        }
    };

    gram_schmidt();
    size_t k = 1;
    while (k < n) {
        for (size_t j = k; j-- > 0;) {
            Int q = nearest_int(mu[k][j]);
            if (q != 0) {
                sub_scaled(b[k], q, b[j]);
                gram_schmidt();
            }
        }
        if (norm2[k] >= (Rat(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gram_schmidt();
            k = std::max<size_t>(k - 1, 1);
        }
    }
    return b;
}

} // namespace fogq
