#include "doctest.h"
#include "fogq/padic.hpp"

using namespace fogq;

namespace {
ModMatrix mm(const Int& p, long N, std::vector<std::vector<long>> rows) {
    ModMatrix m(p, N, int(rows.size()), int(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = rows[i][j];
    m.reduce();
    return m;
}
PadicMat pm(const Int& p, long N, std::vector<std::vector<long>> rows, long shift = 0) {
    PadicMat m(p, N, int(rows.size()), shift);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = rows[i][j];
    m.reduce();
    return m;
}
} // namespace

TEST_CASE("truncated p-adic scalars") {
    PadicInt a(5, 3, 2), b(5, 3, 124);
    CHECK(padic_add(a, b).r == 1);
    CHECK(padic_mul(a, b).r == 123);
    CHECK(padic_inv(a).r == 63); // 2 * 63 = 126 = 1 mod 125
    CHECK_THROWS(padic_inv(PadicInt(5, 3, 10)));
}

TEST_CASE("howell form is canonical for the row span") {
    // same span, different generators
    auto h1 = howell_form(mm(2, 2, {{1, 1}, {0, 2}}));
    auto h2 = howell_form(mm(2, 2, {{1, 3}, {0, 2}}));
    CHECK(h1.a == h2.a);
    CHECK(h1.rows == h2.rows);

    // howell propagates shadow rows: span{(2,1)} mod 4 contains (0,2)
    auto h3 = howell_form(mm(2, 2, {{2, 1}}));
    CHECK(howell_contains(h3, {0, 2}));
    CHECK(howell_contains(h3, {2, 1}));
    CHECK_FALSE(howell_contains(h3, {1, 0}));
}

TEST_CASE("kernels and solving mod p^N") {
    // 2x = 0 mod 8 forces x in 4 Z/8
    auto k = kernel_mod(mm(2, 3, {{2}}));
    CHECK(k.rows == 1);
    CHECK(k.at(0, 0) == 4);

    auto m = mm(5, 2, {{1, 2}, {2, 4}});
    auto sol = solve_mod(m, {3, 6});
    REQUIRE(sol.has_value());
    CHECK(((*sol)[0] + 2 * (*sol)[1]) % 25 == 3);
    CHECK_FALSE(solve_mod(m, {3, 7}).has_value());

    CHECK(inv_mod(2, 125) == 63);
    CHECK(inv_mod(124, 125) == 124);
}

TEST_CASE("padic matrices") {
    auto c = pm(5, 3, {{0, -5}, {1, -2}}); // companion of T^2 + 2T + 5
    auto [v, u] = c.det_val_unit();
    CHECK(v == 1);
    CHECK(u == 1);

    auto cp = c.charpoly_mod();
    CHECK(cp[0] == 5);
    CHECK(cp[1] == 2);
    CHECK(cp[2] == 1);

    // valuation-aware inverse: represents c^{-1} with one digit sacrificed
    auto ci = c.inv_general();
    CHECK(ci.shift() == -1);
    CHECK(ci.prec() == 2);
    CHECK(padic_mat_agree(padic_mat_mul(c, ci), PadicMat::identity(5, 2, 2)));

    auto un = pm(5, 3, {{2, 1}, {1, 1}});
    CHECK(padic_mat_mul(un, un.inv_unit()) == PadicMat::identity(5, 3, 2));

    // arithmetic respects the shift alignment
    auto tw = c.with_shift(1); // 5 * c
    CHECK(tw.shift() == 1);
    CHECK(padic_mat_agree(padic_mat_sub(tw, tw), PadicMat(5, 3, 2, 1)));
    CHECK(padic_mat_agree(padic_mat_add(c, c), padic_mat_scale(2, c)));

    CHECK(c.reduce_to(1).prec() == 1);
    CHECK(c.transpose().at(0, 1) == 1);
    CHECK(c.kron(c).dim() == 4);

    // kernel of (I - I) is everything; of a unit matrix, nothing
    auto k1 = howell_kernel(padic_mat_sub(c, c));
    CHECK(k1.rows == 2);
    auto k2 = howell_kernel(un);
    CHECK(k2.rows == 0);
}

TEST_CASE("charpoly matches the exact one modulo p^N") {
    auto m = pm(7, 3, {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    auto cp = m.charpoly_mod();
    // det = -3, trace = 16, second symmetric = 1*5-2*4 + 1*10-3*7 + 5*10-6*8 = -12
    Int mod = pow_int(7, 3);
    CHECK(cp[0] == (Int(3)) % mod);          // (-1)^3 det = 3
    CHECK(cp[1] == (Int(-12) + mod) % mod);  // + e_2
    CHECK(cp[2] == (Int(-16) + mod) % mod);  // - trace
    CHECK(cp[3] == 1);
}
