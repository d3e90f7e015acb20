#include "doctest.h"
#include "fogq/intpoly.hpp"
#include "fogq/qmatrix.hpp"

using namespace fogq;

namespace {
QPoly qp(std::vector<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.push_back(Rat(x));
    return QPoly(v);
}
IntPoly ip(std::vector<long> c) {
    std::vector<Int> v;
    for (long x : c) v.push_back(Int(x));
    return IntPoly(v);
}
} // namespace

TEST_CASE("rational polynomial arithmetic") {
    QPoly f = qp({0, -1, 0, 1}); // x^3 - x
    CHECK(f.deg() == 3);
    CHECK(f.eval(Rat(2)) == 6);
    CHECK(f.derivative() == qp({-1, 0, 3}));

    auto [q, r] = divmod(f, qp({-2, 1})); // divide by x - 2
    CHECK(q == qp({3, 2, 1}));
    CHECK(r == qp({6}));

    CHECK(gcd(qp({-1, 0, 1}), qp({1, -2, 1})) == qp({-1, 1})); // x - 1, monic

    auto x = xgcd(f, f.derivative());
    CHECK(x.g == qp({1}));
    CHECK(x.u * f + x.v * f.derivative() == qp({1}));

    CHECK(qp({1, 1}).monic() == qp({1, 1}));
    CHECK((Rat(2) * qp({1, 1})).monic() == qp({1, 1}));
}

TEST_CASE("integer polynomial basics") {
    IntPoly f = ip({5, 2, 1});
    CHECK(f.str() == "T^2 + 2T + 5");
    CHECK(ip({13, -6, 1}).str() == "T^2 - 6T + 13");
    CHECK(ip({49, 21, 7, 3, 1}).str() == "T^4 + 3T^3 + 7T^2 + 21T + 49");
    CHECK(ip({-2197, 507, -39, 1}).str() == "T^3 - 39T^2 + 507T - 2197");
    CHECK(ip({0, -1, 0, 1}).str("x") == "x^3 - x");
    CHECK(ip({0}).is_zero());
    CHECK(f.is_monic());
    CHECK(f.eval(Int(-2)) == 5);
    CHECK(ip({4, 6}).content() == 2);
    CHECK(ip({-4, -6}).primitive() == ip({2, 3}));

    CHECK(IntPoly::from_q(qp({2, 1})) == ip({2, 1}));
    CHECK_THROWS(IntPoly::from_q(Rat(1, 2) * qp({1})));
}

TEST_CASE("integer polynomial algebra") {
    CHECK(pow(ip({-5, 1}), 3) == ip({-125, 75, -15, 1}));
    CHECK(divexact(ip({-1, 0, 1}), ip({1, 1})) == ip({-1, 1}));
    CHECK_THROWS_AS(divexact(ip({1, 0, 1}), ip({1, 1})), invariant_error);

    // (x - 1)^2 (x + 2)
    IntPoly a = pow(ip({-1, 1}), 2) * ip({2, 1});
    auto parts = squarefree_decomposition(a);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == ip({2, 1}));
    CHECK(parts[0].second == 1);
    CHECK(parts[1].first == ip({-1, 1}));
    CHECK(parts[1].second == 2);

    CHECK(resultant(ip({1, 0, 1}), ip({-2, 0, 1})) == 9);
    CHECK(resultant(ip({-1, 1}), ip({-1, 1})) == 0);
}

TEST_CASE("rational matrices") {
    QMat m(3, 3);
    long vals[3][3] = {{2, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = vals[i][j];
    CHECK(m.rank() == 3);
    CHECK(m.det() == 3);
    CHECK(m.inverse() * m == QMat::identity(3));

    QMat s(2, 3);
    s.at(0, 0) = 1; s.at(0, 1) = 2; s.at(0, 2) = 3;
    s.at(1, 0) = 2; s.at(1, 1) = 4; s.at(1, 2) = 6;
    CHECK(s.rank() == 1);
    QMat k = s.kernel();
    CHECK(k.cols() == 2);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2; ++i) {
            Rat acc(0);
            for (int t = 0; t < 3; ++t) acc += s.at(i, t) * k.at(t, j);
            CHECK(acc == 0);
        }

    QMat cs = s.transpose().column_space();
    CHECK(cs.cols() == 1);
    CHECK(QMat::span_contains(cs, s.transpose()));

    auto sol = s.solve(s.col(2));
    REQUIRE(sol.has_value());
    QMat b(2, 1);
    b.at(0, 0) = 1;
    CHECK_FALSE(s.solve(b).has_value()); // (1,0) is off the line
}

TEST_CASE("matrix charpoly and polynomial evaluation") {
    // companion of T^2 + 2T + 5
    QMat c(2, 2);
    c.at(0, 1) = -5;
    c.at(1, 0) = 1;
    c.at(1, 1) = -2;
    CHECK(c.charpoly().str() == "T^2 + 2T + 5");
    CHECK(eval_poly(c.charpoly().to_q(), c) == QMat(2, 2)); // Cayley-Hamilton

    QMat i2 = QMat::identity(2);
    QMat kr = c.kron(i2);
    CHECK(kr.rows() == 4);
    CHECK(kr.at(0, 2) == -5);
    CHECK(kr.at(1, 3) == -5);
    CHECK(kr.at(0, 1) == 0);

    QMat j = QMat::hjoin(i2, c);
    CHECK(j.cols() == 4);
    CHECK(j.cols_slice(2, 2) == c);
    QMat half = Rat(1, 2) * i2;
    CHECK(half.primitive_columns() == i2);
}
