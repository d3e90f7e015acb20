#include "doctest.h"
#include "fogq/curve.hpp"

using namespace fogq;

namespace {
IntPoly ip(std::vector<long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return IntPoly(v);
}
} // namespace

TEST_CASE("parsing and discriminants") {
    auto e1 = parse_curve("y^2 = x^3 - x");
    auto e2 = parse_curve("y^2 = x^3 - x + 1");
    auto e1p = parse_curve("y^2 = x^3 + 4x");
    auto quint = parse_curve("y^2 = x^5 + x + 3");
    CHECK(e1.genus() == 1);
    CHECK(quint.genus() == 2);
    CHECK(curve_disc(e1) == 4);
    CHECK(curve_disc(e2) == -23);
    CHECK(curve_disc(e1p) == -256);
    CHECK(curve_disc(quint) == 253381);
    CHECK(e1.str() == "y^2 = x^3 - x");

    // bare right-hand side and JSON coefficient forms give the same curve
    CHECK(parse_curve("x^3 - x").f == e1.f);
    CHECK(parse_curve(R"({"f": ["0","-1","0","1"]})").f == e1.f);

    CHECK_THROWS_AS(parse_curve("y^2 = x^4 + 1"), input_error);       // even degree
    CHECK_THROWS_AS(parse_curve("y^2 = x^3 - 3x + 2"), input_error);  // (x-1)^2 (x+2)
    CHECK_THROWS_AS(parse_curve("y^2 = x"), input_error);             // degree < 3
    CHECK_THROWS_AS(parse_curve("nonsense"), input_error);
    CHECK_THROWS_AS(make_curve(ip({-1, 0, 0, 2})), input_error);      // not monic
}

TEST_CASE("good primes and de Rham basis labels") {
    auto e1 = parse_curve("y^2 = x^3 - x");
    auto e2 = parse_curve("y^2 = x^3 - x + 1");

    auto gp = good_primes(e1, 3, 13);
    REQUIRE(gp.size() == 5);
    CHECK(gp.front() == 3);
    CHECK(gp.back() == 13);
    for (const auto& p : good_primes(e2, 3, 29)) CHECK(p != 23);
    CHECK(good_primes(e1, 14, 13).empty());

    auto bp = dr_basis(e1, BasisKind::projective);
    REQUIRE(bp.size() == 2);
    CHECK(bp[0] == "dx/y");
    CHECK(bp[1] == "x dx/y");
    auto bo = dr_basis(e1, BasisKind::open);
    REQUIRE(bo.size() == 5);
    CHECK(bo[2] == "dx/y^2");
    CHECK(bo[4] == "x^2 dx/y^2");

    auto quint = parse_curve("y^2 = x^5 + x + 3");
    CHECK(dr_basis(quint, BasisKind::projective).size() == 4);
    CHECK(dr_basis(quint, BasisKind::open).size() == 9);
}

TEST_CASE("point counts over small fields") {
    auto e1 = parse_curve("y^2 = x^3 - x");
    auto e2 = parse_curve("y^2 = x^3 - x + 1");
    auto quint = parse_curve("y^2 = x^5 + x + 3");

    const std::pair<long, long> e1c[] = {{5, 8}, {7, 8}, {11, 12}, {13, 8}, {17, 16}};
    for (auto [p, n] : e1c) CHECK(point_count_oracle(e1, p, 1).count == n);
    const std::pair<long, long> e2c[] = {{5, 8}, {7, 12}, {11, 10}, {13, 19}, {17, 14}};
    for (auto [p, n] : e2c) CHECK(point_count_oracle(e2, p, 1).count == n);

    CHECK(point_count_oracle(quint, 7, 1).count == 11);
    CHECK(point_count_oracle(quint, 7, 2).count == 55);
    // a_5 = -2 for e1, so |E(F_25)| = 25 + 1 - (a^2 - 2*5) = 32
    CHECK(point_count_oracle(e1, 5, 2).count == 32);

    CHECK_THROWS_AS(point_count_oracle(e1, 101, 3), input_error); // field too large
}
