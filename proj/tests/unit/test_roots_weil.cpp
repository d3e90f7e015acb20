#include "doctest.h"
#include "fogq/roots.hpp"
#include "fogq/weil.hpp"

using namespace fogq;

namespace {
IntPoly ip(std::vector<long> c) {
    std::vector<Int> v;
    for (long x : c) v.push_back(Int(x));
    return IntPoly(v);
}
} // namespace

TEST_CASE("disk root counting") {
    // (x^2 + 1)(x^2 - 4): magnitudes 1, 1, 2, 2
    IntPoly f = ip({1, 0, 1}) * ip({-4, 0, 1});
    CHECK(count_roots_in_disk(f, Rat(3, 2)) == 2);
    CHECK(count_roots_in_disk(f, Rat(3)) == 4);
    CHECK(count_roots_in_disk(f, Rat(1, 2)) == 0);
    // roots sit on |z| = 1: the Schur-Cohn chain must flag it
    CHECK_FALSE(try_count_roots_in_disk(f, Rat(1)).has_value());
    CHECK_THROWS_AS(count_roots_in_disk(f, Rat(1)), precision_error);
}

TEST_CASE("certified magnitude clusters") {
    auto cl = certified_root_clusters(ip({5, 2, 1}), Rat(1, 100));
    REQUIRE(cl.size() == 1);
    CHECK(cl[0].multiplicity == 2);
    CHECK(cl[0].magnitude_low * cl[0].magnitude_low < 5);
    CHECK(cl[0].magnitude_high * cl[0].magnitude_high > 5);
    CHECK(cl[0].magnitude_high - cl[0].magnitude_low <= Rat(1, 100));

    // roots 0, 1, 5: zero root gets its own [0,0] cluster
    auto cl3 = certified_root_clusters(ip({0, 5, -6, 1}), Rat(1, 10));
    REQUIRE(cl3.size() == 3);
    CHECK(cl3[0].magnitude_low == 0);
    CHECK(cl3[0].magnitude_high == 0);
    CHECK(cl3[1].magnitude_low < 1);
    CHECK(cl3[1].magnitude_high > 1);
    CHECK(cl3[2].magnitude_high > 5);
    int total = 0;
    for (auto& c : cl3) total += c.multiplicity;
    CHECK(total == 3);
}

TEST_CASE("weight profiles") {
    CHECK(weight_profile(ip({5, 2, 1}), 5).str() == "[(1, 2)]");
    // (T - 1)(T - 5)^2
    IntPoly m = ip({-1, 1}) * pow(ip({-5, 1}), 2);
    auto pr = weight_profile(m, 5);
    CHECK(pr.str() == "[(0, 1), (2, 2)]");
    CHECK(pr.total() == 3);
    CHECK(pr.has_weight(2));
    CHECK_FALSE(pr.has_weight(1));
    CHECK(pr.multiplicity(2) == 2);
    CHECK(pr.shifted(3).str() == "[(3, 1), (5, 2)]");

    // |3| is no integer power of sqrt(5): not a Weil polynomial for q = 5
    CHECK_THROWS_AS(weight_profile(ip({-3, 1}), 5), invariant_error);

    // genus-2 zeta polynomial at q = 7 is pure of weight 1
    CHECK(weight_profile(ip({49, 21, 7, 3, 1}), 7).str() == "[(1, 4)]");
}

TEST_CASE("purity verdicts") {
    CHECK(is_pure(ip({5, 2, 1}), 5, 1).pure());
    CHECK(is_pure(ip({13, -6, 1}), 13, 1).pure());
    CHECK(is_pure(ip({49, 21, 7, 3, 1}), 7, 1).pure());
    CHECK(is_pure(pow(ip({-5, 1}), 3), 5, 2).pure());

    // wrong target weight
    CHECK_FALSE(is_pure(ip({5, 2, 1}), 5, 2).pure());
    // (T - 1)(T - 5): palindromic for w = 1 but not pure
    IntPoly m = ip({-1, 1}) * ip({-5, 1});
    auto v = is_pure(m, 5, 1);
    CHECK(v.palindrome);
    CHECK_FALSE(v.profile_pure);
    CHECK_FALSE(v.pure());
}

TEST_CASE("weight factor extraction") {
    IntPoly low = ip({-1, 1});
    IntPoly high = ip({5, 2, 1});
    IntPoly cp = low * high;
    CHECK(weight_factor(cp, 5, 1) == high);
    CHECK(weight_factor(cp, 5, 0) == low);
    CHECK(weight_factor(pow(ip({-5, 1}), 3), 5, 2) == pow(ip({-5, 1}), 3));
    // repeated mixed factors
    IntPoly rep = pow(low, 2) * high;
    CHECK(weight_factor(rep, 5, 0) == pow(low, 2));
    CHECK(weight_factor(rep, 5, 1) == high);
}
