#include "doctest.h"
#include "fogq/hom.hpp"
#include "fogq/split.hpp"

using namespace fogq;

namespace {

// weight-1 object with companion Frobenius of T^2 - t T + d per prime
OgusObject h1_like(const std::vector<Int>& ps, long N,
                   const std::vector<std::pair<Int, Int>>& tr_det) {
    OgusObject m;
    m.dim = 2;
    m.labels = {"e0", "e1"};
    m.filt.steps = {{1, QMat::identity(2)}};
    for (size_t i = 0; i < ps.size(); ++i) {
        PadicMat f(ps[i], N, 2);
        f.at(0, 1) = -tr_det[i].second;
        f.at(1, 0) = 1;
        f.at(1, 1) = tr_det[i].first;
        f.reduce();
        m.locals.push_back({ps[i], N, f});
    }
    return m;
}

// a + b J with J^2 = -1, stored at each prime
OgusObject cm_like(const std::vector<Int>& ps, long N,
                   const std::vector<std::pair<long, long>>& ab) {
    OgusObject m;
    m.dim = 2;
    m.labels = {"e0", "e1"};
    m.filt.steps = {{1, QMat::identity(2)}};
    for (size_t i = 0; i < ps.size(); ++i) {
        PadicMat f(ps[i], N, 2);
        f.at(0, 0) = ab[i].first;
        f.at(1, 1) = ab[i].first;
        f.at(0, 1) = -ab[i].second;
        f.at(1, 0) = ab[i].second;
        f.reduce();
        m.locals.push_back({ps[i], N, f});
    }
    return m;
}

} // namespace

TEST_CASE("hom: scalars for a generic pair, Q[J] for a CM-style pair") {
    auto m = h1_like({Int(5), Int(13)}, 3, {{Int(-2), Int(5)}, {Int(6), Int(13)}});
    auto h = hom_space(m, m);
    CHECK(h.rank() == 1);
    CHECK(h.basis[0].status == "verified");
    CHECK(h.basis[0].verified_primes.size() == 2);

    auto cm = cm_like({Int(5), Int(13)}, 3, {{-1, 2}, {3, 2}});
    auto hcm = hom_space(cm, cm);
    CHECK(hcm.rank() == 2);
    for (const auto& c : hcm.basis) CHECK(c.status == "verified");

    // a single stored prime leaves the same rank but no confirmation
    auto m5 = h1_like({Int(5)}, 3, {{Int(-2), Int(5)}});
    auto h5 = hom_space(m5, m5);
    CHECK(h5.rank() == 2);
    CHECK(h5.basis[0].status == "unconfirmed");
}

TEST_CASE("hom: weight obstruction and cross-prime pruning") {
    auto one = unit_object({Int(5), Int(13)}, 3);
    auto lef = tate_twist(one, -1);
    CHECK(hom_space(one, lef).rank() == 0);
    CHECK(hom_space(lef, one).rank() == 0);

    auto m = h1_like({Int(5), Int(13)}, 3, {{Int(-2), Int(5)}, {Int(6), Int(13)}});
    CHECK(hom_space(one, m).rank() == 0);

    auto hu = hom_space(one, one);
    CHECK(hu.rank() == 1);
    CHECK(hu.basis[0].f.at(0, 0) == 1);

    // swap morphisms between 1(-1)+1 and 1+1(-1)
    auto hab = hom_space(direct_sum(lef, one), direct_sum(one, lef));
    CHECK(hab.rank() == 2);

    // frob 1 mod 13^2 but 2 mod 5^2: the candidate dies at the second prime
    OgusObject x;
    x.dim = 1;
    x.labels = {"v"};
    x.filt.steps = {{0, QMat::identity(1)}};
    PadicMat f5(Int(5), 2, 1);
    f5.at(0, 0) = 2;
    PadicMat f13(Int(13), 2, 1);
    f13.at(0, 0) = 1;
    x.locals = {{Int(5), 2, f5}, {Int(13), 2, f13}};
    CHECK(hom_space(unit_object({Int(5), Int(13)}, 2), x).rank() == 0);
}

TEST_CASE("hom: twist naturality and height bound pass-through") {
    auto m = h1_like({Int(5), Int(13)}, 3, {{Int(-2), Int(5)}, {Int(6), Int(13)}});
    CHECK(hom_space(tate_twist(m, 2), tate_twist(m, 2)).rank() == 1);

    auto one = unit_object({Int(5), Int(13)}, 3);
    auto lef = tate_twist(one, -1);
    auto inv = invariants(direct_sum(one, lef));
    REQUIRE(inv.cols() == 1);
    CHECK(inv.at(0, 0) == 1);
    CHECK(inv.at(1, 0) == 0);
    CHECK(invariants(tate_twist(lef, 1)).cols() == 1);
    CHECK(invariants(m).cols() == 0);
    CHECK(invariants(direct_sum(one, lef), Int(10)).cols() == 1);
}

TEST_CASE("split: diagonal cases") {
    auto one = unit_object({Int(5)}, 3);
    auto s1 = canonical_split(one, 5);
    CHECK(s1.parts.size() == 1);
    CHECK(s1.parts[0].rank == 1);
    CHECK(s1.prec == 3);

    auto m = direct_sum(one, tate_twist(one, -1));
    auto s2 = canonical_split(m, 5);
    REQUIRE(s2.parts.size() == 2);
    CHECK(s2.parts[0].weight == 0);
    CHECK(s2.parts[1].weight == 2);
    CHECK(s2.parts[0].projector.at(0, 0) == 1);
    CHECK(s2.parts[0].projector.at(1, 1) == 0);
    CHECK(s2.parts[1].projector.at(1, 1) == 1);
}

TEST_CASE("split: unipotent straightening and its obstruction") {
    OgusObject e;
    e.dim = 2;
    e.labels = {"a", "b"};
    QMat w0(2, 1);
    w0.at(0, 0) = 1;
    e.filt.steps = {{0, w0}, {2, QMat::identity(2)}};
    PadicMat f(Int(5), 2, 2);
    f.at(0, 0) = 1;
    f.at(0, 1) = 1;
    f.at(1, 1) = 5;
    e.locals = {{Int(5), 2, f}};

    // the weight-2 line is e1 + x e0 with x + 1 = 5x, so x = 1/4 = 19 mod 25
    auto s3 = canonical_split(e, 5);
    REQUIRE(s3.parts.size() == 2);
    CHECK(s3.prec == 2);
    const auto& p0 = s3.parts[0].projector;
    CHECK(p0.at(0, 0) == 1);
    CHECK(p0.at(1, 0) == 0);
    CHECK(p0.at(0, 1) == 6); // -1/4 mod 25

    // [[1,1],[0,6]]: both eigenvalues are units, no integral complement
    OgusObject g = e;
    PadicMat fg(Int(5), 2, 2);
    fg.at(0, 0) = 1;
    fg.at(0, 1) = 1;
    fg.at(1, 1) = 6;
    g.locals = {{Int(5), 2, fg}};
    CHECK_THROWS_AS(canonical_split(g, 5), precision_error);
}

TEST_CASE("split: three-weight chain, projectors certified") {
    OgusObject c;
    c.dim = 3;
    c.labels = {"a", "b", "c"};
    QMat b1(3, 1);
    b1.at(0, 0) = 1;
    QMat b2(3, 2);
    b2.at(0, 0) = 1;
    b2.at(1, 1) = 1;
    c.filt.steps = {{0, b1}, {2, b2}, {4, QMat::identity(3)}};
    PadicMat fc(Int(5), 3, 3);
    fc.at(0, 0) = 1;
    fc.at(0, 1) = 3;
    fc.at(0, 2) = 7;
    fc.at(1, 1) = 5;
    fc.at(1, 2) = 10;
    fc.at(2, 2) = 25;
    c.locals = {{Int(5), 3, fc}};

    auto s4 = canonical_split(c, 5);
    REQUIRE(s4.parts.size() == 3);
    for (const auto& part : s4.parts) CHECK(part.rank == 1);

    // contract: idempotent, commuting with Frobenius, summing to 1
    const auto& frob = c.locals[0].frob;
    PadicMat total(Int(5), s4.prec, 3);
    for (const auto& part : s4.parts) {
        const auto& P = part.projector;
        CHECK(padic_mat_agree(padic_mat_mul(P, P), P));
        CHECK(padic_mat_agree(padic_mat_mul(P, frob), padic_mat_mul(frob, P)));
        total = padic_mat_add(total, P);
    }
    CHECK(padic_mat_agree(total, PadicMat::identity(5, s4.prec, 3)));

    // orthogonality of distinct parts
    CHECK(padic_mat_agree(
        padic_mat_mul(s4.parts[0].projector, s4.parts[2].projector),
        PadicMat(Int(5), s4.prec, 3)));
}
