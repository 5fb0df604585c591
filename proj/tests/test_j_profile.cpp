#include <doctest.h>

#include "ellmod/errors.hpp"
#include "ellmod/j_profile.hpp"

using namespace ellmod;

namespace {

SurfaceConfig only(const std::string& where, KodairaFiber f, Int count = 1) {
    SurfaceConfig cfg;
    cfg.fibers.push_back({where, f, count});
    return cfg;
}

// Riemann-Hurwitz for j: 2 - 2 g_base = 2 deg - sum(e - 1), solved for g_base.
Int implied_base_genus(const RamificationProfile& p) {
    return (p.total_ramification() - 2 * p.degree + 2) / 2;
}

}  // namespace

TEST_CASE("j_degree examples") {
    CHECK(j_degree(schreieder_config(2)) == 54);
    CHECK(j_degree(schreieder_config(3)) == 162);
    CHECK(j_degree(only("p", KodairaFiber::In(1))) == 1);
    CHECK_THROWS_AS(j_degree(only("p", KodairaFiber::InStar(0), 4)), Unsupported);
}

TEST_CASE("nori_profile at c = 2") {
    const auto p = nori_profile(schreieder_config(2));
    CHECK_FALSE(p.indeterminate);
    CHECK(p.degree == 54);
    REQUIRE(p.over0.size() == 1);
    CHECK(p.over0[0].points == 18);
    CHECK(p.over0[0].index == 3);
    REQUIRE(p.over1728.size() == 1);
    CHECK(p.over1728[0].points == 27);
    CHECK(p.over1728[0].index == 2);
    REQUIRE(p.over_inf.size() == 3);
    CHECK(p.over_inf[0].order == 36);
    CHECK(p.over_inf[1].order == 9);
    CHECK(p.over_inf[2].order == 1);
    CHECK(p.over_inf[2].count == 9);
    CHECK(p.total_ramification() == 106);
    CHECK(p.riemann_hurwitz_closes());
}

TEST_CASE("nori_profile at c = 3") {
    const auto p = nori_profile(schreieder_config(3));
    CHECK(p.degree == 162);
    CHECK(p.over0[0].points == 54);
    CHECK(p.over1728[0].points == 81);
    CHECK(p.over_inf[0].order == 108);
    CHECK(p.over_inf[1].order == 27);
    CHECK(p.over_inf[2].count == 27);
    CHECK(p.total_ramification() == 322);
}

TEST_CASE("property: profile consistency for c = 2, 3, 4") {
    for (int c : {2, 3, 4}) {
        const auto cfg = schreieder_config(c);
        const auto p = nori_profile(cfg);
        CHECK(p.degree == j_degree(cfg));
        CHECK(p.sheets_over0() == p.degree);
        CHECK(p.sheets_over1728() == p.degree);
        CHECK(p.sheets_over_inf() == p.degree);
        CHECK(p.total_ramification() == 2 * p.degree - 2);
        CHECK(implied_base_genus(p) == 0);
        CHECK(p.r0_bound == Rational(2 * p.degree, 3));
        CHECK(p.r1728_bound == Rational(p.degree, 2));
    }
}

TEST_CASE("indeterminate when fibers do not force the profile") {
    SurfaceConfig cfg;
    // numerically extremal K3: excess 0 + 2 + 8 + 8 = 18, deg(j) = 18
    cfg.fibers.push_back({"a", KodairaFiber::of(FiberKind::II)});
    cfg.fibers.push_back({"b", KodairaFiber::of(FiberKind::IV)});
    cfg.fibers.push_back({"c", KodairaFiber::In(9), 2});
    const auto p = nori_profile(cfg);
    CHECK(mw_rank_and_extremality(cfg).extremal);
    CHECK(p.indeterminate);
    CHECK(p.degree == 18);
    CHECK(p.over0.empty());
    CHECK_FALSE(p.riemann_hurwitz_closes());
    CHECK_THROWS_AS(nori_profile(only("p", KodairaFiber::of(FiberKind::IIIStar))), Unsupported);
}

TEST_CASE("j_nonconstant examples") {
    CHECK(j_nonconstant(schreieder_config(2)));
    CHECK_FALSE(j_nonconstant(only("p", KodairaFiber::InStar(0), 4)));
    CHECK_FALSE(j_nonconstant(SurfaceConfig{}));
}

TEST_CASE("modularity_certificate examples") {
    CHECK(modularity_certificate(schreieder_config(2)));
    CHECK(modularity_certificate(schreieder_config(4)));
    SurfaceConfig with_e8;
    with_e8.fibers.push_back({"0", KodairaFiber::of(FiberKind::IIStar)});
    with_e8.fibers.push_back({"1", KodairaFiber::In(1), 2});
    CHECK_FALSE(modularity_certificate(with_e8));
    SurfaceConfig generic;
    generic.fibers.push_back({"t^i", KodairaFiber::In(1), 12});
    CHECK_FALSE(modularity_certificate(generic));
}
