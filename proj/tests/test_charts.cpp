#include <catch2/catch_amalgamated.hpp>

#include "blowup/charts.hpp"
#include "helpers.hpp"

using namespace blowup;
using test::P;
using test::Ps;
using test::qq_ring;

TEST_CASE("plane blowup charts") {
    auto R = qq_ring({"x", "y"});
    ReesPresentation p = rees_presentation(R, Ps(R, {"x", "y"}));
    ChartAtlas atlas = blowup_charts(p);
    REQUIRE(atlas.charts.size() == 2);
    CHECK(!atlas.charts[0].empty);
    CHECK(!atlas.charts[1].empty);

    // chart 0: y = x z0 (dehomogenize x y1 - y y0 at y0 = 1)
    const Chart& c0 = atlas.charts[0];
    Submodule q0 = Submodule::ideal(c0.ring, c0.ring->quot);
    Polynomial rel = parse_polynomial(*c0.ring, "x*" + c0.zvars[0] + " - y");
    CHECK(q0.contains(rel));
    CHECK(!q0.is_unit_ideal());

    // overlap consistency both ways
    CHECK(chart_transition_check(atlas, 0, 1));
    CHECK(chart_transition_check(atlas, 1, 0));
}

TEST_CASE("principal ideal gives a single chart isomorphic to the base") {
    auto R = qq_ring({"x"});
    ReesPresentation p = rees_presentation(R, Ps(R, {"x"}));
    ChartAtlas atlas = blowup_charts(p);
    REQUIRE(atlas.charts.size() == 1);
    CHECK(!atlas.charts[0].empty);
    CHECK(atlas.charts[0].ring->quot.empty()); // C_0 = R
}

TEST_CASE("nilpotent ideal gives empty charts") {
    auto amb = qq_ring({"x"});
    auto R = qq_ring({"x"}, {P(amb, "x^2")});
    ReesPresentation p = rees_presentation(R, {P(R, "x")});
    ChartAtlas atlas = blowup_charts(p);
    REQUIRE(atlas.charts.size() == 1);
    CHECK(atlas.charts[0].empty);
}

TEST_CASE("sheaf restriction") {
    auto R = qq_ring({"x", "y"});
    ReesPresentation p = rees_presentation(R, Ps(R, {"x", "y"}));
    ChartAtlas atlas = blowup_charts(p);

    // the structure module restricts to the chart ring
    Module s = Module::free(p.ring, {0});
    Module r0 = sheaf_restrict(s, atlas, 0);
    CHECK(r0.ngens() == 1);
    CHECK(!r0.is_zero_module());

    // a torsion module restricts to zero on every chart
    Module tors = Module::cokernel(p.ring, {0}, {PolyVec({parse_polynomial(*p.ring, "y0")}),
                                                 PolyVec({parse_polynomial(*p.ring, "y1")})});
    CHECK(sheaf_is_zero(tors, atlas));
    auto cert = is_torsion(GradedModule{tors});
    CHECK(cert.torsion); // cross-validation with the torsion route

    // twist(S, 1) restricts to a free rank-one module
    Module tw = twist(s, 1);
    Module rt = sheaf_restrict(tw, atlas, 0);
    CHECK(rt.ngens() == 1);
    CHECK(!rt.is_zero_module());
    for (const auto& d : rt.den())
        CHECK(Submodule::zero(rt.ring(), 1).contains(d));

    // the rees ring itself is not sheaf-zero
    CHECK(!sheaf_is_zero(s, atlas));

    // nilpotent case: everything is sheaf-zero
    auto amb = qq_ring({"x"});
    auto Rn = qq_ring({"x"}, {P(amb, "x^2")});
    ReesPresentation pn = rees_presentation(Rn, {P(Rn, "x")});
    ChartAtlas an = blowup_charts(pn);
    CHECK(sheaf_is_zero(Module::free(pn.ring, {0}), an));
}
