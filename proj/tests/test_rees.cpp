#include <catch2/catch_amalgamated.hpp>

#include "blowup/rees.hpp"
#include "helpers.hpp"

using namespace blowup;
using test::P;
using test::Ps;
using test::qq_ring;

namespace {

RingP plane() { return qq_ring({"x", "y"}); }

RingP nil_base(int order = 2) {
    auto amb = qq_ring({"x"});
    return qq_ring({"x"}, {test::P(amb, "x^" + std::to_string(order))});
}

/// the span of a filtration level inside E, kept as a subquotient so that
/// elements of E can be expressed in it directly
Module filtration_level_module(const FilteredModule& f, int n) {
    const auto& lv = f.levels[static_cast<std::size_t>(
        std::min<std::size_t>(static_cast<std::size_t>(n), f.levels.size() - 1))];
    return Module(f.base, std::vector<int>(f.E.ngens(), 0), lv, f.E.den());
}

} // namespace

TEST_CASE("rees presentation of the plane ideal is principal") {
    auto R = plane();
    ReesPresentation p = rees_presentation(R, Ps(R, {"x", "y"}));
    REQUIRE(p.rees_vars.size() == 2);
    // the kernel is (x y1 - y y0)
    RingP s = p.ring;
    Polynomial expect = parse_polynomial(*s, "x*y1 - y*y0");
    Ideal got = Ideal::ideal(make_poly_ring(s->field, s->vars), s->quot);
    Ideal want = Ideal::ideal(make_poly_ring(s->field, s->vars), {expect});
    CHECK(got.equals(want));
}

TEST_CASE("rees presentation of a principal ideal in a domain is free") {
    auto R = qq_ring({"x"});
    ReesPresentation p = rees_presentation(R, Ps(R, {"x"}));
    CHECK(p.ring->quot.empty());
}

TEST_CASE("rees presentation in the nilpotent regime") {
    auto R = nil_base(2);
    ReesPresentation p = rees_presentation(R, {P(R, "x")});
    RingP s = p.ring;
    Submodule quot = Submodule::ideal(make_poly_ring(s->field, s->vars), s->quot);
    CHECK(quot.contains(parse_polynomial(*quot.ring(), "x*y0")));
    CHECK(quot.contains(parse_polynomial(*quot.ring(), "y0^2")));
    CHECK(quot.contains(parse_polynomial(*quot.ring(), "x^2")));
}

TEST_CASE("extended rees algebra of (x) in QQ[x]") {
    auto R = qq_ring({"x"});
    ExtReesPresentation e = ext_rees_presentation(R, Ps(R, {"x"}));
    RingP a = e.ring;
    Ideal got = Ideal::ideal(make_poly_ring(a->field, a->vars), a->quot);
    Ideal want = Ideal::ideal(make_poly_ring(a->field, a->vars),
                              {parse_polynomial(*a, "y0*u - x")});
    CHECK(got.equals(want));
    CHECK(ext_rees_collapse_check(e));
}

TEST_CASE("extended rees algebra of the unit ideal is laurent") {
    auto R = qq_ring({"x"});
    ExtReesPresentation e = ext_rees_presentation(R, Ps(R, {"1"}));
    RingP a = e.ring;
    Ideal got = Ideal::ideal(make_poly_ring(a->field, a->vars), a->quot);
    Ideal want = Ideal::ideal(make_poly_ring(a->field, a->vars),
                              {parse_polynomial(*a, "y0*u - 1")});
    CHECK(got.equals(want));
}

TEST_CASE("graded pieces of the extended rees algebra match the case formula") {
    auto R = plane();
    ExtReesPresentation e = ext_rees_presentation(R, Ps(R, {"x", "y"}));
    GradedModule A{Module::free(e.ring, {0})};
    for (int n = -3; n <= 3; ++n)
        CHECK(piece_matches_power(A, R, e.rees.ideal, n));
    CHECK(ext_rees_collapse_check(e));
}

TEST_CASE("associated graded ring") {
    auto R = plane();
    ExtReesPresentation e = ext_rees_presentation(R, Ps(R, {"x", "y"}));
    RingP gr = assoc_graded(e);
    // polynomial ring on two degree-1 generators over QQ: dims 1,2,3,4
    auto hd = hilbert_data(GradedModule{Module::free(gr, {0})}, DegreeWindow(0, 3));
    // base of gr is QQ (x and y die in the quotient by I)
    std::vector<std::size_t> dims;
    for (auto& h : hd) dims.push_back(h.value);
    CHECK(dims == std::vector<std::size_t>{1, 2, 3, 4});

    // I = (0): base ring concentrated in degree 0
    ExtReesPresentation e0 = ext_rees_presentation(R, Ps(R, {"0"}));
    RingP gr0 = assoc_graded(e0);
    GradedModule G0{Module::free(gr0, {0})};
    CHECK(!G0.piece(0).is_zero());
    CHECK(G0.piece(1).is_zero());

    // nilpotent: QQ + (x) in degrees 0, 1
    auto Rn = nil_base(2);
    ExtReesPresentation en = ext_rees_presentation(Rn, {P(Rn, "x")});
    RingP grn = assoc_graded(en);
    GradedModule Gn{Module::free(grn, {0})};
    CHECK(!Gn.piece(0).is_zero());
    CHECK(!Gn.piece(1).is_zero());
    CHECK(Gn.piece(2).is_zero());
}

TEST_CASE("rees module of the adic filtration is the ring itself") {
    auto R = plane();
    ExtReesPresentation e = ext_rees_presentation(R, Ps(R, {"x", "y"}));
    FilteredModule f = adic_filtration(R, Module::free(R, {0}), e.rees.ideal, 0);
    auto check = filtration_wellformed(f, e.rees.ideal);
    REQUIRE(check.ok);
    Module m = rees_module(f, e);
    // free of rank one with generator in degree zero
    CHECK(m.ngens() == 1);
    for (const auto& r0 : m.den()) CHECK(Submodule::zero(e.ring, 1).contains(r0));
    CHECK(is_n_stable(GradedModule{m}, 0));
}

TEST_CASE("rees module pieces reproduce the filtration levels") {
    auto R = plane();
    ExtReesPresentation e = ext_rees_presentation(R, Ps(R, {"x", "y"}));
    // filtration on E = R: F^0 = R, F^1 = (x, y), F^2 = I^2 (adic from start)
    FilteredModule f = adic_filtration(R, Module::free(R, {0}), e.rees.ideal, 2);
    REQUIRE(filtration_wellformed(f, e.rees.ideal).ok);
    GradedModule M{rees_module(f, e)};
    CHECK(is_n_stable(M, 0));
    for (int n = 0; n <= 2; ++n) {
        const Piece& p = M.piece(n);
        Module lvl = filtration_level_module(f, n);
        // evaluation map: label (mu, gen (m,i)) -> g^mu * v_{m,i} inside E
        std::vector<PolyVec> images;
        for (const auto& lb : p.labels) {
            Polynomial c = evaluate_pure_label(lb.mono, M.ring(), R, e.rees.ideal);
            // generator lb.comp of the rees module is a level generator
            std::size_t count = 0;
            PolyVec target(f.E.ngens());
            bool found = false;
            for (std::size_t lvl_i = 0; lvl_i < f.levels.size() && !found; ++lvl_i)
                for (std::size_t g = 0; g < f.levels[lvl_i].size() && !found; ++g) {
                    if (count == lb.comp) {
                        target = mul_poly(c, f.levels[lvl_i][g], R->order);
                        found = true;
                    }
                    ++count;
                }
            REQUIRE(found);
            auto expr = lvl.express(target);
            REQUIRE(expr.has_value());
            images.push_back(PolyVec(std::move(*expr)));
        }
        ModuleMap nat(p.base_mod, lvl, std::move(images));
        CHECK(nat.is_well_defined());
        CHECK(nat.is_iso());
    }
}

TEST_CASE("i_n images and the associated graded functor") {
    auto R = qq_ring({"x"});
    ExtReesPresentation e = ext_rees_presentation(R, Ps(R, {"x"}));
    Module k = z_module(R, e.rees.ideal, {0}, {});
    for (int n = 0; n <= 2; ++n) {
        FilteredModule f = i_n(R, e.rees.ideal, k, n);
        auto chk = filtration_wellformed(f, e.rees.ideal);
        REQUIRE(chk.ok);
        CHECK(f.stab() == n + 1);
        GradedModule M{rees_module(f, e)};
        CHECK(is_n_stable(M, n));
        auto tor = is_torsion(M);
        CHECK(tor.torsion);
        CHECK(tor.onset == n + 1);

        for (int m = 0; m <= n + 2; ++m) {
            Module g = gr_F(M, e, m);
            if (m == n) {
                REQUIRE(g.dim_k().has_value());
                CHECK(*g.dim_k() == 1); // gr^n = k
            } else {
                CHECK(g.is_zero_module());
            }
        }
    }
}

TEST_CASE("tau forgets the negative part") {
    auto R = plane();
    ExtReesPresentation e = ext_rees_presentation(R, Ps(R, {"x", "y"}));
    GradedModule A{Module::free(e.ring, {0})};
    Module t = tau(A, e.rees);
    // tau(A~) = A_: free of rank one over the rees ring
    CHECK(t.ngens() == 1);
    for (const auto& r0 : t.den()) CHECK(Submodule::zero(e.rees.ring, 1).contains(r0));

    // rho respects tau: pieces of tau(rho(R)) match the ideal powers
    GradedModule T{t};
    for (int n = 0; n <= 3; ++n)
        CHECK(piece_matches_power(T, R, e.rees.ideal, n));
}

TEST_CASE("stability detection") {
    auto R = qq_ring({"x"});
    ExtReesPresentation e = ext_rees_presentation(R, Ps(R, {"x"}));
    GradedModule A{Module::free(e.ring, {0})};
    CHECK(is_n_stable(A, 0));

    for (int kk = 1; kk <= 2; ++kk) {
        GradedModule Ak{twist(A.mod(), -kk)};
        CHECK(is_n_stable(Ak, kk));
        CHECK(!is_n_stable(Ak, kk + 1));
    }

    // A/uA is not 0-stable: u acts by zero
    auto u = e.ring->var_index(e.u_var);
    Module aqu = Module::cokernel(e.ring, {0}, {PolyVec({e.ring->var_poly(*u)})});
    CHECK(!is_n_stable(GradedModule{aqu}, 0));
}

TEST_CASE("filtration wellformedness witnesses") {
    auto R = plane();
    auto gens = Ps(R, {"x", "y"});
    // broken chain: F^2 is not inside F^1
    FilteredModule bad(R, Module::free(R, {0}),
                       {{test::V(R, {"1"})}, {test::V(R, {"y^2"})}, {test::V(R, {"y"})}});
    auto chk = filtration_wellformed(bad, gens);
    CHECK(!chk.ok);
    CHECK(!chk.witness.empty());

    // I * F^0 must land in F^1: y * 1 is not in (x)
    FilteredModule bad2(R, Module::free(R, {0}),
                        {{test::V(R, {"1"})}, {test::V(R, {"x"})}});
    auto chk2 = filtration_wellformed(bad2, gens);
    CHECK(!chk2.ok);
}

TEST_CASE("rho is free of the expected rank") {
    auto R = plane();
    ExtReesPresentation e = ext_rees_presentation(R, Ps(R, {"x", "y"}));
    Module r2 = rho(e, 2);
    CHECK(r2.ngens() == 2);
    CHECK(r2.den().empty());
    GradedModule M{r2};
    // pieces are I^n + I^n
    const Piece& p1 = M.piece(1);
    CHECK(p1.ngens() == 4); // two labels per free summand
}
