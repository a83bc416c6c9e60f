#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "oracle_macaulay.hpp"

#include <random>

using namespace blowup;
using test::P;
using test::Ps;
using test::qq_ring;

namespace {

GB ideal_gb(const RingP& r, const std::vector<std::string>& gens,
            MonomialOrder ord) {
    std::vector<PolyVec> vecs;
    for (const auto& g : gens) vecs.push_back(PolyVec({P(r, g)}));
    RingP rr = with_order(*r, ord);
    for (auto& v : vecs) v[0].normalize(rr->order);
    return buchberger(rr, 1, vecs, ModuleOrder(rr->order), {});
}

} // namespace

TEST_CASE("reduced lex basis of (x^2-1, xy-1)") {
    auto r = qq_ring({"x", "y"});
    GB gb = ideal_gb(r, {"x^2 - 1", "x*y - 1"}, MonomialOrder::lex());
    REQUIRE(gb.basis.size() == 2);
    // reduced basis is {x - y, y^2 - 1}, sorted ascending by lead
    CHECK(gb.basis[0][0] == parse_polynomial(*gb.ring, "y^2 - 1"));
    CHECK(gb.basis[1][0] == parse_polynomial(*gb.ring, "x - y"));
}

TEST_CASE("zero ideal and already-reduced input") {
    auto r = qq_ring({"x", "y"});
    GB zero = buchberger(r, 1, {}, ModuleOrder(r->order), {});
    CHECK(zero.basis.empty());

    GB xy = ideal_gb(r, {"x", "y"}, MonomialOrder::degrevlex());
    REQUIRE(xy.basis.size() == 2);
    CHECK(xy.basis[0][0] == P(r, "y"));
    CHECK(xy.basis[1][0] == P(r, "x"));
}

TEST_CASE("normal forms") {
    auto r = qq_ring({"x", "y"});
    GB gb = ideal_gb(r, {"x^2 - 1", "x*y - 1"}, MonomialOrder::lex());
    auto nf = [&](const std::string& s) {
        return gb.normal_form(PolyVec({parse_polynomial(*gb.ring, s)}))[0];
    };
    CHECK(nf("x^2") == parse_polynomial(*gb.ring, "1"));
    CHECK(nf("x - y").is_zero());                       // basis element reduces to zero
    CHECK(nf("x^3*y - x^2").is_zero());                 // member
    // normal form is a projection
    Polynomial once = nf("x^5 + x*y + 3");
    CHECK(gb.normal_form(PolyVec({once}))[0] == once);
    // v - nf(v) lies in the submodule
    Polynomial v = parse_polynomial(*gb.ring, "x^5 + 7*y");
    Polynomial d = sub(v, nf("x^5 + 7*y"), gb.ring->order);
    CHECK(gb.normal_form(PolyVec({d}))[0].is_zero());
    // nf against the empty basis is the identity
    GB e = buchberger(r, 1, {}, ModuleOrder(r->order), {});
    CHECK(e.normal_form(PolyVec({P(r, "x + y")}))[0] == P(r, "x + y"));
}

TEST_CASE("buchberger criterion holds for computed bases") {
    auto r = qq_ring({"x", "y", "z"});
    std::vector<std::vector<std::string>> cases = {
        {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y"},
        {"x*y - z^2", "x^3 - y^2*z"},
        {"x + y + z", "x*y + y*z + x*z", "x*y*z - 1"},
    };
    for (const auto& gens : cases) {
        GB gb = ideal_gb(r, gens, MonomialOrder::degrevlex());
        const MonomialOrder& ord = gb.ring->order;
        for (std::size_t i = 0; i < gb.basis.size(); ++i)
            for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
                const Polynomial &f = gb.basis[i][0], &g = gb.basis[j][0];
                Monomial l = lcm(f.lead_mono(), g.lead_mono());
                Polynomial s =
                    sub(f.times_term(f.lead_mono().divide_into(l),
                                     f.lead_coeff().inverse()),
                        g.times_term(g.lead_mono().divide_into(l),
                                     g.lead_coeff().inverse()),
                        ord);
                CHECK(gb.normal_form(PolyVec({s}))[0].is_zero());
            }
    }
}

TEST_CASE("tracked transforms express the basis over the inputs") {
    auto r = qq_ring({"x", "y"});
    std::vector<PolyVec> gens = {PolyVec({P(r, "x^2 - 1")}), PolyVec({P(r, "x*y - 1")})};
    BuchbergerOptions o;
    o.track = true;
    GB gb = buchberger(r, 1, gens, ModuleOrder(MonomialOrder::lex()), o);
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        Polynomial acc;
        for (std::size_t j = 0; j < gens.size(); ++j)
            acc = add(acc, mul(gb.transform[i][j], gens[j][0], gb.mord.mono()), gb.mord.mono());
        CHECK(acc == gb.basis[i][0]);
    }
}

TEST_CASE("module groebner bases over twisted frees") {
    auto r = qq_ring({"x", "y"});
    // submodule of R^2 generated by (x, y), (y, x)
    std::vector<PolyVec> gens = {test::V(r, {"x", "y"}), test::V(r, {"y", "x"})};
    GB gb = buchberger(r, 2, gens, ModuleOrder(r->order), {});
    CHECK(gb.contains(test::V(r, {"x^2 - y^2", "0"})));
    CHECK(!gb.contains(test::V(r, {"x", "0"})));
}

TEST_CASE("groebner engine agrees with macaulay row reduction on randoms") {
    // randomized homogeneous ideals in <= 3 variables, degree <= 4;
    // compare the sets of normal-form-zero monomials up to degree 6
    std::mt19937 rng(20240811);
    auto r = qq_ring({"x", "y", "z"});
    for (int trial = 0; trial < 12; ++trial) {
        auto gens = test::random_homogeneous_ideal(r, rng);
        GB gb = buchberger(r, 1, test::wrap(gens), ModuleOrder(r->order), {});
        for (int d = 0; d <= 6; ++d) {
            auto oracle = test::macaulay_zero_monomials(r, gens, d);
            std::vector<Monomial> mine;
            std::vector<Monomial> all;
            monomials_of_degree(r->nvars(), std::vector<std::uint8_t>(r->nvars(), 1), d, all);
            for (const auto& m : all)
                if (gb.normal_form(PolyVec({Polynomial::monomial(m, Scalar::one(r->field))}))[0]
                        .is_zero())
                    mine.push_back(m);
            REQUIRE(mine.size() == oracle.size());
            for (std::size_t i = 0; i < mine.size(); ++i) CHECK(mine[i] == oracle[i]);
        }
    }
}
