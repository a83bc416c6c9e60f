#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace blowup;
using test::P;
using test::qq_ring;

TEST_CASE("monomial arithmetic") {
    Monomial a(std::vector<std::int32_t>{3, 2, 0});
    Monomial b(std::vector<std::int32_t>{1, 4, 2});
    auto l = lcm(a, b);
    CHECK(l.exponents() == std::vector<std::int32_t>{3, 4, 2});
    CHECK(a.degree() == 5);
    CHECK(b.divides(l));
    CHECK(a.divides(l));
    CHECK(a.divide_into(l).exponents() == std::vector<std::int32_t>{0, 2, 2});
    CHECK(!a.coprime(b));
    CHECK(Monomial::var(3, 0).coprime(Monomial::var(3, 2)));
}

TEST_CASE("order axioms on samples") {
    auto drl = MonomialOrder::degrevlex();
    auto lex = MonomialOrder::lex();
    Monomial one(2);
    Monomial x = Monomial::var(2, 0), y = Monomial::var(2, 1);
    Monomial x2(std::vector<std::int32_t>{2, 0}), xy(std::vector<std::int32_t>{1, 1});

    // totality + well ordering behaviour: 1 is minimal
    for (const auto* o : {&drl, &lex}) {
        CHECK(o->cmp(x, one) > 0);
        CHECK(o->cmp(y, one) > 0);
        CHECK(o->cmp(x, x) == 0);
    }
    // degrevlex: deg first, then revlex
    CHECK(drl.cmp(x2, xy) > 0);
    CHECK(drl.cmp(xy, x2) < 0);
    CHECK(drl.cmp(x, y) > 0);
    // lex ignores degree
    Monomial y3(std::vector<std::int32_t>{0, 3});
    CHECK(lex.cmp(x, y3) > 0);
    // multiplicativity on samples
    CHECK(drl.cmp(x2 * y, xy * y) > 0);

    // block order: x eliminated first
    auto blk = MonomialOrder::block({1, 0}, MonomialOrder::degrevlex());
    CHECK(blk.cmp(x, y3) > 0);     // any x beats pure y
    CHECK(blk.cmp(y3, y) > 0);     // ties broken inside the tail

    // weighted order
    auto wt = MonomialOrder::weighted({5, 1}, MonomialOrder::lex());
    CHECK(wt.cmp(x, y3) > 0); // 5 > 3
}

TEST_CASE("polynomial parse, print, arithmetic") {
    auto r = qq_ring({"x", "y", "u"});
    Polynomial p = P(r, "3/2*x^2*y - u");
    CHECK(p.term_count() == 2);
    CHECK(p.str(r->vars) == "3/2*x^2*y - u");

    Polynomial q = P(r, "u + x^2*y");
    Polynomial s = add(p, q, r->order);
    CHECK(s == P(r, "5/2*x^2*y"));
    CHECK(sub(p, p, r->order).is_zero());

    Polynomial prod = mul(P(r, "x+y"), P(r, "x-y"), r->order);
    CHECK(prod == P(r, "x^2 - y^2"));

    CHECK(P(r, "(x+y)^2") == P(r, "x^2 + 2*x*y + y^2"));
    CHECK(P(r, "0").is_zero());

    CHECK_THROWS_AS(P(r, "x +"), ParseError);
    CHECK_THROWS_AS(P(r, "z"), ParseError);
}

TEST_CASE("primitive part and homogeneity") {
    auto r = qq_ring({"x", "y"});
    Polynomial p = P(r, "4/3*x^2 + 2*y^2");
    Polynomial prim = p.primitive_part();
    CHECK(prim == P(r, "2*x^2 + 3*y^2"));

    std::vector<int> w{1, 1};
    CHECK(p.is_homogeneous(w));
    CHECK(*p.homogeneous_weight(w) == 2);
    CHECK(!P(r, "x + 1").is_homogeneous(w));
    std::vector<int> w2{0, 1};
    CHECK(P(r, "x^5*y + y").is_homogeneous(w2));
}

TEST_CASE("polyvec leads and module orders") {
    auto r = qq_ring({"x", "y"});
    PolyVec v = test::V(r, {"x", "y^2"});
    ModuleOrder top(r->order, ModuleOrder::Kind::TOP);
    ModuleOrder pot(r->order, ModuleOrder::Kind::POT);
    auto lt = v.lead(top);
    CHECK(lt.comp == 1); // y^2 has larger degree
    auto lp = v.lead(pot);
    CHECK(lp.comp == 0);
    CHECK(v.homogeneous_weight({1, 1}, {2, 1}).has_value());
    CHECK(*v.homogeneous_weight({1, 1}, {2, 1}) == 3);
}
