#include <catch2/catch_amalgamated.hpp>

#include "blowup/graded_ext.hpp"
#include "helpers.hpp"

using namespace blowup;
using test::P;
using test::qq_ring;

namespace {

RingP plane_rees() {
    auto amb = make_graded_ring(Field{}, {"x", "y", "y0", "y1"}, {0, 0, 1, 1}, {});
    return make_graded_ring(Field{}, {"x", "y", "y0", "y1"}, {0, 0, 1, 1},
                            {parse_polynomial(*amb, "x*y1 - y*y0")});
}

RingP ext_rees_x() {
    auto amb = make_graded_ring(Field{}, {"x", "y", "u"}, {0, 1, -1}, {});
    return make_graded_ring(Field{}, {"x", "y", "u"}, {0, 1, -1},
                            {parse_polynomial(*amb, "y*u - x")});
}

} // namespace

TEST_CASE("graded piece of the rees ring at degree 1 is the ideal") {
    auto gr = plane_rees();
    GradedModule S{Module::free(gr, {0})};
    const Piece& p1 = S.piece(1);
    REQUIRE(p1.ngens() == 2); // y0, y1

    // natural map to I = (x, y) sending y0 -> x, y1 -> y is an isomorphism
    RingP base = base_ring(gr);
    // I as a module: cokernel of the koszul syzygy inside R^2 -> gens x, y
    Module ideal_mod =
        Module::cokernel(base, {0, 0}, {PolyVec({parse_polynomial(*base, "y"),
                                                 parse_polynomial(*base, "-x")})});
    ModuleMap cmp = ModuleMap::identity(p1.base_mod);
    // p1 relations should match the koszul relation after normalization:
    // check both containments via the natural map
    ModuleMap nat(p1.base_mod, ideal_mod,
                  {PolyVec::unit(2, 0, base->one()), PolyVec::unit(2, 1, base->one())});
    CHECK(nat.is_well_defined());
    CHECK(nat.is_iso());
    (void)cmp;
}

TEST_CASE("pieces below all twists vanish without the inverse variable") {
    auto gr = plane_rees();
    GradedModule S{Module::free(gr, {2})};
    CHECK(S.piece(1).is_zero());
    CHECK(S.piece(-3).is_zero());
    CHECK(!S.piece(2).is_zero());
}

TEST_CASE("graded ext: hom from a free module gives the target pieces") {
    auto gr = plane_rees();
    GradedModule S{Module::free(gr, {0})};
    GradedModule N{Module::free(gr, {0})};
    auto table = graded_ext(S, N, 0, DegreeWindow(0, 2));
    // Ext^0(A, A)_d = A_d: dimensions over QQ are infinite; compare presentations
    for (int d = 0; d <= 2; ++d) {
        const auto& e = table.at(d);
        CHECK(!e.mod.is_zero_module());
        // the piece of A at degree d has binomial(d+1, 1) = d+1 generators
        CHECK(e.mod.ngens() == S.piece(d).ngens());
    }
}

TEST_CASE("graded ext over a trivially graded ring: Ext^1(k, k) over QQ[x]") {
    auto r = qq_ring({"x"});
    Module k = Module::cokernel(r, {0}, {test::V(r, {"x"})});
    GradedModule K{k};
    auto e0 = graded_ext(K, K, 0, DegreeWindow(0, 0));
    auto e1 = graded_ext(K, K, 1, DegreeWindow(0, 0));
    auto e2 = graded_ext(K, K, 2, DegreeWindow(0, 0));
    REQUIRE(e0.at(0).dim.has_value());
    CHECK(*e0.at(0).dim == 1);
    REQUIRE(e1.at(0).dim.has_value());
    CHECK(*e1.at(0).dim == 1);
    REQUIRE(e2.at(0).dim.has_value());
    CHECK(*e2.at(0).dim == 0); // pd = 1 over a polynomial ring in one variable
}

TEST_CASE("ext of the twisted extended rees ring picks out the ideal") {
    auto gr = ext_rees_x();
    GradedModule A{Module::free(gr, {0})};
    GradedModule Am1{Module::free(gr, {1})}; // A(-1): generator in degree 1
    // Ext^0(A(-1), A)_0 = A_1 = I
    auto table = graded_ext(Am1, A, 0, DegreeWindow(0, 0));
    const Module& m = table.at(0).mod;
    CHECK(!m.is_zero_module());
    CHECK(m.ngens() == 1); // generated by y |-> multiplication map
    CHECK(m.rels().empty());
}

TEST_CASE("torsion detection") {
    auto gr = plane_rees();
    // A / A_{>=1}: structure sheaf of degree zero
    Module m = Module::cokernel(gr, {0}, {PolyVec({parse_polynomial(*gr, "y0")}),
                                          PolyVec({parse_polynomial(*gr, "y1")})});
    auto cert = is_torsion(GradedModule{m});
    CHECK(cert.torsion);
    CHECK(cert.onset == 1);

    // the rees ring itself is not torsion
    auto cert2 = is_torsion(GradedModule{Module::free(gr, {0})});
    CHECK(!cert2.torsion);

    // nilpotent regime: rees ring of (x) in QQ[x]/(x^2) is torsion with onset 2
    auto amb = make_graded_ring(Field{}, {"x", "y"}, {0, 1}, {});
    auto mk = [&](const std::string& s) { return parse_polynomial(*amb, s); };
    auto nil = make_graded_ring(Field{}, {"x", "y"}, {0, 1},
                                {mk("x^2"), mk("x*y"), mk("y^2")});
    auto cert3 = is_torsion(GradedModule{Module::free(nil, {0})});
    CHECK(cert3.torsion);
    CHECK(cert3.onset == 2);
}

TEST_CASE("torsion implies ext from frees vanishes past the certificate") {
    auto gr = plane_rees();
    Module m = Module::cokernel(gr, {0}, {PolyVec({parse_polynomial(*gr, "y0")}),
                                          PolyVec({parse_polynomial(*gr, "y1")})});
    GradedModule M{m};
    auto cert = is_torsion(M);
    REQUIRE(cert.torsion);
    GradedModule F{Module::free(gr, {0})};
    auto table = graded_ext(F, M, 0, DegreeWindow(cert.onset, cert.onset + 2));
    for (const auto& [d, e] : table) CHECK(e.mod.is_zero_module());
}

TEST_CASE("hilbert data") {
    // zero module: all zeros
    auto gr = plane_rees();
    auto z = hilbert_data(GradedModule{Module::zero(gr)}, DegreeWindow(0, 3));
    for (const auto& h : z) CHECK(h.value == 0);

    // free rank 1 over a field base, two weight-1 variables, no relations:
    // dims 1, 2, 3, 4
    auto free2 = make_graded_ring(Field{}, {"a", "b"}, {1, 1}, {});
    auto hd = hilbert_data(GradedModule{Module::free(free2, {0})}, DegreeWindow(0, 3));
    REQUIRE(hd.size() == 4);
    CHECK(hd[0].value == 1);
    CHECK(hd[1].value == 2);
    CHECK(hd[2].value == 3);
    CHECK(hd[3].value == 4);
    CHECK(hd[0].is_dimension);

    // over a non-field base: minimal generator counts
    auto counts = hilbert_data(GradedModule{Module::free(gr, {0})}, DegreeWindow(0, 2));
    CHECK(counts[0].value == 1);  // A_0 = R
    CHECK(counts[1].value == 2);  // I = (x, y)
    CHECK(counts[2].value == 3);  // I^2
    CHECK(!counts[0].is_dimension);
}

TEST_CASE("piece of twist matches shifted piece with iso map") {
    auto gr = plane_rees();
    GradedModule S{Module::free(gr, {0})};
    for (int k : {-1, 1, 2}) {
        GradedModule T{twist(S.mod(), k)};
        for (int d = 0; d <= 2; ++d) {
            const Piece& a = T.piece(d);
            const Piece& b = S.piece(d + k);
            CHECK(a.ngens() == b.ngens());
            if (a.ngens() == 0) continue;
            // labels agree, so the identity on coordinates is the natural map
            std::vector<PolyVec> cols;
            for (std::size_t g = 0; g < a.ngens(); ++g)
                cols.push_back(PolyVec::unit(b.ngens(), g, base_ring(gr)->one()));
            ModuleMap nat(a.base_mod, b.base_mod, std::move(cols));
            CHECK(nat.is_well_defined());
            CHECK(nat.is_iso());
        }
    }
}
