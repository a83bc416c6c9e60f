#ifndef BLOWUP_REES_HPP
#define BLOWUP_REES_HPP

#include "blowup/graded_ext.hpp"

#include <string>
#include <vector>

namespace blowup {

/// Presentation of the Rees algebra of an ideal: R[y_0..y_r] modulo the
/// kernel of y_i -> g_i t, with weights 0 on the base and 1 on the y's.
struct ReesPresentation {
    RingP base;                        // R = k[x]/J
    std::vector<Polynomial> ideal;     // chosen generators g_0..g_r (over base)
    RingP ring;                        // graded quotient ring
    std::vector<std::string> rees_vars;
};

/// Extended Rees algebra presentation: R[y_0..y_r, u], u of weight -1,
/// modulo the kernel of y_i -> g_i t, u -> s in R[t, s]/(t s - 1).
struct ExtReesPresentation {
    ReesPresentation rees; // the non-extended presentation of the same ideal
    RingP ring;            // graded quotient ring with the u variable
    std::string u_var;
};

inline ReesPresentation rees_presentation(const RingP& base,
                                          const std::vector<Polynomial>& ideal_gens) {
    std::vector<Polynomial> gens = ideal_gens;
    if (gens.empty()) gens.push_back(Polynomial::zero());

    std::vector<std::string> yvars = fresh_names(base->vars, "y", gens.size());
    std::string tvar = fresh_name(base->vars, "t");

    // target R[t]
    std::vector<std::string> tnames = base->vars;
    tnames.push_back(tvar);
    std::vector<int> tw(tnames.size(), 0);
    tw.back() = 1;
    std::vector<Polynomial> tquot;
    RingP target0 = make_ring(base->field, tnames, tw, {}, base->limits);
    for (const auto& j : base->quot) tquot.push_back(rename_into(j, *base, *target0));
    RingP target = make_ring(base->field, tnames, tw, tquot, base->limits);

    // source R-ambient [y..]
    std::vector<std::string> snames = base->vars;
    std::vector<int> sw(base->nvars(), 0);
    for (const auto& y : yvars) {
        snames.push_back(y);
        sw.push_back(1);
    }
    RingP source = make_ring(base->field, snames, sw, {}, base->limits);

    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < base->nvars(); ++i)
        images.push_back(target->var_poly(i));
    Polynomial t = target->var_poly(base->nvars());
    for (const auto& g : gens)
        images.push_back(mul(rename_into(g, *base, *target), t, target->order));

    Ideal kernel = ring_map_kernel(source, target, images);

    ReesPresentation out;
    out.base = base;
    out.ideal = gens;
    out.rees_vars = yvars;
    out.ring = make_graded_ring(base->field, snames, sw, kernel.ideal_gens(), base->limits);
    return out;
}

inline ExtReesPresentation ext_rees_presentation(const RingP& base,
                                                 const std::vector<Polynomial>& ideal_gens) {
    ExtReesPresentation out;
    out.rees = rees_presentation(base, ideal_gens);
    const auto& gens = out.rees.ideal;

    std::string uvar = fresh_name(base->vars, "u");
    std::string tvar = fresh_name(base->vars, "t");
    std::string svar = fresh_name(base->vars, "s");

    // target R[t, s]/(t s - 1)
    std::vector<std::string> tnames = base->vars;
    tnames.push_back(tvar);
    tnames.push_back(svar);
    std::vector<int> tw(tnames.size(), 0);
    tw[tnames.size() - 2] = 1;
    tw[tnames.size() - 1] = -1;
    RingP target0 = make_ring(base->field, tnames, tw, {}, base->limits);
    std::vector<Polynomial> tquot;
    for (const auto& j : base->quot) tquot.push_back(rename_into(j, *base, *target0));
    {
        Polynomial ts = mul(target0->var_poly(tnames.size() - 2),
                            target0->var_poly(tnames.size() - 1), target0->order);
        tquot.push_back(sub(ts, target0->one(), target0->order));
    }
    RingP target = make_ring(base->field, tnames, tw, tquot, base->limits);

    // source ambient R[y.., u]
    std::vector<std::string> snames = base->vars;
    std::vector<int> sw(base->nvars(), 0);
    for (const auto& y : out.rees.rees_vars) {
        snames.push_back(y);
        sw.push_back(1);
    }
    snames.push_back(uvar);
    sw.push_back(-1);
    RingP source = make_ring(base->field, snames, sw, {}, base->limits);

    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < base->nvars(); ++i)
        images.push_back(target->var_poly(i));
    Polynomial t = target->var_poly(base->nvars());
    Polynomial s = target->var_poly(base->nvars() + 1);
    for (const auto& g : gens)
        images.push_back(mul(rename_into(g, *base, *target), t, target->order));
    images.push_back(s);

    Ideal kernel = ring_map_kernel(source, target, images);
    out.ring = make_graded_ring(base->field, snames, sw, kernel.ideal_gens(), base->limits);
    out.u_var = uvar;
    return out;
}

/// The associated graded ring gr_I R as a graded quotient: the extended
/// Rees ring modulo (u).
inline RingP assoc_graded(const ExtReesPresentation& ext) {
    std::vector<Polynomial> quot = ext.ring->quot;
    auto u = ext.ring->var_index(ext.u_var);
    quot.push_back(ext.ring->var_poly(*u));
    return make_graded_ring(ext.ring->field, ext.ring->vars, ext.ring->weights, quot,
                            ext.ring->limits);
}

// ---------------------------------------------------------------------------
// natural comparison maps
// ---------------------------------------------------------------------------

/// An ideal power I^n as a module: the subquotient of R^1 spanned by its
/// generators, so elements of the ideal can be expressed directly.
inline Module ideal_power_module(const RingP& base, const std::vector<Polynomial>& ideal,
                                 int n) {
    Ideal p = ideal_power(Ideal::ideal(base, ideal), n);
    std::vector<PolyVec> gens;
    for (const auto& g : p.ideal_gens())
        if (!g.is_zero()) gens.push_back(PolyVec({g}));
    return Module(base, {0}, std::move(gens), {});
}

/// Substitution y^a u^b -> prod g_i^{a_i} over the base (the image of a
/// pure monomial under the Rees evaluation at t = 1).
inline Polynomial evaluate_pure_label(const Monomial& mono, const RingP& graded,
                                      const RingP& base,
                                      const std::vector<Polynomial>& ideal) {
    Polynomial out = base->one();
    std::size_t yfirst = base->nvars();
    for (std::size_t i = 0; i < graded->nvars(); ++i) {
        if (mono[i] == 0) continue;
        if (graded->weights[i] == 0)
            throw std::invalid_argument("label not a pure monomial");
        if (graded->weights[i] < 0) continue; // u evaluates to 1
        std::size_t gi = i - yfirst;
        for (std::int32_t k = 0; k < mono[i]; ++k)
            out = mul(out, ideal[gi], base->order);
    }
    return out;
}

/// The natural map from the degree-n piece of a module over the (extended)
/// Rees ring to the corresponding power module: labels evaluate at t = 1.
/// Passing n <= 0 with the extended ring compares against R itself.
inline ModuleMap piece_to_power_map(const Piece& piece, const RingP& base,
                                    const std::vector<Polynomial>& ideal, int n) {
    Module target = ideal_power_module(base, ideal, std::max(n, 0));
    std::vector<PolyVec> images;
    for (const auto& lb : piece.labels) {
        Polynomial v = evaluate_pure_label(lb.mono, piece.graded_ring, base, ideal);
        images.push_back(PolyVec({v}));
    }
    return ModuleMap::from_images(piece.base_mod, target, images);
}

/// graded_piece(ring, n) vs I^n (or R for n <= 0 over the extended ring):
/// the natural evaluation map must be an isomorphism.
inline bool piece_matches_power(const GradedModule& structure, const RingP& base,
                                const std::vector<Polynomial>& ideal, int n) {
    const Piece& p = structure.piece(n);
    ModuleMap nat = piece_to_power_map(p, base, ideal, n);
    return nat.is_well_defined() && nat.is_iso();
}

/// Sets u = 1 in the extended kernel and eliminates every nonbase
/// variable; the result must collapse onto the base relations.
inline bool ext_rees_collapse_check(const ExtReesPresentation& ext) {
    RingP r = ext.ring;
    std::vector<Polynomial> gens = r->quot;
    auto u = r->var_index(ext.u_var);
    gens.push_back(sub(r->var_poly(*u), r->one(), r->order));
    // also set y_i = g_i (u = 1 makes the rees variables equal the ideal gens)
    Ideal with_u1 = Ideal::ideal(
        std::make_shared<Ring>(r->field, r->vars, std::vector<int>(r->nvars(), 0), r->order,
                               std::vector<Polynomial>{}, r->limits),
        gens);
    Ideal collapsed = eliminate(with_u1, r->nonbase_mask());
    RingP base = ext.rees.base;
    // compare with the base relations as ideals of the base ambient
    std::vector<Polynomial> down;
    for (const auto& g : collapsed.ideal_gens())
        down.push_back(restrict_to(g, *r, *base, r->base_mask()));
    RingP base_ambient = make_poly_ring(base->field, base->vars, base->limits);
    Ideal got = Ideal::ideal(base_ambient, down);
    std::vector<Polynomial> jj;
    for (const auto& q : base->quot) jj.push_back(rename_into(q, *base, *base_ambient));
    Ideal expect = Ideal::ideal(base_ambient, jj);
    return got.equals(expect);
}

// ---------------------------------------------------------------------------
// filtered modules
// ---------------------------------------------------------------------------

/// Z-filtered module: a finitely presented base module E with a stored
/// decreasing chain F^0 = E >= F^1 >= ... >= F^s of submodules (generator
/// lists in E's generator coordinates). Deeper levels are defined as
/// F^{s+k} = I^k F^s, which is the finite-generation normalization.
struct FilteredModule {
    RingP base;
    Module E; // standard form
    std::vector<std::vector<PolyVec>> levels; // levels[0] spans E

    FilteredModule(RingP b, Module e, std::vector<std::vector<PolyVec>> lv)
        : base(std::move(b)), E(std::move(e).standardized()), levels(std::move(lv)) {
        if (levels.empty())
            levels.push_back([&] {
                std::vector<PolyVec> full;
                for (std::size_t j = 0; j < E.ngens(); ++j)
                    full.push_back(PolyVec::unit(E.ngens(), j, base->one()));
                return full;
            }());
    }

    int stab() const { return static_cast<int>(levels.size()) - 1; }
};

/// The I-adic filtration on a finitely presented module.
inline FilteredModule adic_filtration(const RingP& base, Module e,
                                      const std::vector<Polynomial>& ideal, int upto = 0) {
    FilteredModule f(base, std::move(e), {});
    for (int n = 1; n <= upto; ++n) {
        std::vector<PolyVec> next;
        for (const auto& g : ideal)
            for (const auto& v : f.levels.back()) next.push_back(mul_poly(g, v, base->order));
        f.levels.push_back(std::move(next));
    }
    return f;
}

struct FiltrationCheck {
    bool ok = true;
    std::string witness;
    int stabilized_from = 0; // least stored index from which F^{m+1} = I F^m
};

/// Verifies the filtration axioms by Groebner membership: each level is
/// contained in the previous one, I * F^n lands in F^{n+1} for every
/// stored adjacent pair, and reports from which stored index the chain is
/// I-stable (two-sided membership).
inline FiltrationCheck filtration_wellformed(const FilteredModule& f,
                                             const std::vector<Polynomial>& ideal) {
    FiltrationCheck out;
    const RingP& base = f.base;
    std::size_t rank = f.E.ngens();
    auto span_of = [&](const std::vector<PolyVec>& gens) {
        std::vector<PolyVec> cols = gens;
        for (const auto& d : f.E.den()) cols.push_back(d);
        return Submodule(base, rank, std::move(cols));
    };

    // F^0 must span E
    {
        Submodule top = span_of(f.levels[0]);
        for (std::size_t j = 0; j < rank; ++j)
            if (!top.contains(PolyVec::unit(rank, j, base->one()))) {
                out.ok = false;
                out.witness = "level 0 does not span the module";
                return out;
            }
    }
    for (std::size_t n = 0; n + 1 < f.levels.size(); ++n) {
        Submodule cur = span_of(f.levels[n]);
        Submodule nxt = span_of(f.levels[n + 1]);
        for (const auto& v : f.levels[n + 1])
            if (!cur.contains(v)) {
                out.ok = false;
                out.witness = "level " + std::to_string(n + 1) +
                              " is not contained in level " + std::to_string(n);
                return out;
            }
        for (const auto& g : ideal)
            for (const auto& v : f.levels[n])
                if (!nxt.contains(mul_poly(g, v, base->order))) {
                    out.ok = false;
                    out.witness = "I * F^" + std::to_string(n) + " is not inside F^" +
                                  std::to_string(n + 1);
                    return out;
                }
    }
    // detect where the stored chain becomes I-stable
    int from = static_cast<int>(f.levels.size()) - 1;
    for (int n = static_cast<int>(f.levels.size()) - 2; n >= 0; --n) {
        Submodule prod = span_of([&] {
            std::vector<PolyVec> prods;
            for (const auto& g : ideal)
                for (const auto& v : f.levels[static_cast<std::size_t>(n)])
                    prods.push_back(mul_poly(g, v, base->order));
            return prods;
        }());
        bool equal = true;
        for (const auto& v : f.levels[static_cast<std::size_t>(n) + 1])
            if (!prod.contains(v)) equal = false;
        if (equal)
            from = n;
        else
            break;
    }
    out.stabilized_from = from;
    return out;
}

/// Rees module of a filtered module over the extended Rees ring: the
/// graded module with pieces F^n E (n >= 1) and E (n <= 0), u acting as
/// the inclusions. Presented exactly by a graph-module elimination inside
/// the Laurent model E[t, 1/t], so the pieces are correct in every
/// degree, not only on a window.
inline Module rees_module(const FilteredModule& f, const ExtReesPresentation& ext) {
    const RingP& base = f.base;
    RingP aring = ext.ring;

    // combined ambient: extended-rees variables plus t, s
    std::string tvar = fresh_name(aring->vars, "t");
    std::string svar = fresh_name(aring->vars, "s");
    std::vector<std::string> names = aring->vars;
    names.push_back(tvar);
    names.push_back(svar);
    std::vector<int> w = aring->weights;
    w.push_back(1);
    w.push_back(-1);

    std::vector<Polynomial> urel;
    RingP u0 = make_ring(aring->field, names, w, {}, aring->limits);
    // relations: base ideal, t s - 1, y_i - g_i t, u - s
    for (const auto& j : base->quot) urel.push_back(rename_into(j, *base, *u0));
    Polynomial t = u0->var_poly(aring->nvars());
    Polynomial s = u0->var_poly(aring->nvars() + 1);
    urel.push_back(sub(mul(t, s, u0->order), u0->one(), u0->order));
    for (std::size_t i = 0; i < ext.rees.rees_vars.size(); ++i) {
        auto yi = u0->var_index(ext.rees.rees_vars[i]);
        Polynomial gi = rename_into(ext.rees.ideal[i], *base, *u0);
        urel.push_back(sub(u0->var_poly(*yi), mul(gi, t, u0->order), u0->order));
    }
    {
        auto ui = u0->var_index(ext.u_var);
        urel.push_back(sub(u0->var_poly(*ui), s, u0->order));
    }
    RingP uring = make_ring(aring->field, names, w, urel, aring->limits);

    // columns: t^n * (level-n generator) in E (x) Laurent
    std::size_t erank = f.E.ngens();
    std::vector<PolyVec> cols;
    std::vector<int> twists;
    for (std::size_t n = 0; n < f.levels.size(); ++n) {
        Polynomial tn = u0->one();
        for (std::size_t k = 0; k < n; ++k) tn = mul(tn, t, u0->order);
        for (const auto& v : f.levels[n]) {
            PolyVec c(erank);
            for (std::size_t j = 0; j < erank; ++j)
                c[j] = mul(tn, rename_into(v[j], *base, *uring), uring->order);
            cols.push_back(std::move(c));
            twists.push_back(static_cast<int>(n));
        }
    }
    std::vector<PolyVec> den;
    for (const auto& d : f.E.den()) {
        PolyVec c(erank);
        for (std::size_t j = 0; j < erank; ++j) c[j] = rename_into(d[j], *base, *uring);
        den.push_back(std::move(c));
    }

    Module sq(uring, std::vector<int>(erank, 0), cols, den);
    const auto& rels = sq.rels();

    // eliminate t and s; the survivors are the relations over the
    // extended Rees ring
    std::vector<std::uint8_t> mask(uring->nvars(), 0);
    mask[aring->nvars()] = 1;
    mask[aring->nvars() + 1] = 1;
    std::vector<PolyVec> arels;
    if (!rels.empty()) {
        Submodule relsub(uring, cols.size(), rels);
        for (auto& v : eliminate_vectors(relsub, mask)) {
            PolyVec down(cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j)
                down[j] = rename_into(v[j], *uring, *aring);
            arels.push_back(std::move(down));
        }
    }
    return Module::cokernel(aring, twists, std::move(arels));
}

// ---------------------------------------------------------------------------
// the functors between Z = V(I), filtered modules, and graded modules
// ---------------------------------------------------------------------------

/// Module over Z = Spec(R/I), represented as a base module annihilated by
/// I (the annihilation relations are included and checked).
inline Module z_module(const RingP& base, const std::vector<Polynomial>& ideal,
                       std::vector<int> twists, std::vector<PolyVec> rels) {
    std::size_t rank = twists.size();
    for (const auto& g : ideal)
        for (std::size_t j = 0; j < rank; ++j)
            rels.push_back(PolyVec::unit(rank, j, g));
    return Module::cokernel(base, std::move(twists), std::move(rels));
}

/// rho(E) for a flagged-free base module: E (x) A~ is the free module of
/// the same rank with all twists zero.
inline Module rho(const ExtReesPresentation& ext, std::size_t rank) {
    return Module::free(ext.ring, std::vector<int>(rank, 0));
}

/// i_n(N): the filtered module with F^m = N for m <= n and 0 above.
inline FilteredModule i_n(const RingP& base, const std::vector<Polynomial>& ideal,
                          const Module& n_mod, int n) {
    Module N = n_mod.standardized();
    // check the Z-module invariant: I annihilates
    for (const auto& g : ideal)
        for (std::size_t j = 0; j < N.ngens(); ++j)
            if (!N.element_is_zero(PolyVec::unit(N.ngens(), j, g)))
                throw std::invalid_argument("i_n: module is not annihilated by the ideal");
    std::vector<PolyVec> full;
    for (std::size_t j = 0; j < N.ngens(); ++j)
        full.push_back(PolyVec::unit(N.ngens(), j, base->one()));
    std::vector<std::vector<PolyVec>> levels;
    for (int m = 0; m <= n; ++m) levels.push_back(full);
    levels.push_back({}); // F^{n+1} = 0
    return FilteredModule(base, N, std::move(levels));
}

/// gr_F(M, n) = coker(u: M_{n+1} -> M_n) as a Z-module.
inline Module gr_F(const GradedModule& m, const ExtReesPresentation& ext, int n) {
    ModuleMap u = piece_u_map(m, n);
    Module cok = u.cokernel();
    Module std_cok = cok.standardized();
    // impose (and implicitly verify) the I-annihilation of the quotient
    std::vector<PolyVec> rels = std_cok.den();
    return z_module(ext.rees.base, ext.rees.ideal, std_cok.ambient_twists(), std::move(rels));
}

/// tau(M) for 0-stable M: forget the negative part and the u-action.
/// Generators are the piece labels in degrees [0, max twist]; relations
/// come from the ambient relations by eliminating u.
inline Module tau(const GradedModule& m, const ReesPresentation& rees) {
    RingP aring = m.ring();
    RingP sring = rees.ring;
    int top = std::max(0, m.max_twist());

    std::vector<PolyVec> gens;
    std::vector<int> twists;
    for (int d = 0; d <= top; ++d) {
        const Piece& p = m.piece(d);
        for (std::size_t g = 0; g < p.ngens(); ++g) {
            gens.push_back(p.columns[g]);
            twists.push_back(d);
        }
    }
    Module sq(aring, m.mod().ambient_twists(), gens, m.mod().den());
    const auto& rels = sq.rels();

    auto u = aring->u_index();
    std::vector<std::uint8_t> mask(aring->nvars(), 0);
    if (u) mask[*u] = 1;
    std::vector<PolyVec> srels;
    if (!rels.empty()) {
        Submodule relsub(aring, gens.size(), rels);
        for (auto& v : eliminate_vectors(relsub, mask)) {
            PolyVec down(gens.size());
            for (std::size_t j = 0; j < gens.size(); ++j)
                down[j] = rename_into(v[j], *aring, *sring);
            srels.push_back(std::move(down));
        }
    }
    return Module::cokernel(sring, std::move(twists), std::move(srels));
}

/// n-stability: u is bijective on the graded pieces from the window floor
/// up to n. Below the floor the pieces are u-transports of the floor by
/// finite generation, so the window check propagates downward.
inline bool is_n_stable(const GradedModule& m, int n) {
    if (!m.ring()->u_index()) return false;
    if (m.mod().ngens() == 0) return true;
    int lo = std::min(m.min_twist(), n);
    for (int i = lo; i <= n; ++i) {
        ModuleMap u = piece_u_map(m, i - 1); // M_i -> M_{i-1}
        if (!u.is_well_defined() || !u.is_iso()) return false;
    }
    return true;
}

} // namespace blowup

#endif
