#ifndef BLOWUP_COHOMOLOGY_HPP
#define BLOWUP_COHOMOLOGY_HPP

#include "blowup/charts.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace blowup {

/// The d-th power of the irrelevant ideal (y_0..y_r) as a graded module
/// over the Rees ring, generated by the weight-d monomials.
inline Module irrelevant_power(const RingP& ring, int d) {
    std::vector<Monomial> monos = pure_monomials(*ring, d);
    std::vector<PolyVec> gens;
    for (const auto& mo : monos)
        gens.push_back(PolyVec({Polynomial::monomial(mo, Scalar::one(ring->field))}));
    return Module(ring, {0}, std::move(gens), {});
}

namespace detail {

/// Lifts a level-0 map between resolved modules to a chain map of their
/// free resolutions. psi0 columns are coordinates over the generators of
/// the target resolution's F_0. Lifting succeeds by exactness.
inline std::vector<std::vector<PolyVec>> lift_chain_map(const RingP& ring,
                                                        const Resolution& src,
                                                        const Resolution& dst,
                                                        std::vector<PolyVec> psi0,
                                                        std::size_t depth) {
    std::vector<std::vector<PolyVec>> psi;
    psi.push_back(std::move(psi0));
    const MonomialOrder& ord = ring->order;
    for (std::size_t p = 0; p + 1 <= depth; ++p) {
        std::size_t src_next = p + 1 < src.twists.size() ? src.twists[p + 1].size() : 0;
        std::size_t dst_rank = p + 1 < dst.twists.size() ? dst.twists[p + 1].size() : 0;
        std::vector<PolyVec> next(src_next, PolyVec(dst_rank));
        if (src_next > 0 && p < src.diffs.size()) {
            // columns to lift: psi_p( d^src_{p+1}(e_k) ) through d^dst_{p+1}
            std::vector<PolyVec> dst_cols =
                p < dst.diffs.size() ? dst.diffs[p] : std::vector<PolyVec>{};
            std::size_t mid_rank = dst.twists[p].size();
            std::vector<PolyVec> lift_cols = dst_cols;
            Submodule span(ring, mid_rank, std::move(lift_cols));
            for (std::size_t k = 0; k < src_next; ++k) {
                const PolyVec& dcol = src.diffs[p][k]; // in src F_p coordinates
                PolyVec v(mid_rank);
                for (std::size_t t = 0; t < dcol.rank(); ++t)
                    if (!dcol[t].is_zero()) {
                        // psi_p column t realizes in dst F_p coordinates
                        v = add(v, mul_poly(dcol[t], psi[p][t], ord), ord);
                    }
                if (v.is_zero()) continue;
                auto c = span.lift(v);
                if (!c)
                    throw std::logic_error("chain map lift failed (resolution not exact?)");
                PolyVec col(dst_rank);
                for (std::size_t t = 0; t < dst_rank; ++t) col[t] = (*c)[t];
                next[k] = std::move(col);
            }
        }
        psi.push_back(std::move(next));
        if (p + 1 == depth) break;
    }
    return psi;
}

} // namespace detail

/// One stabilization cell: Ext^i(A_+^d, M)_m presented over the base ring
/// together with the Hom-piece complex around it (needed for induced
/// maps).
struct ExtCell {
    int sat_level = 0;     // d
    int twist = 0;         // m
    int index = 0;         // i
    DirectSum hom_mid;     // Hom(F_i, M)_m
    Module value;          // the subquotient (kernel or homology)
};

/// Shared engine for twisted sections / higher direct images: everything
/// is phrased through the resolutions of the irrelevant powers.
class CohomologyEngine {
public:
    CohomologyEngine(GradedModule m, ReesPresentation rees)
        : m_(std::move(m)), rees_(std::move(rees)) {}

    const GradedModule& module() const { return m_; }
    const ReesPresentation& rees() const { return rees_; }
    RingP ring() const { return rees_.ring; }
    RingP base() const { return rees_.base; }

    /// Resolution of A_+^d, cached, to the requested length.
    const Resolution& power_resolution(int d, std::size_t length) {
        auto it = respool_.find(d);
        if (it != respool_.end() && it->second.first >= length) return it->second.second;
        Module p = irrelevant_power(ring(), d).standardized();
        Resolution res = resolve(p, static_cast<int>(length));
        respool_.erase(d);
        return respool_.emplace(d, std::make_pair(length, std::move(res)))
            .first->second.second;
    }

    ExtCell cell(int d, int m, int i) {
        const Resolution& res = power_resolution(d, static_cast<std::size_t>(i) + 1);
        DirectSum mid = hom_piece_at(res, i, m);
        DirectSum up = hom_piece_at(res, i + 1, m);
        ModuleMap dup = hom_map_at(res, i, m, mid, up);
        auto make_value = [&]() -> Module {
            if (i == 0) return dup.kernel();
            DirectSum down = hom_piece_at(res, i - 1, m);
            ModuleMap ddown = hom_map_at(res, i - 1, m, down, mid);
            return homology(ddown, dup);
        };
        return ExtCell{d, m, i, mid, make_value()};
    }

    /// Map between cells induced by a chain map of power resolutions.
    /// psi0 gives the level-0 columns (coordinates over the target
    /// resolution generators); delta is its degree shift. The resulting
    /// map goes cell(d_dst, m, i) -> cell(d_src, m + delta, i).
    ModuleMap induced(const ExtCell& from, const ExtCell& to,
                      const std::vector<std::vector<PolyVec>>& psi, int i) {
        // middle map: Hom(F_i, M)_m -> Hom(F'_i, M)_{m'}
        ModuleMap mid = hom_transpose(psi, i, from, to);
        return induced_on_homology(from.value, to.value, mid);
    }

    /// Chain map lifting the inclusion A_+^{d+1} into A_+^d.
    std::vector<std::vector<PolyVec>> inclusion_chain(int d, std::size_t depth) {
        const Resolution& src = power_resolution(d + 1, depth);
        const Resolution& dst = power_resolution(d, depth);
        Module pd = irrelevant_power(ring(), d);
        std::vector<PolyVec> psi0;
        for (const auto& mo : pure_monomials(*ring(), d + 1)) {
            PolyVec v({Polynomial::monomial(mo, Scalar::one(ring()->field))});
            auto c = pd.express(v);
            if (!c) throw std::logic_error("inclusion of irrelevant powers failed to lift");
            psi0.push_back(PolyVec(std::move(*c)));
        }
        return detail::lift_chain_map(ring(), src, dst, std::move(psi0), depth);
    }

    /// Chain map lifting the degree -1 map A_+^{d+1} -> A_+^d sending a
    /// monomial to g_i times its y_i-quotient (the u-structure of the
    /// pushforward; independent of the choice of i by the Rees relations).
    std::vector<std::vector<PolyVec>> u_chain(int d, std::size_t depth) {
        const Resolution& src = power_resolution(d + 1, depth);
        const Resolution& dst = power_resolution(d, depth);
        Module pd = irrelevant_power(ring(), d);
        std::size_t yfirst = rees_.base->nvars();
        std::vector<PolyVec> psi0;
        for (const auto& mo : pure_monomials(*ring(), d + 1)) {
            std::size_t pick = 0;
            bool found = false;
            for (std::size_t v = yfirst; v < ring()->nvars() && !found; ++v)
                if (ring()->weights[v] > 0 && mo[v] > 0) {
                    pick = v;
                    found = true;
                }
            if (!found) throw std::logic_error("irrelevant power generator without y content");
            Monomial q = Monomial::var(ring()->nvars(), pick).divide_into(mo);
            Polynomial g = rename_into(rees_.ideal[pick - yfirst], *rees_.base, *ring());
            Polynomial img = mul(g, Polynomial::monomial(q, Scalar::one(ring()->field)),
                                 ring()->order);
            auto c = pd.express(PolyVec({img}));
            if (!c) throw std::logic_error("u-structure map failed to lift");
            psi0.push_back(PolyVec(std::move(*c)));
        }
        return detail::lift_chain_map(ring(), src, dst, std::move(psi0), depth);
    }

private:
    DirectSum hom_piece_at(const Resolution& res, int p, int m) {
        const std::vector<int>& tw = res.twists[static_cast<std::size_t>(p)];
        std::vector<Module> blocks;
        for (int t : tw) blocks.push_back(m_.piece(m + t).base_mod);
        return DirectSum::of(blocks, base());
    }
    ModuleMap hom_map_at(const Resolution& res, int p, int m, const DirectSum& src,
                         const DirectSum& dst) {
        const std::vector<int>& tw_src = res.twists[static_cast<std::size_t>(p)];
        const std::vector<int>& tw_dst = res.twists[static_cast<std::size_t>(p) + 1];
        const auto& cols = res.diffs[static_cast<std::size_t>(p)];
        std::vector<PolyVec> out(src.total.ngens(), PolyVec(dst.total.ngens()));
        for (std::size_t k = 0; k < tw_src.size(); ++k) {
            const Piece& sp = m_.piece(m + tw_src[k]);
            for (std::size_t kp = 0; kp < tw_dst.size(); ++kp) {
                const Polynomial& f = cols[kp][k];
                if (f.is_zero()) continue;
                ModuleMap mult = piece_multiplication(m_, m + tw_src[k], f);
                for (std::size_t g = 0; g < sp.ngens(); ++g) {
                    const PolyVec& mcol = mult.cols()[g];
                    std::size_t row0 = dst.gen_offsets[kp];
                    for (std::size_t t = 0; t < mcol.rank(); ++t)
                        out[src.gen_offsets[k] + g][row0 + t] =
                            add(out[src.gen_offsets[k] + g][row0 + t], mcol[t],
                                base()->order);
                }
            }
        }
        return ModuleMap(src.total, dst.total, std::move(out));
    }

    /// Hom(F_i, M)_m -> Hom(F'_i, M)_{m + delta}: contravariant transpose
    /// of the chain map, assembled blockwise from piece multiplications.
    ModuleMap hom_transpose(const std::vector<std::vector<PolyVec>>& psi, int i,
                            const ExtCell& from, const ExtCell& to) {
        const Resolution& rdst = power_resolution(from.sat_level, static_cast<std::size_t>(i));
        const Resolution& rsrc = power_resolution(to.sat_level, static_cast<std::size_t>(i));
        const std::vector<int>& tw_dst = rdst.twists[static_cast<std::size_t>(i)];
        const std::vector<int>& tw_src = rsrc.twists[static_cast<std::size_t>(i)];
        const auto& psi_i = psi[static_cast<std::size_t>(i)];
        std::vector<PolyVec> out(from.hom_mid.total.ngens(),
                                 PolyVec(to.hom_mid.total.ngens()));
        // psi_i: F'_i -> F_i, columns over F_i generators; transpose acts
        // blockwise: block (k of F_i) -> block (k' of F'_i) by psi_i[k'][k]
        for (std::size_t k = 0; k < tw_dst.size(); ++k) {
            const Piece& sp = m_.piece(from.twist + tw_dst[k]);
            for (std::size_t kp = 0; kp < tw_src.size(); ++kp) {
                const Polynomial& f = psi_i[kp][k];
                if (f.is_zero()) continue;
                ModuleMap mult = piece_multiplication(m_, from.twist + tw_dst[k], f);
                for (std::size_t g = 0; g < sp.ngens(); ++g) {
                    const PolyVec& mcol = mult.cols()[g];
                    std::size_t row0 = to.hom_mid.gen_offsets[kp];
                    for (std::size_t t = 0; t < mcol.rank(); ++t)
                        out[from.hom_mid.gen_offsets[k] + g][row0 + t] =
                            add(out[from.hom_mid.gen_offsets[k] + g][row0 + t], mcol[t],
                                base()->order);
                }
            }
        }
        return ModuleMap(from.hom_mid.total, to.hom_mid.total, std::move(out));
    }

    GradedModule m_;
    ReesPresentation rees_;
    std::map<int, std::pair<std::size_t, Resolution>> respool_;
};

/// A cohomology value with its stabilization certificate.
struct CohomologyEntry {
    Module mod;
    int i = 0;
    int twist = 0;
    int sat_exponent = 0; // colimit accepted at this power of the irrelevant ideal
    std::optional<std::size_t> dim;

    bool is_zero() const { return const_cast<Module&>(mod).is_zero_module(); }
};

/// H^i(Y, M~(m)) as the stabilized colimit of Ext^i(A_+^d, M)_m. The
/// transition along A_+^{d+1} into A_+^d must be an isomorphism for two
/// consecutive exponents before the value is accepted; the exponent is
/// recorded. Failure to stabilize within the cap raises an inconclusive
/// error, never a silent wrong answer.
inline CohomologyEntry cohomology_value(CohomologyEngine& eng, int m, int i) {
    int cap = eng.ring()->limits.max_sat_steps;
    ExtCell cur = eng.cell(1, m, i);
    for (int d = 1; d <= cap; ++d) {
        ExtCell next = eng.cell(d + 1, m, i);
        auto psi = eng.inclusion_chain(d, static_cast<std::size_t>(i) + 1);
        ModuleMap trans = eng.induced(cur, next, psi, i);
        if (trans.is_well_defined() && trans.is_surjective() && trans.is_injective()) {
            CohomologyEntry out{cur.value, i, m, d, cur.value.dim_k()};
            return out;
        }
        cur = std::move(next);
    }
    throw InconclusiveError("cohomology colimit did not stabilize within the cap (twist " +
                            std::to_string(m) + ", index " + std::to_string(i) + ")");
}

inline CohomologyEntry twisted_sections(CohomologyEngine& eng, int m) {
    return cohomology_value(eng, m, 0);
}

/// Higher direct images vanish above the chart count (Cech bound); within
/// range they are computed by the same colimit.
inline CohomologyEntry higher_cohomology(CohomologyEngine& eng, int m, int i) {
    if (i < 1) throw std::invalid_argument("higher_cohomology: index must be >= 1");
    int r = static_cast<int>(eng.rees().ideal.size()) - 1;
    if (i > r) {
        Module z = Module::zero(eng.base());
        return CohomologyEntry{z, i, m, 0, 0};
    }
    return cohomology_value(eng, m, i);
}

/// Rows indexed by twist, columns by cohomological index.
struct CohomologyTable {
    DegreeWindow twists;
    int max_index = 0;
    std::map<std::pair<int, int>, CohomologyEntry> entries; // (m, i)
};

inline CohomologyTable cohomology_table(CohomologyEngine& eng, DegreeWindow twists,
                                        int max_index) {
    CohomologyTable t{twists, max_index, {}};
    for (int m = twists.lo; m <= twists.hi; ++m) {
        t.entries.emplace(std::make_pair(m, 0), twisted_sections(eng, m));
        for (int i = 1; i <= max_index; ++i)
            t.entries.emplace(std::make_pair(m, i), higher_cohomology(eng, m, i));
    }
    return t;
}

/// The natural comparison M_m -> H^0(Y, M~(m)): an element of the
/// degree-m piece acts on A_+^d by multiplication. This is the unit of
/// the sections adjunction in computable form.
inline ModuleMap section_comparison_map(CohomologyEngine& eng, int m,
                                        const CohomologyEntry& sections) {
    const GradedModule& mod = eng.module();
    // rebuild the accepted cell so generator coordinates line up
    ExtCell cell = eng.cell(sections.sat_exponent, m, 0);
    const Piece& pm = mod.piece(m);
    const Resolution& res = eng.power_resolution(sections.sat_exponent, 1);
    const std::vector<int>& tw0 = res.twists[0];
    auto monos = pure_monomials(*eng.ring(), sections.sat_exponent);

    std::vector<PolyVec> images;
    for (std::size_t g = 0; g < pm.ngens(); ++g) {
        // hom phi_s: y^alpha -> y^alpha * s, assembled blockwise
        PolyVec img(cell.hom_mid.total.ngens());
        for (std::size_t k = 0; k < tw0.size(); ++k) {
            PolyVec prod = pm.columns[g].times_term(monos[k], Scalar::one(eng.ring()->field));
            const Piece& tp = mod.piece(m + tw0[k]);
            auto c = tp.express(prod);
            if (!c) throw std::logic_error("section comparison image failed to lift");
            for (std::size_t t = 0; t < c->rank(); ++t)
                img[cell.hom_mid.gen_offsets[k] + t] = (*c)[t];
        }
        images.push_back(cell.hom_mid.total.realize(img));
    }
    return ModuleMap::from_images(pm.base_mod, cell.value, images);
}

/// Serre invariance: truncating a module at d <= m does not change its
/// twisted sections. Verified through the natural map induced by the
/// truncation inclusion at a common saturation exponent.
inline bool serre_invariance_check(const GradedModule& m, const ReesPresentation& rees,
                                   int trunc_at, int twist) {
    GradedModule sub{truncate_sub(m.mod(), trunc_at)};
    CohomologyEngine em(m, rees);
    CohomologyEngine es(sub, rees);
    CohomologyEntry a = twisted_sections(es, twist);
    CohomologyEntry b = twisted_sections(em, twist);
    int dstar = std::max(a.sat_exponent, b.sat_exponent);
    ExtCell ca = es.cell(dstar, twist, 0);
    ExtCell cb = em.cell(dstar, twist, 0);
    // middle map: blockwise transport of pieces along the inclusion
    const Resolution& res = em.power_resolution(dstar, 1);
    const std::vector<int>& tw0 = res.twists[0];
    std::vector<PolyVec> cols(ca.hom_mid.total.ngens(), PolyVec(cb.hom_mid.total.ngens()));
    for (std::size_t k = 0; k < tw0.size(); ++k) {
        ModuleMap tr = piece_transport_map(sub.piece(twist + tw0[k]),
                                           m.piece(twist + tw0[k]));
        for (std::size_t g = 0; g < tr.cols().size(); ++g) {
            const PolyVec& c = tr.cols()[g];
            for (std::size_t t = 0; t < c.rank(); ++t)
                cols[ca.hom_mid.gen_offsets[k] + g][cb.hom_mid.gen_offsets[k] + t] = c[t];
        }
    }
    ModuleMap mid(ca.hom_mid.total, cb.hom_mid.total, std::move(cols));
    ModuleMap induced = induced_on_homology(ca.value, cb.value, mid);
    return induced.is_well_defined() && induced.is_surjective() && induced.is_injective();
}

/// Certificate for the effective bound: per-twist evidence.
struct BoundEvidence {
    int twist = 0;
    bool sections_match = false;   // H^0(O(m)) is I^m via the natural map
    std::vector<int> nonzero_h;    // indices 1..r with nonzero cohomology
    int sat_exponent = 0;
};

struct StabilityBound {
    std::optional<int> bound;     // least n <= limit passing from n to limit
    int limit = 0;
    std::vector<BoundEvidence> evidence;
};

/// Remark-level effective bound: the least n such that for all m in
/// [n, limit] the sections of O(m) are exactly I^m and the higher
/// cohomology of O(m) vanishes up to the chart count.
inline StabilityBound stability_bound(const ReesPresentation& rees, int limit) {
    GradedModule structure{Module::free(rees.ring, {0})};
    CohomologyEngine eng(structure, rees);
    int r = static_cast<int>(rees.ideal.size()) - 1;

    StabilityBound out;
    out.limit = limit;
    for (int m = 0; m <= limit; ++m) {
        BoundEvidence ev;
        ev.twist = m;
        CohomologyEntry h0 = twisted_sections(eng, m);
        ev.sat_exponent = h0.sat_exponent;
        // natural map S_m -> H^0; S_m = I^m is validated by the rees
        // presentation invariants
        ModuleMap nat = section_comparison_map(eng, m, h0);
        bool piece_ok = piece_matches_power(structure, rees.base, rees.ideal, m);
        ev.sections_match = piece_ok && nat.is_well_defined() && nat.is_iso();
        for (int i = 1; i <= r; ++i) {
            CohomologyEntry hi = higher_cohomology(eng, m, i);
            if (!hi.is_zero()) ev.nonzero_h.push_back(i);
        }
        out.evidence.push_back(std::move(ev));
    }
    for (int n = 0; n <= limit; ++n) {
        bool ok = true;
        for (int m = n; m <= limit && ok; ++m) {
            const auto& ev = out.evidence[static_cast<std::size_t>(m)];
            ok = ev.sections_match && ev.nonzero_h.empty();
        }
        if (ok) {
            out.bound = n;
            break;
        }
    }
    return out;
}

} // namespace blowup

#endif
