#ifndef BLOWUP_GRADED_EXT_HPP
#define BLOWUP_GRADED_EXT_HPP

#include "blowup/resolution.hpp"

#include <map>
#include <optional>
#include <vector>

namespace blowup {

/// Finite degree window; every graded report names the window it was
/// computed on.
struct DegreeWindow {
    int lo = 0, hi = 0;
    DegreeWindow() = default;
    DegreeWindow(int l, int h) : lo(l), hi(h) {
        if (l > h) throw std::invalid_argument("degree window: lo > hi");
    }
    bool contains(int d) const { return lo <= d && d <= hi; }
    std::string str() const { return std::to_string(lo) + ".." + std::to_string(hi); }
};

namespace detail {

/// Hom(F, N)_d for a free graded module F with generator degrees `tw`:
/// the direct sum of the pieces N_{d + tw[k]}.
inline DirectSum hom_piece(const GradedModule& n, const std::vector<int>& tw, int d) {
    std::vector<Module> blocks;
    for (int t : tw) blocks.push_back(n.piece(d + t).base_mod);
    return DirectSum::of(blocks, base_ring(n.ring()));
}

/// The degree-d piece of Hom(F_p, N) -> Hom(F_{p+1}, N), phi -> phi o d.
inline ModuleMap hom_piece_map(const GradedModule& n, const std::vector<int>& tw_src,
                               const std::vector<int>& tw_dst,
                               const std::vector<PolyVec>& diff_cols, int d,
                               const DirectSum& src, const DirectSum& dst) {
    // source block k (gen of F_p), target block k' (gen of F_{p+1});
    // entry = multiplication by diff_cols[k'][k] : N_{d+tw_src[k]} -> N_{d+tw_dst[k']}
    std::vector<PolyVec> cols(src.total.ngens(), PolyVec(dst.total.ngens()));
    for (std::size_t k = 0; k < tw_src.size(); ++k) {
        const Piece& sp = n.piece(d + tw_src[k]);
        for (std::size_t kp = 0; kp < tw_dst.size(); ++kp) {
            const Polynomial& f = diff_cols[kp][k];
            if (f.is_zero()) continue;
            ModuleMap mult = piece_multiplication(n, d + tw_src[k], f);
            // mult target is piece(d + tw_src[k] + weight f) = piece(d + tw_dst[kp])
            for (std::size_t g = 0; g < sp.ngens(); ++g) {
                const PolyVec& mcol = mult.cols()[g];
                std::size_t row0 = dst.gen_offsets[kp];
                for (std::size_t t = 0; t < mcol.rank(); ++t)
                    cols[src.gen_offsets[k] + g][row0 + t] =
                        add(cols[src.gen_offsets[k] + g][row0 + t], mcol[t],
                            n.ring()->order);
            }
        }
    }
    return ModuleMap(src.total, dst.total, std::move(cols));
}

} // namespace detail

struct ExtEntry {
    Module mod;                      // base-ring presentation of Ext^i(M, N)_d
    std::optional<std::size_t> dim;  // dimension over the field, when finite
};

/// Ext^i over the graded ring between finitely presented graded modules,
/// reported degreewise over the base ring on a finite window. Resolutions
/// of modules over extended Rees rings use non-negative twists (the
/// 0-stable regime).
inline std::map<int, ExtEntry> graded_ext(const GradedModule& m, const GradedModule& n, int i,
                                          DegreeWindow window) {
    if (i < 0) throw std::invalid_argument("graded_ext: negative cohomological index");
    RingP ring = m.ring();
    bool nonneg = ring->u_index().has_value();
    Resolution res = resolve(m.mod(), i + 1, nonneg);

    std::map<int, ExtEntry> out;
    for (int d = window.lo; d <= window.hi; ++d) {
        DirectSum h_i = detail::hom_piece(n, res.twists[static_cast<std::size_t>(i)], d);
        DirectSum h_ip1 =
            detail::hom_piece(n, res.twists[static_cast<std::size_t>(i) + 1], d);
        ModuleMap up = detail::hom_piece_map(
            n, res.twists[static_cast<std::size_t>(i)],
            res.twists[static_cast<std::size_t>(i) + 1],
            res.diffs[static_cast<std::size_t>(i)], d, h_i, h_ip1);
        auto compute = [&]() -> Module {
            if (i == 0) return up.kernel();
            DirectSum h_im1 =
                detail::hom_piece(n, res.twists[static_cast<std::size_t>(i) - 1], d);
            ModuleMap down = detail::hom_piece_map(
                n, res.twists[static_cast<std::size_t>(i) - 1],
                res.twists[static_cast<std::size_t>(i)],
                res.diffs[static_cast<std::size_t>(i) - 1], d, h_im1, h_i);
            return homology(down, up);
        };
        Module h = compute();
        ExtEntry e{h, h.dim_k()};
        out.emplace(d, std::move(e));
    }
    return out;
}

/// Torsion test with a certificate: true iff the graded pieces vanish in
/// all sufficiently high degrees. Decided exactly by saturating the
/// relations at the irrelevant ideal; the onset degree is then found by
/// scanning pieces until they stay zero for max(twist spread, 2)
/// consecutive degrees past every generator twist.
struct TorsionCertificate {
    bool torsion = false;
    int onset = 0;       // certified: pieces vanish in all degrees >= onset
    int run_length = 0;  // consecutive zero pieces checked
};

inline TorsionCertificate is_torsion(const GradedModule& m) {
    RingP ring = m.ring();
    std::vector<Polynomial> pos;
    for (std::size_t v = 0; v < ring->nvars(); ++v)
        if (ring->weights[v] > 0) pos.push_back(ring->var_poly(v));
    if (pos.empty())
        throw std::invalid_argument("is_torsion: ring has no positive part");
    Ideal irrelevant = Ideal::ideal(ring, pos);

    Submodule rels(ring, m.mod().ambient_rank(), m.mod().den());
    Submodule sat = saturate(rels, irrelevant);
    TorsionCertificate cert;
    cert.torsion = true;
    for (const auto& g : m.mod().gens())
        if (!sat.contains(g)) cert.torsion = false;
    if (!cert.torsion) return cert;

    int lo = m.min_twist(), hi = m.max_twist();
    int run = std::max(hi - lo, 2);
    cert.run_length = run;
    int last_nonzero = lo - 1;
    int d = lo;
    for (;;) {
        if (!m.piece(d).is_zero()) last_nonzero = d;
        if (d >= hi && d - last_nonzero >= run) break;
        ++d;
        if (d > hi + run + ring->limits.max_sat_steps * 8)
            throw ResourceLimitError("torsion onset scan exceeded its cap");
    }
    cert.onset = last_nonzero + 1;
    return cert;
}

/// Per-degree size data on a window: vector-space dimensions over a field
/// base, minimal generator counts otherwise.
struct HilbertEntry {
    int degree;
    std::size_t value;
    bool is_dimension;
};

inline std::vector<HilbertEntry> hilbert_data(const GradedModule& m, DegreeWindow window) {
    RingP base = base_ring(m.ring());
    bool field_base = base->nvars() == 0;
    std::vector<HilbertEntry> out;
    for (int d = window.lo; d <= window.hi; ++d) {
        const Piece& p = m.piece(d);
        if (field_base) {
            auto dim = p.base_mod.dim_k();
            out.push_back({d, dim ? *dim : 0, true});
        } else {
            out.push_back({d, p.base_mod.min_gens(), false});
        }
    }
    return out;
}

} // namespace blowup

#endif
