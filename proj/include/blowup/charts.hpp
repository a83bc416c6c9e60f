#ifndef BLOWUP_CHARTS_HPP
#define BLOWUP_CHARTS_HPP

#include "blowup/rees.hpp"

#include <string>
#include <vector>

namespace blowup {

/// Affine chart of Proj of the Rees algebra: the degree-zero part of the
/// localization at y_i, presented as R[z_0..^i..z_r] modulo the
/// dehomogenized Rees ideal (y_i = 1, y_j = z_j).
struct Chart {
    std::size_t index = 0;
    RingP ring; // C_i
    std::vector<std::string> zvars; // chart coordinates, one per j != i
    bool empty = false; // unit chart ideal
};

struct ChartAtlas {
    ReesPresentation rees;
    std::vector<Chart> charts;
};

inline ChartAtlas blowup_charts(const ReesPresentation& p) {
    ChartAtlas atlas{p, {}};
    const RingP& s = p.ring;
    std::size_t r1 = p.rees_vars.size();

    for (std::size_t i = 0; i < r1; ++i) {
        std::vector<std::string> znames =
            fresh_names(p.base->vars, "z", r1 > 1 ? r1 - 1 : 1);
        if (r1 == 1) znames.clear();
        std::vector<std::string> names = p.base->vars;
        for (const auto& z : znames) names.push_back(z);
        RingP ambient = make_poly_ring(s->field, names, s->limits);

        // substitution images for the rees ambient: x -> x, y_i -> 1,
        // y_j -> z_(position of j among != i)
        std::vector<Polynomial> images;
        for (std::size_t v = 0; v < p.base->nvars(); ++v)
            images.push_back(ambient->var_poly(v));
        std::size_t zat = 0;
        for (std::size_t j = 0; j < r1; ++j) {
            if (j == i) {
                images.push_back(ambient->one());
            } else {
                images.push_back(ambient->var_poly(p.base->nvars() + zat));
                ++zat;
            }
        }

        std::vector<Polynomial> chart_ideal;
        for (const auto& q : p.base->quot)
            chart_ideal.push_back(rename_into(q, *p.base, *ambient));
        for (const auto& g : s->quot) {
            Polynomial h = substitute(g, *s, *ambient, images);
            if (!h.is_zero()) chart_ideal.push_back(h);
        }

        Chart c;
        c.index = i;
        c.zvars = znames;
        c.ring = make_ring(s->field, names, std::vector<int>(names.size(), 0), chart_ideal,
                           s->limits);
        c.empty = Submodule::ideal(c.ring, c.ring->quot).is_unit_ideal();
        atlas.charts.push_back(std::move(c));
    }
    return atlas;
}

/// Degree-zero part of the localization of a graded module at y_i: the
/// presentation dehomogenized onto the chart (twists trivialize).
inline Module sheaf_restrict(const Module& m0, const ChartAtlas& atlas, std::size_t i) {
    Module m = m0.standardized();
    const Chart& c = atlas.charts[i];
    const RingP& s = atlas.rees.ring;

    std::vector<Polynomial> images;
    for (std::size_t v = 0; v < atlas.rees.base->nvars(); ++v)
        images.push_back(c.ring->var_poly(v));
    std::size_t zat = 0;
    for (std::size_t j = 0; j < atlas.rees.rees_vars.size(); ++j) {
        if (j == i) {
            images.push_back(c.ring->one());
        } else {
            images.push_back(c.ring->var_poly(atlas.rees.base->nvars() + zat));
            ++zat;
        }
    }

    std::vector<PolyVec> rels;
    for (const auto& d : m.den()) {
        PolyVec v(m.ambient_rank());
        bool nz = false;
        for (std::size_t k = 0; k < m.ambient_rank(); ++k) {
            v[k] = substitute(d[k], *s, *c.ring, images);
            nz = nz || !v[k].is_zero();
        }
        if (nz) rels.push_back(std::move(v));
    }
    return Module::cokernel(c.ring, std::vector<int>(m.ambient_rank(), 0), std::move(rels));
}

/// Zero as a sheaf on Proj: every chart restriction vanishes.
inline bool sheaf_is_zero(const Module& m, const ChartAtlas& atlas) {
    for (std::size_t i = 0; i < atlas.charts.size(); ++i)
        if (!sheaf_restrict(m, atlas, i).is_zero_module()) return false;
    return true;
}

/// Overlap consistency of a pair of charts: the transition z^(i)_k ->
/// z^(j)_k / z^(j)_i carries the relations of chart i into the localized
/// chart j (checked by membership after clearing the denominator).
inline bool chart_transition_check(const ChartAtlas& atlas, std::size_t i, std::size_t j) {
    if (i == j) return true;
    const Chart& ci = atlas.charts[i];
    const Chart& cj = atlas.charts[j];
    if (ci.empty || cj.empty) return true;

    // chart j with the cross coordinate inverted: add w with w * z^(j)_i = 1
    std::string wname = fresh_name(cj.ring->vars, "w");
    std::vector<std::string> names = cj.ring->vars;
    names.push_back(wname);
    RingP loc0 = make_poly_ring(cj.ring->field, names, cj.ring->limits);
    std::vector<Polynomial> quot;
    for (const auto& q : cj.ring->quot) quot.push_back(rename_into(q, *cj.ring, *loc0));
    // position of z^(j)_i among chart-j coordinates
    std::size_t pos = i < j ? i : i - 1;
    Polynomial zji = loc0->var_poly(atlas.rees.base->nvars() + pos);
    Polynomial w = loc0->var_poly(names.size() - 1);
    quot.push_back(sub(mul(w, zji, loc0->order), loc0->one(), loc0->order));
    RingP loc = make_ring(cj.ring->field, names, std::vector<int>(names.size(), 0), quot,
                          cj.ring->limits);

    // transition images for chart-i generators: x -> x, z^(i)_k -> z^(j)_k * w
    std::vector<Polynomial> images;
    for (std::size_t v = 0; v < atlas.rees.base->nvars(); ++v)
        images.push_back(loc->var_poly(v));
    for (std::size_t k = 0; k < atlas.rees.rees_vars.size(); ++k) {
        if (k == i) continue;
        Polynomial zk;
        if (k == j) {
            zk = loc->one();
        } else {
            std::size_t p2 = k < j ? k : k - 1;
            zk = loc->var_poly(atlas.rees.base->nvars() + p2);
        }
        images.push_back(mul(zk, w, loc->order));
    }

    Submodule zero = Submodule::zero(loc, 1);
    for (const auto& q : ci.ring->quot) {
        Polynomial h = substitute(q, *ci.ring, *loc, images);
        if (!zero.contains(h)) return false;
    }
    return true;
}

} // namespace blowup

#endif
