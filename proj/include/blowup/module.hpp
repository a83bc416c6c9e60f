#ifndef BLOWUP_MODULE_HPP
#define BLOWUP_MODULE_HPP

#include "blowup/module_ops.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace blowup {

/// Finitely presented module over a (possibly quotient, possibly graded)
/// ring, kept as a subquotient of a twisted free module: the span of
/// `gens` inside R^amb (with ambient twists), modulo the denominator
/// submodule `den`. A module in standard form has gens = unit vectors,
/// so den is its presentation and the ambient twists are the generator
/// degrees.
class Module {
public:
    Module(RingP ring, std::vector<int> amb_twists, std::vector<PolyVec> gens,
           std::vector<PolyVec> den)
        : ring_(std::move(ring)), amb_twists_(std::move(amb_twists)), gens_(std::move(gens)),
          den_(std::move(den)), state_(std::make_shared<State>()) {
        for (const auto& g : gens_)
            if (g.rank() != amb_twists_.size())
                throw std::invalid_argument("module: generator rank mismatch");
        for (const auto& d : den_)
            if (d.rank() != amb_twists_.size())
                throw std::invalid_argument("module: relation rank mismatch");
    }

    /// Standard form: cokernel of the relation columns inside the twisted
    /// free module with the given generator degrees.
    static Module cokernel(RingP ring, std::vector<int> twists, std::vector<PolyVec> relations) {
        std::size_t rank = twists.size();
        std::vector<PolyVec> gens;
        for (std::size_t i = 0; i < rank; ++i)
            gens.push_back(PolyVec::unit(rank, i, ring->one()));
        return Module(std::move(ring), std::move(twists), std::move(gens),
                      std::move(relations));
    }
    static Module free(RingP ring, std::vector<int> twists) {
        return cokernel(std::move(ring), std::move(twists), {});
    }
    static Module zero(RingP ring) { return cokernel(std::move(ring), {}, {}); }

    const RingP& ring() const { return ring_; }
    std::size_t ambient_rank() const { return amb_twists_.size(); }
    const std::vector<int>& ambient_twists() const { return amb_twists_; }
    std::size_t ngens() const { return gens_.size(); }
    const std::vector<PolyVec>& gens() const { return gens_; }
    const std::vector<PolyVec>& den() const { return den_; }

    bool is_standard() const {
        if (ambient_rank() != gens_.size()) return false;
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i] != PolyVec::unit(ambient_rank(), i, ring_->one())) return false;
        return true;
    }

    /// Degree of generator j (grading weight of its realization plus
    /// ambient twists); requires homogeneity, which all graded-path
    /// constructions maintain. Zero generators report twist 0.
    int gen_twist(std::size_t j) const {
        if (gens_[j].is_zero()) return 0;
        auto w = gens_[j].homogeneous_weight(ring_->weights, amb_twists_);
        if (!w) throw std::invalid_argument("module: non-homogeneous generator in graded use");
        return static_cast<int>(*w);
    }
    std::vector<int> gen_twists() const {
        std::vector<int> out;
        for (std::size_t j = 0; j < gens_.size(); ++j) out.push_back(gen_twist(j));
        return out;
    }

    const Submodule& den_sub() const {
        std::lock_guard<std::mutex> lock(state_->m);
        if (!state_->den_sub)
            state_->den_sub = std::make_shared<Submodule>(ring_, ambient_rank(), den_);
        return *state_->den_sub;
    }
    const Submodule& span_sub() const {
        std::lock_guard<std::mutex> lock(state_->m);
        if (!state_->span_sub) {
            std::vector<PolyVec> cols = gens_;
            for (const auto& d : den_) cols.push_back(d);
            state_->span_sub = std::make_shared<Submodule>(ring_, ambient_rank(), std::move(cols));
        }
        return *state_->span_sub;
    }

    /// Presentation relations: { c in R^ngens : sum c_j gens_j in den }.
    const std::vector<PolyVec>& rels() const {
        std::lock_guard<std::mutex> lock(state_->m);
        if (!state_->rels) {
            if (is_standard()) {
                state_->rels = std::make_shared<std::vector<PolyVec>>(den_);
            } else {
                std::vector<PolyVec> cols = gens_;
                std::size_t head = cols.size();
                for (const auto& d : den_) cols.push_back(d);
                std::size_t qfrom = cols.size();
                for (auto& c : quotient_columns(ring_, ambient_rank()))
                    cols.push_back(std::move(c));
                auto syz = syzygy_module(ring_, ambient_rank(), cols,
                                         ModuleOrder(ring_->order), qfrom, head);
                state_->rels = std::make_shared<std::vector<PolyVec>>(std::move(syz));
            }
        }
        return *state_->rels;
    }
    const Submodule& rel_sub() const {
        const auto& r = rels();
        std::lock_guard<std::mutex> lock(state_->m);
        if (!state_->rel_sub)
            state_->rel_sub = std::make_shared<Submodule>(ring_, gens_.size(), r);
        return *state_->rel_sub;
    }

    /// Standard-form presentation of this module.
    Module standardized() const {
        if (is_standard()) return *this;
        return cokernel(ring_, gen_twists(), rels());
    }

    /// Expresses an ambient element over the generators (modulo den);
    /// nullopt when it is not in the span.
    std::optional<std::vector<Polynomial>> express(const PolyVec& v) const {
        auto lifted = span_sub().lift(v);
        if (!lifted) return std::nullopt;
        lifted->resize(gens_.size());
        return lifted;
    }
    bool element_in_span(const PolyVec& v) const { return span_sub().contains(v); }
    bool element_is_zero(const PolyVec& v) const { return den_sub().contains(v); }

    bool is_zero_module() const {
        for (const auto& g : gens_)
            if (!element_is_zero(g)) return false;
        return true;
    }

    PolyVec realize(const PolyVec& coords) const {
        PolyVec out(ambient_rank());
        const MonomialOrder& ord = ring_->order;
        for (std::size_t j = 0; j < gens_.size(); ++j)
            if (!coords[j].is_zero()) out = add(out, mul_poly(coords[j], gens_[j], ord), ord);
        return out;
    }

    /// Dimension over the coefficient field when finite (standard
    /// monomial count against the relation basis).
    std::optional<std::size_t> dim_k() const {
        if (gens_.empty()) return 0;
        const GB& gb = rel_sub().gb();
        std::size_t n = ring_->nvars();
        ModuleOrder mo(ring_->order);
        std::size_t count = 0;
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            if (gb.lead_reducible({j, Monomial(n)})) continue; // generator dead
            // bounding box: minimal pure-power leads per variable
            std::vector<std::int64_t> bound(n, -1);
            for (const auto& b : gb.basis) {
                ModuleTerm lt = b.lead(mo);
                if (lt.comp != j) continue;
                int nzvar = -1;
                bool pure = true;
                for (std::size_t i = 0; i < n; ++i)
                    if (lt.mono[i] != 0) {
                        if (nzvar >= 0) pure = false;
                        nzvar = static_cast<int>(i);
                    }
                if (!pure || nzvar < 0) continue;
                auto iv = static_cast<std::size_t>(nzvar);
                if (bound[iv] < 0 || lt.mono[iv] < bound[iv]) bound[iv] = lt.mono[iv];
            }
            for (std::size_t i = 0; i < n; ++i)
                if (bound[i] < 0) return std::nullopt; // infinite along variable i
            Monomial m(n);
            auto rec = [&](auto&& self, std::size_t i) -> void {
                if (i == n) {
                    if (!gb.lead_reducible({j, m})) ++count;
                    return;
                }
                for (std::int64_t e = 0; e < bound[i]; ++e) {
                    m[i] = static_cast<std::int32_t>(e);
                    self(self, i + 1);
                }
                m[i] = 0;
            };
            rec(rec, 0);
        }
        return count;
    }

    /// Number of minimal generators over the graded-local base:
    /// dim of M / (vars) M.
    std::size_t min_gens() const {
        std::vector<PolyVec> extra = rels();
        for (std::size_t i = 0; i < ring_->nvars(); ++i)
            for (std::size_t j = 0; j < gens_.size(); ++j)
                extra.push_back(PolyVec::unit(gens_.size(), j, ring_->var_poly(i)));
        Submodule s(ring_, gens_.size(), std::move(extra));
        std::size_t alive = 0;
        for (std::size_t j = 0; j < gens_.size(); ++j)
            if (!s.contains(PolyVec::unit(gens_.size(), j, ring_->one()))) ++alive;
        return alive;
    }

private:
    struct State {
        std::mutex m;
        std::shared_ptr<Submodule> den_sub;
        std::shared_ptr<Submodule> span_sub;
        std::shared_ptr<std::vector<PolyVec>> rels;
        std::shared_ptr<Submodule> rel_sub;
    };

    RingP ring_;
    std::vector<int> amb_twists_;
    std::vector<PolyVec> gens_;
    std::vector<PolyVec> den_;
    std::shared_ptr<State> state_;
};

/// Map of finitely presented modules, stored as coordinates over the
/// target's generators: cols[j] = image of source generator j.
class ModuleMap {
public:
    ModuleMap(Module src, Module dst, std::vector<PolyVec> cols)
        : src_(std::move(src)), dst_(std::move(dst)), cols_(std::move(cols)) {
        if (cols_.size() != src_.ngens())
            throw std::invalid_argument("module map: one column per source generator");
        for (const auto& c : cols_)
            if (c.rank() != dst_.ngens())
                throw std::invalid_argument("module map: column rank mismatch");
    }

    static ModuleMap zero(Module src, Module dst) {
        std::vector<PolyVec> cols(src.ngens(), PolyVec(dst.ngens()));
        return ModuleMap(std::move(src), std::move(dst), std::move(cols));
    }
    static ModuleMap identity(const Module& m) {
        std::vector<PolyVec> cols;
        for (std::size_t j = 0; j < m.ngens(); ++j)
            cols.push_back(PolyVec::unit(m.ngens(), j, m.ring()->one()));
        return ModuleMap(m, m, std::move(cols));
    }
    /// From ambient images of the source generators.
    static ModuleMap from_images(Module src, Module dst, const std::vector<PolyVec>& images) {
        std::vector<PolyVec> cols;
        for (const auto& v : images) {
            auto e = dst.express(v);
            if (!e) throw std::invalid_argument("module map image misses the target span");
            cols.push_back(PolyVec(std::move(*e)));
        }
        return ModuleMap(std::move(src), std::move(dst), std::move(cols));
    }

    const Module& src() const { return src_; }
    const Module& dst() const { return dst_; }
    const std::vector<PolyVec>& cols() const { return cols_; }

    PolyVec apply_coords(const PolyVec& coords) const {
        const MonomialOrder& ord = src_.ring()->order;
        PolyVec out(dst_.ngens());
        for (std::size_t j = 0; j < cols_.size(); ++j)
            if (!coords[j].is_zero()) out = add(out, mul_poly(coords[j], cols_[j], ord), ord);
        return out;
    }
    PolyVec realized_col(std::size_t j) const { return dst_.realize(cols_[j]); }

    bool is_well_defined() const {
        for (const auto& r : src_.rels())
            if (!dst_.element_is_zero(dst_.realize(apply_coords(r)))) return false;
        return true;
    }
    bool is_zero_map() const {
        for (std::size_t j = 0; j < cols_.size(); ++j)
            if (!dst_.element_is_zero(realized_col(j))) return false;
        return true;
    }
    bool is_surjective() const {
        std::vector<PolyVec> cols;
        for (std::size_t j = 0; j < cols_.size(); ++j) cols.push_back(realized_col(j));
        for (const auto& d : dst_.den()) cols.push_back(d);
        Submodule s(dst_.ring(), dst_.ambient_rank(), std::move(cols));
        for (const auto& g : dst_.gens())
            if (!s.contains(g)) return false;
        return true;
    }

    /// Kernel, realized as a subquotient of the source's ambient module.
    Module kernel() const {
        std::vector<PolyVec> cols;
        std::size_t head = cols_.size();
        for (std::size_t j = 0; j < cols_.size(); ++j) cols.push_back(realized_col(j));
        for (const auto& d : dst_.den()) cols.push_back(d);
        std::size_t qfrom = cols.size();
        for (auto& c : quotient_columns(dst_.ring(), dst_.ambient_rank()))
            cols.push_back(std::move(c));
        auto syz = syzygy_module(dst_.ring(), dst_.ambient_rank(), cols,
                                 ModuleOrder(dst_.ring()->order), qfrom, head);
        std::vector<PolyVec> kgens;
        for (const auto& s : syz) kgens.push_back(src_.realize(s));
        return Module(src_.ring(), src_.ambient_twists(), std::move(kgens), src_.den());
    }

    bool is_injective() const { return kernel().is_zero_module(); }
    bool is_iso() const { return is_well_defined() && is_surjective() && is_injective(); }

    Module image() const {
        std::vector<PolyVec> gens;
        for (std::size_t j = 0; j < cols_.size(); ++j) gens.push_back(realized_col(j));
        return Module(dst_.ring(), dst_.ambient_twists(), std::move(gens), dst_.den());
    }
    Module cokernel() const {
        std::vector<PolyVec> den = dst_.den();
        for (std::size_t j = 0; j < cols_.size(); ++j) den.push_back(realized_col(j));
        return Module(dst_.ring(), dst_.ambient_twists(), dst_.gens(), std::move(den));
    }

    friend ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
        std::vector<PolyVec> cols;
        for (std::size_t j = 0; j < f.cols_.size(); ++j)
            cols.push_back(g.apply_coords(f.cols_[j]));
        return ModuleMap(f.src_, g.dst_, std::move(cols));
    }

    friend ModuleMap operator+(const ModuleMap& a, const ModuleMap& b) {
        const MonomialOrder& ord = a.src_.ring()->order;
        std::vector<PolyVec> cols;
        for (std::size_t j = 0; j < a.cols_.size(); ++j)
            cols.push_back(add(a.cols_[j], b.cols_[j], ord));
        return ModuleMap(a.src_, a.dst_, std::move(cols));
    }
    ModuleMap negated() const {
        std::vector<PolyVec> cols;
        for (const auto& c : cols_) cols.push_back(c.negated());
        return ModuleMap(src_, dst_, std::move(cols));
    }
    ModuleMap scaled(const Polynomial& p) const {
        const MonomialOrder& ord = src_.ring()->order;
        std::vector<PolyVec> cols;
        for (const auto& c : cols_) cols.push_back(mul_poly(p, c, ord));
        return ModuleMap(src_, dst_, std::move(cols));
    }

    friend bool maps_equal(const ModuleMap& a, const ModuleMap& b) {
        for (std::size_t j = 0; j < a.cols_.size(); ++j) {
            PolyVec d = sub(a.realized_col(j), b.realized_col(j), a.src_.ring()->order);
            if (!a.dst_.element_is_zero(d)) return false;
        }
        return true;
    }

private:
    Module src_;
    Module dst_;
    std::vector<PolyVec> cols_;
};

/// ker(g) / im(f) for a composable pair with g o f = 0, as a subquotient
/// of the middle module's ambient free module.
inline Module homology(const ModuleMap& f, const ModuleMap& g) {
    Module k = g.kernel();
    std::vector<PolyVec> den = k.den();
    for (std::size_t j = 0; j < f.cols().size(); ++j) den.push_back(f.realized_col(j));
    return Module(k.ring(), k.ambient_twists(), k.gens(), std::move(den));
}

/// Map on homology induced by a middle-level map carrying kernels into
/// kernels and images into images.
inline ModuleMap induced_on_homology(const Module& h_src, const Module& h_dst,
                                     const ModuleMap& mid) {
    std::vector<PolyVec> images;
    for (const auto& g : h_src.gens()) {
        auto coords = mid.src().express(g);
        if (!coords)
            throw std::logic_error("induced_on_homology: class not expressible in the middle");
        PolyVec img = mid.apply_coords(PolyVec(std::move(*coords)));
        images.push_back(mid.dst().realize(img));
    }
    return ModuleMap::from_images(h_src, h_dst, images);
}

/// Direct sum with remembered generator offsets per block.
struct DirectSum {
    Module total;
    std::vector<std::size_t> gen_offsets;
    std::vector<std::size_t> amb_offsets;

    static DirectSum of(const std::vector<Module>& blocks, RingP ring) {
        std::vector<int> amb_twists;
        std::vector<std::size_t> aoffs, goffs;
        std::size_t ng = 0;
        for (const auto& b : blocks) {
            aoffs.push_back(amb_twists.size());
            goffs.push_back(ng);
            for (int t : b.ambient_twists()) amb_twists.push_back(t);
            ng += b.ngens();
        }
        std::size_t amb = amb_twists.size();
        auto widen = [&](const PolyVec& v, std::size_t at) {
            PolyVec out(amb);
            for (std::size_t i = 0; i < v.rank(); ++i) out[at + i] = v[i];
            return out;
        };
        std::vector<PolyVec> gens, den;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            for (const auto& g : blocks[b].gens()) gens.push_back(widen(g, aoffs[b]));
            for (const auto& d : blocks[b].den()) den.push_back(widen(d, aoffs[b]));
        }
        return DirectSum{Module(std::move(ring), std::move(amb_twists), std::move(gens),
                                std::move(den)),
                         std::move(goffs), std::move(aoffs)};
    }
};

} // namespace blowup

#endif
