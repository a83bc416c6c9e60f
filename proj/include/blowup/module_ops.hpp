#ifndef BLOWUP_MODULE_OPS_HPP
#define BLOWUP_MODULE_OPS_HPP

#include "blowup/groebner.hpp"
#include "blowup/maps.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace blowup {

/// The reduced Groebner basis of the defining ideal of the ring's
/// quotient, under the ring's own order. Computed once.
inline const GB& quotient_gb(const RingP& r) {
    std::lock_guard<std::mutex> lock(r->cache_mutex);
    if (!r->quot_gb) {
        std::vector<PolyVec> gens;
        for (const auto& p : r->quot)
            if (!p.is_zero()) gens.push_back(PolyVec({p}));
        GB gb = buchberger(r, 1, gens, ModuleOrder(r->order), {});
        r->quot_gb = std::make_shared<const GB>(std::move(gb));
    }
    return *r->quot_gb;
}

/// Quotient relations placed in every component of R^rank; these are the
/// implicit module relations of any module over a quotient ring.
inline std::vector<PolyVec> quotient_columns(const RingP& r, std::size_t rank) {
    std::vector<PolyVec> cols;
    for (const auto& g : quotient_gb(r).basis)
        for (std::size_t i = 0; i < rank; ++i) cols.push_back(PolyVec::unit(rank, i, g[0]));
    return cols;
}

/// A finitely generated submodule of (R/quot)^rank, handled through its
/// ambient representatives. Groebner data (plain and tracked) is cached
/// under a single-writer lock.
class Submodule {
public:
    Submodule(RingP ring, std::size_t rank, std::vector<PolyVec> gens)
        : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)),
          state_(std::make_shared<State>()) {
        for (auto& g : gens_)
            if (g.rank() != rank_) throw std::invalid_argument("generator rank mismatch");
    }

    static Submodule ideal(RingP ring, std::vector<Polynomial> gens) {
        std::vector<PolyVec> v;
        for (auto& p : gens) v.push_back(PolyVec({std::move(p)}));
        return Submodule(std::move(ring), 1, std::move(v));
    }
    static Submodule zero(RingP ring, std::size_t rank) { return Submodule(std::move(ring), rank, {}); }
    static Submodule full(RingP ring, std::size_t rank) {
        std::vector<PolyVec> v;
        for (std::size_t i = 0; i < rank; ++i)
            v.push_back(PolyVec::unit(rank, i, ring->one()));
        return Submodule(std::move(ring), rank, std::move(v));
    }

    const RingP& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    const std::vector<PolyVec>& gens() const { return gens_; }
    std::vector<Polynomial> ideal_gens() const {
        std::vector<Polynomial> out;
        for (const auto& g : gens_) out.push_back(g[0]);
        return out;
    }

    ModuleOrder mord() const { return ModuleOrder(ring_->order); }

    /// Reduced basis of gens + quotient columns under the ring order.
    const GB& gb() const {
        std::lock_guard<std::mutex> lock(state_->m);
        if (!state_->gb) {
            auto cols = combined();
            BuchbergerOptions o;
            o.quot_tail_from = gens_.size();
            state_->gb = std::make_shared<const GB>(
                buchberger(ring_, rank_, cols, mord(), o));
        }
        return *state_->gb;
    }
    /// Same basis with transforms onto [gens | quotient columns].
    const GB& tracked_gb() const {
        std::lock_guard<std::mutex> lock(state_->m);
        if (!state_->tracked) {
            auto cols = combined();
            BuchbergerOptions o;
            o.track = true;
            o.quot_tail_from = gens_.size();
            state_->tracked = std::make_shared<const GB>(
                buchberger(ring_, rank_, cols, mord(), o));
        }
        return *state_->tracked;
    }

    PolyVec nf(const PolyVec& v) const { return gb().normal_form(v); }
    Polynomial nf(const Polynomial& p) const {
        if (rank_ != 1) throw std::invalid_argument("polynomial normal form needs rank one");
        return gb().normal_form(PolyVec({p}))[0];
    }
    bool contains(const PolyVec& v) const { return nf(v).is_zero(); }
    bool contains(const Polynomial& p) const { return nf(p).is_zero(); }
    bool contains_all(const Submodule& other) const {
        for (const auto& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }
    bool equals(const Submodule& other) const {
        return contains_all(other) && other.contains_all(*this);
    }
    /// The whole of R^rank?
    bool is_full() const {
        for (std::size_t i = 0; i < rank_; ++i)
            if (!contains(PolyVec::unit(rank_, i, ring_->one()))) return false;
        return true;
    }
    bool is_zero_module() const {
        for (const auto& g : gens_)
            if (!nf(g).is_zero()) return false;
        return true;
    }
    bool is_unit_ideal() const { return rank_ == 1 && is_full(); }

    /// Expresses v over the user generators modulo the quotient columns:
    /// v = sum c_j gens_j (mod quot). Returns nullopt when v is not in the
    /// submodule.
    std::optional<std::vector<Polynomial>> lift(const PolyVec& v) const {
        const GB& t = tracked_gb();
        std::vector<Polynomial> q;
        PolyVec r = t.normal_form(v, &q);
        if (!r.is_zero()) return std::nullopt;
        const MonomialOrder& ord = ring_->order;
        std::vector<Polynomial> out(gens_.size());
        for (std::size_t k = 0; k < t.basis.size(); ++k) {
            if (q[k].is_zero()) continue;
            for (std::size_t j = 0; j < gens_.size(); ++j)
                if (!t.transform[k][j].is_zero())
                    out[j] = add(out[j], mul(q[k], t.transform[k][j], ord), ord);
        }
        return out;
    }

    /// Generators of the syzygy module of the user generators over the
    /// quotient ring (coefficients of the quotient columns are discarded).
    std::vector<PolyVec> syzygies() const {
        auto cols = combined();
        return syzygy_module(ring_, rank_, cols, mord(), gens_.size(), gens_.size());
    }

    Submodule with_extra(std::vector<PolyVec> extra) const {
        std::vector<PolyVec> g = gens_;
        for (auto& e : extra) g.push_back(std::move(e));
        return Submodule(ring_, rank_, std::move(g));
    }

private:
    std::vector<PolyVec> combined() const {
        std::vector<PolyVec> cols = gens_;
        for (auto& c : quotient_columns(ring_, rank_)) cols.push_back(std::move(c));
        return cols;
    }

    struct State {
        std::mutex m;
        std::shared_ptr<const GB> gb;
        std::shared_ptr<const GB> tracked;
    };

    RingP ring_;
    std::size_t rank_;
    std::vector<PolyVec> gens_;
    std::shared_ptr<State> state_;
};

using Ideal = Submodule; // rank-one case, by construction

// ---------------------------------------------------------------------------
// elimination
// ---------------------------------------------------------------------------

/// Generators of M ∩ { vectors avoiding the masked variables }: Groebner
/// basis under a block order dominated by the masked block, keeping the
/// elements free of them. Output vectors live in the original ring.
inline std::vector<PolyVec> eliminate_vectors(const Submodule& m,
                                              const std::vector<std::uint8_t>& mask) {
    bool any = false;
    for (auto b : mask) any = any || b;
    RingP elim_ring =
        any ? with_order(*m.ring(), MonomialOrder::block(mask, MonomialOrder::degrevlex()))
            : m.ring();
    std::vector<PolyVec> cols = m.gens();
    std::size_t qfrom = cols.size();
    for (auto& c : quotient_columns(elim_ring, m.rank())) cols.push_back(std::move(c));
    for (auto& c : cols)
        for (std::size_t i = 0; i < c.rank(); ++i) c[i].normalize(elim_ring->order);
    BuchbergerOptions eopt;
    eopt.quot_tail_from = qfrom;
    GB gb = buchberger(elim_ring, m.rank(), cols, ModuleOrder(elim_ring->order), eopt);
    std::vector<PolyVec> out;
    for (const auto& g : gb.basis) {
        bool free = true;
        for (std::size_t i = 0; i < g.rank() && free; ++i) free = g[i].avoids(mask);
        if (!free) continue;
        PolyVec v = g;
        for (std::size_t i = 0; i < v.rank(); ++i) v[i].normalize(m.ring()->order);
        out.push_back(std::move(v));
    }
    return out;
}

/// eliminate(I, vars): generators of I ∩ k[remaining variables], returned
/// over the original ring.
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::uint8_t>& vars) {
    auto vecs = eliminate_vectors(ideal, vars);
    std::vector<Polynomial> gens;
    for (auto& v : vecs) gens.push_back(std::move(v[0]));
    return Ideal::ideal(ideal.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------
// ideal arithmetic
// ---------------------------------------------------------------------------

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    auto gens = a.ideal_gens();
    for (auto& g : b.ideal_gens()) gens.push_back(std::move(g));
    return Ideal::ideal(a.ring(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
    const MonomialOrder& ord = a.ring()->order;
    std::vector<Polynomial> gens;
    for (const auto& f : a.ideal_gens())
        for (const auto& g : b.ideal_gens()) gens.push_back(mul(f, g, ord));
    return Ideal::ideal(a.ring(), std::move(gens));
}

/// I^n with generators the n-fold products, deduplicated by Groebner
/// reduction against the part already collected.
inline Ideal ideal_power(const Ideal& ideal, int n) {
    if (n < 0) throw std::invalid_argument("ideal_power: negative exponent");
    RingP r = ideal.ring();
    if (n == 0) return Ideal::ideal(r, {r->one()});
    const MonomialOrder& ord = r->order;
    std::vector<Polynomial> cur = ideal.ideal_gens();
    for (int k = 1; k < n; ++k) {
        std::vector<Polynomial> next;
        for (const auto& f : cur)
            for (const auto& g : ideal.ideal_gens()) next.push_back(mul(f, g, ord));
        cur = std::move(next);
    }
    // dedupe: drop generators already in the span of the kept ones
    std::vector<Polynomial> kept;
    for (auto& f : cur) {
        Ideal part = Ideal::ideal(r, kept);
        if (!part.contains(f)) kept.push_back(std::move(f));
    }
    return Ideal::ideal(r, std::move(kept));
}

// ---------------------------------------------------------------------------
// quotients, intersections, saturation
// ---------------------------------------------------------------------------

/// (M : f) = { v : f v in M }.
inline Submodule module_quotient_single(const Submodule& m, const Polynomial& f) {
    std::size_t rank = m.rank();
    std::vector<PolyVec> cols;
    for (std::size_t i = 0; i < rank; ++i) cols.push_back(PolyVec::unit(rank, i, f));
    std::size_t head = cols.size();
    for (const auto& g : m.gens()) cols.push_back(g);
    std::size_t qfrom = cols.size();
    for (auto& c : quotient_columns(m.ring(), rank)) cols.push_back(std::move(c));
    auto syz = syzygy_module(m.ring(), rank, cols, m.mord(), qfrom, head);
    std::vector<PolyVec> gens;
    for (const auto& s : syz) {
        PolyVec v(rank);
        bool nz = false;
        for (std::size_t i = 0; i < head; ++i) {
            v[i] = s[i];
            nz = nz || !v[i].is_zero();
        }
        if (nz) gens.push_back(std::move(v));
    }
    // (M : f) always contains M
    for (const auto& g : m.gens()) gens.push_back(g);
    return Submodule(m.ring(), rank, std::move(gens));
}

inline Submodule intersect(const Submodule& a, const Submodule& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("intersect: rank mismatch");
    std::size_t rank = a.rank();
    std::vector<PolyVec> cols = a.gens();
    std::size_t head = cols.size();
    for (const auto& g : b.gens()) cols.push_back(g);
    std::size_t qfrom = cols.size();
    for (auto& c : quotient_columns(a.ring(), rank)) cols.push_back(std::move(c));
    auto syz = syzygy_module(a.ring(), rank, cols, a.mord(), qfrom, head);
    const MonomialOrder& ord = a.ring()->order;
    std::vector<PolyVec> gens;
    for (const auto& s : syz) {
        PolyVec v(rank);
        for (std::size_t j = 0; j < head; ++j)
            if (!s[j].is_zero())
                for (std::size_t i = 0; i < rank; ++i)
                    v[i] = add(v[i], mul(s[j], a.gens()[j][i], ord), ord);
        if (!v.is_zero()) gens.push_back(std::move(v));
    }
    return Submodule(a.ring(), rank, std::move(gens));
}

/// (M : J) = intersection of (M : f) over the generators of J.
inline Submodule module_quotient(const Submodule& m, const Ideal& j) {
    if (j.gens().empty()) return Submodule::full(m.ring(), m.rank());
    bool first = true;
    Submodule acc = m;
    for (const auto& f : j.ideal_gens()) {
        Submodule q = module_quotient_single(m, f);
        acc = first ? q : intersect(acc, q);
        first = false;
    }
    return acc;
}

/// (M : J^infty) by iterating the quotient until it stabilizes. The
/// iteration cap guards against runaway inputs; hitting it raises a
/// resource error rather than returning a wrong answer.
inline Submodule saturate(const Submodule& m, const Ideal& j) {
    Submodule cur = m;
    for (int step = 0; step < m.ring()->limits.max_sat_steps; ++step) {
        Submodule next = module_quotient(cur, j);
        if (cur.contains_all(next)) return cur;
        cur = next;
    }
    throw ResourceLimitError("saturation did not stabilize within the iteration cap");
}

// ---------------------------------------------------------------------------
// ring map kernels
// ---------------------------------------------------------------------------

/// Kernel of the ring map source -> target determined by images of the
/// source variables (polynomials over target). Variables shared by name
/// must map identically and are not duplicated; the remaining target
/// variables are eliminated from the graph ideal.
inline Ideal ring_map_kernel(RingP source, RingP target,
                             const std::vector<Polynomial>& images) {
    if (images.size() != source->nvars())
        throw std::invalid_argument("ring_map_kernel: one image per source variable");

    // combined ambient: target variables then the source-only variables
    std::vector<std::string> names = target->vars;
    std::vector<std::size_t> src_pos(source->nvars());
    for (std::size_t i = 0; i < source->nvars(); ++i) {
        auto j = target->var_index(source->vars[i]);
        if (j) {
            src_pos[i] = *j;
        } else {
            src_pos[i] = names.size();
            names.push_back(source->vars[i]);
        }
    }
    std::vector<std::uint8_t> elim(names.size(), 0);
    std::vector<std::uint8_t> keep(names.size(), 0);
    for (std::size_t j = 0; j < names.size(); ++j) {
        bool in_source = false;
        for (std::size_t i = 0; i < source->nvars(); ++i)
            if (src_pos[i] == j) in_source = true;
        elim[j] = !in_source;
        keep[j] = in_source;
    }

    std::vector<int> w(names.size(), 0);
    RingP big = std::make_shared<Ring>(
        source->field, names, w,
        MonomialOrder::block(elim, MonomialOrder::degrevlex()), std::vector<Polynomial>{},
        source->limits);

    std::vector<Polynomial> gens;
    for (const auto& q : target->quot) gens.push_back(rename_into(q, *target, *big));
    for (std::size_t i = 0; i < source->nvars(); ++i) {
        Polynomial lhs = big->var_poly(src_pos[i]);
        Polynomial rhs = rename_into(images[i], *target, *big);
        gens.push_back(sub(lhs, rhs, big->order));
    }

    Ideal graph = Ideal::ideal(big, std::move(gens));
    Ideal elim_ideal = eliminate(graph, elim);

    std::vector<Polynomial> out;
    for (const auto& g : elim_ideal.ideal_gens()) {
        // transport to the source ring by name
        Polynomial p = g;
        std::vector<Term> terms;
        for (const auto& t : p.terms()) {
            Monomial m(source->nvars());
            for (std::size_t i = 0; i < source->nvars(); ++i) m[i] = t.mono[src_pos[i]];
            terms.push_back({std::move(m), t.coeff});
        }
        Polynomial q(std::move(terms));
        q.normalize(source->order);
        if (!q.is_zero()) out.push_back(std::move(q));
    }
    return Ideal::ideal(source, std::move(out));
}

} // namespace blowup

#endif
