#ifndef BLOWUP_GRADED_HPP
#define BLOWUP_GRADED_HPP

#include "blowup/module.hpp"

#include <map>
#include <memory>
#include <vector>

namespace blowup {

/// Constructs a graded ring for this library's scope: base variables of
/// weight 0, Rees variables of weight 1, optionally one inverse variable
/// of weight -1. The canonical block order (nonbase over base) is forced;
/// the graded piece machinery depends on it.
inline RingP make_graded_ring(Field f, std::vector<std::string> names, std::vector<int> w,
                              std::vector<Polynomial> relations, Limits lim = {}) {
    int ucount = 0;
    for (int x : w) {
        if (x != 0 && x != 1 && x != -1)
            throw std::invalid_argument("graded ring: weights must be 0, 1 or -1");
        if (x == -1) ++ucount;
    }
    if (ucount > 1)
        throw std::invalid_argument("graded ring: at most one weight -1 variable");
    RingP r = make_ring(f, std::move(names), std::move(w), std::move(relations), lim);
    for (const auto& q : r->quot)
        if (!q.is_homogeneous(r->weights))
            throw std::invalid_argument("graded ring: defining ideal not homogeneous");
    return r;
}

/// Base subring: the weight-0 variables with the base-supported part of
/// the reduced relation basis (an elimination ideal, by the block order).
inline RingP base_ring(const RingP& graded) {
    {
        std::lock_guard<std::mutex> lock(graded->cache_mutex);
        if (graded->base_cache) return graded->base_cache;
    }
    auto base_mask = graded->base_mask();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < graded->nvars(); ++i)
        if (base_mask[i]) names.push_back(graded->vars[i]);
    std::vector<Polynomial> rels;
    RingP out = make_poly_ring(graded->field, names, graded->limits);
    for (const auto& g : quotient_gb(graded).basis) {
        if (!g[0].avoids(graded->nonbase_mask())) continue;
        rels.push_back(restrict_to(g[0], *graded, *out, base_mask));
    }
    if (!rels.empty())
        out = make_ring(graded->field, names, std::vector<int>(names.size(), 0), rels,
                        graded->limits);
    std::lock_guard<std::mutex> lock(graded->cache_mutex);
    if (!graded->base_cache) graded->base_cache = out;
    return graded->base_cache;
}

/// A graded piece M_d presented as a module over the base ring, with the
/// generator labels (pure monomial, ambient component) and the machinery
/// to express ambient elements in it.
struct Piece {
    struct Label {
        Monomial mono;     // pure monomial in the nonzero-weight variables
        std::size_t comp;  // ambient generator index
    };

    int degree;
    std::vector<Label> labels;
    std::vector<PolyVec> columns; // label realizations in the graded ambient module
    Module base_mod;              // presentation over base_ring (standard form)
    std::shared_ptr<const Submodule> span; // [columns | den], tracked lifts
    RingP graded_ring;

    Piece(int d, std::vector<Label> lb, std::vector<PolyVec> cols, Module base,
          std::shared_ptr<const Submodule> sp, RingP gr)
        : degree(d), labels(std::move(lb)), columns(std::move(cols)),
          base_mod(std::move(base)), span(std::move(sp)), graded_ring(std::move(gr)) {}

    bool is_zero() const { return base_mod.is_zero_module() || labels.empty(); }
    std::size_t ngens() const { return labels.size(); }

    /// Expresses a homogeneous ambient element of weight `degree` as base
    /// ring coordinates over the piece generators. The element must lie
    /// in the module.
    std::optional<PolyVec> express(const PolyVec& v) const {
        auto lifted = span->lift(v);
        if (!lifted) return std::nullopt;
        RingP base = base_mod.ring();
        PolyVec out(labels.size());
        for (std::size_t j = 0; j < labels.size(); ++j) {
            // weight-0 coefficients normalize into the base subring
            Polynomial c = quotient_gb(graded_ring).normal_form(PolyVec({(*lifted)[j]}))[0];
            out[j] = restrict_to(c, *graded_ring, *base, graded_ring->base_mask());
        }
        return out;
    }
};

/// Pure monomials available in a graded ring at a given weight: the
/// degree-w monomials in the weight-1 variables for w >= 0, the single
/// power u^{-w} for w < 0 when u exists. Mixed monomials are redundant:
/// the ring relations rewrite them into these with base coefficients.
inline std::vector<Monomial> pure_monomials(const Ring& r, std::int64_t w) {
    std::vector<Monomial> out;
    if (w == 0) {
        out.emplace_back(r.nvars());
        return out;
    }
    if (w > 0) {
        std::vector<std::uint8_t> pos(r.nvars(), 0);
        for (std::size_t i = 0; i < r.nvars(); ++i) pos[i] = r.weights[i] > 0;
        monomials_of_degree(r.nvars(), pos, w, out);
        return out;
    }
    auto u = r.u_index();
    if (u) out.push_back(Monomial::var(r.nvars(), *u, static_cast<std::int32_t>(-w)));
    return out;
}

/// The graded piece M_d of a module over a graded ring (standard or
/// subquotient), as a finitely presented base-ring module. The label
/// columns realize the piece generators in the module's own ambient free
/// module, so pieces of submodules map naturally into pieces of their
/// parents.
inline Piece compute_graded_piece(const Module& m, int d) {
    RingP gr = m.ring();
    RingP base = base_ring(gr);
    std::vector<Piece::Label> labels;
    std::vector<int> gtw;
    for (std::size_t j = 0; j < m.ngens(); ++j) gtw.push_back(m.gen_twist(j));
    for (std::size_t j = 0; j < m.ngens(); ++j) {
        if (m.gens()[j].is_zero()) continue;
        for (auto& mono : pure_monomials(*gr, d - gtw[j])) labels.push_back({mono, j});
    }

    std::vector<PolyVec> columns;
    for (const auto& lb : labels)
        columns.push_back(
            m.gens()[lb.comp].times_term(lb.mono, Scalar::one(gr->field)));

    std::vector<PolyVec> allcols = columns;
    for (const auto& dn : m.den()) allcols.push_back(dn);
    auto span = std::make_shared<const Submodule>(gr, m.ambient_rank(), std::move(allcols));

    // relations: kernel of P^{labels} -> M, eliminated down to the base
    std::size_t head = columns.size();
    std::vector<PolyVec> base_rels;
    if (head > 0) {
        std::vector<PolyVec> cols = columns;
        for (const auto& dn : m.den()) cols.push_back(dn);
        std::size_t qfrom = cols.size();
        for (auto& c : quotient_columns(gr, m.ambient_rank())) cols.push_back(std::move(c));
        std::vector<PolyVec> kernel_gens =
            syzygy_module(gr, m.ambient_rank(), cols, ModuleOrder(gr->order), qfrom, head);
        if (!kernel_gens.empty()) {
            Submodule t(gr, head, std::move(kernel_gens));
            for (auto& v : eliminate_vectors(t, gr->nonbase_mask())) {
                PolyVec w(head);
                for (std::size_t j = 0; j < head; ++j)
                    w[j] = restrict_to(v[j], *gr, *base, gr->base_mask());
                base_rels.push_back(std::move(w));
            }
        }
    }
    Module base_mod = Module::cokernel(base, std::vector<int>(head, 0), std::move(base_rels));
    return Piece(d, std::move(labels), std::move(columns), std::move(base_mod),
                 std::move(span), gr);
}

/// A module over a graded ring together with a cache of its computed
/// graded pieces.
class GradedModule {
public:
    explicit GradedModule(Module m) : m_(std::move(m)), cache_(std::make_shared<Cache>()) {}

    const Module& mod() const { return m_; }
    const RingP& ring() const { return m_.ring(); }
    std::vector<int> twists() const { return m_.gen_twists(); }

    const Piece& piece(int d) const {
        std::lock_guard<std::mutex> lock(cache_->m);
        auto it = cache_->pieces.find(d);
        if (it == cache_->pieces.end())
            it = cache_->pieces.emplace(d, std::make_shared<const Piece>(
                                               compute_graded_piece(m_, d))).first;
        return *it->second;
    }

    int min_twist() const {
        int t = 0;
        bool first = true;
        for (int x : twists()) {
            t = first ? x : std::min(t, x);
            first = false;
        }
        return t;
    }
    int max_twist() const {
        int t = 0;
        bool first = true;
        for (int x : twists()) {
            t = first ? x : std::max(t, x);
            first = false;
        }
        return t;
    }

private:
    struct Cache {
        std::mutex m;
        std::map<int, std::shared_ptr<const Piece>> pieces;
    };
    Module m_;
    std::shared_ptr<Cache> cache_;
};

/// Natural map between pieces of modules sharing one ambient free module
/// (a submodule inclusion, a quotient projection): realize and re-express.
inline ModuleMap piece_transport_map(const Piece& from, const Piece& to) {
    std::vector<PolyVec> cols;
    for (std::size_t g = 0; g < from.ngens(); ++g) {
        auto e = to.express(from.columns[g]);
        if (!e) throw std::logic_error("piece transport failed to lift");
        cols.push_back(std::move(*e));
    }
    return ModuleMap(from.base_mod, to.base_mod, std::move(cols));
}

/// Multiplication by a homogeneous element f of weight w, as a base-ring
/// map M_d -> M_{d+w} on the computed pieces.
inline ModuleMap piece_multiplication(const GradedModule& m, int d, const Polynomial& f) {
    auto w = f.is_zero() ? std::optional<std::int64_t>(0)
                         : f.homogeneous_weight(m.ring()->weights);
    if (!w) throw std::invalid_argument("piece multiplication needs a homogeneous factor");
    const Piece& src = m.piece(d);
    const Piece& dst = m.piece(d + static_cast<int>(*w));
    const MonomialOrder& ord = m.ring()->order;
    std::vector<PolyVec> cols;
    for (std::size_t g = 0; g < src.ngens(); ++g) {
        PolyVec v = mul_poly(f, src.columns[g], ord);
        auto e = dst.express(v);
        if (!e)
            throw std::logic_error("piece multiplication image failed to lift");
        cols.push_back(std::move(*e));
    }
    return ModuleMap(src.base_mod, dst.base_mod, std::move(cols));
}

/// u-action M_{d+1} -> M_d (multiplication by the weight -1 variable).
inline ModuleMap piece_u_map(const GradedModule& m, int d) {
    auto u = m.ring()->u_index();
    if (!u) throw std::invalid_argument("piece_u_map: ring has no inverse variable");
    return piece_multiplication(m, d + 1, m.ring()->var_poly(*u));
}

/// twist(M, k): same relations, generator degrees shifted so that
/// twist(M,k)_d = M_{d+k}.
inline Module twist(const Module& m, int k) {
    Module s = m.standardized();
    std::vector<int> t = s.ambient_twists();
    for (auto& x : t) x -= k;
    return Module::cokernel(s.ring(), std::move(t), s.den());
}

/// Submodule of M generated by homogeneous ambient elements, presented
/// finitely (with the generator degrees read off from homogeneity).
inline Module span_submodule(const Module& m, std::vector<PolyVec> elements) {
    Module sq(m.ring(), m.ambient_twists(), std::move(elements), m.den());
    return sq.standardized();
}

/// Subquotient form of truncate: the submodule generated by all graded
/// pieces in degrees >= d, inside the same ambient free module (so pieces
/// map naturally into the parent's pieces).
inline Module truncate_sub(const Module& m0, int d) {
    Module m = m0.standardized();
    RingP gr = m.ring();
    std::vector<PolyVec> gens;
    const auto& twists = m.ambient_twists();
    for (std::size_t j = 0; j < m.ngens(); ++j) {
        if (twists[j] >= d) {
            gens.push_back(PolyVec::unit(m.ambient_rank(), j, gr->one()));
            continue;
        }
        std::vector<std::uint8_t> pos(gr->nvars(), 0);
        for (std::size_t i = 0; i < gr->nvars(); ++i) pos[i] = gr->weights[i] > 0;
        std::vector<Monomial> monos;
        monomials_of_degree(gr->nvars(), pos, d - twists[j], monos);
        for (auto& mono : monos)
            gens.push_back(PolyVec::unit(m.ambient_rank(), j,
                                         Polynomial::monomial(mono, Scalar::one(gr->field))));
    }
    return Module(gr, m.ambient_twists(), std::move(gens), m.den());
}

/// truncate(M, d), presented finitely.
inline Module truncate(const Module& m0, int d) { return truncate_sub(m0, d).standardized(); }

} // namespace blowup

#endif
