#ifndef BLOWUP_GROEBNER_HPP
#define BLOWUP_GROEBNER_HPP

#include "blowup/ring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace blowup {

/// A Groebner basis of a submodule of R^rank over the ambient polynomial
/// ring (quotient relations are the caller's responsibility). Monic,
/// optionally inter-reduced to the unique reduced basis, optionally
/// carrying the transformation onto the input generators.
class GB {
public:
    RingP ring;
    ModuleOrder mord;
    std::size_t rank = 0;
    std::vector<PolyVec> basis;
    // basis[i] = sum_j transform[i][j] * input[j], when tracked
    std::vector<std::vector<Polynomial>> transform;
    bool tracked = false;

    GB(RingP r, ModuleOrder mo, std::size_t rk)
        : ring(std::move(r)), mord(std::move(mo)), rank(rk) {}

    /// Full normal form of v against the basis. If quotients != nullptr
    /// it receives coefficients over the basis with v = sum q_i basis_i + r.
    PolyVec normal_form(PolyVec v, std::vector<Polynomial>* quotients = nullptr) const {
        const MonomialOrder& ord = mord.mono();
        if (quotients) quotients->assign(basis.size(), Polynomial());
        PolyVec result(rank == 0 ? v.rank() : rank);
        while (!v.is_zero()) {
            ModuleTerm lt = v.lead(mord);
            Scalar lc = v.coeff_of_lead(lt);
            bool reduced = false;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const PolyVec& g = basis[k];
                ModuleTerm glt = g.lead(mord);
                if (glt.comp != lt.comp || !glt.mono.divides(lt.mono)) continue;
                Monomial q = glt.mono.divide_into(lt.mono);
                Scalar c = lc / g.coeff_of_lead(glt);
                v = sub(v, g.times_term(q, c), ord);
                check_terms(v.term_count(), ring->limits);
                if (quotients)
                    (*quotients)[k] = add((*quotients)[k], Polynomial::monomial(q, c), ord);
                reduced = true;
                break;
            }
            if (!reduced) {
                // move the irreducible lead term to the result
                Polynomial& comp = v[lt.comp];
                Polynomial term = Polynomial::monomial(lt.mono, lc);
                result[lt.comp] = add(result[lt.comp], term, ord);
                comp = sub(comp, term, ord);
            }
        }
        return result;
    }

    bool contains(const PolyVec& v) const { return normal_form(v).is_zero(); }

    /// Monomial is in the lead-term module?
    bool lead_reducible(const ModuleTerm& t) const {
        for (const auto& g : basis) {
            ModuleTerm glt = g.lead(mord);
            if (glt.comp == t.comp && glt.mono.divides(t.mono)) return true;
        }
        return false;
    }
};

struct BuchbergerOptions {
    bool track = false;      // maintain transforms onto inputs
    bool full_pairs = false; // process every pair (needed for syzygy extraction)
    bool reduce = true;      // inter-reduce to the unique reduced basis
    std::vector<PolyVec>* zero_syzygies = nullptr; // receives input-space syzygies
    // inputs from this index on are quotient-ideal multiples forming a
    // complete basis per component; their mutual S-pairs reduce to zero
    // inside that block and are skipped, and the corresponding syzygies
    // (which die under projection to the user block) are not emitted
    std::size_t quot_tail_from = static_cast<std::size_t>(-1);
};

namespace detail {

struct WorkItem {
    PolyVec v;
    std::vector<Polynomial> repr; // over inputs, if tracked
    std::int64_t sugar = 0;
    bool quot_origin = false;
};

inline void scale_item(WorkItem& it, const Scalar& c, bool track) {
    it.v = it.v.times_scalar(c);
    if (track)
        for (auto& p : it.repr) p = p.times_scalar(c);
}

/// Joint content removal on value and representation, keeping the
/// invariant v = repr * inputs.
inline void make_primitive(WorkItem& it, bool track) {
    if (!track) {
        it.v = it.v.primitive_part();
        return;
    }
    // find joint scaling from v only; apply to both
    PolyVec prim = it.v.primitive_part();
    if (prim.is_zero() || it.v.is_zero()) {
        it.v = prim;
        return;
    }
    // deduce the applied factor from the first nonzero coefficient ratio
    for (std::size_t i = 0; i < prim.rank(); ++i) {
        if (prim[i].is_zero()) continue;
        Scalar factor = prim[i].lead_coeff() / it.v[i].lead_coeff();
        it.v = prim;
        for (auto& p : it.repr) p = p.times_scalar(factor);
        return;
    }
}

} // namespace detail

/// Buchberger's algorithm on submodules of R^rank: classical product
/// criterion (rank one, not in full-pair mode), conservative chain
/// criterion, sugar selection. Deterministic throughout.
inline GB buchberger(RingP ring, std::size_t rank, const std::vector<PolyVec>& inputs,
                     ModuleOrder mord, const BuchbergerOptions& opts = {}) {
    const MonomialOrder& ord = mord.mono();
    const bool track = opts.track || opts.zero_syzygies != nullptr;
    GB out(ring, mord, rank);
    out.tracked = track;

    std::vector<detail::WorkItem> items;
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        if (inputs[j].is_zero()) continue;
        detail::WorkItem it;
        it.v = inputs[j];
        it.quot_origin = j >= opts.quot_tail_from;
        if (track) {
            it.repr.assign(inputs.size(), Polynomial());
            it.repr[j] = ring->one();
        }
        it.sugar = it.v.max_degree();
        detail::make_primitive(it, track);
        items.push_back(std::move(it));
    }

    auto lead_of = [&](std::size_t i) { return items[i].v.lead(mord); };

    // pair queue keyed by (sugar, lcm degree, i, j)
    using PairKey = std::tuple<std::int64_t, std::int64_t, std::size_t, std::size_t>;
    std::set<PairKey> queue;
    std::set<std::pair<std::size_t, std::size_t>> processed;

    auto push_pairs_for = [&](std::size_t n) {
        ModuleTerm lt_n = lead_of(n);
        for (std::size_t i = 0; i < n; ++i) {
            ModuleTerm lt_i = lead_of(i);
            if (lt_i.comp != lt_n.comp) continue;
            Monomial l = lcm(lt_i.mono, lt_n.mono);
            std::int64_t sug = std::max(
                items[i].sugar + (l.degree() - lt_i.mono.degree()),
                items[n].sugar + (l.degree() - lt_n.mono.degree()));
            queue.insert({sug, l.degree(), i, n});
        }
    };
    for (std::size_t n = 0; n < items.size(); ++n) push_pairs_for(n);

    // full reduction of a work item against current items
    auto reduce_item = [&](detail::WorkItem& w) {
        PolyVec result(rank);
        std::size_t steps = 0;
        while (!w.v.is_zero()) {
            ModuleTerm lt = w.v.lead(mord);
            Scalar lc = w.v.coeff_of_lead(lt);
            bool hit = false;
            for (std::size_t k = 0; k < items.size(); ++k) {
                ModuleTerm glt = lead_of(k);
                if (glt.comp != lt.comp || !glt.mono.divides(lt.mono)) continue;
                Monomial q = glt.mono.divide_into(lt.mono);
                Scalar c = lc / items[k].v.coeff_of_lead(glt);
                w.v = sub(w.v, items[k].v.times_term(q, c), ord);
                if (track) {
                    Polynomial qp = Polynomial::monomial(q, c);
                    for (std::size_t j = 0; j < w.repr.size(); ++j)
                        if (!items[k].repr[j].is_zero())
                            w.repr[j] = sub(w.repr[j], mul(qp, items[k].repr[j], ord), ord);
                }
                w.sugar = std::max(w.sugar, items[k].sugar + q.degree());
                check_terms(w.v.term_count(), ring->limits);
                hit = true;
                break;
            }
            if (!hit) {
                Polynomial term = Polynomial::monomial(lt.mono, lc);
                result[lt.comp] = add(result[lt.comp], term, ord);
                w.v[lt.comp] = sub(w.v[lt.comp], term, ord);
            }
            if (++steps % 64 == 0) check_terms(result.term_count(), ring->limits);
        }
        w.v = std::move(result);
    };

    std::size_t pair_count = 0;
    while (!queue.empty()) {
        if (++pair_count > ring->limits.max_pairs)
            throw ResourceLimitError("S-pair cap exceeded");
        auto key = *queue.begin();
        queue.erase(queue.begin());
        auto [sug, ldeg, i, j] = key;

        ModuleTerm li = lead_of(i), lj = lead_of(j);
        Monomial l = lcm(li.mono, lj.mono);

        // both sides from the quotient block: reduces to zero within it
        if (items[i].quot_origin && items[j].quot_origin) {
            processed.insert({i, j});
            continue;
        }

        if (!opts.full_pairs) {
            // product criterion (ideals only)
            if (rank == 1 && li.mono.coprime(lj.mono)) {
                processed.insert({i, j});
                continue;
            }
            // conservative chain criterion: only fully processed pairs count
            bool skip = false;
            for (std::size_t k = 0; k < items.size() && !skip; ++k) {
                if (k == i || k == j) continue;
                ModuleTerm lk = lead_of(k);
                if (lk.comp != li.comp || !lk.mono.divides(l)) continue;
                auto p1 = std::minmax(i, k);
                auto p2 = std::minmax(j, k);
                if (processed.count({p1.first, p1.second}) &&
                    processed.count({p2.first, p2.second}))
                    skip = true;
            }
            if (skip) continue;
        }

        detail::WorkItem w;
        Monomial qi = li.mono.divide_into(l);
        Monomial qj = lj.mono.divide_into(l);
        Scalar ci = Scalar::one(ring->field) / items[i].v.coeff_of_lead(li);
        Scalar cj = Scalar::one(ring->field) / items[j].v.coeff_of_lead(lj);
        w.v = sub(items[i].v.times_term(qi, ci), items[j].v.times_term(qj, cj), ord);
        if (track) {
            w.repr.assign(inputs.size(), Polynomial());
            Polynomial pi = Polynomial::monomial(qi, ci);
            Polynomial pj = Polynomial::monomial(qj, cj);
            for (std::size_t t = 0; t < inputs.size(); ++t) {
                Polynomial a = items[i].repr[t].is_zero()
                                   ? Polynomial()
                                   : mul(pi, items[i].repr[t], ord);
                Polynomial b = items[j].repr[t].is_zero()
                                   ? Polynomial()
                                   : mul(pj, items[j].repr[t], ord);
                w.repr[t] = sub(a, b, ord);
            }
        }
        w.sugar = sug;
        reduce_item(w);
        processed.insert({i, j});

        if (w.v.is_zero()) {
            if (opts.zero_syzygies && track) {
                PolyVec s(inputs.size());
                bool nz = false;
                for (std::size_t t = 0; t < inputs.size(); ++t) {
                    s[t] = w.repr[t];
                    nz = nz || !s[t].is_zero();
                }
                if (nz) opts.zero_syzygies->push_back(std::move(s));
            }
            continue;
        }
        detail::make_primitive(w, track);
        items.push_back(std::move(w));
        if (items.size() > ring->limits.max_basis)
            throw ResourceLimitError("Groebner basis size cap exceeded");
        push_pairs_for(items.size() - 1);
    }

    // inter-reduce to the unique reduced basis (drop redundant leads, full
    // tail reduction, monic, canonical ascending order by lead term)
    std::vector<ModuleTerm> leads;
    leads.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) leads.push_back(lead_of(i));
    std::vector<detail::WorkItem> kept;
    for (std::size_t i = 0; i < items.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < items.size() && !redundant; ++k) {
            if (k == i) continue;
            if (leads[k].comp != leads[i].comp || !leads[k].mono.divides(leads[i].mono))
                continue;
            if (leads[k].mono == leads[i].mono && k > i) continue; // keep the earlier
            redundant = true;
        }
        if (!redundant) kept.push_back(std::move(items[i]));
    }
    items = std::move(kept);

    if (opts.reduce) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < items.size(); ++i) {
                detail::WorkItem w = std::move(items[i]);
                items.erase(items.begin() + static_cast<std::ptrdiff_t>(i));
                // reduce w fully against the rest
                PolyVec before = w.v;
                detail::WorkItem r;
                r.v = std::move(w.v);
                r.repr = std::move(w.repr);
                r.sugar = w.sugar;
                reduce_item(r);
                if (r.v.is_zero()) {
                    changed = true;
                    --i;
                    continue;
                }
                if (!(r.v == before)) changed = true;
                detail::make_primitive(r, track);
                items.insert(items.begin() + static_cast<std::ptrdiff_t>(i), std::move(r));
            }
        }
    }

    std::stable_sort(items.begin(), items.end(),
                     [&](const detail::WorkItem& a, const detail::WorkItem& b) {
                         return mord.cmp(a.v.lead(mord), b.v.lead(mord)) < 0;
                     });

    for (auto& it : items) {
        Scalar inv = it.v.coeff_of_lead(it.v.lead(mord)).inverse();
        detail::scale_item(it, inv, track);
        out.basis.push_back(std::move(it.v));
        if (track) out.transform.push_back(std::move(it.repr));
    }
    return out;
}

/// Generators of the syzygy module of `inputs` (inside R^inputs.size()),
/// over the ambient ring. Schreyer-style: zero reductions of a full-pair
/// Buchberger run, plus the rows of I - V U correcting for non-basis
/// inputs. When `head` is given, the syzygies are projected onto the
/// first `head` coordinates before the final reduction (the usual shape:
/// trailing inputs are quotient columns whose coefficients are
/// discarded). The result is a reduced Groebner basis so that downstream
/// presentations stay small.
inline std::vector<PolyVec> syzygy_module(RingP ring, std::size_t rank,
                                          const std::vector<PolyVec>& inputs,
                                          const ModuleOrder& mord,
                                          std::size_t quot_from = static_cast<std::size_t>(-1),
                                          std::size_t head = static_cast<std::size_t>(-1)) {
    if (inputs.empty()) return {};
    if (head > inputs.size()) head = inputs.size();
    std::vector<PolyVec> syz;
    BuchbergerOptions opts;
    opts.track = true;
    opts.full_pairs = true;
    opts.reduce = true;
    opts.zero_syzygies = &syz;
    opts.quot_tail_from = quot_from;
    GB gb = buchberger(ring, rank, inputs, mord, opts);

    const MonomialOrder& ord = mord.mono();
    // V: inputs over basis
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        std::vector<Polynomial> q;
        PolyVec r = gb.normal_form(inputs[j], &q);
        if (!r.is_zero())
            throw std::logic_error("input does not reduce to zero against its own basis");
        // row_j of (I - V U)
        PolyVec row(inputs.size());
        row[j] = ring->one();
        for (std::size_t k = 0; k < gb.basis.size(); ++k) {
            if (q[k].is_zero()) continue;
            for (std::size_t t = 0; t < inputs.size(); ++t)
                if (!gb.transform[k][t].is_zero())
                    row[t] = sub(row[t], mul(q[k], gb.transform[k][t], ord), ord);
        }
        if (!row.is_zero()) syz.push_back(std::move(row));
    }

    std::vector<PolyVec> projected;
    for (const auto& s : syz) {
        PolyVec v(head);
        bool nz = false;
        for (std::size_t t = 0; t < head; ++t) {
            v[t] = s[t];
            nz = nz || !v[t].is_zero();
        }
        if (nz) projected.push_back(std::move(v));
    }
    if (projected.empty()) return {};
    ModuleOrder syz_ord(ord, ModuleOrder::Kind::TOP);
    GB sgb = buchberger(ring, head, projected, syz_ord, {});
    return sgb.basis;
}

} // namespace blowup

#endif
