#ifndef BLOWUP_RING_HPP
#define BLOWUP_RING_HPP

#include "blowup/common.hpp"
#include "blowup/polynomial.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace blowup {

class GB; // defined in groebner.hpp

/// Presented (quotient of a) polynomial ring: named variables with integer
/// grading weights, an ambient monomial order, and defining relations.
/// Rings are immutable and shared by pointer; the relation Groebner basis
/// is computed lazily under a single-writer lock.
class Ring {
public:
    Field field;
    std::vector<std::string> vars;
    std::vector<int> weights;
    MonomialOrder order;
    std::vector<Polynomial> quot; // defining ideal of the quotient (maybe empty)
    Limits limits;

    Ring(Field f, std::vector<std::string> names, std::vector<int> w, MonomialOrder ord,
         std::vector<Polynomial> relations = {}, Limits lim = {})
        : field(f), vars(std::move(names)), weights(std::move(w)), order(std::move(ord)),
          quot(std::move(relations)), limits(lim) {}

    Ring(const Ring&) = delete;
    Ring& operator=(const Ring&) = delete;

    std::size_t nvars() const { return vars.size(); }
    bool is_quotient() const { return !quot.empty(); }

    std::int64_t weight_of(const Monomial& m) const { return m.weight(weights); }

    /// Mask of variables with nonzero grading weight (the Rees variables
    /// and the distinguished inverse variable).
    std::vector<std::uint8_t> nonbase_mask() const {
        std::vector<std::uint8_t> m(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) m[i] = weights[i] != 0;
        return m;
    }
    std::vector<std::uint8_t> base_mask() const {
        std::vector<std::uint8_t> m(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) m[i] = weights[i] == 0;
        return m;
    }
    bool has_positive_vars() const {
        for (int w : weights)
            if (w > 0) return true;
        return false;
    }
    /// Index of the weight-(-1) variable, if present.
    std::optional<std::size_t> u_index() const {
        for (std::size_t i = 0; i < nvars(); ++i)
            if (weights[i] == -1) return i;
        return std::nullopt;
    }
    std::vector<std::size_t> positive_var_indices() const {
        std::vector<std::size_t> r;
        for (std::size_t i = 0; i < nvars(); ++i)
            if (weights[i] > 0) r.push_back(i);
        return r;
    }

    std::optional<std::size_t> var_index(const std::string& name) const {
        for (std::size_t i = 0; i < nvars(); ++i)
            if (vars[i] == name) return i;
        return std::nullopt;
    }

    Scalar sc(long v) const { return Scalar::from_int(field, v); }
    Polynomial var_poly(std::size_t i) const {
        return Polynomial::monomial(Monomial::var(nvars(), i), Scalar::one(field));
    }
    Polynomial one() const { return Polynomial::constant(nvars(), Scalar::one(field)); }

    // Lazy cache slots, populated by groebner.hpp / graded.hpp helpers.
    mutable std::mutex cache_mutex;
    mutable std::shared_ptr<const GB> quot_gb;
    mutable std::shared_ptr<const Ring> base_cache;
};

using RingP = std::shared_ptr<const Ring>;

/// Default order for graded rings in scope: the nonzero-weight block
/// dominates the base block, degrevlex inside each. This makes mixed
/// y/u-monomials reduce toward the base, which the graded-piece
/// machinery relies on.
inline MonomialOrder canonical_order(const std::vector<int>& weights) {
    bool graded = false;
    std::vector<std::uint8_t> mask(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        mask[i] = weights[i] != 0;
        graded = graded || mask[i];
    }
    if (!graded) return MonomialOrder::degrevlex();
    return MonomialOrder::block(std::move(mask), MonomialOrder::degrevlex());
}

inline RingP make_ring(Field f, std::vector<std::string> names, std::vector<int> w,
                       std::vector<Polynomial> relations = {}, Limits lim = {}) {
    MonomialOrder ord = canonical_order(w);
    return std::make_shared<Ring>(f, std::move(names), std::move(w), std::move(ord),
                                  std::move(relations), lim);
}

inline RingP make_poly_ring(Field f, std::vector<std::string> names, Limits lim = {}) {
    std::vector<int> w(names.size(), 0);
    return make_ring(f, std::move(names), std::move(w), {}, lim);
}

/// Same ring with a different monomial order (fresh caches); the
/// relations are re-normalized under the new order.
inline RingP with_order(const Ring& r, MonomialOrder ord) {
    std::vector<Polynomial> q = r.quot;
    for (auto& p : q) p.normalize(ord);
    return std::make_shared<Ring>(r.field, r.vars, r.weights, std::move(ord), std::move(q),
                                  r.limits);
}

/// Element of a free module R^rank: one polynomial per component.
class PolyVec {
public:
    PolyVec() = default;
    explicit PolyVec(std::size_t rank) : c_(rank) {}
    explicit PolyVec(std::vector<Polynomial> comps) : c_(std::move(comps)) {}

    static PolyVec unit(std::size_t rank, std::size_t i, const Polynomial& p) {
        PolyVec v(rank);
        v.c_[i] = p;
        return v;
    }

    std::size_t rank() const { return c_.size(); }
    const Polynomial& operator[](std::size_t i) const { return c_[i]; }
    Polynomial& operator[](std::size_t i) { return c_[i]; }

    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }
    std::size_t term_count() const {
        std::size_t n = 0;
        for (const auto& p : c_) n += p.term_count();
        return n;
    }

    /// Largest module term under `ord`; requires a nonzero vector.
    ModuleTerm lead(const ModuleOrder& ord) const {
        const Polynomial* best = nullptr;
        std::size_t best_comp = 0;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!best ||
                ord.cmp({i, c_[i].lead_mono()}, {best_comp, best->lead_mono()}) > 0) {
                best = &c_[i];
                best_comp = i;
            }
        }
        return {best_comp, best->lead_mono()};
    }
    const Scalar& coeff_of_lead(const ModuleTerm& lt) const {
        return c_[lt.comp].lead_coeff();
    }

    friend PolyVec add(const PolyVec& a, const PolyVec& b, const MonomialOrder& ord) {
        PolyVec r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = add(a.c_[i], b.c_[i], ord);
        return r;
    }
    friend PolyVec sub(const PolyVec& a, const PolyVec& b, const MonomialOrder& ord) {
        PolyVec r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = sub(a.c_[i], b.c_[i], ord);
        return r;
    }
    PolyVec negated() const {
        PolyVec r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i].negated();
        return r;
    }
    PolyVec times_term(const Monomial& m, const Scalar& s) const {
        PolyVec r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i].times_term(m, s);
        return r;
    }
    PolyVec times_scalar(const Scalar& s) const {
        PolyVec r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i].times_scalar(s);
        return r;
    }
    friend PolyVec mul_poly(const Polynomial& p, const PolyVec& v, const MonomialOrder& ord) {
        PolyVec r(v.c_.size());
        for (std::size_t i = 0; i < v.c_.size(); ++i) r.c_[i] = mul(p, v.c_[i], ord);
        return r;
    }

    PolyVec primitive_part() const {
        // joint content over all components (QQ only)
        const Polynomial* nz = nullptr;
        for (const auto& p : c_)
            if (!p.is_zero()) {
                nz = &p;
                break;
            }
        if (!nz || !nz->lead_coeff().field().is_rational()) return *this;
        Rational g(0);
        bool first = true;
        for (const auto& p : c_)
            for (const auto& t : p.terms()) {
                g = first ? t.coeff.rat().abs() : Rational::content_gcd(g, t.coeff.rat());
                first = false;
                if (g.is_one()) return *this;
            }
        if (g.is_zero() || g.is_one()) return *this;
        return times_scalar(Scalar::from_rational(nz->lead_coeff().field(), g.inverse()));
    }

    std::int64_t max_degree() const {
        std::int64_t d = 0;
        for (const auto& p : c_)
            for (const auto& t : p.terms()) d = std::max(d, t.mono.degree());
        return d;
    }

    /// Grading weight of a homogeneous vector with component twists:
    /// every term of component i must have weight + twist[i] equal.
    std::optional<std::int64_t> homogeneous_weight(const std::vector<int>& w,
                                                   const std::vector<int>& twists) const {
        std::optional<std::int64_t> d;
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (const auto& t : c_[i].terms()) {
                std::int64_t wd = t.mono.weight(w) + twists[i];
                if (!d)
                    d = wd;
                else if (*d != wd)
                    return std::nullopt;
            }
        return d;
    }

    friend bool operator==(const PolyVec& a, const PolyVec& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyVec& a, const PolyVec& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& vars) const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ", ";
            s += c_[i].str(vars);
        }
        return s + ")";
    }

private:
    std::vector<Polynomial> c_;
};

} // namespace blowup

#endif
