#ifndef BLOWUP_POLYNOMIAL_HPP
#define BLOWUP_POLYNOMIAL_HPP

#include "blowup/monomial.hpp"
#include "blowup/order.hpp"
#include "blowup/scalar.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace blowup {

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Sparse multivariate polynomial: terms strictly descending under the
/// active monomial order, no zero coefficients. The ambient order is
/// context, not state; operations that need it take it as a parameter.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Term> terms) : t_(std::move(terms)) {}

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(std::size_t nvars, const Scalar& c) {
        Polynomial p;
        if (!c.is_zero()) p.t_.push_back({Monomial(nvars), c});
        return p;
    }
    static Polynomial monomial(Monomial m, const Scalar& c) {
        Polynomial p;
        if (!c.is_zero()) p.t_.push_back({std::move(m), c});
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    const Term& lead() const { return t_.front(); }
    const Monomial& lead_mono() const { return t_.front().mono; }
    const Scalar& lead_coeff() const { return t_.front().coeff; }

    /// Re-sorts descending under `ord` and merges equal monomials.
    void normalize(const MonomialOrder& ord) {
        std::stable_sort(t_.begin(), t_.end(), [&](const Term& a, const Term& b) {
            return ord.cmp(a.mono, b.mono) > 0;
        });
        std::vector<Term> out;
        out.reserve(t_.size());
        for (auto& t : t_) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coeff = out.back().coeff + t.coeff;
            else
                out.push_back(std::move(t));
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        }
        t_ = std::move(out);
    }

    friend Polynomial add(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
        Polynomial r;
        r.t_.reserve(a.t_.size() + b.t_.size());
        std::size_t i = 0, j = 0;
        while (i < a.t_.size() && j < b.t_.size()) {
            int c = ord.cmp(a.t_[i].mono, b.t_[j].mono);
            if (c > 0)
                r.t_.push_back(a.t_[i++]);
            else if (c < 0)
                r.t_.push_back(b.t_[j++]);
            else {
                Scalar s = a.t_[i].coeff + b.t_[j].coeff;
                if (!s.is_zero()) r.t_.push_back({a.t_[i].mono, s});
                ++i;
                ++j;
            }
        }
        for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
        for (; j < b.t_.size(); ++j) r.t_.push_back(b.t_[j]);
        return r;
    }
    friend Polynomial sub(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
        return add(a, b.negated(), ord);
    }

    Polynomial negated() const {
        Polynomial r(*this);
        for (auto& t : r.t_) t.coeff = -t.coeff;
        return r;
    }

    /// Multiplication by a single term preserves sortedness (orders are
    /// multiplicative), so no re-sort is needed.
    Polynomial times_term(const Monomial& m, const Scalar& c) const {
        Polynomial r;
        if (c.is_zero()) return r;
        r.t_.reserve(t_.size());
        for (const auto& t : t_) r.t_.push_back({t.mono * m, t.coeff * c});
        return r;
    }
    Polynomial times_scalar(const Scalar& c) const {
        Polynomial r;
        if (c.is_zero()) return r;
        r.t_.reserve(t_.size());
        for (const auto& t : t_) r.t_.push_back({t.mono, t.coeff * c});
        return r;
    }

    friend Polynomial mul(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
        Polynomial r;
        if (a.is_zero() || b.is_zero()) return r;
        r.t_.reserve(a.t_.size() * b.t_.size());
        for (const auto& ta : a.t_)
            for (const auto& tb : b.t_) r.t_.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
        r.normalize(ord);
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return times_scalar(lead_coeff().inverse());
    }

    /// Over QQ, divides by the integer content so coefficients stay small
    /// during Buchberger reductions. No-op over Z/p.
    Polynomial primitive_part() const {
        if (is_zero() || !t_.front().coeff.field().is_rational()) return *this;
        Rational g = t_.front().coeff.rat().abs();
        for (std::size_t i = 1; i < t_.size() && !g.is_one(); ++i)
            g = Rational::content_gcd(g, t_[i].coeff.rat());
        if (g.is_zero() || g.is_one()) return *this;
        if (t_.front().coeff.rat().sign() < 0) g = -g;
        return times_scalar(Scalar::from_rational(t_.front().coeff.field(), g.inverse()));
    }

    /// Grading weight when homogeneous; nullopt otherwise (or when zero).
    std::optional<std::int64_t> homogeneous_weight(const std::vector<int>& w) const {
        if (t_.empty()) return std::nullopt;
        std::int64_t d = t_.front().mono.weight(w);
        for (const auto& t : t_)
            if (t.mono.weight(w) != d) return std::nullopt;
        return d;
    }
    bool is_homogeneous(const std::vector<int>& w) const {
        return t_.empty() || homogeneous_weight(w).has_value();
    }

    bool avoids(const std::vector<std::uint8_t>& mask) const {
        for (const auto& t : t_)
            if (!t.mono.avoids(mask)) return false;
        return true;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.t_.size() != b.t_.size()) return false;
        for (std::size_t i = 0; i < a.t_.size(); ++i)
            if (a.t_[i].mono != b.t_[i].mono || a.t_[i].coeff != b.t_[i].coeff) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& vars) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : t_) {
            std::string c = t.coeff.str();
            bool neg = !c.empty() && c[0] == '-';
            if (first) {
                if (neg) {
                    os << "-";
                    c = c.substr(1);
                }
            } else {
                os << (neg ? " - " : " + ");
                if (neg) c = c.substr(1);
            }
            first = false;
            bool unit_coeff = (c == "1");
            bool printed = false;
            if (!unit_coeff || t.mono.is_one()) {
                os << c;
                printed = true;
            }
            for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
                if (t.mono[i] == 0) continue;
                if (printed) os << "*";
                os << vars[i];
                if (t.mono[i] != 1) os << "^" << t.mono[i];
                printed = true;
            }
        }
        return os.str();
    }

private:
    std::vector<Term> t_;
};

} // namespace blowup

#endif
