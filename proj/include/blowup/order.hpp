#ifndef BLOWUP_ORDER_HPP
#define BLOWUP_ORDER_HPP

#include "blowup/monomial.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace blowup {

/// Admissible monomial order: degrevlex, lex, block elimination order
/// (compares the eliminated block degrevlex first), or weighted degree
/// with a tie-breaking order.
class MonomialOrder {
public:
    enum class Kind { Degrevlex, Lex, Block, Weighted };

    static MonomialOrder degrevlex() { return MonomialOrder(Kind::Degrevlex); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder block(std::vector<std::uint8_t> elim_mask, MonomialOrder inner) {
        MonomialOrder o(Kind::Block);
        o.mask_ = std::move(elim_mask);
        o.inner_ = std::make_shared<MonomialOrder>(std::move(inner));
        return o;
    }
    static MonomialOrder weighted(std::vector<std::int64_t> w, MonomialOrder tie) {
        MonomialOrder o(Kind::Weighted);
        o.w_ = std::move(w);
        o.inner_ = std::make_shared<MonomialOrder>(std::move(tie));
        return o;
    }

    Kind kind() const { return kind_; }
    const std::vector<std::uint8_t>& elim_mask() const { return mask_; }

    /// >0 if a > b, 0 if equal, <0 if a < b.
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
        case Kind::Degrevlex: {
            std::int64_t da = a.degree(), db = b.degree();
            if (da != db) return da > db ? 1 : -1;
            // reverse lex: larger = smaller exponent in the last variable where they differ
            for (std::size_t i = a.nvars(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
            return 0;
        }
        case Kind::Lex: {
            for (std::size_t i = 0; i < a.nvars(); ++i)
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            return 0;
        }
        case Kind::Block: {
            std::int64_t da = 0, db = 0;
            for (std::size_t i = 0; i < a.nvars(); ++i)
                if (mask_[i]) {
                    da += a[i];
                    db += b[i];
                }
            if (da != db) return da > db ? 1 : -1;
            for (std::size_t i = a.nvars(); i-- > 0;) {
                if (!mask_[i]) continue;
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
            return inner_->cmp_masked_out(a, b, mask_);
        }
        case Kind::Weighted: {
            std::int64_t da = 0, db = 0;
            for (std::size_t i = 0; i < a.nvars(); ++i) {
                da += w_[i] * a[i];
                db += w_[i] * b[i];
            }
            if (da != db) return da > db ? 1 : -1;
            return inner_->cmp(a, b);
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    std::string str() const {
        switch (kind_) {
        case Kind::Degrevlex: return "degrevlex";
        case Kind::Lex: return "lex";
        case Kind::Block: return "block(" + inner_->str() + ")";
        case Kind::Weighted: return "weighted(" + inner_->str() + ")";
        }
        return "?";
    }

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    /// Compare ignoring the masked variables (used for the tail of a block order).
    int cmp_masked_out(const Monomial& a, const Monomial& b,
                       const std::vector<std::uint8_t>& mask) const {
        switch (kind_) {
        case Kind::Degrevlex: {
            std::int64_t da = 0, db = 0;
            for (std::size_t i = 0; i < a.nvars(); ++i)
                if (!mask[i]) {
                    da += a[i];
                    db += b[i];
                }
            if (da != db) return da > db ? 1 : -1;
            for (std::size_t i = a.nvars(); i-- > 0;) {
                if (mask[i]) continue;
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
            return 0;
        }
        case Kind::Lex: {
            for (std::size_t i = 0; i < a.nvars(); ++i) {
                if (mask[i]) continue;
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            }
            return 0;
        }
        default:
            // nested block/weighted tails are not needed; fall back to full compare
            return cmp(a, b);
        }
    }

    Kind kind_;
    std::vector<std::uint8_t> mask_;
    std::vector<std::int64_t> w_;
    std::shared_ptr<MonomialOrder> inner_;
};

/// Position in a free module plus monomial: the term unit of module
/// Groebner computations.
struct ModuleTerm {
    std::size_t comp = 0;
    Monomial mono;
};

/// Order on module terms. TOP (term over position) compares monomials
/// first, which gives the elimination property componentwise; POT
/// compares positions first. Twists enter degree bookkeeping only.
class ModuleOrder {
public:
    enum class Kind { TOP, POT };

    ModuleOrder(MonomialOrder mono, Kind kind = Kind::TOP)
        : mono_(std::move(mono)), kind_(kind) {}

    const MonomialOrder& mono() const { return mono_; }

    int cmp(const ModuleTerm& a, const ModuleTerm& b) const {
        if (kind_ == Kind::TOP) {
            int c = mono_.cmp(a.mono, b.mono);
            if (c != 0) return c;
            // lower component index = larger term (deterministic; any fixed choice works)
            if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
            return 0;
        }
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return mono_.cmp(a.mono, b.mono);
    }
    bool less(const ModuleTerm& a, const ModuleTerm& b) const { return cmp(a, b) < 0; }

private:
    MonomialOrder mono_;
    Kind kind_;
};

} // namespace blowup

#endif
