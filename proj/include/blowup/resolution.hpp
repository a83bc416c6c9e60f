#ifndef BLOWUP_RESOLUTION_HPP
#define BLOWUP_RESOLUTION_HPP

#include "blowup/graded.hpp"

#include <functional>
#include <vector>

namespace blowup {

/// Free resolution F_L -> ... -> F_1 -> F_0 ->> M by iterated syzygies
/// over the quotient ring. Differentials are stored as ambient columns:
/// diffs[i][k] is the image in F_i of the k-th generator of F_{i+1}.
struct Resolution {
    std::vector<std::vector<int>> twists; // twists[i] = generator degrees of F_i
    std::vector<std::vector<PolyVec>> diffs;

    std::size_t length() const { return diffs.size(); }
};

namespace detail {

/// Division by u^a modulo the ring relations: returns s' with
/// u^a s' = s (mod quot), if one exists.
inline std::optional<PolyVec> u_divide(const RingP& ring, const PolyVec& s, int a) {
    auto u = ring->u_index();
    if (!u) return std::nullopt;
    std::size_t rank = s.rank();
    Polynomial upow = Polynomial::monomial(Monomial::var(ring->nvars(), *u, a),
                                           Scalar::one(ring->field));
    std::vector<PolyVec> cols;
    for (std::size_t k = 0; k < rank; ++k) cols.push_back(PolyVec::unit(rank, k, upow));
    Submodule sub(ring, rank, std::move(cols));
    auto c = sub.lift(s);
    if (!c) return std::nullopt;
    PolyVec out(rank);
    for (std::size_t k = 0; k < rank; ++k) out[k] = (*c)[k];
    return out;
}

} // namespace detail

/// Resolves a standard-form graded module. With `nonneg_twists` (the
/// 0-stable regime over extended Rees rings) kernel generators of
/// negative degree are divided by the u-action down to degree 0, which
/// keeps every step inside the 0-stable subcategory; each replacement is
/// verified to stay in the kernel, so the output is a resolution in all
/// cases.
inline Resolution resolve(const Module& m0, int length, bool nonneg_twists = false) {
    Module m = m0.standardized();
    RingP ring = m.ring();
    if (length < 0) throw std::invalid_argument("resolution length must be >= 0");
    if (length > ring->limits.max_resolution)
        throw ResourceLimitError("resolution length exceeds configured cap");

    Resolution res;
    res.twists.push_back(m.ambient_twists());

    std::vector<PolyVec> cols = m.den(); // columns of F_1 -> F_0
    for (int level = 1; level <= length; ++level) {
        // a transported generator must still satisfy the kernel condition
        auto still_in_kernel = [&](const PolyVec& v) -> bool {
            if (level == 1) return m.den_sub().contains(v);
            const auto& prev = res.diffs[static_cast<std::size_t>(level) - 2];
            std::size_t down_rank = res.twists[static_cast<std::size_t>(level) - 2].size();
            const MonomialOrder& ord = ring->order;
            PolyVec img(down_rank);
            for (std::size_t k = 0; k < v.rank(); ++k)
                if (!v[k].is_zero()) img = add(img, mul_poly(v[k], prev[k], ord), ord);
            return Submodule::zero(ring, down_rank).contains(img);
        };

        std::vector<PolyVec> kept;
        std::vector<int> tw;
        for (auto& c : cols) {
            if (c.is_zero()) continue;
            auto w = c.homogeneous_weight(ring->weights,
                                          res.twists[static_cast<std::size_t>(level) - 1]);
            if (!w)
                throw std::invalid_argument("resolution: non-homogeneous differential column");
            int deg = static_cast<int>(*w);
            if (nonneg_twists && deg < 0) {
                auto moved = detail::u_divide(ring, c, -deg);
                if (moved && still_in_kernel(*moved)) {
                    kept.push_back(std::move(*moved));
                    tw.push_back(0);
                    continue;
                }
            }
            kept.push_back(std::move(c));
            tw.push_back(deg);
        }

        res.diffs.push_back(kept);
        res.twists.push_back(std::move(tw));
        if (level == length) break;

        // next kernel: syzygies of the new columns over the quotient ring
        std::size_t prev_rank = res.twists[static_cast<std::size_t>(level) - 1].size();
        std::vector<PolyVec> work = kept;
        std::size_t head = work.size();
        for (auto& c : quotient_columns(ring, prev_rank)) work.push_back(std::move(c));
        std::vector<PolyVec> next;
        if (head > 0) {
            const GB& qgb = quotient_gb(ring);
            auto syz =
                syzygy_module(ring, prev_rank, work, ModuleOrder(ring->order), head, head);
            for (const auto& s : syz) {
                PolyVec v(head);
                bool nz = false;
                for (std::size_t j = 0; j < head; ++j) {
                    // normalize coefficients into the quotient ring
                    v[j] = qgb.normal_form(PolyVec({s[j]}))[0];
                    nz = nz || !v[j].is_zero();
                }
                if (nz) next.push_back(std::move(v));
            }
        }
        cols = std::move(next);
    }
    return res;
}

} // namespace blowup

#endif
