#ifndef BLOWUP_MONOMIAL_HPP
#define BLOWUP_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace blowup {

/// Exponent vector over a fixed ambient variable list. The grading weight
/// is not stored; it is recomputed against the ambient ring's weight
/// vector, which keeps the consistency invariant trivial.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::int32_t> exps) : e_(std::move(exps)) {}

    static Monomial var(std::size_t nvars, std::size_t i, std::int32_t k = 1) {
        Monomial m(nvars);
        m.e_[i] = k;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    std::int32_t operator[](std::size_t i) const { return e_[i]; }
    std::int32_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<std::int32_t>& exponents() const { return e_; }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](std::int32_t x) { return x == 0; });
    }

    /// Total degree (sum of exponents), independent of grading weights.
    std::int64_t degree() const {
        return std::accumulate(e_.begin(), e_.end(), std::int64_t{0});
    }

    /// Grading weight against a weight vector.
    std::int64_t weight(const std::vector<int>& w) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) s += std::int64_t(e_[i]) * w[i];
        return s;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.e_);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    /// m / *this; caller must ensure divisibility.
    Monomial divide_into(const Monomial& m) const {
        Monomial r(m.e_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.e_);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(r.e_[i], b.e_[i]);
        return r;
    }

    bool coprime(const Monomial& b) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    /// True when every variable with nonzero exponent is flagged in `mask`.
    bool supported_in(const std::vector<std::uint8_t>& mask) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] != 0 && !mask[i]) return false;
        return true;
    }
    /// True when no flagged variable occurs.
    bool avoids(const std::vector<std::uint8_t>& mask) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] != 0 && mask[i]) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
    std::vector<std::int32_t> e_;
};

/// Enumerates all monomials of total degree d in the variables flagged by
/// `mask`, in lexicographic order of exponent vectors. Used for graded
/// piece generators and Macaulay-style degree windows.
inline void monomials_of_degree(std::size_t nvars, const std::vector<std::uint8_t>& mask,
                                std::int64_t d, std::vector<Monomial>& out) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < nvars; ++i)
        if (mask[i]) idx.push_back(i);
    if (d < 0) return;
    if (idx.empty()) {
        if (d == 0) out.emplace_back(nvars);
        return;
    }
    Monomial cur(nvars);
    // depth-first distribution of d among idx
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t rem) -> void {
        if (pos + 1 == idx.size()) {
            cur[idx[pos]] = static_cast<std::int32_t>(rem);
            out.push_back(cur);
            cur[idx[pos]] = 0;
            return;
        }
        for (std::int64_t k = rem; k >= 0; --k) {
            cur[idx[pos]] = static_cast<std::int32_t>(k);
            self(self, pos + 1, rem - k);
        }
        cur[idx[pos]] = 0;
    };
    rec(rec, 0, d);
}

} // namespace blowup

#endif
