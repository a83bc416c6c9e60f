#ifndef BLOWUP_MAPS_HPP
#define BLOWUP_MAPS_HPP

#include "blowup/ring.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace blowup {

/// Applies the ring map sending variable i of `src` to images[i] (a
/// polynomial over `dst`), coefficientwise on `p`. Powers are cached per
/// variable.
inline Polynomial substitute(const Polynomial& p, const Ring& src, const Ring& dst,
                             const std::vector<Polynomial>& images) {
    if (images.size() != src.nvars())
        throw std::invalid_argument("substitute: one image per source variable required");
    std::vector<std::vector<Polynomial>> powers(src.nvars()); // powers[i][k] = images[i]^k
    auto power = [&](std::size_t i, std::int32_t k) -> const Polynomial& {
        auto& row = powers[i];
        if (row.empty()) {
            row.push_back(dst.one());
            row.push_back(images[i]);
        }
        while (row.size() <= static_cast<std::size_t>(k))
            row.push_back(mul(row.back(), images[i], dst.order));
        return row[static_cast<std::size_t>(k)];
    };
    Polynomial out;
    for (const auto& t : p.terms()) {
        Polynomial term = Polynomial::constant(dst.nvars(), t.coeff);
        for (std::size_t i = 0; i < src.nvars(); ++i)
            if (t.mono[i] != 0) term = mul(term, power(i, t.mono[i]), dst.order);
        out = add(out, term, dst.order);
    }
    return out;
}

/// Variable-by-name transport between rings whose variable sets overlap.
/// Source variables must all exist in `dst`.
inline Polynomial rename_into(const Polynomial& p, const Ring& src, const Ring& dst) {
    // resolve only the variables that occur
    std::vector<int> where(src.nvars(), -1);
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Monomial m(dst.nvars());
        for (std::size_t i = 0; i < src.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (where[i] < 0) {
                auto j = dst.var_index(src.vars[i]);
                if (!j)
                    throw std::invalid_argument("rename_into: missing variable " + src.vars[i]);
                where[i] = static_cast<int>(*j);
            }
            m[static_cast<std::size_t>(where[i])] = t.mono[i];
        }
        terms.push_back({std::move(m), t.coeff});
    }
    Polynomial out(std::move(terms));
    out.normalize(dst.order);
    return out;
}

/// Restriction of a polynomial supported in the `keep`-variables of `src`
/// onto `dst`, whose variables are exactly those (by name).
inline Polynomial restrict_to(const Polynomial& p, const Ring& src, const Ring& dst,
                              const std::vector<std::uint8_t>& keep) {
    for (const auto& t : p.terms())
        if (!t.mono.supported_in(keep))
            throw std::invalid_argument("restrict_to: polynomial not supported in subring");
    return rename_into(p, src, dst);
}

inline PolyVec rename_into(const PolyVec& v, const Ring& src, const Ring& dst) {
    PolyVec out(v.rank());
    for (std::size_t i = 0; i < v.rank(); ++i) out[i] = rename_into(v[i], src, dst);
    return out;
}

/// Fresh variable names avoiding collisions: tries prefix0..prefixN, then
/// doubles the prefix. Deterministic.
inline std::vector<std::string> fresh_names(const std::vector<std::string>& taken,
                                            const std::string& prefix, std::size_t count) {
    auto clash = [&](const std::string& n) {
        for (const auto& t : taken)
            if (t == n) return true;
        return false;
    };
    std::string pre = prefix;
    for (;;) {
        std::vector<std::string> out;
        bool ok = true;
        for (std::size_t i = 0; i < count && ok; ++i) {
            std::string n = pre + std::to_string(i);
            if (clash(n)) ok = false;
            out.push_back(n);
        }
        if (ok) return out;
        pre += prefix;
    }
}

inline std::string fresh_name(const std::vector<std::string>& taken, const std::string& want) {
    auto clash = [&](const std::string& n) {
        for (const auto& t : taken)
            if (t == n) return true;
        return false;
    };
    std::string n = want;
    while (clash(n)) n += "_";
    return n;
}

} // namespace blowup

#endif
