#ifndef BLOWUP_TESTS_HELPERS_HPP
#define BLOWUP_TESTS_HELPERS_HPP

#include "blowup/module_ops.hpp"
#include "blowup/parse_poly.hpp"

#include <string>
#include <vector>

namespace test {

using namespace blowup;

inline RingP qq_ring(const std::vector<std::string>& vars,
                     const std::vector<Polynomial>& quot = {}) {
    std::vector<int> w(vars.size(), 0);
    return make_ring(Field{}, vars, w, quot);
}

/// Polynomial from text over `r` (shared CLI syntax).
inline Polynomial P(const RingP& r, const std::string& text) {
    return parse_polynomial(*r, text);
}

inline std::vector<Polynomial> Ps(const RingP& r, const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(P(r, t));
    return out;
}

inline PolyVec V(const RingP& r, const std::vector<std::string>& comps) {
    PolyVec v(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) v[i] = P(r, comps[i]);
    return v;
}

} // namespace test

#endif
