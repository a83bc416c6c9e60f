#ifndef BLOWUP_COMMON_HPP
#define BLOWUP_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace blowup {

/// Raised when a configured resource cap (term count, iteration count,
/// basis size) is exceeded. Never silently degrades to a wrong answer.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a stabilization protocol fails to converge within its cap,
/// e.g. the saturation colimit for twisted sections.
class InconclusiveError : public std::runtime_error {
public:
    explicit InconclusiveError(const std::string& what) : std::runtime_error(what) {}
};

/// Configurable caps shared by the Groebner engine and the iterative
/// saturation / stabilization protocols.
struct Limits {
    std::size_t max_terms = 200000;       // per-polynomial term cap during reduction
    std::size_t max_basis = 20000;        // Groebner basis size cap
    std::size_t max_pairs = 4000000;      // processed S-pair cap
    int max_sat_steps = 24;              // saturation / colimit stabilization cap
    int max_resolution = 16;             // resolution length cap
};

inline void check_terms(std::size_t n, const Limits& lim) {
    if (n > lim.max_terms)
        throw ResourceLimitError("polynomial term count exceeds configured cap ("
                                 + std::to_string(lim.max_terms) + ")");
}

} // namespace blowup

#endif
