#ifndef BLOWUP_SCALAR_HPP
#define BLOWUP_SCALAR_HPP

#include "blowup/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace blowup {

/// Coefficient field descriptor: exact rationals (p == 0) or Z/p for a
/// prime p < 2^31, fixed per session.
struct Field {
    std::uint32_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field& o) const { return p == o.p; }
    bool operator!=(const Field& o) const { return p != o.p; }

    std::string str() const { return p == 0 ? "QQ" : "FP" + std::to_string(p); }
};

namespace detail {

inline std::int64_t mod_reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return r;
}

inline std::int64_t mod_inverse(std::int64_t a, std::uint32_t p) {
    // extended Euclid; a must be nonzero mod p
    std::int64_t t = 0, newt = 1;
    std::int64_t r = p, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::domain_error("element not invertible mod p");
    return t < 0 ? t + p : t;
}

} // namespace detail

/// Element of the session coefficient field. Rational mode keeps an exact
/// mpq value; modular mode keeps a residue in [0, p).
class Scalar {
public:
    Scalar() = default;

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) {
        Scalar s(f);
        if (f.is_rational())
            s.q_ = Rational(1);
        else
            s.r_ = 1;
        return s;
    }
    static Scalar from_int(Field f, long v) {
        Scalar s(f);
        if (f.is_rational())
            s.q_ = Rational(v);
        else
            s.r_ = detail::mod_reduce(v, f.p);
        return s;
    }
    static Scalar from_rational(Field f, const Rational& q) {
        if (!f.is_rational()) throw std::invalid_argument("rational literal in modular field");
        Scalar s(f);
        s.q_ = q;
        return s;
    }
    /// Parses "a" or "a/b" in either field; "a/b" mod p means a * b^{-1}.
    static Scalar parse(Field f, const std::string& text) {
        auto slash = text.find('/');
        if (f.is_rational()) return from_rational(f, Rational(text));
        if (slash == std::string::npos) return from_int(f, std::stol(text));
        Scalar num = from_int(f, std::stol(text.substr(0, slash)));
        Scalar den = from_int(f, std::stol(text.substr(slash + 1)));
        return num / den;
    }

    Field field() const { return f_; }
    bool is_zero() const { return f_.is_rational() ? q_.is_zero() : r_ == 0; }
    bool is_one() const { return f_.is_rational() ? q_.is_one() : r_ == 1; }

    const Rational& rat() const { return q_; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.match(b);
        Scalar s(a.f_);
        if (a.f_.is_rational())
            s.q_ = a.q_ + b.q_;
        else
            s.r_ = detail::mod_reduce(a.r_ + b.r_, a.f_.p);
        return s;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        a.match(b);
        Scalar s(a.f_);
        if (a.f_.is_rational())
            s.q_ = a.q_ - b.q_;
        else
            s.r_ = detail::mod_reduce(a.r_ - b.r_, a.f_.p);
        return s;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.match(b);
        Scalar s(a.f_);
        if (a.f_.is_rational())
            s.q_ = a.q_ * b.q_;
        else
            s.r_ = detail::mod_reduce(a.r_ * b.r_, a.f_.p);
        return s;
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        a.match(b);
        if (b.is_zero()) throw std::domain_error("division by zero scalar");
        Scalar s(a.f_);
        if (a.f_.is_rational())
            s.q_ = a.q_ / b.q_;
        else
            s.r_ = detail::mod_reduce(a.r_ * detail::mod_inverse(b.r_, a.f_.p), a.f_.p);
        return s;
    }
    Scalar operator-() const {
        Scalar s(f_);
        if (f_.is_rational())
            s.q_ = -q_;
        else
            s.r_ = r_ == 0 ? 0 : f_.p - r_;
        return s;
    }
    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero scalar");
        Scalar s(f_);
        if (f_.is_rational())
            s.q_ = q_.inverse();
        else
            s.r_ = detail::mod_inverse(r_, f_.p);
        return s;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.f_ != b.f_) return false;
        return a.f_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const {
        return f_.is_rational() ? q_.str() : std::to_string(r_);
    }

private:
    explicit Scalar(Field f) : f_(f) {}
    void match(const Scalar& o) const {
        if (f_ != o.f_) throw std::invalid_argument("scalar field mismatch");
    }

    Field f_{};
    Rational q_{};
    std::int64_t r_ = 0;
};

} // namespace blowup

#endif
