#ifndef BLOWUP_RATIONAL_HPP
#define BLOWUP_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <string>
#include <utility>

namespace blowup {

/// Arbitrary-precision rational number backed by GMP's mpq_t.
/// Always canonical: reduced, positive denominator.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(const Rational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational(long n) { mpq_init(q_); mpq_set_si(q_, n, 1); } // NOLINT(google-explicit-constructor)
    Rational(long n, long d) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
        mpq_t den;
        mpq_init(den);
        mpq_set_si(den, d, 1);
        mpq_div(q_, q_, den);
        mpq_clear(den);
    }
    /// Parses "123", "-4/5". Throws std::invalid_argument on malformed input.
    explicit Rational(const std::string& s) {
        mpq_init(q_);
        if (mpq_set_str(q_, s.c_str(), 10) != 0) {
            mpq_clear(q_);
            throw std::invalid_argument("malformed rational literal: " + s);
        }
        mpq_canonicalize(q_);
    }
    ~Rational() { mpq_clear(q_); }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rational& operator/=(const Rational& o) { mpq_div(q_, q_, o.q_); return *this; }

    Rational inverse() const {
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }
    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    /// gcd(num a, num b) / lcm(den a, den b); used to make coefficient
    /// vectors primitive before reduction.
    static Rational content_gcd(const Rational& a, const Rational& b) {
        Rational r;
        mpz_gcd(mpq_numref(r.q_), mpq_numref(a.q_), mpq_numref(b.q_));
        mpz_lcm(mpq_denref(r.q_), mpq_denref(a.q_), mpq_denref(b.q_));
        mpq_canonicalize(r.q_);
        return r;
    }

    std::string str() const {
        char* raw = mpq_get_str(nullptr, 10, q_);
        std::string s(raw);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(raw, s.size() + 1);
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_t q_;
};

} // namespace blowup

#endif
