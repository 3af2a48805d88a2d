#ifndef QWZ_RATIONAL_HPP
#define QWZ_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "qwz/errors.hpp"

namespace qwz {

// Arbitrary-precision rational, always canonical: gcd(|num|, den) = 1,
// den > 0, zero is 0/1.  Thin RAII wrapper over GMP's mpq_t.
class Rational {
  public:
    Rational() { mpq_init(v_); }
    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational(long n) { // NOLINT(google-explicit-constructor)
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(long num, long den) {
        mpq_init(v_);
        if (den == 0) throw ZeroDenominator("Rational: zero denominator");
        mpq_set_si(v_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(v_, v_, d);
        mpq_clear(d);
    }
    // Accepts "p", "-p", "p/q"; whitespace is not allowed.
    explicit Rational(const std::string& s) {
        mpq_init(v_);
        if (mpq_set_str(v_, s.c_str(), 10) != 0) {
            mpq_clear(v_);
            throw DomainError("Rational: cannot parse '" + s + "'");
        }
        if (mpz_sgn(mpq_denref(v_)) == 0) {
            mpq_clear(v_);
            throw ZeroDenominator("Rational: zero denominator in '" + s + "'");
        }
        mpq_canonicalize(v_);
    }
    ~Rational() { mpq_clear(v_); }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw ZeroDenominator("Rational: division by zero");
        Rational r;
        mpq_div(r.v_, a.v_, b.v_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.v_, v_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDenominator("Rational: division by zero");
        mpq_div(v_, v_, o.v_);
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) >= 0; }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
    int sgn() const { return mpq_sgn(v_); }
    Rational abs() const {
        Rational r;
        mpq_abs(r.v_, v_);
        return r;
    }
    Rational inverse() const {
        if (is_zero()) throw ZeroDenominator("Rational: inverse of zero");
        Rational r;
        mpq_inv(r.v_, v_);
        return r;
    }

    // Integer power; negative exponents invert.
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        const Rational base = e < 0 ? inverse() : *this;
        unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        Rational r;
        mpz_pow_ui(mpq_numref(r.v_), mpq_numref(base.v_), n);
        mpz_pow_ui(mpq_denref(r.v_), mpq_denref(base.v_), n);
        return r;
    }

    // Valid only for integers that fit in a long.
    long to_long() const {
        if (!is_integer()) throw DomainError("Rational: not an integer");
        if (!mpz_fits_slong_p(mpq_numref(v_))) throw Overflow("Rational: integer too large for long");
        return mpz_get_si(mpq_numref(v_));
    }

    // Denominator as a long (for lcm-of-denominators bookkeeping).
    long den_long() const {
        if (!mpz_fits_slong_p(mpq_denref(v_))) throw Overflow("Rational: denominator too large");
        return mpz_get_si(mpq_denref(v_));
    }

    std::string str() const {
        char* raw = mpq_get_str(nullptr, 10, v_);
        std::string s(raw);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(raw, s.size() + 1);
        return s;
    }

    double to_double() const { return mpq_get_d(v_); }

    std::size_t hash() const {
        std::size_t h = mpz_get_ui(mpq_numref(v_)) * 1000003u + mpz_get_ui(mpq_denref(v_));
        return h ^ (static_cast<std::size_t>(mpq_sgn(v_) + 1) << 24);
    }

    const __mpq_struct* raw() const { return v_; }

    static Rational from_mpq(mpq_srcptr q) {
        Rational r;
        mpq_set(r.v_, q);
        return r;
    }

  private:
    mpq_t v_;
};

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) { return Rational(n, d); }

// lcm of the denominators of a list of rationals (at least 1).
long lcm_denominators(std::initializer_list<Rational> xs);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace qwz

#endif
