#ifndef QWZ_RATIONAL_FUNCTION_HPP
#define QWZ_RATIONAL_FUNCTION_HPP

#include <string>

#include "qwz/laurent.hpp"

namespace qwz {

// Rational function over Q(t)(X, K) kept in canonical form: the denominator
// is a plain polynomial (no negative exponents, negative exponents are
// cleared into the numerator), it is coprime to the numerator's polynomial
// part, and its graded-lex leading coefficient is 1.  With those rules the
// representation, and hence the text form, is unique.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(LaurentPoly::one()) {}
    explicit RationalFunction(const LaurentPoly& num) : num_(num), den_(LaurentPoly::one()) {}
    explicit RationalFunction(const Rational& c) : num_(LaurentPoly(c)), den_(LaurentPoly::one()) {}
    RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) { normalize(); }

    static RationalFunction one() { return RationalFunction(LaurentPoly::one()); }
    static RationalFunction zero() { return RationalFunction(); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RationalFunction operator-() const {
        RationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw ZeroDenominator("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction inverse() const {
        if (is_zero()) throw ZeroDenominator("RationalFunction: inverse of zero");
        return RationalFunction(den_, num_);
    }
    RationalFunction pow(int e) const;

    // The n -> n+s / k -> k+s substitutions (X -> t^s X, K -> t^s K).
    RationalFunction shift_n(int s) const {
        RationalFunction r;
        r.num_ = num_.subst_x_shift(s);
        r.den_ = den_.subst_x_shift(s);
        r.normalize();
        return r;
    }
    RationalFunction shift_k(int s) const {
        RationalFunction r;
        r.num_ = num_.subst_k_shift(s);
        r.den_ = den_.subst_k_shift(s);
        r.normalize();
        return r;
    }
    // Evaluate the K (resp. X) variable at t^s.
    RationalFunction at_k_power(int s) const {
        LaurentPoly d = den_.subst_k_power(s);
        if (d.is_zero()) throw ZeroDenominator("RationalFunction: denominator vanishes at K = t^" + std::to_string(s));
        return RationalFunction(num_.subst_k_power(s), d);
    }
    RationalFunction at_x_power(int s) const {
        LaurentPoly d = den_.subst_x_power(s);
        if (d.is_zero()) throw ZeroDenominator("RationalFunction: denominator vanishes at X = t^" + std::to_string(s));
        return RationalFunction(num_.subst_x_power(s), d);
    }

    Rational eval(const Rational& t, const Rational& x, const Rational& k) const {
        Rational d = den_.eval(t, x, k);
        if (d.is_zero()) throw ZeroDenominator("RationalFunction: pole at evaluation point");
        return num_.eval(t, x, k) / d;
    }

    std::string str() const;

  private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

// Spec-level entry points.
RationalFunction rf_normalize(const RationalFunction& f);
bool rf_equal(const RationalFunction& f, const RationalFunction& g);

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

} // namespace qwz

#endif
