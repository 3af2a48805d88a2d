#include "qwz/rational_function.hpp"

#include <ostream>

namespace qwz {

void RationalFunction::normalize() {
    if (den_.is_zero()) throw ZeroDenominator("RationalFunction: denominator is identically zero");
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }

    // Clear the denominator's negative exponents into the numerator.
    auto dmin = den_.min_exponents();
    Exp3 shift{-std::min(dmin[0], 0), -std::min(dmin[1], 0), -std::min(dmin[2], 0)};
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);

    // Reduce by the gcd of the polynomial parts (numerator units excluded).
    auto nmin = num_.min_exponents();
    Exp3 nunit{std::min(nmin[0], 0), std::min(nmin[1], 0), std::min(nmin[2], 0)};
    LaurentPoly npoly = num_.shifted(Exp3{-nunit.t, -nunit.x, -nunit.k});
    LaurentPoly g = poly_gcd(npoly, den_);
    if (!g.is_one()) {
        LaurentPoly qn, qd;
        if (!npoly.divide_exact(g, qn) || !den_.divide_exact(g, qd))
            throw DomainError("RationalFunction: gcd division failed");
        npoly = qn;
        den_ = qd;
    }
    num_ = npoly.shifted(nunit);

    // Cancel monomial units shared by numerator and denominator.
    nmin = num_.min_exponents();
    dmin = den_.min_exponents();
    Exp3 common{std::min(nmin[0], dmin[0]), std::min(nmin[1], dmin[1]), std::min(nmin[2], dmin[2])};
    common = {std::min(common.t, 0) == common.t && common.t > 0 ? 0 : common.t, common.x, common.k};
    // Only strip exponents that are positive in both (the denominator has no
    // negative ones at this point).
    Exp3 strip{std::max(0, std::min(nmin[0], dmin[0])), std::max(0, std::min(nmin[1], dmin[1])),
               std::max(0, std::min(nmin[2], dmin[2]))};
    if (strip.t || strip.x || strip.k) {
        num_ = num_.shifted(Exp3{-strip.t, -strip.x, -strip.k});
        den_ = den_.shifted(Exp3{-strip.t, -strip.x, -strip.k});
    }

    // Monic denominator under graded-lex.
    Rational lc = den_.leading().second;
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RationalFunction RationalFunction::pow(int e) const {
    if (e == 0) return one();
    RationalFunction base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    RationalFunction r = one();
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    if (num_.is_monomial())
        return n + " / (" + d + ")";
    return "(" + n + ") / (" + d + ")";
}

RationalFunction rf_normalize(const RationalFunction& f) {
    // Construction already normalizes; rebuilding makes idempotence explicit.
    return RationalFunction(f.num(), f.den());
}

bool rf_equal(const RationalFunction& f, const RationalFunction& g) {
    // Cross-multiplied zero test; no gcd needed.
    return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

} // namespace qwz
