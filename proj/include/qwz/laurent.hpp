#ifndef QWZ_LAURENT_HPP
#define QWZ_LAURENT_HPP

#include <array>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "qwz/rational.hpp"

namespace qwz {

// Monomial exponents for the three formal variables, which may be negative.
// Throughout the engine t = q^(1/L), X stands for t^n and K for t^k, so a
// shift n -> n+1 is the substitution X -> t*X (and likewise K -> t*K).
struct Exp3 {
    int t = 0;
    int x = 0;
    int k = 0;

    long total() const { return static_cast<long>(t) + x + k; }
    Exp3 operator+(const Exp3& o) const { return {t + o.t, x + o.x, k + o.k}; }
    Exp3 operator-(const Exp3& o) const { return {t - o.t, x - o.x, k - o.k}; }
    bool operator==(const Exp3& o) const { return t == o.t && x == o.x && k == o.k; }
};

// Graded-lex, t > X > K; "greater" puts the leading term first in map order.
struct GradedLexGreater {
    bool operator()(const Exp3& a, const Exp3& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        if (a.t != b.t) return a.t > b.t;
        if (a.x != b.x) return a.x > b.x;
        return a.k > b.k;
    }
};

// Sparse Laurent polynomial over Q in (t, X, K).  No zero coefficients are
// stored and terms iterate in descending graded-lex order, so the text form
// is unique.
class LaurentPoly {
  public:
    using TermMap = std::map<Exp3, Rational, GradedLexGreater>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (!c.is_zero()) terms_[Exp3{}] = c;
    }
    static LaurentPoly monomial(const Rational& c, Exp3 e) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }
    static LaurentPoly variable_t(int e = 1) { return monomial(rat(1), {e, 0, 0}); }
    static LaurentPoly variable_x(int e = 1) { return monomial(rat(1), {0, e, 0}); }
    static LaurentPoly variable_k(int e = 1) { return monomial(rat(1), {0, 0, e}); }
    static LaurentPoly one() { return LaurentPoly(rat(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp3{}); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == Exp3{} && terms_.begin()->second.is_one(); }

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    // Leading term in graded-lex order; polynomial must be nonzero.
    const std::pair<const Exp3, Rational>& leading() const {
        if (terms_.empty()) throw DomainError("LaurentPoly: leading term of zero");
        return *terms_.begin();
    }

    Rational coeff(Exp3 e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(Exp3 e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
        LaurentPoly r;
        if (c.is_zero()) return r;
        for (const auto& [e, pc] : p.terms_) r.terms_[e] = c * pc;
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(terms_ == o.terms_); }

    LaurentPoly pow(int e) const;

    // Monomial-shift multiply: p * t^dt * X^dx * K^dk.
    LaurentPoly shifted(Exp3 d) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + d] = c;
        return r;
    }

    // Substitution X -> t^s * X (the n -> n+s shift); s may be negative.
    LaurentPoly subst_x_shift(int s) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[Exp3{e.t + s * e.x, e.x, e.k}] = c;
        return r;
    }
    // Substitution K -> t^s * K (the k -> k+s shift).
    LaurentPoly subst_k_shift(int s) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[Exp3{e.t + s * e.k, e.x, e.k}] = c;
        return r;
    }
    // Substitution K -> t^s (kills K; used to evaluate certificates at k = const).
    LaurentPoly subst_k_power(int s) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.add_term(Exp3{e.t + s * e.k, e.x, 0}, c);
        return r;
    }
    // Substitution X -> t^s (kills X).
    LaurentPoly subst_x_power(int s) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.add_term(Exp3{e.t + s * e.x, 0, e.k}, c);
        return r;
    }

    // Exact evaluation at rational points (t, x, k); exponents may be negative.
    Rational eval(const Rational& t, const Rational& x, const Rational& k) const;

    std::array<int, 3> min_exponents() const;
    std::array<int, 3> max_exponents() const;
    int degree_t() const { return max_exponents()[0]; }
    int degree_x() const { return max_exponents()[1]; }
    int degree_k() const { return max_exponents()[2]; }
    bool has_var_x() const;
    bool has_var_k() const;
    bool has_var_t() const;

    // Plain-polynomial predicate: no negative exponents anywhere.
    bool is_polynomial() const {
        auto m = min_exponents();
        return m[0] >= 0 && m[1] >= 0 && m[2] >= 0;
    }

    // Content: gcd of coefficients as a positive rational (num-gcd / den-lcm),
    // signed so that content * primitive_part == *this with primitive leading
    // coefficient positive.
    Rational content() const;
    LaurentPoly primitive_part() const;

    // Exact division; returns false if o does not divide *this.
    bool divide_exact(const LaurentPoly& o, LaurentPoly& quotient) const;

    // Canonical text form, e.g. "2*t^2*X - 1/3*K^-1 + 4".
    std::string str() const;

  private:
    TermMap terms_;
};

// Multivariate gcd over Q (primitive PRS).  Result is primitive with positive
// leading coefficient; gcd(0, p) = normalized p.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

} // namespace qwz

#endif
