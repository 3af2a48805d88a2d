#include "qwz/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qwz {

namespace {

int exp_get(const Exp3& e, int var) { return var == 0 ? e.t : var == 1 ? e.x : e.k; }

void exp_set(Exp3& e, int var, int val) {
    if (var == 0)
        e.t = val;
    else if (var == 1)
        e.x = val;
    else
        e.k = val;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpq_t tmp;
    mpq_init(tmp);
    mpz_gcd(mpq_numref(tmp), mpq_numref(a.raw()), mpq_numref(b.raw()));
    mpz_lcm(mpq_denref(tmp), mpq_denref(a.raw()), mpq_denref(b.raw()));
    mpq_canonicalize(tmp);
    Rational out = Rational::from_mpq(tmp);
    mpq_clear(tmp);
    return out;
}

} // namespace

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) throw DomainError("LaurentPoly::pow: negative exponent");
    LaurentPoly r = one();
    LaurentPoly base = *this;
    int n = e;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

Rational LaurentPoly::eval(const Rational& t, const Rational& x, const Rational& k) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        if (e.t != 0) m *= t.pow(e.t);
        if (e.x != 0) m *= x.pow(e.x);
        if (e.k != 0) m *= k.pow(e.k);
        acc += m;
    }
    return acc;
}

std::array<int, 3> LaurentPoly::min_exponents() const {
    std::array<int, 3> m{0, 0, 0};
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (first) {
            m = {e.t, e.x, e.k};
            first = false;
        } else {
            m[0] = std::min(m[0], e.t);
            m[1] = std::min(m[1], e.x);
            m[2] = std::min(m[2], e.k);
        }
    }
    return m;
}

std::array<int, 3> LaurentPoly::max_exponents() const {
    std::array<int, 3> m{0, 0, 0};
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (first) {
            m = {e.t, e.x, e.k};
            first = false;
        } else {
            m[0] = std::max(m[0], e.t);
            m[1] = std::max(m[1], e.x);
            m[2] = std::max(m[2], e.k);
        }
    }
    return m;
}

bool LaurentPoly::has_var_x() const {
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (e.x != 0) return true;
    }
    return false;
}

bool LaurentPoly::has_var_k() const {
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (e.k != 0) return true;
    }
    return false;
}

bool LaurentPoly::has_var_t() const {
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (e.t != 0) return true;
    }
    return false;
}

Rational LaurentPoly::content() const {
    if (terms_.empty()) return Rational(0);
    Rational g(0);
    for (const auto& [e, c] : terms_) {
        (void)e;
        g = rational_gcd(g, c);
    }
    if (leading().second.sgn() < 0) g = -g;
    return g;
}

LaurentPoly LaurentPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    LaurentPoly r;
    for (const auto& [e, cc] : terms_) r.terms_[e] = cc / c;
    return r;
}

bool LaurentPoly::divide_exact(const LaurentPoly& o, LaurentPoly& quotient) const {
    if (o.is_zero()) throw ZeroDenominator("LaurentPoly: division by zero polynomial");
    quotient = LaurentPoly();
    if (is_zero()) return true;

    // Total degree window any quotient monomial must fall in; stepping below
    // the floor proves non-divisibility and guarantees termination.
    long min_self = 0, min_o = 0;
    {
        bool first = true;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (first || e.total() < min_self) min_self = e.total();
            first = false;
        }
        first = true;
        for (const auto& [e, c] : o.terms_) {
            (void)c;
            if (first || e.total() < min_o) min_o = e.total();
            first = false;
        }
    }
    const long floor_total = min_self - min_o;

    LaurentPoly rem = *this;
    const auto& dlead = o.leading();
    while (!rem.is_zero()) {
        const auto& rlead = rem.leading();
        Exp3 me = rlead.first - dlead.first;
        if (me.total() < floor_total) return false;
        Rational mc = rlead.second / dlead.second;
        quotient.add_term(me, mc);
        rem -= LaurentPoly::monomial(mc, me) * o;
    }
    return true;
}

namespace {

// Recursive-form helpers for the PRS gcd: view p as a dense polynomial in
// `var` with LaurentPoly coefficients (p must have nonnegative exponents in
// `var`).
std::vector<LaurentPoly> split_by_var(const LaurentPoly& p, int var) {
    std::vector<LaurentPoly> out;
    for (const auto& [e, c] : p.terms()) {
        int d = exp_get(e, var);
        if (static_cast<int>(out.size()) <= d) out.resize(d + 1);
        Exp3 rest = e;
        exp_set(rest, var, 0);
        out[d].add_term(rest, c);
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

LaurentPoly join_by_var(const std::vector<LaurentPoly>& coeffs, int var) {
    LaurentPoly p;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        for (const auto& [e, c] : coeffs[d].terms()) {
            Exp3 full = e;
            exp_set(full, var, static_cast<int>(d));
            p.add_term(full, c);
        }
    }
    return p;
}

// Content of p with respect to `var`: gcd of its var-coefficients.
LaurentPoly content_in_var(const LaurentPoly& p, int var) {
    auto coeffs = split_by_var(p, var);
    LaurentPoly g;
    for (const auto& c : coeffs)
        if (!c.is_zero()) g = poly_gcd(g, c);
    return g;
}

// Pseudo-remainder of a by b in `var` (both nonzero, deg_a >= deg_b >= 0).
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b, int var) {
    auto bc = split_by_var(b, var);
    const int db = static_cast<int>(bc.size()) - 1;
    const LaurentPoly& blead = bc[db];
    while (true) {
        auto ac = split_by_var(a, var);
        const int da = static_cast<int>(ac.size()) - 1;
        if (a.is_zero() || da < db) return a;
        // a <- blead * a - alead * v^(da-db) * b
        LaurentPoly alead_shift = ac[da];
        Exp3 sh{};
        exp_set(sh, var, da - db);
        a = blead * a - (alead_shift * b).shifted(sh);
    }
}

Rational normalize_sign(const LaurentPoly& p) { return p.leading().second.sgn() < 0 ? Rational(-1) : Rational(1); }

} // namespace

LaurentPoly poly_gcd(const LaurentPoly& a_in, const LaurentPoly& b_in) {
    if (a_in.is_zero() && b_in.is_zero()) return LaurentPoly();
    // Work with unit-normalized plain polynomials; Laurent units are
    // irrelevant for gcds.
    auto normalize = [](const LaurentPoly& p) {
        auto m = p.min_exponents();
        return p.shifted(Exp3{-m[0], -m[1], -m[2]});
    };
    if (a_in.is_zero()) {
        LaurentPoly b = normalize(b_in).primitive_part();
        return normalize_sign(b) * b;
    }
    if (b_in.is_zero()) {
        LaurentPoly a = normalize(a_in).primitive_part();
        return normalize_sign(a) * a;
    }

    LaurentPoly a = normalize(a_in);
    LaurentPoly b = normalize(b_in);
    if (a.is_constant() || b.is_constant()) return LaurentPoly::one();

    // Pick the present variable with the smallest max degree.
    auto ma = a.max_exponents();
    auto mb = b.max_exponents();
    int var = -1;
    long best = 0;
    for (int v = 0; v < 3; ++v) {
        if (ma[v] == 0 && mb[v] == 0) continue;
        long worst = std::max(ma[v], mb[v]);
        if (var < 0 || worst < best) {
            var = v;
            best = worst;
        }
    }
    if (var < 0) return LaurentPoly::one();

    LaurentPoly ca = content_in_var(a, var);
    LaurentPoly cb = content_in_var(b, var);
    LaurentPoly cg = poly_gcd(ca, cb);

    LaurentPoly pa, pb;
    if (!a.divide_exact(ca, pa) || !b.divide_exact(cb, pb))
        throw DomainError("poly_gcd: content division failed");

    // Primitive PRS in `var`.
    if (split_by_var(pa, var).size() < split_by_var(pb, var).size()) std::swap(pa, pb);
    while (!pb.is_zero()) {
        LaurentPoly r = pseudo_rem(pa, pb, var);
        if (!r.is_zero()) {
            LaurentPoly rc = content_in_var(r, var);
            LaurentPoly rp;
            if (!r.divide_exact(rc, rp)) throw DomainError("poly_gcd: primitive part failed");
            r = rp;
        }
        pa = pb;
        pb = r;
    }
    if (split_by_var(pa, var).size() <= 1) pa = LaurentPoly::one();

    LaurentPoly g = cg * pa;
    g = g.primitive_part();
    return normalize_sign(g) * g;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational ac = c.abs();
        if (first) {
            if (c.sgn() < 0) os << "-";
            first = false;
        } else {
            os << (c.sgn() < 0 ? " - " : " + ");
        }
        std::string vars;
        auto append_var = [&vars](const char* name, int exp) {
            if (exp == 0) return;
            if (!vars.empty()) vars += "*";
            vars += name;
            if (exp != 1) {
                vars += "^";
                vars += std::to_string(exp);
            }
        };
        append_var("t", e.t);
        append_var("X", e.x);
        append_var("K", e.k);
        if (vars.empty()) {
            os << ac.str();
        } else if (ac.is_one()) {
            os << vars;
        } else {
            os << ac.str() << "*" << vars;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

long lcm_denominators(std::initializer_list<Rational> xs) {
    long l = 1;
    for (const auto& x : xs) {
        long d = x.den_long();
        long g = std::gcd(l, d);
        l = l / g * d;
    }
    return l;
}

} // namespace qwz
