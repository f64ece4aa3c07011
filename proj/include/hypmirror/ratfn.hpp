#pragma once

#include "hypmirror/poly.hpp"

#include <map>
#include <string>

namespace hypmirror {

// Rational function in canonical form: numerator and denominator are true
// polynomials with no common polynomial or monomial factor, the denominator
// is integer-primitive with positive leading coefficient, and all rational
// scaling sits in the numerator.
struct RationalFn {
    LaurentPoly num;
    LaurentPoly den;

    RationalFn() : num(LaurentPoly()), den(LaurentPoly::constant(Rational(1))) {}

    static RationalFn from(const LaurentPoly& n, const LaurentPoly& d);

    static RationalFn from_poly(const LaurentPoly& p) {
        return from(p, LaurentPoly::constant(Rational(1)));
    }

    static RationalFn constant(const Rational& c) {
        return from_poly(LaurentPoly::constant(c));
    }

    static RationalFn variable(const std::string& name, int exp = 1) {
        return from_poly(LaurentPoly::variable(name, exp));
    }

    bool is_zero() const { return num.is_zero(); }

    bool is_one() const {
        return num == LaurentPoly::constant(Rational(1)) && den == LaurentPoly::constant(Rational(1));
    }

    bool is_constant() const { return num.is_constant() && den.is_constant(); }

    Rational constant_value() const {
        return num.constant_value() / den.constant_value();
    }

    bool operator==(const RationalFn& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RationalFn& o) const { return !(*this == o); }
};

inline RationalFn RationalFn::from(const LaurentPoly& n, const LaurentPoly& d) {
    if (d.is_zero())
        throw math_error("rational function with zero denominator");
    RationalFn out;
    if (n.is_zero()) {
        out.num = LaurentPoly();
        out.den = LaurentPoly::constant(Rational(1));
        return out;
    }
    MonomialSplit sn = monomial_split(n);
    MonomialSplit sd = monomial_split(d);
    LaurentPoly g = poly_gcd(sn.body, sd.body);
    LaurentPoly N = *poly_div_exact(sn.body, g);
    LaurentPoly D = *poly_div_exact(sd.body, g);

    // net monomial, split by exponent sign between numerator and denominator
    std::map<std::string, int> net;
    for (size_t j = 0; j < sn.vars.size(); ++j)
        net[sn.vars[j]] += sn.exps[j];
    for (size_t j = 0; j < sd.vars.size(); ++j)
        net[sd.vars[j]] -= sd.exps[j];
    for (const auto& [name, e] : net) {
        if (e > 0)
            N = N * LaurentPoly::variable(name, e);
        else if (e < 0)
            D = D * LaurentPoly::variable(name, -e);
    }
    out.num = (sn.coeff / sd.coeff) * N;
    out.den = D;
    return out;
}

inline RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn::from(a.num * b.den + b.num * a.den, a.den * b.den);
}

inline RationalFn operator-(const RationalFn& a) {
    RationalFn out = a;
    out.num = -out.num;
    return out;
}

inline RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

inline RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn::from(a.num * b.num, a.den * b.den);
}

inline RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero())
        throw math_error("division by zero rational function");
    return RationalFn::from(a.num * b.den, a.den * b.num);
}

inline RationalFn pow(const RationalFn& f, int n) {
    if (n == 0)
        return RationalFn::constant(Rational(1));
    if (n < 0) {
        if (f.is_zero())
            throw math_error("negative power of zero");
        return pow(RationalFn::from(f.den, f.num), -n);
    }
    RationalFn acc = RationalFn::constant(Rational(1));
    RationalFn base = f;
    int k = n;
    while (k > 0) {
        if (k & 1)
            acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

inline RationalFn derivative(const RationalFn& f, const std::string& var) {
    LaurentPoly n = derivative(f.num, var) * f.den - f.num * derivative(f.den, var);
    return RationalFn::from(n, f.den * f.den);
}

// coefficient of d(var) in dlog f
inline RationalFn dlog_coeff(const RationalFn& f, const std::string& var) {
    if (f.is_zero())
        throw math_error("dlog of zero");
    return derivative(f, var) / f;
}

// evaluate a polynomial with variables replaced by rational functions;
// unmapped variables stay as themselves
inline RationalFn substitute(const LaurentPoly& p, const std::map<std::string, RationalFn>& sub) {
    RationalFn acc;
    for (const auto& [e, c] : p.terms) {
        RationalFn term = RationalFn::constant(c);
        for (size_t j = 0; j < p.vars.size(); ++j) {
            if (e[j] == 0)
                continue;
            auto it = sub.find(p.vars[j]);
            RationalFn g = it != sub.end() ? it->second : RationalFn::variable(p.vars[j]);
            term = term * pow(g, e[j]);
        }
        acc = acc + term;
    }
    return acc;
}

inline RationalFn substitute(const RationalFn& f, const std::map<std::string, RationalFn>& sub) {
    RationalFn d = substitute(f.den, sub);
    if (d.is_zero())
        throw math_error("substitution lands on a pole");
    return substitute(f.num, sub) / d;
}

inline std::string ratfn_str(const RationalFn& f) {
    if (f.den == LaurentPoly::constant(Rational(1)))
        return poly_str(f.num);
    std::string n = poly_str(f.num);
    std::string d = poly_str(f.den);
    if (f.num.terms.size() > 1)
        n = "(" + n + ")";
    if (f.den.terms.size() > 1)
        d = "(" + d + ")";
    return n + "/" + d;
}

} // namespace hypmirror
