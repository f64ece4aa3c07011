#pragma once

#include "hypmirror/rational.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hypmirror {

struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// Sparse Laurent polynomial over the rationals. The variable universe is the
// sorted list of names actually used; exponent vectors align with it. Zero
// coefficients and unused variables are pruned, so equal polynomials have
// identical representations.
struct LaurentPoly {
    std::vector<std::string> vars;
    std::map<std::vector<int>, Rational> terms;

    LaurentPoly() = default;

    static LaurentPoly constant(const Rational& c) {
        LaurentPoly p;
        if (c != 0)
            p.terms.emplace(std::vector<int>{}, c);
        return p;
    }

    static LaurentPoly variable(const std::string& name, int exp = 1) {
        if (exp == 0)
            return constant(Rational(1));
        LaurentPoly p;
        p.vars.push_back(name);
        p.terms.emplace(std::vector<int>{exp}, Rational(1));
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    bool is_constant() const {
        if (terms.empty())
            return true;
        if (terms.size() != 1)
            return false;
        const auto& e = terms.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    Rational constant_value() const {
        assert(is_constant());
        return terms.empty() ? Rational(0) : terms.begin()->second;
    }

    bool is_monomial() const { return terms.size() == 1; }

    // true polynomial: no negative exponents
    bool is_polynomial() const {
        for (const auto& [e, c] : terms)
            for (int x : e)
                if (x < 0)
                    return false;
        return true;
    }

    int var_index(const std::string& name) const {
        auto it = std::lower_bound(vars.begin(), vars.end(), name);
        if (it == vars.end() || *it != name)
            return -1;
        return static_cast<int>(it - vars.begin());
    }

    bool operator==(const LaurentPoly& o) const { return vars == o.vars && terms == o.terms; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
};

namespace detail {

// drop unused variables so representation is canonical
inline void prune(LaurentPoly& p) {
    int n = static_cast<int>(p.vars.size());
    std::vector<bool> used(n, false);
    for (const auto& [e, c] : p.terms)
        for (int j = 0; j < n; ++j)
            if (e[j] != 0)
                used[j] = true;
    bool all = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
    if (all)
        return;
    std::vector<std::string> nv;
    std::vector<int> keep;
    for (int j = 0; j < n; ++j)
        if (used[j]) {
            nv.push_back(p.vars[j]);
            keep.push_back(j);
        }
    std::map<std::vector<int>, Rational> nt;
    for (const auto& [e, c] : p.terms) {
        std::vector<int> ne(keep.size());
        for (size_t j = 0; j < keep.size(); ++j)
            ne[j] = e[keep[j]];
        nt.emplace(std::move(ne), c);
    }
    p.vars = std::move(nv);
    p.terms = std::move(nt);
}

// remap a polynomial into a larger universe (vars must be a superset)
inline LaurentPoly embed(const LaurentPoly& p, const std::vector<std::string>& universe) {
    LaurentPoly out;
    out.vars = universe;
    std::vector<int> pos(p.vars.size());
    for (size_t j = 0; j < p.vars.size(); ++j) {
        auto it = std::lower_bound(universe.begin(), universe.end(), p.vars[j]);
        assert(it != universe.end() && *it == p.vars[j]);
        pos[j] = static_cast<int>(it - universe.begin());
    }
    for (const auto& [e, c] : p.terms) {
        std::vector<int> ne(universe.size(), 0);
        for (size_t j = 0; j < p.vars.size(); ++j)
            ne[pos[j]] = e[j];
        out.terms.emplace(std::move(ne), c);
    }
    return out;
}

inline std::vector<std::string> merge_universes(const std::vector<std::string>& a,
                                                const std::vector<std::string>& b) {
    std::vector<std::string> u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

} // namespace detail

inline void align(LaurentPoly& a, LaurentPoly& b) {
    if (a.vars == b.vars)
        return;
    std::vector<std::string> u = detail::merge_universes(a.vars, b.vars);
    a = detail::embed(a, u);
    b = detail::embed(b, u);
}

inline LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly a = x, b = y;
    align(a, b);
    for (const auto& [e, c] : b.terms) {
        auto [it, fresh] = a.terms.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                a.terms.erase(it);
        }
    }
    detail::prune(a);
    return a;
}

inline LaurentPoly operator-(const LaurentPoly& p) {
    LaurentPoly out = p;
    for (auto& [e, c] : out.terms)
        c = -c;
    return out;
}

inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

inline LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly a = x, b = y;
    align(a, b);
    LaurentPoly out;
    out.vars = a.vars;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e(ea.size());
            for (size_t j = 0; j < ea.size(); ++j)
                e[j] = ea[j] + eb[j];
            Rational c = ca * cb;
            auto [it, fresh] = out.terms.emplace(std::move(e), c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0)
                    out.terms.erase(it);
            }
        }
    detail::prune(out);
    return out;
}

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
    if (c == 0)
        return LaurentPoly();
    LaurentPoly out = p;
    for (auto& [e, v] : out.terms)
        v *= c;
    return out;
}

// nonnegative powers always work; negative powers only for monomials
inline LaurentPoly pow(const LaurentPoly& p, int n) {
    if (n == 0)
        return LaurentPoly::constant(Rational(1));
    if (n < 0) {
        if (!p.is_monomial())
            throw math_error("negative power of a non-monomial");
        LaurentPoly inv;
        inv.vars = p.vars;
        const auto& [e, c] = *p.terms.begin();
        std::vector<int> ie(e.size());
        for (size_t j = 0; j < e.size(); ++j)
            ie[j] = -e[j];
        inv.terms.emplace(std::move(ie), Rational(1) / c);
        return pow(inv, -n);
    }
    LaurentPoly acc = LaurentPoly::constant(Rational(1));
    LaurentPoly base = p;
    int k = n;
    while (k > 0) {
        if (k & 1)
            acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

inline LaurentPoly derivative(const LaurentPoly& p, const std::string& var) {
    int idx = p.var_index(var);
    if (idx < 0)
        return LaurentPoly();
    LaurentPoly out;
    out.vars = p.vars;
    for (const auto& [e, c] : p.terms) {
        if (e[idx] == 0)
            continue;
        std::vector<int> ne = e;
        Rational nc = c * e[idx];
        ne[idx] -= 1;
        out.terms.emplace(std::move(ne), nc);
    }
    detail::prune(out);
    return out;
}

// substitute integer values won't be needed; rational-point evaluation is
inline Rational eval(const LaurentPoly& p, const std::map<std::string, Rational>& point) {
    Rational acc = 0;
    for (const auto& [e, c] : p.terms) {
        Rational term = c;
        for (size_t j = 0; j < p.vars.size(); ++j) {
            if (e[j] == 0)
                continue;
            auto it = point.find(p.vars[j]);
            if (it == point.end())
                throw math_error("eval: missing value for " + p.vars[j]);
            Rational base = it->second;
            int k = e[j];
            if (k < 0) {
                if (base == 0)
                    throw math_error("eval: zero raised to a negative power");
                base = Rational(1) / base;
                k = -k;
            }
            for (int s = 0; s < k; ++s)
                term *= base;
        }
        acc += term;
    }
    return acc;
}

// factor out the largest monomial: p = c * x^e * q with q a true polynomial
// having zero minimum exponent in each variable and constant content one.
struct MonomialSplit {
    Rational coeff;
    std::vector<std::string> vars;
    std::vector<int> exps;
    LaurentPoly body;
};

inline Rational rational_content(const LaurentPoly& p) {
    Int g = 0, l = 1;
    for (const auto& [e, c] : p.terms) {
        g = int_gcd(g, num(c));
        l = int_lcm(l, den(c));
    }
    if (g == 0)
        return Rational(0);
    return Rational(g, l);
}

inline MonomialSplit monomial_split(const LaurentPoly& p) {
    MonomialSplit out;
    out.coeff = Rational(1);
    out.vars = p.vars;
    if (p.is_zero()) {
        out.coeff = Rational(0);
        out.body = LaurentPoly();
        return out;
    }
    int n = static_cast<int>(p.vars.size());
    out.exps.assign(n, 0);
    for (int j = 0; j < n; ++j) {
        bool first = true;
        for (const auto& [e, c] : p.terms) {
            if (first || e[j] < out.exps[j])
                out.exps[j] = e[j];
            first = false;
        }
    }
    out.coeff = rational_content(p);
    // sign convention: body's lexicographically largest term is positive
    const auto& lead = *p.terms.rbegin();
    if (lead.second < 0)
        out.coeff = -out.coeff;
    LaurentPoly body;
    body.vars = p.vars;
    for (const auto& [e, c] : p.terms) {
        std::vector<int> ne(n);
        for (int j = 0; j < n; ++j)
            ne[j] = e[j] - out.exps[j];
        body.terms.emplace(std::move(ne), c / out.coeff);
    }
    detail::prune(body);
    out.body = std::move(body);
    return out;
}

namespace detail {

inline int degree_in(const LaurentPoly& p, int idx) {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms) {
        if (first || e[idx] > d)
            d = e[idx];
        first = false;
    }
    return d;
}

// coefficient of var^k, with that variable's exponent zeroed (same universe)
inline LaurentPoly coeff_of(const LaurentPoly& p, int idx, int k) {
    LaurentPoly out;
    out.vars = p.vars;
    for (const auto& [e, c] : p.terms) {
        if (e[idx] != k)
            continue;
        std::vector<int> ne = e;
        ne[idx] = 0;
        out.terms.emplace(std::move(ne), c);
    }
    prune(out);
    return out;
}

} // namespace detail

// Exact multivariate division for true polynomials; nullopt when not exact.
// Universes are re-aligned every round because arithmetic prunes them.
inline std::optional<LaurentPoly> poly_div_exact(const LaurentPoly& na, const LaurentPoly& nb) {
    if (nb.is_zero())
        throw math_error("division by zero polynomial");
    LaurentPoly a = na;
    LaurentPoly q;
    while (!a.is_zero()) {
        LaurentPoly b = nb;
        align(a, b);
        const auto& [ea, ca] = *a.terms.rbegin();
        const auto& [eb, cb] = *b.terms.rbegin();
        std::vector<int> de(ea.size());
        for (size_t j = 0; j < ea.size(); ++j) {
            de[j] = ea[j] - eb[j];
            if (de[j] < 0)
                return std::nullopt;
        }
        LaurentPoly t;
        t.vars = a.vars;
        t.terms.emplace(std::move(de), ca / cb);
        q = q + t;
        a = a - t * b;
    }
    return q;
}

inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

namespace detail {

// gcd of the main-variable coefficients
inline LaurentPoly content_in(const LaurentPoly& p, int idx) {
    LaurentPoly g;
    int d = degree_in(p, idx);
    for (int k = 0; k <= d; ++k) {
        LaurentPoly c = coeff_of(p, idx, k);
        if (c.is_zero())
            continue;
        g = g.is_zero() ? c : poly_gcd(g, c);
        if (g.is_constant())
            break;
    }
    return g;
}

// pseudo-remainder in the variable at index idx
inline LaurentPoly prem(LaurentPoly a, const LaurentPoly& b, const std::string& var) {
    int ib = b.var_index(var);
    assert(ib >= 0);
    int db = degree_in(b, ib);
    LaurentPoly lb = coeff_of(b, ib, db);
    for (;;) {
        if (a.is_zero())
            return a;
        int ia = a.var_index(var);
        int da = ia < 0 ? 0 : degree_in(a, ia);
        if (da < db)
            return a;
        LaurentPoly la = ia < 0 ? a : coeff_of(a, ia, da);
        LaurentPoly shift = LaurentPoly::variable(var, da - db);
        a = lb * a - la * shift * b;
    }
}

// integer-primitive with positive lexicographic leading coefficient
inline LaurentPoly normalize_primitive(const LaurentPoly& p) {
    if (p.is_zero())
        return p;
    Rational c = rational_content(p);
    if (p.terms.rbegin()->second < 0)
        c = -c;
    LaurentPoly out = p;
    for (auto& [e, v] : out.terms)
        v /= c;
    return out;
}

} // namespace detail

namespace detail {

inline Int int_content(const LaurentPoly& p) {
    Int g = 0;
    for (const auto& [e, c] : p.terms)
        g = int_gcd(g, num(c));
    return g;
}

inline Int norm_inf(const LaurentPoly& p) {
    Int m = 0;
    for (const auto& [e, c] : p.terms) {
        Int v = num(c);
        if (v < 0)
            v = -v;
        if (v > m)
            m = v;
    }
    return m;
}

inline LaurentPoly eval_var_int(const LaurentPoly& p, int idx, const Int& xi) {
    LaurentPoly out;
    out.vars = p.vars;
    for (const auto& [e, c] : p.terms) {
        Int scale = 1;
        for (int k = 0; k < e[idx]; ++k)
            scale *= xi;
        std::vector<int> ne = e;
        ne[idx] = 0;
        Rational v = c * Rational(scale);
        auto [it, fresh] = out.terms.emplace(std::move(ne), v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0)
                out.terms.erase(it);
        }
    }
    prune(out);
    return out;
}

// balanced residue of every integer coefficient
inline LaurentPoly smod_poly(const LaurentPoly& p, const Int& xi) {
    LaurentPoly out;
    out.vars = p.vars;
    Int half = xi / 2;
    for (const auto& [e, c] : p.terms) {
        Int r = num(c) % xi;
        if (r < 0)
            r += xi;
        if (r > half)
            r -= xi;
        if (r != 0)
            out.terms.emplace(e, Rational(r));
    }
    prune(out);
    return out;
}

// Heuristic gcd by evaluation at a large integer followed by base-xi digit
// reconstruction, division-verified at every level. Inputs must be integral
// true polynomials; the result is the full gcd over the integers, content
// included (the content carries the eliminated variable's xi powers, so it
// must survive the recursion intact).
inline std::optional<LaurentPoly> gcd_heuristic(LaurentPoly a, LaurentPoly b, int depth = 0) {
    if (depth > 12)
        return std::nullopt;
    align(a, b);
    if (a.is_constant() || b.is_constant()) {
        Int g = int_gcd(int_content(a), int_content(b));
        if (g < 0)
            g = -g;
        return LaurentPoly::constant(Rational(g));
    }
    // pull out the common integer content and reattach it on return
    Int shared = int_gcd(int_content(a), int_content(b));
    if (shared < 0)
        shared = -shared;
    if (shared > 1) {
        Rational inv(Int(1), shared);
        a = inv * a;
        b = inv * b;
    }
    int idx = -1;
    for (int j = static_cast<int>(a.vars.size()) - 1; j >= 0 && idx < 0; --j)
        if (degree_in(a, j) > 0 || degree_in(b, j) > 0)
            idx = j;
    if (idx < 0)
        return std::nullopt;
    std::string var = a.vars[idx];
    int dmax = std::max(degree_in(a, idx), degree_in(b, idx));

    Int na = norm_inf(a), nb = norm_inf(b);
    Int xi = 2 * (na < nb ? na : nb) + 2;
    if (xi < 4)
        xi = 4;
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (msb(xi) * static_cast<unsigned>(dmax + 1) > 40000)
            return std::nullopt; // evaluated coefficients would get too large
        LaurentPoly A = eval_var_int(a, idx, xi);
        LaurentPoly B = eval_var_int(b, idx, xi);
        if (!A.is_zero() && !B.is_zero()) {
            auto h = gcd_heuristic(A, B, depth + 1);
            if (h.has_value() && !h->is_zero()) {
                // base-xi digits of h are the candidate's coefficients
                LaurentPoly g;
                LaurentPoly rest = *h;
                bool ok = true;
                for (int k = 0; !rest.is_zero(); ++k) {
                    if (k > dmax) {
                        ok = false;
                        break;
                    }
                    LaurentPoly digit = smod_poly(rest, xi);
                    if (!digit.is_zero())
                        g = g + digit * LaurentPoly::variable(var, k);
                    rest = Rational(1, xi) * (rest - digit);
                }
                if (ok && !g.is_zero()) {
                    g = normalize_primitive(g);
                    if (poly_div_exact(a, g).has_value() && poly_div_exact(b, g).has_value())
                        return Rational(shared) * g;
                }
            }
        }
        xi = xi * (sqrt(xi) + 1);
    }
    return std::nullopt;
}

} // namespace detail

// GCD of true polynomials: heuristic evaluation gcd first (division-verified),
// primitive pseudo-remainder sequences as the deterministic fallback. The
// result is integer-primitive with positive leading coefficient; constants
// collapse to 1.
inline LaurentPoly poly_gcd(const LaurentPoly& na, const LaurentPoly& nb) {
    LaurentPoly a = na, b = nb;
    assert(a.is_polynomial() && b.is_polynomial());
    if (a.is_zero())
        return detail::normalize_primitive(b);
    if (b.is_zero())
        return detail::normalize_primitive(a);
    align(a, b);
    if (a.is_constant() || b.is_constant())
        return LaurentPoly::constant(Rational(1));

    {
        auto heu = detail::gcd_heuristic(detail::normalize_primitive(a), detail::normalize_primitive(b));
        if (heu.has_value())
            return detail::normalize_primitive(*heu);
    }

    // main variable: first one actually appearing
    int idx = -1;
    for (size_t j = 0; j < a.vars.size() && idx < 0; ++j)
        if (detail::degree_in(a, static_cast<int>(j)) > 0 || detail::degree_in(b, static_cast<int>(j)) > 0)
            idx = static_cast<int>(j);
    assert(idx >= 0);
    std::string var = a.vars[idx];

    int da = detail::degree_in(a, idx);
    int db = detail::degree_in(b, idx);
    if (da == 0 || db == 0) {
        // one side is free of the main variable: reduce to coefficient gcd
        const LaurentPoly& flat = da == 0 ? a : b;
        const LaurentPoly& tall = da == 0 ? b : a;
        return poly_gcd(flat, detail::content_in(tall, tall.var_index(var)));
    }

    LaurentPoly ca = detail::content_in(a, idx);
    LaurentPoly cb = detail::content_in(b, idx);
    LaurentPoly g = poly_gcd(ca, cb);
    LaurentPoly A = *poly_div_exact(a, ca);
    LaurentPoly B = *poly_div_exact(b, cb);
    if (da < db)
        std::swap(A, B);
    for (;;) {
        LaurentPoly r = detail::prem(A, B, var);
        if (r.is_zero())
            break;
        int ir = r.var_index(var);
        if (ir < 0 || detail::degree_in(r, ir) == 0) {
            // coprime in the main variable
            B = LaurentPoly::constant(Rational(1));
            break;
        }
        A = B;
        LaurentPoly cr = detail::content_in(r, ir);
        B = *poly_div_exact(r, cr);
    }
    return detail::normalize_primitive(g * B);
}

// term print order: constant first, then lexicographically descending
inline std::string poly_str(const LaurentPoly& p) {
    if (p.is_zero())
        return "0";
    std::vector<const std::pair<const std::vector<int>, Rational>*> order;
    const std::pair<const std::vector<int>, Rational>* cst = nullptr;
    for (const auto& t : p.terms) {
        bool zero = std::all_of(t.first.begin(), t.first.end(), [](int x) { return x == 0; });
        if (zero)
            cst = &t;
        else
            order.push_back(&t);
    }
    std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return x->first > y->first; });
    if (cst)
        order.insert(order.begin(), cst);

    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const Rational& c = t->second;
        std::string sign = c < 0 ? "-" : "+";
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << sign;
        first = false;
        Rational abs = c < 0 ? Rational(-c) : c;

        std::vector<std::string> factors;
        auto emit = [&](bool params) {
            for (size_t j = 0; j < p.vars.size(); ++j) {
                bool is_param = !p.vars[j].empty() && p.vars[j][0] == 'q';
                if (is_param != params || t->first[j] == 0)
                    continue;
                std::string f = p.vars[j];
                if (t->first[j] != 1)
                    f += "^" + std::to_string(t->first[j]);
                factors.push_back(f);
            }
        };
        emit(true);
        emit(false);
        if (factors.empty()) {
            os << rational_str(abs);
        } else {
            if (abs != 1)
                os << rational_str(abs) << "*";
            for (size_t j = 0; j < factors.size(); ++j) {
                if (j)
                    os << "*";
                os << factors[j];
            }
        }
    }
    return os.str();
}

} // namespace hypmirror
