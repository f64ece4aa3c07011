#pragma once

#include "hypmirror/ratfn.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace hypmirror {

// Differential form with rational-function coefficients, written in the
// coordinate basis: components are indexed by sorted tuples of variable
// names, one coefficient per wedge of coordinate differentials.
struct LogForm {
    int degree = 0;
    std::map<std::vector<std::string>, RationalFn> comps;

    static LogForm zero(int degree) {
        LogForm f;
        f.degree = degree;
        return f;
    }

    static LogForm function(const RationalFn& c) {
        LogForm f;
        f.degree = 0;
        if (!c.is_zero())
            f.comps.emplace(std::vector<std::string>{}, c);
        return f;
    }

    static LogForm one_form(const std::string& var, const RationalFn& coeff) {
        LogForm f;
        f.degree = 1;
        if (!coeff.is_zero())
            f.comps.emplace(std::vector<std::string>{var}, coeff);
        return f;
    }

    bool is_zero() const { return comps.empty(); }

    bool operator==(const LogForm& o) const { return degree == o.degree && comps == o.comps; }
    bool operator!=(const LogForm& o) const { return !(*this == o); }
};

inline LogForm operator+(const LogForm& a, const LogForm& b) {
    if (a.degree != b.degree)
        throw math_error("adding forms of different degree");
    LogForm out = a;
    for (const auto& [k, c] : b.comps) {
        auto [it, fresh] = out.comps.emplace(k, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero())
                out.comps.erase(it);
        }
    }
    return out;
}

inline LogForm operator*(const RationalFn& s, const LogForm& f) {
    LogForm out = LogForm::zero(f.degree);
    if (s.is_zero())
        return out;
    for (const auto& [k, c] : f.comps)
        out.comps.emplace(k, s * c);
    return out;
}

inline LogForm operator-(const LogForm& a, const LogForm& b) {
    return a + (RationalFn::constant(Rational(-1)) * b);
}

inline LogForm wedge(const LogForm& a, const LogForm& b) {
    LogForm out = LogForm::zero(a.degree + b.degree);
    for (const auto& [ka, ca] : a.comps)
        for (const auto& [kb, cb] : b.comps) {
            // drop terms with a repeated differential, count inversions for sign
            bool repeat = false;
            int inversions = 0;
            for (const auto& s : ka)
                for (const auto& t : kb) {
                    if (s == t) {
                        repeat = true;
                        break;
                    }
                    if (t < s)
                        ++inversions;
                }
            if (repeat)
                continue;
            std::vector<std::string> key;
            key.reserve(ka.size() + kb.size());
            std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(key));
            RationalFn c = ca * cb;
            if (inversions % 2)
                c = -c;
            auto [it, fresh] = out.comps.emplace(std::move(key), c);
            if (!fresh) {
                it->second = it->second + c;
                if (it->second.is_zero())
                    out.comps.erase(it);
            }
        }
    return out;
}

inline std::set<std::string> rf_vars(const RationalFn& f) {
    std::set<std::string> vs(f.num.vars.begin(), f.num.vars.end());
    vs.insert(f.den.vars.begin(), f.den.vars.end());
    return vs;
}

// exterior derivative of a function, relative to the base: variables in
// `params` count as constants
inline LogForm d(const RationalFn& f, const std::set<std::string>& params = {}) {
    LogForm out = LogForm::zero(1);
    for (const std::string& v : rf_vars(f)) {
        if (params.count(v))
            continue;
        RationalFn c = derivative(f, v);
        if (!c.is_zero())
            out.comps.emplace(std::vector<std::string>{v}, c);
    }
    return out;
}

inline LogForm dlog(const RationalFn& f, const std::set<std::string>& params = {}) {
    if (f.is_zero())
        throw math_error("dlog of zero");
    return pow(f, -1) * d(f, params);
}

// substitute coordinates through a map; unmapped variables pull back to
// themselves
inline LogForm pullback(const LogForm& form, const std::map<std::string, RationalFn>& sub,
                        const std::set<std::string>& params = {}) {
    LogForm out = LogForm::zero(form.degree);
    for (const auto& [key, coeff] : form.comps) {
        LogForm piece = LogForm::function(substitute(coeff, sub));
        for (const std::string& x : key) {
            auto it = sub.find(x);
            LogForm dx = it != sub.end()
                             ? d(it->second, params)
                             : LogForm::one_form(x, RationalFn::constant(Rational(1)));
            piece = wedge(piece, dx);
        }
        out = out + piece;
    }
    return out;
}

} // namespace hypmirror
