#pragma once

#include "hypmirror/config.hpp"
#include "hypmirror/multiplicative.hpp"

#include <sstream>
#include <string>

namespace hypmirror {

namespace detail {

inline json rat_list(const std::vector<Rational>& xs) {
    json out = json::array();
    for (const auto& x : xs)
        out.push_back(rational_str(x));
    return out;
}

inline json int_list(const std::vector<Int>& xs) {
    json out = json::array();
    for (const auto& x : xs)
        out.push_back(int_str(x));
    return out;
}

inline json index_list(const std::vector<int>& xs, int base = 1) {
    json out = json::array();
    for (int x : xs)
        out.push_back(x + base);
    return out;
}

inline json matrix_rows(const IntMatrix& m) {
    json out = json::array();
    for (int r = 0; r < m.rows; ++r)
        out.push_back(int_list(m.row(r)));
    return out;
}

} // namespace detail

inline json normalized_report(const HypertoricData& h) {
    json out;
    out["d"] = h.d;
    out["n"] = h.n;
    json urows = json::array();
    for (int k = 0; k < h.n; ++k)
        urows.push_back(detail::int_list(h.ucol(k)));
    out["u"] = urows;
    out["dependency"] = detail::matrix_rows(h.a);
    out["lambdaR"] = detail::rat_list(h.lambdaR);
    out["tropConst"] = detail::rat_list(h.tropConst);
    out["tropConstDefaulted"] = h.tropConstDefaulted;
    out["permutation"] = detail::index_list(h.permutation);
    json kahler;
    if (h.kahlerMode == KahlerMode::Formal) {
        kahler["mode"] = "formal";
        json syms = json::array();
        for (int l = h.d; l < h.n; ++l)
            syms.push_back("q" + std::to_string(l + 1));
        kahler["symbols"] = syms;
    } else {
        kahler["mode"] = "numeric";
        kahler["values"] = detail::rat_list(h.kahlerValues);
    }
    out["kahler"] = kahler;
    out["complexLift"] = h.hasComplexLift;
    return out;
}

inline json check_report(const HypertoricData& h) {
    json out;
    out["task"] = "check";
    out["normalized"] = normalized_report(h);

    UnimodularReport uni = check_unimodular(h);
    json ju;
    ju["ok"] = uni.ok;
    if (!uni.ok) {
        ju["witnessCols"] = detail::index_list(uni.witnessCols);
        ju["witnessDet"] = int_str(uni.witnessDet);
    }
    out["unimodular"] = ju;

    SimpleReport simple = check_simple_real(h);
    json js;
    js["ok"] = simple.ok;
    if (!simple.ok)
        js["witness"] = detail::index_list(simple.witness);
    out["simple"] = js;

    SmoothReport smooth = check_smooth(h);
    json jm;
    jm["verdict"] = smooth.verdict == SmoothVerdict::SMOOTH
                        ? "SMOOTH"
                        : smooth.verdict == SmoothVerdict::ORBIFOLD ? "ORBIFOLD" : "SINGULAR";
    if (smooth.verdict != SmoothVerdict::SMOOTH) {
        jm["witness"] = detail::index_list(smooth.witness);
        jm["reason"] = smooth.reason;
    }
    out["smooth"] = jm;

    out["pass"] = uni.ok && simple.ok;
    return out;
}

inline json circuits_report(const HypertoricData& h) {
    json out;
    out["task"] = "circuits";
    auto cs = circuits(h);
    out["count"] = cs.size();
    json list = json::array();
    for (const auto& c : cs) {
        json jc;
        jc["support"] = detail::index_list(c.support);
        jc["plus"] = detail::index_list(c.plus);
        jc["minus"] = detail::index_list(c.minus);
        jc["beta"] = detail::int_list(c.beta);
        jc["distinguished"] = c.distinguished;
        if (c.distinguished)
            jc["ell"] = c.ell + 1;
        jc["monomial"] = poly_str(h.kahler_monomial(c.beta));
        list.push_back(std::move(jc));
    }
    out["circuits"] = list;
    return out;
}

inline json chambers_report(const TropicalArrangement& arr) {
    json out;
    out["task"] = "chambers";
    auto chambers = enumerate_chambers(arr);
    out["count"] = chambers.size();
    json list = json::array();
    for (const auto& c : chambers) {
        json jc;
        jc["label"] = c.h;
        jc["witness"] = detail::rat_list(c.witness);
        list.push_back(std::move(jc));
    }
    out["chambers"] = list;
    return out;
}

inline json strata_report(const HypertoricData& h, const TropicalArrangement& arr) {
    json out;
    out["task"] = "strata";
    auto strata = enumerate_strata(arr);
    out["count"] = strata.size();
    json list = json::array();
    for (const auto& s : strata) {
        json js;
        json ties;
        for (const auto& [k, labels] : s.ties)
            ties[std::to_string(k + 1)] = labels;
        js["ties"] = ties;
        js["dim"] = s.dim;
        js["admissible"] = admissible(s, h);
        list.push_back(std::move(js));
    }
    out["strata"] = list;
    return out;
}

inline json mirror_report(const HypertoricData& h, const TropicalArrangement& arr) {
    json out;
    out["task"] = "mirror";
    json eqs = json::array();
    for (const auto& eq : mirror_equations(h))
        eqs.push_back(equation_str(eq));
    out["equations"] = eqs;
    json gfs = json::array();
    for (const auto& c : enumerate_chambers(arr)) {
        json jc;
        jc["chamber"] = c.h;
        json us = json::array(), vs = json::array();
        for (int j = 0; j < h.d; ++j) {
            auto [u, v] = generating_functions(h, c.h, j);
            us.push_back(poly_str(u));
            vs.push_back(poly_str(v));
        }
        jc["u"] = us;
        jc["v"] = vs;
        gfs.push_back(std::move(jc));
    }
    out["generatingFunctions"] = gfs;
    return out;
}

inline json atlas_report(const Atlas& atlas) {
    json out;
    out["task"] = "atlas";
    out["chamberCharts"] = atlas.chamberCharts.size();
    out["stratumCharts"] = atlas.stratumCharts.size();
    out["adjacencies"] = atlas.adjacencies.size();
    out["transitions"] = atlas.adjacencies.size(); // one crossing map per adjacency pair
    out["embeddings"] = atlas.embeddings.size();
    json stratumCharts = json::array();
    for (const auto& sc : atlas.stratumCharts) {
        json jc;
        jc["tied"] = detail::index_list(sc.tied);
        json vars = json::array();
        for (const auto& group : sc.xvars)
            for (const auto& v : group)
                vars.push_back(v);
        for (const auto& v : sc.yvars)
            vars.push_back(v);
        jc["vars"] = vars;
        json rels = json::array();
        for (size_t t = 0; t < sc.tied.size(); ++t) {
            std::string lhs;
            for (const auto& v : sc.xvars[t]) {
                if (!lhs.empty())
                    lhs += "*";
                lhs += v;
            }
            rels.push_back(lhs + " = " + poly_str(sc.relationRhs[t]));
        }
        jc["relations"] = rels;
        stratumCharts.push_back(std::move(jc));
    }
    out["stratumChartDetails"] = stratumCharts;
    return out;
}

inline json verify_report(const Atlas& atlas) {
    json out;
    out["task"] = "verify";
    AtlasReport rep = verify_atlas(atlas);
    json ja;
    ja["inverses"] = rep.inverses;
    ja["cocycles"] = rep.cocycles;
    ja["stratumCompatibility"] = rep.stratumCompat;
    ja["globalDescent"] = rep.globalDescent;
    ja["triangles"] = rep.triangleCount;
    ja["failures"] = rep.failures;
    out["atlas"] = ja;

    VolumeReport vol = verify_volume_form(atlas);
    json jv;
    jv["ok"] = vol.ok;
    jv["signs"] = vol.signs;
    if (!vol.failures.empty())
        jv["failures"] = vol.failures;
    out["volumeForm"] = jv;

    int nonzero = 0;
    for (const auto& r : symplectic_residuals(atlas))
        if (!r.is_zero())
            ++nonzero;
    out["symplecticResidualsNonzero"] = nonzero;
    out["pass"] = rep.ok() && vol.ok;
    return out;
}

inline json multiplicative_report(const HypertoricData& h) {
    json out;
    out["task"] = "multiplicative";
    PiMatrix pi = pi_matrix(h);
    out["piMatrix"] = detail::matrix_rows(pi.m);
    out["totallyUnimodular"] = pi.totallyUnimodular;
    if (!pi.totallyUnimodular) {
        json w;
        w["rows"] = detail::index_list(pi.witness.rows);
        w["cols"] = detail::index_list(pi.witness.cols);
        w["det"] = int_str(pi.witness.det);
        out["witnessMinor"] = w;
        out["pass"] = false;
        return out;
    }
    InvariantGenerators gen = invariant_generators(pi);
    json jz = json::array(), jw = json::array();
    for (int i = 0; i < h.d; ++i) {
        jz.push_back(poly_str(gen.z[static_cast<size_t>(i)]));
        jw.push_back(poly_str(gen.w[static_cast<size_t>(i)]));
    }
    out["generatorsZ"] = jz;
    out["generatorsW"] = jw;
    PhiReport rep = verify_phi(h);
    json jp;
    jp["ok"] = rep.ok;
    json res = json::array();
    for (const auto& r : rep.residuals)
        res.push_back(r.is_zero() ? "0" : poly_str(r.num) + " / " + poly_str(r.den));
    jp["residuals"] = res;
    out["phi"] = jp;
    out["pass"] = rep.ok;
    return out;
}

inline json periods_report(const HypertoricData& h) {
    json out;
    out["task"] = "periods";
    PeriodSupport ps = period_support(h);
    json loci = json::array();
    for (const auto& l : ps.loci)
        loci.push_back(poly_str(l.monomial) + " = -1");
    out["loci"] = loci;
    out["note"] = ps.note;
    return out;
}

} // namespace hypmirror
