#pragma once

#include "hypmirror/logform.hpp"
#include "hypmirror/ratfn.hpp"
#include "hypmirror/tropical.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace hypmirror {

inline std::string uvar(int j) { return "u" + std::to_string(j + 1); }
inline std::string vvar(int j) { return "v" + std::to_string(j + 1); }
inline std::string zvar(int i) { return "Z" + std::to_string(i + 1); }

// the global wall factor variable: Z_k itself for k < d, the derived
// monomial q_l prod Z_i^{a_li} for dependent columns
inline LaurentPoly z_factor(const HypertoricData& h, int k) {
    if (k < h.d)
        return LaurentPoly::variable(zvar(k));
    LaurentPoly m = h.kahler_factor(k);
    for (int i = 0; i < h.d; ++i) {
        Int a = h.aENT(k, i);
        if (a == 0)
            continue;
        if (a < -1000 || a > 1000)
            throw math_error("dependency exponent out of range");
        m = m * pow(LaurentPoly::variable(zvar(i)), static_cast<int>(a));
    }
    return m;
}

// hyperplanes whose vector has a nonzero j-th coordinate
inline std::vector<int> divisor_index_set(const HypertoricData& h, int j) {
    std::vector<int> out{j};
    for (int l = h.d; l < h.n; ++l)
        if (h.aENT(l, j) != 0)
            out.push_back(l);
    return out;
}

enum class DiscEnd { Minus, Plus };

struct DiscClass {
    int j = 0; // divisor index, 0-based
    DiscEnd end = DiscEnd::Minus;
    std::vector<int> alphas;      // wall indices with coefficient one
    std::vector<Int> beta, alpha; // homology over (beta_1..beta_d, alpha_1..alpha_n)
};

// wall indices a Maslov-two class ending on the given divisor side may cross
inline std::vector<int> disc_wall_set(const HypertoricData& h, const std::vector<int>& label,
                                      int j, DiscEnd end) {
    std::vector<int> out;
    if (end == DiscEnd::Minus) {
        for (int k = 0; k < h.n; ++k)
            if (label[static_cast<size_t>(k)] == j + 1)
                out.push_back(k);
    } else {
        for (int k : divisor_index_set(h, j))
            if (label[static_cast<size_t>(k)] != j + 1)
                out.push_back(k);
    }
    return out;
}

inline std::vector<DiscClass> maslov2_classes(const HypertoricData& h, const std::vector<int>& label,
                                              int j, DiscEnd end) {
    std::vector<int> walls = disc_wall_set(h, label, j, end);
    std::vector<DiscClass> out;
    for (int size = 0; size <= static_cast<int>(walls.size()); ++size)
        detail::subsets_of_size(static_cast<int>(walls.size()), size, [&](const std::vector<int>& pos) {
            DiscClass c;
            c.j = j;
            c.end = end;
            c.beta.assign(static_cast<size_t>(h.d), Int(0));
            c.alpha.assign(static_cast<size_t>(h.n), Int(0));
            c.beta[static_cast<size_t>(j)] = 1;
            for (int p : pos) {
                c.alphas.push_back(walls[static_cast<size_t>(p)]);
                c.alpha[static_cast<size_t>(walls[static_cast<size_t>(p)])] = 1;
            }
            out.push_back(std::move(c));
        });
    return out;
}

// one disc through a generic point iff the class fits the admissible
// pattern: a single unit beta component and unit alpha coefficients on
// walls the corresponding end may cross
inline int open_gw(const HypertoricData& h, const std::vector<int>& label,
                   const std::vector<Int>& beta, const std::vector<Int>& alpha, DiscEnd end) {
    int j = -1;
    for (int i = 0; i < h.d; ++i) {
        if (beta[static_cast<size_t>(i)] == 0)
            continue;
        if (beta[static_cast<size_t>(i)] != 1 || j >= 0)
            return 0;
        j = i;
    }
    if (j < 0)
        return 0;
    std::vector<int> walls = disc_wall_set(h, label, j, end);
    for (int k = 0; k < h.n; ++k) {
        Int a = alpha[static_cast<size_t>(k)];
        if (a == 0)
            continue;
        if (a != 1)
            return 0;
        if (std::find(walls.begin(), walls.end(), k) == walls.end())
            return 0;
    }
    return 1;
}

// quantum-corrected coordinates on the chamber chart, gauge constants one
inline std::pair<LaurentPoly, LaurentPoly> generating_functions(const HypertoricData& h,
                                                                const std::vector<int>& label,
                                                                int j) {
    LaurentPoly one = LaurentPoly::constant(Rational(1));
    LaurentPoly z = LaurentPoly::variable(uvar(j));
    LaurentPoly u = z, v = pow(z, -1);
    for (int k : disc_wall_set(h, label, j, DiscEnd::Minus))
        u = u * (one + z_factor(h, k));
    for (int k : disc_wall_set(h, label, j, DiscEnd::Plus))
        v = v * (one + z_factor(h, k));
    return {u, v};
}

struct MirrorEquation {
    int j = 0;                           // 0-based coordinate
    LaurentPoly lhs;                     // u_j * v_j
    std::vector<LaurentPoly> rhsFactors; // 1 + wall factor, ascending k
    LaurentPoly rhs;                     // expanded product
};

inline std::vector<MirrorEquation> mirror_equations(const HypertoricData& h) {
    std::vector<MirrorEquation> out;
    for (int j = 0; j < h.d; ++j) {
        MirrorEquation eq;
        eq.j = j;
        eq.lhs = LaurentPoly::variable(uvar(j)) * LaurentPoly::variable(vvar(j));
        eq.rhs = LaurentPoly::constant(Rational(1));
        for (int k : divisor_index_set(h, j)) {
            LaurentPoly f = LaurentPoly::constant(Rational(1)) + z_factor(h, k);
            eq.rhsFactors.push_back(f);
            eq.rhs = eq.rhs * f;
        }
        out.push_back(std::move(eq));
    }
    return out;
}

inline std::string equation_str(const MirrorEquation& eq) {
    std::string s = uvar(eq.j) + "*" + vvar(eq.j) + " = ";
    for (size_t i = 0; i < eq.rhsFactors.size(); ++i) {
        if (i)
            s += "*";
        s += "(" + poly_str(eq.rhsFactors[i]) + ")";
    }
    return s;
}

struct ChamberChart {
    int chamber = -1;                 // index in the enumerated chamber list
    std::vector<std::string> uvars;   // invertible semiflat coordinates
    std::vector<std::string> zvars;   // global coordinates
    std::vector<RationalFn> gfU, gfV; // global functions on this chart
};

struct StratumChart {
    int stratum = -1; // index in the enumerated strata list
    std::vector<int> tied;
    std::vector<std::vector<std::string>> xvars; // per tied hyperplane
    std::vector<std::string> yvars;
    std::vector<std::string> zvars;
    std::vector<LaurentPoly> relationRhs; // 1 + wall factor per tied hyperplane
};

struct Transition {
    int from = -1, to = -1;                // chamber indices
    std::map<std::string, RationalFn> sub; // target variable -> source expression
};

struct Embedding {
    int chamber = -1, stratumChart = -1;
    std::map<std::string, RationalFn> sub; // stratum variable -> chamber expression
};

struct Atlas {
    HypertoricData data;
    TropicalArrangement arr;
    std::vector<ChamberLabel> chambers;
    std::vector<Stratum> strata;
    std::vector<ChamberAdjacency> adjacencies;
    std::vector<ChamberChart> chamberCharts;
    std::vector<StratumChart> stratumCharts; // admissible strata only
    std::vector<Transition> transitions;     // both directions per adjacency
    std::vector<Embedding> embeddings;
};

namespace detail {

inline RationalFn monomial_in_u(const std::vector<Int>& expvec) {
    RationalFn m = RationalFn::constant(Rational(1));
    for (size_t i = 0; i < expvec.size(); ++i) {
        Int e = expvec[i];
        if (e == 0)
            continue;
        m = m * pow(RationalFn::variable(uvar(static_cast<int>(i))), static_cast<int>(e));
    }
    return m;
}

} // namespace detail

inline Transition make_transition(const HypertoricData& h, const std::vector<int>& from,
                                  const std::vector<int>& to) {
    Transition t;
    t.sub.clear();
    auto ws = wall_sets(from, to, h.d);
    for (int j = 0; j < h.d; ++j) {
        RationalFn e = RationalFn::variable(uvar(j));
        auto it = ws.find(j + 1);
        if (it != ws.end()) {
            const WallSet& w = it->second;
            if (w.mixed)
                throw input_error("mixed wall set: transition is only defined along adjacencies");
            int expo = w.deltaBwd - w.deltaFwd;
            if (expo != 0) {
                RationalFn f = RationalFn::constant(Rational(1));
                for (int k : w.members)
                    f = f * RationalFn::from_poly(LaurentPoly::constant(Rational(1)) + z_factor(h, k));
                e = e * pow(f, expo);
            }
        }
        t.sub[uvar(j)] = e;
    }
    for (int i = 0; i < h.d; ++i)
        t.sub[zvar(i)] = RationalFn::variable(zvar(i));
    return t;
}

// Chamber charts for every chamber, stratum charts for admissible strata,
// crossing maps along facet adjacencies, and open embeddings for every
// chamber touching an admissible stratum.
inline Atlas build_atlas(const HypertoricData& h) {
    Atlas atlas;
    atlas.data = h;
    atlas.arr = build_tropical(h);
    atlas.chambers = enumerate_chambers(atlas.arr);
    atlas.strata = enumerate_strata(atlas.arr);
    atlas.adjacencies = chamber_adjacencies(atlas.arr);

    for (size_t c = 0; c < atlas.chambers.size(); ++c) {
        ChamberChart chart;
        chart.chamber = static_cast<int>(c);
        for (int j = 0; j < h.d; ++j)
            chart.uvars.push_back(uvar(j));
        for (int i = 0; i < h.d; ++i)
            chart.zvars.push_back(zvar(i));
        for (int j = 0; j < h.d; ++j) {
            auto [u, v] = generating_functions(h, atlas.chambers[c].h, j);
            chart.gfU.push_back(RationalFn::from_poly(u));
            chart.gfV.push_back(RationalFn::from_poly(v));
        }
        atlas.chamberCharts.push_back(std::move(chart));
    }

    for (const auto& adj : atlas.adjacencies) {
        const auto& ha = atlas.chambers[static_cast<size_t>(adj.chamberA)].h;
        const auto& hb = atlas.chambers[static_cast<size_t>(adj.chamberB)].h;
        Transition fwd = make_transition(h, ha, hb);
        fwd.from = adj.chamberA;
        fwd.to = adj.chamberB;
        Transition bwd = make_transition(h, hb, ha);
        bwd.from = adj.chamberB;
        bwd.to = adj.chamberA;
        atlas.transitions.push_back(std::move(fwd));
        atlas.transitions.push_back(std::move(bwd));
    }

    for (size_t si = 0; si < atlas.strata.size(); ++si) {
        const Stratum& s = atlas.strata[si];
        if (!admissible(s, h))
            continue;
        StratumFrame frame = stratum_frame(s, atlas.arr);
        StratumChart chart;
        chart.stratum = static_cast<int>(si);
        chart.tied = frame.tiedHyperplanes;
        for (size_t t = 0; t < frame.tiedHyperplanes.size(); ++t) {
            std::vector<std::string> xs;
            for (size_t i = 0; i < frame.facetNormals[t].size(); ++i)
                xs.push_back("x" + std::to_string(frame.tiedHyperplanes[t] + 1) + "_" +
                             std::to_string(i + 1));
            chart.xvars.push_back(xs);
            chart.relationRhs.push_back(LaurentPoly::constant(Rational(1)) +
                                        z_factor(h, frame.tiedHyperplanes[t]));
        }
        for (size_t k = 0; k < frame.tangent.size(); ++k)
            chart.yvars.push_back("y" + std::to_string(k + 1));
        for (int i = 0; i < h.d; ++i)
            chart.zvars.push_back(zvar(i));
        int chartIdx = static_cast<int>(atlas.stratumCharts.size());

        const CovectorCell& cell = atlas.arr.cells[static_cast<size_t>(s.cellIndices[0])];
        for (size_t c = 0; c < atlas.chambers.size(); ++c) {
            const auto& label = atlas.chambers[c].h;
            if (!chamber_touches_cell(label, cell))
                continue;
            Embedding emb;
            emb.chamber = static_cast<int>(c);
            emb.stratumChart = chartIdx;
            for (size_t k = 0; k < frame.tangent.size(); ++k)
                emb.sub[chart.yvars[k]] = detail::monomial_in_u(frame.tangent[k]);
            for (size_t t = 0; t < frame.tiedHyperplanes.size(); ++t) {
                int jk = frame.tiedHyperplanes[t];
                RationalFn wall = RationalFn::from_poly(LaurentPoly::constant(Rational(1)) +
                                                        z_factor(h, jk));
                for (size_t i = 0; i < frame.facetNormals[t].size(); ++i) {
                    RationalFn x = detail::monomial_in_u(frame.facetNormals[t][i]);
                    // the wall factor sits on the x whose opposite vertex is
                    // the chamber's dominant monomial
                    if (frame.vertexLabels[t][i] == label[static_cast<size_t>(jk)])
                        x = x * wall;
                    emb.sub[chart.xvars[t][i]] = x;
                }
            }
            for (int i = 0; i < h.d; ++i)
                emb.sub[zvar(i)] = RationalFn::variable(zvar(i));
            atlas.embeddings.push_back(std::move(emb));
        }
        atlas.stratumCharts.push_back(std::move(chart));
    }
    return atlas;
}

struct AtlasReport {
    bool inverses = true;
    bool cocycles = true;
    bool stratumCompat = true;
    bool globalDescent = true;
    int triangleCount = 0;
    std::vector<std::string> failures;
    bool ok() const { return inverses && cocycles && stratumCompat && globalDescent; }
};

namespace detail {

inline std::map<std::string, RationalFn> compose_subs(const std::map<std::string, RationalFn>& first,
                                                      const std::map<std::string, RationalFn>& second) {
    // apply `first`, then `second`: expressions of the final chart's
    // variables in the initial chart's variables
    std::map<std::string, RationalFn> out;
    for (const auto& [var, expr] : second)
        out[var] = substitute(expr, first);
    return out;
}

inline bool is_identity_sub(const std::map<std::string, RationalFn>& sub) {
    for (const auto& [var, expr] : sub)
        if (!(expr == RationalFn::variable(var)))
            return false;
    return true;
}

} // namespace detail

inline AtlasReport verify_atlas(const Atlas& atlas) {
    AtlasReport rep;
    const HypertoricData& h = atlas.data;

    auto transition_between = [&](int a, int b) -> const Transition* {
        for (const auto& t : atlas.transitions)
            if (t.from == a && t.to == b)
                return &t;
        return nullptr;
    };

    // (1) crossing maps invert each other
    for (const auto& t : atlas.transitions) {
        const Transition* back = transition_between(t.to, t.from);
        if (!back) {
            rep.inverses = false;
            rep.failures.push_back("missing reverse transition " + std::to_string(t.to) + "->" +
                                   std::to_string(t.from));
            continue;
        }
        if (!detail::is_identity_sub(detail::compose_subs(t.sub, back->sub))) {
            rep.inverses = false;
            rep.failures.push_back("inverse check failed between chambers " + std::to_string(t.from) +
                                   " and " + std::to_string(t.to));
        }
    }

    // (2) cocycle on all adjacency triangles
    std::set<std::pair<int, int>> edge;
    for (const auto& t : atlas.transitions)
        edge.insert({t.from, t.to});
    int nc = static_cast<int>(atlas.chambers.size());
    for (int a = 0; a < nc; ++a)
        for (int b = a + 1; b < nc; ++b) {
            if (!edge.count({a, b}))
                continue;
            for (int c = b + 1; c < nc; ++c) {
                if (!edge.count({a, c}) || !edge.count({b, c}))
                    continue;
                ++rep.triangleCount;
                auto ab = transition_between(a, b)->sub;
                auto bc = transition_between(b, c)->sub;
                auto ca = transition_between(c, a)->sub;
                if (!detail::is_identity_sub(
                        detail::compose_subs(detail::compose_subs(ab, bc), ca))) {
                    rep.cocycles = false;
                    rep.failures.push_back("cocycle failed on triangle " + std::to_string(a) + "," +
                                           std::to_string(b) + "," + std::to_string(c));
                }
            }
        }

    // (3) crossing a wall then embedding equals embedding directly
    auto embedding_of = [&](int chamber, int chartIdx) -> const Embedding* {
        for (const auto& e : atlas.embeddings)
            if (e.chamber == chamber && e.stratumChart == chartIdx)
                return &e;
        return nullptr;
    };
    for (const auto& t : atlas.transitions)
        for (size_t sc = 0; sc < atlas.stratumCharts.size(); ++sc) {
            const Embedding* fromA = embedding_of(t.from, static_cast<int>(sc));
            const Embedding* fromB = embedding_of(t.to, static_cast<int>(sc));
            if (!fromA || !fromB)
                continue;
            auto composed = detail::compose_subs(t.sub, fromB->sub);
            for (const auto& [var, expr] : fromA->sub) {
                if (!(composed.at(var) == expr)) {
                    rep.stratumCompat = false;
                    rep.failures.push_back("chamber-stratum compatibility failed: chart " +
                                           std::to_string(sc) + " variable " + var +
                                           " via chambers " + std::to_string(t.from) + "->" +
                                           std::to_string(t.to));
                }
            }
        }

    // (4) global functions descend and satisfy the mirror equations
    for (const auto& t : atlas.transitions) {
        const ChamberChart& src = atlas.chamberCharts[static_cast<size_t>(t.from)];
        const ChamberChart& dst = atlas.chamberCharts[static_cast<size_t>(t.to)];
        for (int j = 0; j < h.d; ++j) {
            bool okU = substitute(dst.gfU[static_cast<size_t>(j)], t.sub) ==
                       src.gfU[static_cast<size_t>(j)];
            bool okV = substitute(dst.gfV[static_cast<size_t>(j)], t.sub) ==
                       src.gfV[static_cast<size_t>(j)];
            if (!okU || !okV) {
                rep.globalDescent = false;
                rep.failures.push_back("global function " +
                                       std::string(okU ? "v" : "u") + std::to_string(j + 1) +
                                       " does not descend across " + std::to_string(t.from) +
                                       "->" + std::to_string(t.to));
            }
        }
    }
    for (const auto& chart : atlas.chamberCharts) {
        for (int j = 0; j < h.d; ++j) {
            RationalFn prod = RationalFn::constant(Rational(1));
            for (int k : divisor_index_set(h, j))
                prod = prod * RationalFn::from_poly(LaurentPoly::constant(Rational(1)) +
                                                    z_factor(h, k));
            if (!(chart.gfU[static_cast<size_t>(j)] * chart.gfV[static_cast<size_t>(j)] == prod)) {
                rep.globalDescent = false;
                rep.failures.push_back("mirror equation fails on chamber chart " +
                                       std::to_string(chart.chamber) + " coordinate " +
                                       std::to_string(j + 1));
            }
        }
    }
    for (const auto& emb : atlas.embeddings) {
        const StratumChart& chart = atlas.stratumCharts[static_cast<size_t>(emb.stratumChart)];
        for (size_t t = 0; t < chart.tied.size(); ++t) {
            RationalFn prod = RationalFn::constant(Rational(1));
            for (const auto& xv : chart.xvars[t])
                prod = prod * emb.sub.at(xv);
            if (!(prod == RationalFn::from_poly(chart.relationRhs[t]))) {
                rep.globalDescent = false;
                rep.failures.push_back("stratum relation fails under embedding of chamber " +
                                       std::to_string(emb.chamber) + " into chart " +
                                       std::to_string(emb.stratumChart));
            }
        }
    }
    return rep;
}

struct VolumeReport {
    bool ok = true;
    std::vector<int> signs; // per transition, same order as atlas.transitions
    std::vector<std::string> failures;
};

// Kahler parameters live in the base field, so relative differentials
// treat them as constants
inline std::set<std::string> kahler_param_names(const HypertoricData& h) {
    std::set<std::string> out;
    if (h.kahlerMode == KahlerMode::Formal)
        for (int l = h.d; l < h.n; ++l)
            out.insert("q" + std::to_string(l + 1));
    return out;
}

// pullback of the top form wedge_i dlog u_i ^ dlog Z_i along every
// chamber-chamber transition must equal the form up to sign
inline VolumeReport verify_volume_form(const Atlas& atlas) {
    VolumeReport rep;
    int d = atlas.data.d;
    std::set<std::string> params = kahler_param_names(atlas.data);
    LogForm omega = LogForm::function(RationalFn::constant(Rational(1)));
    for (int i = 0; i < d; ++i)
        omega = wedge(wedge(omega, dlog(RationalFn::variable(uvar(i)))),
                      dlog(RationalFn::variable(zvar(i))));
    for (const auto& t : atlas.transitions) {
        LogForm pulled = pullback(omega, t.sub, params);
        if (pulled == omega) {
            rep.signs.push_back(1);
        } else if (pulled == RationalFn::constant(Rational(-1)) * omega) {
            rep.signs.push_back(-1);
        } else {
            rep.ok = false;
            rep.signs.push_back(0);
            rep.failures.push_back("volume form not preserved up to sign across " +
                                   std::to_string(t.from) + "->" + std::to_string(t.to));
        }
    }
    return rep;
}

// residual of the two-form sum_i dlog u_i ^ dlog Z_i under each transition,
// reported without asserting anything
inline std::vector<LogForm> symplectic_residuals(const Atlas& atlas) {
    int d = atlas.data.d;
    std::set<std::string> params = kahler_param_names(atlas.data);
    LogForm omega2 = LogForm::zero(2);
    for (int i = 0; i < d; ++i)
        omega2 = omega2 + wedge(dlog(RationalFn::variable(uvar(i))),
                                dlog(RationalFn::variable(zvar(i))));
    std::vector<LogForm> out;
    for (const auto& t : atlas.transitions)
        out.push_back(pullback(omega2, t.sub, params) - omega2);
    return out;
}

enum class PointVerdict { SMOOTH_POINT, SINGULAR_POINT };

// exact Jacobian rank of the defining equations at a point with coordinates
// in the fraction field of the Kahler parameters
inline PointVerdict singular_point_check(const HypertoricData& h,
                                         const std::vector<MirrorEquation>& eqs,
                                         const std::map<std::string, RationalFn>& point) {
    std::vector<std::string> vars;
    for (int j = 0; j < h.d; ++j)
        vars.push_back(uvar(j));
    for (int j = 0; j < h.d; ++j)
        vars.push_back(vvar(j));
    for (int i = 0; i < h.d; ++i)
        vars.push_back(zvar(i));
    for (const auto& v : vars)
        if (!point.count(v))
            throw input_error("point is missing a value for " + v);

    std::vector<std::vector<RationalFn>> jac;
    for (const auto& eq : eqs) {
        LaurentPoly f = eq.lhs - eq.rhs;
        RationalFn val = substitute(RationalFn::from_poly(f), point);
        if (!val.is_zero())
            throw input_error("point does not satisfy equation " + std::to_string(eq.j + 1));
        std::vector<RationalFn> row;
        for (const auto& v : vars)
            row.push_back(substitute(RationalFn::from_poly(derivative(f, v)), point));
        jac.push_back(std::move(row));
    }

    int rank = 0;
    size_t cols = vars.size();
    std::vector<std::vector<RationalFn>> m = jac;
    for (size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        int pivot = -1;
        for (size_t r = static_cast<size_t>(rank); r < m.size(); ++r)
            if (!m[r][c].is_zero()) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(pivot)]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (static_cast<int>(r) == rank || m[r][c].is_zero())
                continue;
            RationalFn f = m[r][c] / m[static_cast<size_t>(rank)][c];
            for (size_t cc = c; cc < cols; ++cc)
                m[r][cc] = m[r][cc] - f * m[static_cast<size_t>(rank)][cc];
        }
        ++rank;
    }
    return rank < h.d ? PointVerdict::SINGULAR_POINT : PointVerdict::SMOOTH_POINT;
}

struct PeriodLocus {
    int k = 0;           // hyperplane index
    LaurentPoly monomial; // the locus is monomial = -1
};

struct PeriodSupport {
    std::vector<PeriodLocus> loci;
    std::string note;
};

inline PeriodSupport period_support(const HypertoricData& h) {
    PeriodSupport out;
    for (int k = 0; k < h.n; ++k)
        out.loci.push_back(PeriodLocus{k, z_factor(h, k)});
    out.note = "support taken as the loci 1+Z_k = 0; the variant convention "
               "q_i*Z_i^lambda = -1 is dimensionally inconsistent with them";
    return out;
}

} // namespace hypmirror
