#pragma once

#include "hypmirror/arrangement.hpp"

#include <cassert>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hypmirror {

struct non_simple_error : input_error {
    explicit non_simple_error(const std::string& what) : input_error("NON_SIMPLE: " + what) {}
};

// Monomial labels are 1-based: label 0 is the constant term, label i >= 1
// is the coordinate tau_i. Hyperplane indices stay 0-based.
struct TropicalHyperplane {
    int index = 0;
    std::vector<int> support; // ascending coordinate labels in 1..d
    Rational constant;

    std::vector<int> labels() const {
        std::vector<int> out{0};
        out.insert(out.end(), support.begin(), support.end());
        return out;
    }
};

// One relatively open cell: per hyperplane the set of maximizing monomial
// labels (singleton = strict dominance, larger sets = ties).
struct CovectorCell {
    std::vector<std::vector<int>> val;
    std::vector<Rational> witness;
    int dim = 0;

    bool is_chamber() const {
        for (const auto& v : val)
            if (v.size() != 1)
                return false;
        return true;
    }
    std::map<int, std::vector<int>> ties() const {
        std::map<int, std::vector<int>> out;
        for (size_t k = 0; k < val.size(); ++k)
            if (val[k].size() >= 2)
                out[static_cast<int>(k)] = val[k];
        return out;
    }
    std::vector<int> chamber_label() const {
        std::vector<int> h;
        for (const auto& v : val)
            h.push_back(v[0]);
        return h;
    }
};

struct TropicalArrangement {
    int d = 0, n = 0;
    std::vector<TropicalHyperplane> hyp;
    std::vector<CovectorCell> cells; // every feasible cell, DFS order
    std::vector<int> chamberCells;   // indices of all-dominant cells
};

namespace detail {

// coefficient functional of a monomial label (the constant has none)
inline std::vector<Rational> label_coeff(int d, int label) {
    std::vector<Rational> c(static_cast<size_t>(d), Rational(0));
    if (label >= 1)
        c[static_cast<size_t>(label - 1)] = 1;
    return c;
}

inline Rational label_offset(const TropicalHyperplane& th, int label) {
    return label == 0 ? th.constant : Rational(0);
}

// constraints pinning the maximizing label set of one hyperplane
inline void add_cell_constraints(LinearSystem& sys, const TropicalHyperplane& th,
                                 const std::vector<int>& chosen) {
    int d = sys.dim;
    int r = chosen[0];
    auto diff = [&](int m, int mm) { // value_m - value_mm as (coeffs, rhs shift)
        std::vector<Rational> c = label_coeff(d, m);
        std::vector<Rational> cc = label_coeff(d, mm);
        for (int i = 0; i < d; ++i)
            c[static_cast<size_t>(i)] -= cc[static_cast<size_t>(i)];
        Rational rhs = label_offset(th, mm) - label_offset(th, m);
        return std::make_pair(c, rhs);
    };
    for (size_t j = 1; j < chosen.size(); ++j) {
        auto [c, rhs] = diff(r, chosen[j]);
        sys.add(c, Rel::EQ, rhs);
    }
    for (int m : th.labels()) {
        if (std::find(chosen.begin(), chosen.end(), m) != chosen.end())
            continue;
        auto [c, rhs] = diff(m, r); // value_m < value_r
        sys.add(c, Rel::LT, rhs);
    }
}

// integer rows spanning the tie-difference functionals of a cell
inline IntMatrix tie_rows(const TropicalArrangement& arr, const std::vector<std::vector<int>>& val) {
    std::vector<std::vector<Int>> rows;
    for (size_t k = 0; k < val.size(); ++k) {
        const auto& v = val[k];
        for (size_t j = 1; j < v.size(); ++j) {
            std::vector<Int> row(static_cast<size_t>(arr.d), Int(0));
            if (v[0] >= 1)
                row[static_cast<size_t>(v[0] - 1)] += 1;
            if (v[j] >= 1)
                row[static_cast<size_t>(v[j] - 1)] -= 1;
            rows.push_back(row);
        }
    }
    if (rows.empty())
        return IntMatrix(0, arr.d);
    return IntMatrix::from_rows(rows);
}

} // namespace detail

// Enumerate every covector cell of the given tropical hyperplanes,
// verifying that each feasible tie pattern is simple (codimension equals
// the number of tie differences).
inline TropicalArrangement build_tropical_raw(int d, std::vector<TropicalHyperplane> hyps) {
    TropicalArrangement arr;
    arr.d = d;
    arr.n = static_cast<int>(hyps.size());
    arr.hyp = std::move(hyps);
    int n = arr.n;
    for (int k1 = 0; k1 < n; ++k1)
        for (int k2 = k1 + 1; k2 < n; ++k2) {
            if (arr.hyp[static_cast<size_t>(k1)].support != arr.hyp[static_cast<size_t>(k2)].support)
                continue;
            if (arr.hyp[static_cast<size_t>(k1)].support.size() >= 2)
                throw non_simple_error("hyperplanes " + std::to_string(k1 + 1) + " and " +
                                       std::to_string(k2 + 1) +
                                       " have equal support of size >= 2 and always share a ray");
            if (arr.hyp[static_cast<size_t>(k1)].constant == arr.hyp[static_cast<size_t>(k2)].constant)
                throw non_simple_error("parallel walls " + std::to_string(k1 + 1) + " and " +
                                       std::to_string(k2 + 1) + " carry the same constant");
        }

    // per-hyperplane label-set choices in (size, lex) order
    std::vector<std::vector<std::vector<int>>> choices(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        std::vector<int> labels = arr.hyp[static_cast<size_t>(k)].labels();
        for (int size = 1; size <= static_cast<int>(labels.size()); ++size)
            detail::subsets_of_size(static_cast<int>(labels.size()), size,
                                    [&](const std::vector<int>& pos) {
                                        std::vector<int> v;
                                        for (int p : pos)
                                            v.push_back(labels[static_cast<size_t>(p)]);
                                        choices[static_cast<size_t>(k)].push_back(v);
                                    });
    }

    std::vector<std::vector<int>> val(static_cast<size_t>(n));
    std::function<void(int)> dfs = [&](int k) {
        LinearSystem sys;
        sys.dim = d;
        for (int kk = 0; kk < k; ++kk)
            detail::add_cell_constraints(sys, arr.hyp[static_cast<size_t>(kk)], val[static_cast<size_t>(kk)]);
        FeasResult feas = rational_feasible(sys);
        if (!feas.feasible)
            return;
        if (k == n) {
            CovectorCell cell;
            cell.val = val;
            cell.witness = feas.witness;
            IntMatrix rows = detail::tie_rows(arr, val);
            int tieCount = rows.rows;
            int rk = rows.rows ? rank(rows) : 0;
            if (rk != tieCount) {
                std::string msg = "cell with ties";
                for (size_t kk = 0; kk < val.size(); ++kk)
                    if (val[kk].size() >= 2) {
                        msg += " H" + std::to_string(kk + 1) + "{";
                        for (size_t j = 0; j < val[kk].size(); ++j)
                            msg += (j ? "," : "") + std::to_string(val[kk][j]);
                        msg += "}";
                    }
                throw non_simple_error(msg + " has codimension " + std::to_string(rk) +
                                       " < " + std::to_string(tieCount));
            }
            cell.dim = d - rk;
            if (cell.is_chamber())
                arr.chamberCells.push_back(static_cast<int>(arr.cells.size()));
            arr.cells.push_back(std::move(cell));
            return;
        }
        for (const auto& choice : choices[static_cast<size_t>(k)]) {
            val[static_cast<size_t>(k)] = choice;
            dfs(k + 1);
        }
        val[static_cast<size_t>(k)].clear();
    };
    dfs(0);
    return arr;
}

inline TropicalArrangement build_tropical(const HypertoricData& h) {
    std::vector<TropicalHyperplane> hyps;
    for (int k = 0; k < h.n; ++k) {
        TropicalHyperplane th;
        th.index = k;
        th.constant = h.tropConst[static_cast<size_t>(k)];
        if (k < h.d)
            th.support = {k + 1};
        else
            for (int i = 0; i < h.d; ++i)
                if (h.aENT(k, i) != 0)
                    th.support.push_back(i + 1);
        if (th.support.empty())
            throw input_error("hyperplane " + std::to_string(k + 1) + " has empty tropical support");
        hyps.push_back(th);
    }
    return build_tropical_raw(h.d, std::move(hyps));
}

struct ChamberLabel {
    std::vector<int> h; // h[k] in {0} union support(k)
    std::vector<Rational> witness;
    int cellIndex = -1;
};

inline std::vector<ChamberLabel> enumerate_chambers(const TropicalArrangement& arr) {
    std::vector<ChamberLabel> out;
    for (int ci : arr.chamberCells) {
        const CovectorCell& c = arr.cells[static_cast<size_t>(ci)];
        out.push_back(ChamberLabel{c.chamber_label(), c.witness, ci});
    }
    return out;
}

struct Stratum {
    std::map<int, std::vector<int>> ties; // tied hyperplane -> labels V_j
    int dim = 0;
    std::vector<int> cellIndices; // covector cells forming the stratum
};

// One stratum per tied covector cell: a shared facet between two cells with
// the same tie data is itself a lower-dimensional stratum, so cells are
// already the connected components.
inline std::vector<Stratum> enumerate_strata(const TropicalArrangement& arr) {
    std::vector<Stratum> out;
    for (size_t ci = 0; ci < arr.cells.size(); ++ci) {
        const CovectorCell& c = arr.cells[ci];
        if (c.is_chamber())
            continue;
        Stratum s;
        s.ties = c.ties();
        s.dim = c.dim;
        s.cellIndices = {static_cast<int>(ci)};
        out.push_back(std::move(s));
    }
    return out;
}

inline bool admissible(const Stratum& s, const HypertoricData& h) {
    std::vector<int> idx;
    for (const auto& kv : s.ties)
        idx.push_back(kv.first);
    return real_intersection_nonempty(h, idx);
}

struct WallSet {
    std::vector<int> members; // hyperplane indices k with a label flip at j
    int deltaFwd = 0;         // exponent on the h -> h' side
    int deltaBwd = 0;
    bool mixed = false;
};

// J_{j,h,h'} for every global coordinate j = 1..d, with the crossing
// exponents: deltaFwd = 1 when the flips move onto the monomial tau_j,
// deltaBwd = 1 when they move off it, mixed when both occur.
inline std::map<int, WallSet> wall_sets(const std::vector<int>& h, const std::vector<int>& hp, int d) {
    if (h.size() != hp.size())
        throw input_error("chamber labels differ in length");
    std::map<int, WallSet> out;
    for (int j = 1; j <= d; ++j) {
        WallSet w;
        bool fwd = false, bwd = false;
        for (size_t k = 0; k < h.size(); ++k) {
            if (h[k] == hp[k])
                continue;
            if (h[k] != j && hp[k] != j)
                continue;
            w.members.push_back(static_cast<int>(k));
            if (hp[k] == j)
                fwd = true;
            if (h[k] == j)
                bwd = true;
        }
        if (w.members.empty())
            continue;
        w.deltaFwd = fwd && !bwd ? 1 : 0;
        w.deltaBwd = bwd && !fwd ? 1 : 0;
        w.mixed = fwd && bwd;
        out[j] = w;
    }
    return out;
}

struct ChamberAdjacency {
    int facetCell = -1;        // codimension one cell between the chambers
    int chamberA = -1;         // indices into enumerate_chambers order
    int chamberB = -1;
    int hyperplane = -1;       // the tied hyperplane
    int labelA = 0, labelB = 0; // chamberA carries labelA on it, B the other
};

inline std::vector<ChamberAdjacency> chamber_adjacencies(const TropicalArrangement& arr) {
    std::map<std::vector<int>, int> chamberOf;
    for (size_t i = 0; i < arr.chamberCells.size(); ++i)
        chamberOf[arr.cells[static_cast<size_t>(arr.chamberCells[i])].chamber_label()] =
            static_cast<int>(i);
    std::vector<ChamberAdjacency> out;
    for (size_t ci = 0; ci < arr.cells.size(); ++ci) {
        const CovectorCell& c = arr.cells[ci];
        if (c.dim != arr.d - 1)
            continue;
        auto ties = c.ties();
        if (ties.size() != 1 || ties.begin()->second.size() != 2)
            continue;
        int k = ties.begin()->first;
        int a = ties.begin()->second[0], b = ties.begin()->second[1];
        std::vector<int> ha = c.chamber_label(), hb = ha;
        ha[static_cast<size_t>(k)] = a;
        hb[static_cast<size_t>(k)] = b;
        auto ia = chamberOf.find(ha), ib = chamberOf.find(hb);
        if (ia == chamberOf.end() || ib == chamberOf.end())
            throw input_error("internal: facet cell without both side chambers");
        ChamberAdjacency adj;
        adj.facetCell = static_cast<int>(ci);
        adj.chamberA = ia->second;
        adj.chamberB = ib->second;
        adj.hyperplane = k;
        adj.labelA = a;
        adj.labelB = b;
        out.push_back(adj);
    }
    return out;
}

// closure relation: the chamber touches the cell iff its label is one of
// the cell's maximizing labels at every hyperplane
inline bool chamber_touches_cell(const std::vector<int>& h, const CovectorCell& cell) {
    for (size_t k = 0; k < h.size(); ++k) {
        const auto& v = cell.val[k];
        if (std::find(v.begin(), v.end(), h[k]) == v.end())
            return false;
    }
    return true;
}

// index into arr.cells of the cell containing the point
inline int classify(const TropicalArrangement& arr, const std::vector<Rational>& tau) {
    std::vector<std::vector<int>> val;
    for (const auto& th : arr.hyp) {
        Rational best;
        std::vector<int> arg;
        for (int m : th.labels()) {
            Rational v = m == 0 ? th.constant : tau[static_cast<size_t>(m - 1)];
            if (arg.empty() || v > best) {
                best = v;
                arg = {m};
            } else if (v == best) {
                arg.push_back(m);
            }
        }
        std::sort(arg.begin(), arg.end());
        val.push_back(arg);
    }
    for (size_t ci = 0; ci < arr.cells.size(); ++ci)
        if (arr.cells[ci].val == val)
            return static_cast<int>(ci);
    return -1;
}

struct StratumFrame {
    std::vector<std::vector<Int>> tangent; // HNF basis rows of the direction lattice
    std::vector<int> tiedHyperplanes;      // ascending
    // vertexLabels[t]: nonzero labels ascending, then 0 when present;
    // facetNormals[t][i] is normal to the facet opposite vertex i
    std::vector<std::vector<int>> vertexLabels;
    std::vector<std::vector<std::vector<Int>>> facetNormals;
};

namespace detail {

// reduce a vector modulo the lattice spanned by HNF basis rows
inline std::vector<Int> reduce_mod_lattice(std::vector<Int> v, const IntMatrix& basis) {
    for (int r = 0; r < basis.rows; ++r) {
        int p = -1;
        for (int c = 0; c < basis.cols; ++c)
            if (basis.at(r, c) != 0) {
                p = c;
                break;
            }
        if (p < 0)
            continue;
        Int q = floor_div(v[static_cast<size_t>(p)], basis.at(r, p));
        if (q == 0)
            continue;
        for (int c = 0; c < basis.cols; ++c)
            v[static_cast<size_t>(c)] -= q * basis.at(r, c);
    }
    return v;
}

} // namespace detail

// Canonical frame: tangent basis spans the integer direction space of the
// stratum; for each tied hyperplane the facet normals pair to a constant
// with the facet vertices and exactly one higher with the opposite vertex,
// reduced modulo the tangent lattice, last vector the negated sum.
inline StratumFrame stratum_frame(const Stratum& s, const TropicalArrangement& arr) {
    StratumFrame frame;
    IntMatrix rows = [&] {
        std::vector<std::vector<int>> val(static_cast<size_t>(arr.n));
        for (int k = 0; k < arr.n; ++k)
            val[static_cast<size_t>(k)] = {0};
        for (const auto& [k, v] : s.ties)
            val[static_cast<size_t>(k)] = v;
        return detail::tie_rows(arr, val);
    }();
    IntMatrix tangentBasis = kernel_lattice(rows);
    for (int r = 0; r < tangentBasis.rows; ++r)
        frame.tangent.push_back(tangentBasis.row(r));

    auto functional = [&](int label) {
        std::vector<Int> f(static_cast<size_t>(arr.d), Int(0));
        if (label >= 1)
            f[static_cast<size_t>(label - 1)] = 1;
        return f;
    };
    for (const auto& kv : s.ties)
        frame.tiedHyperplanes.push_back(kv.first);

    for (int k : frame.tiedHyperplanes) {
        const std::vector<int>& ties = s.ties.at(k);
        std::vector<int> verts;
        for (int m : ties)
            if (m != 0)
                verts.push_back(m);
        std::sort(verts.begin(), verts.end());
        if (std::find(ties.begin(), ties.end(), 0) != ties.end())
            verts.push_back(0);
        int cnt = static_cast<int>(verts.size());

        std::vector<std::vector<Int>> normals;
        for (int i = 0; i < cnt; ++i) {
            std::vector<std::vector<Int>> sysRows;
            std::vector<Int> rhs;
            for (int kk : frame.tiedHyperplanes) {
                if (kk == k)
                    continue;
                const std::vector<int>& vv = s.ties.at(kk);
                std::vector<Int> ref = functional(vv[0]);
                for (size_t j = 1; j < vv.size(); ++j) {
                    std::vector<Int> row = functional(vv[j]);
                    for (int c = 0; c < arr.d; ++c)
                        row[static_cast<size_t>(c)] -= ref[static_cast<size_t>(c)];
                    sysRows.push_back(row);
                    rhs.push_back(0);
                }
            }
            int g = i == 0 ? 1 : 0; // reference vertex on the facet
            std::vector<Int> fg = functional(verts[static_cast<size_t>(g)]);
            for (int j = 0; j < cnt; ++j) {
                if (j == i || j == g)
                    continue;
                std::vector<Int> row = functional(verts[static_cast<size_t>(j)]);
                for (int c = 0; c < arr.d; ++c)
                    row[static_cast<size_t>(c)] -= fg[static_cast<size_t>(c)];
                sysRows.push_back(row);
                rhs.push_back(0);
            }
            std::vector<Int> opp = functional(verts[static_cast<size_t>(i)]);
            for (int c = 0; c < arr.d; ++c)
                opp[static_cast<size_t>(c)] -= fg[static_cast<size_t>(c)];
            sysRows.push_back(opp);
            rhs.push_back(1);

            auto sol = solve_integer(IntMatrix::from_rows(sysRows), rhs);
            if (!sol)
                throw input_error("stratum frame has no integer normalization");
            normals.push_back(detail::reduce_mod_lattice(*sol, tangentBasis));
        }
        // replace the last vector by the negated sum and verify it solves
        // its own facet system
        std::vector<Int> last(static_cast<size_t>(arr.d), Int(0));
        for (int i = 0; i + 1 < cnt; ++i)
            for (int c = 0; c < arr.d; ++c)
                last[static_cast<size_t>(c)] -= normals[static_cast<size_t>(i)][static_cast<size_t>(c)];
        if (cnt >= 2) {
            auto pair_with = [&](int label, const std::vector<Int>& a) {
                Int sum = 0;
                std::vector<Int> f = functional(label);
                for (int c = 0; c < arr.d; ++c)
                    sum += f[static_cast<size_t>(c)] * a[static_cast<size_t>(c)];
                return sum;
            };
            Int base = pair_with(verts[0], last);
            for (int j = 1; j + 1 < cnt; ++j)
                if (pair_with(verts[static_cast<size_t>(j)], last) != base)
                    throw input_error("internal: minus-sum frame vector is not facet-constant");
            if (pair_with(verts[static_cast<size_t>(cnt - 1)], last) != base + 1)
                throw input_error("internal: minus-sum frame vector fails the opposite-vertex rule");
        }
        normals.back() = last;
        for (const auto& a : normals)
            if (!is_primitive(a))
                throw input_error("internal: frame vector is not primitive");
        frame.vertexLabels.push_back(verts);
        frame.facetNormals.push_back(normals);
    }
    return frame;
}

} // namespace hypmirror
