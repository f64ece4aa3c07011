#pragma once

#include "hypmirror/mirror.hpp"

#include <cctype>
#include <map>
#include <string>
#include <vector>

namespace hypmirror {

inline std::string tvar(int j) { return "t" + std::to_string(j + 1); }
inline std::string zcoord(int j) { return "z" + std::to_string(j + 1); }
inline std::string wcoord(int j) { return "w" + std::to_string(j + 1); }

struct MinorWitness {
    std::vector<int> rows, cols;
    Int det;
};

struct PiMatrix {
    IntMatrix m; // n x d, top block identity
    bool totallyUnimodular = true;
    MinorWitness witness; // set when the flag is false
};

inline PiMatrix pi_matrix(const HypertoricData& h) {
    PiMatrix pi;
    pi.m = IntMatrix(h.n, h.d);
    for (int i = 0; i < h.d; ++i)
        pi.m.at(i, i) = 1;
    for (int l = h.d; l < h.n; ++l)
        for (int i = 0; i < h.d; ++i)
            pi.m.at(l, i) = h.aENT(l, i);
    for (int size = 1; size <= h.d && pi.totallyUnimodular; ++size)
        detail::subsets_of_size(h.n, size, [&](const std::vector<int>& rs) {
            if (!pi.totallyUnimodular)
                return;
            detail::subsets_of_size(h.d, size, [&](const std::vector<int>& cs) {
                if (!pi.totallyUnimodular)
                    return;
                IntMatrix sub(size, size);
                for (int r = 0; r < size; ++r)
                    for (int c = 0; c < size; ++c)
                        sub.at(r, c) = pi.m.at(rs[static_cast<size_t>(r)], cs[static_cast<size_t>(c)]);
                Int dv = det(sub);
                if (dv < -1 || dv > 1) {
                    pi.totallyUnimodular = false;
                    pi.witness = MinorWitness{rs, cs, dv};
                }
            });
        });
    return pi;
}

struct InvariantGenerators {
    std::vector<LaurentPoly> z, w; // one monomial per coordinate i < d
};

// column i gives the invariant monomial prod_j x_j^{|pi_ji|} with
// x_j = z_j when pi_ji >= 0 and w_j otherwise; the partner swaps roles
inline InvariantGenerators invariant_generators(const PiMatrix& pi) {
    InvariantGenerators gen;
    for (int i = 0; i < pi.m.cols; ++i) {
        LaurentPoly gz = LaurentPoly::constant(Rational(1));
        LaurentPoly gw = LaurentPoly::constant(Rational(1));
        for (int j = 0; j < pi.m.rows; ++j) {
            Int e = pi.m.at(j, i);
            if (e == 0)
                continue;
            int exp = static_cast<int>(e < 0 ? -e : e);
            if (e > 0) {
                gz = gz * LaurentPoly::variable(zcoord(j), exp);
                gw = gw * LaurentPoly::variable(wcoord(j), exp);
            } else {
                gz = gz * LaurentPoly::variable(wcoord(j), exp);
                gw = gw * LaurentPoly::variable(zcoord(j), exp);
            }
        }
        gen.z.push_back(gz);
        gen.w.push_back(gw);
    }
    return gen;
}

struct RelationRing {
    int d = 0, n = 0;
    // t[j] = z_j w_j: a free symbol for j < d, beyond that the element
    // derived from 1 + t_l = (-1)^{sigma_l + 1} q_l prod_i (1 + t_i)^{a_li}
    std::vector<RationalFn> t;
};

inline RelationRing relation_ring(const HypertoricData& h) {
    RelationRing ring;
    ring.d = h.d;
    ring.n = h.n;
    for (int j = 0; j < h.d; ++j)
        ring.t.push_back(RationalFn::variable(tvar(j)));
    for (int l = h.d; l < h.n; ++l) {
        Int rowSum = 0;
        for (int i = 0; i < h.d; ++i)
            rowSum += h.aENT(l, i);
        bool sigma = (rowSum % 2) != 0;
        RationalFn e = RationalFn::from_poly(h.kahler_factor(l));
        if (!sigma) // (-1)^{sigma+1}
            e = -e;
        for (int i = 0; i < h.d; ++i) {
            Int a = h.aENT(l, i);
            if (a == 0)
                continue;
            RationalFn f = RationalFn::constant(Rational(1)) + ring.t[static_cast<size_t>(i)];
            e = e * pow(f, static_cast<int>(a));
        }
        ring.t.push_back(e - RationalFn::constant(Rational(1)));
    }
    return ring;
}

// rewrite a polynomial in z_j, w_j (and Kahler symbols) into the relation
// ring: every monomial must pair z_j with w_j exactly
inline RationalFn reduce_invariant_poly(const RelationRing& ring, const LaurentPoly& p) {
    RationalFn acc = RationalFn::constant(Rational(0));
    for (const auto& [exps, coeff] : p.terms) {
        std::vector<Int> zExp(static_cast<size_t>(ring.n), Int(0));
        std::vector<Int> wExp(static_cast<size_t>(ring.n), Int(0));
        LaurentPoly rest = LaurentPoly::constant(coeff);
        for (size_t vi = 0; vi < p.vars.size(); ++vi) {
            int e = vi < exps.size() ? exps[vi] : 0;
            if (e == 0)
                continue;
            const std::string& name = p.vars[vi];
            if (name.size() > 1 && (name[0] == 'z' || name[0] == 'w') &&
                std::isdigit(static_cast<unsigned char>(name[1]))) {
                int j = std::stoi(name.substr(1)) - 1;
                if (j >= 0 && j < ring.n) {
                    (name[0] == 'z' ? zExp : wExp)[static_cast<size_t>(j)] += e;
                    continue;
                }
            }
            rest = rest * LaurentPoly::variable(name, e);
        }
        RationalFn m = RationalFn::from_poly(rest);
        for (int j = 0; j < ring.n; ++j) {
            if (zExp[static_cast<size_t>(j)] != wExp[static_cast<size_t>(j)])
                throw input_error("monomial is not invariant: unbalanced " + zcoord(j) + "," +
                                  wcoord(j));
            Int e = zExp[static_cast<size_t>(j)];
            if (e != 0)
                m = m * pow(ring.t[static_cast<size_t>(j)], static_cast<int>(e));
        }
        acc = acc + m;
    }
    return acc;
}

inline RationalFn reduce_invariant(const RelationRing& ring, const RationalFn& f) {
    return reduce_invariant_poly(ring, f.num) / reduce_invariant_poly(ring, f.den);
}

// the comparison homomorphism on the coordinate symbols, into the z, w world
inline std::map<std::string, RationalFn> phi_map(const HypertoricData& h, const PiMatrix& pi) {
    InvariantGenerators gen = invariant_generators(pi);
    std::map<std::string, RationalFn> sub;
    for (int i = 0; i < h.d; ++i) {
        Int colSum = 0;
        for (int j = 0; j < h.n; ++j) {
            Int e = pi.m.at(j, i);
            colSum += e < 0 ? -e : e;
        }
        RationalFn zi = RationalFn::from_poly(gen.z[static_cast<size_t>(i)]);
        sub[uvar(i)] = (colSum % 2 != 0) ? -zi : zi;
        sub[vvar(i)] = RationalFn::from_poly(gen.w[static_cast<size_t>(i)]);
        sub[zvar(i)] = RationalFn::from_poly(
            LaurentPoly::constant(Rational(-1)) -
            LaurentPoly::variable(zcoord(i)) * LaurentPoly::variable(wcoord(i)));
    }
    return sub;
}

inline RationalFn phi(const HypertoricData& h, const PiMatrix& pi, const RelationRing& ring,
                      const LaurentPoly& expr) {
    return reduce_invariant(ring, substitute(RationalFn::from_poly(expr), phi_map(h, pi)));
}

struct PhiReport {
    bool ok = true;
    std::vector<RationalFn> residuals; // one per mirror equation
};

// the defining equations must close exactly under the comparison map
inline PhiReport verify_phi(const HypertoricData& h) {
    PiMatrix pi = pi_matrix(h);
    if (!pi.totallyUnimodular)
        throw input_error("comparison requires a totally unimodular matrix");
    RelationRing ring = relation_ring(h);
    auto sub = phi_map(h, pi);
    PhiReport rep;
    for (const auto& eq : mirror_equations(h)) {
        RationalFn lhs = reduce_invariant(ring, substitute(RationalFn::from_poly(eq.lhs), sub));
        RationalFn rhs = reduce_invariant(ring, substitute(RationalFn::from_poly(eq.rhs), sub));
        RationalFn res = lhs - rhs;
        if (!res.is_zero())
            rep.ok = false;
        rep.residuals.push_back(res);
    }
    return rep;
}

struct Decomposition {
    bool invariant = false;
    std::vector<Int> zExp, wExp;     // the input monomial
    std::vector<Int> gen;            // exponent on the i-th generator pair:
                                     // positive powers of the z-side, negative of the w-side
    std::vector<Int> pairPowers;     // powers of z_j w_j absorbed afterwards
    std::vector<Int> obstruction;    // pairing functional when not invariant
};

// invariance of z^a w^b is membership of a - b in the column lattice of
// the matrix; the factorization peels generators then pair powers
inline Decomposition decompose_invariant(const PiMatrix& pi, const std::vector<Int>& zExp,
                                         const std::vector<Int>& wExp) {
    int n = pi.m.rows, d = pi.m.cols;
    Decomposition dec;
    dec.zExp = zExp;
    dec.wExp = wExp;
    std::vector<Int> diff(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        diff[static_cast<size_t>(j)] = zExp[static_cast<size_t>(j)] - wExp[static_cast<size_t>(j)];
    // the top block is the identity, so the only candidate preimage is the
    // first d entries
    std::vector<Int> c(diff.begin(), diff.begin() + d);
    for (int l = d; l < n; ++l) {
        Int want = 0;
        for (int i = 0; i < d; ++i)
            want += pi.m.at(l, i) * c[static_cast<size_t>(i)];
        if (want == diff[static_cast<size_t>(l)])
            continue;
        dec.invariant = false;
        dec.obstruction.assign(static_cast<size_t>(n), Int(0));
        for (int i = 0; i < d; ++i)
            dec.obstruction[static_cast<size_t>(i)] = -pi.m.at(l, i);
        dec.obstruction[static_cast<size_t>(l)] = 1;
        return dec;
    }
    dec.invariant = true;
    dec.gen = c;
    dec.pairPowers.assign(static_cast<size_t>(n), Int(0));
    for (int j = 0; j < n; ++j) {
        Int used = 0;
        for (int i = 0; i < d; ++i) {
            Int e = pi.m.at(j, i), ci = c[static_cast<size_t>(i)];
            if (ci > 0 && e > 0)
                used += ci * e;
            else if (ci < 0 && e < 0)
                used += ci * e; // w-side generator contributes z_j^{(-e)(-ci)}
        }
        dec.pairPowers[static_cast<size_t>(j)] = zExp[static_cast<size_t>(j)] - used;
    }
    return dec;
}

inline LaurentPoly expand_decomposition(const PiMatrix& pi, const Decomposition& dec) {
    if (!dec.invariant)
        throw input_error("cannot expand a non-invariant decomposition");
    InvariantGenerators g = invariant_generators(pi);
    LaurentPoly out = LaurentPoly::constant(Rational(1));
    for (size_t i = 0; i < dec.gen.size(); ++i) {
        Int ci = dec.gen[i];
        if (ci > 0)
            out = out * pow(g.z[i], static_cast<int>(ci));
        else if (ci < 0)
            out = out * pow(g.w[i], static_cast<int>(-ci));
    }
    for (int j = 0; j < pi.m.rows; ++j) {
        Int r = dec.pairPowers[static_cast<size_t>(j)];
        if (r == 0)
            continue;
        out = out * LaurentPoly::variable(zcoord(j), static_cast<int>(r)) *
              LaurentPoly::variable(wcoord(j), static_cast<int>(r));
    }
    return out;
}

} // namespace hypmirror
