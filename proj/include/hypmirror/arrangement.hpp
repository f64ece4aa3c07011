#pragma once

#include "hypmirror/intmatrix.hpp"
#include "hypmirror/linsys.hpp"
#include "hypmirror/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hypmirror {

struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

enum class KahlerMode { Formal, Numeric };

// Normalized defining data: n primitive integer vectors spanning Z^d, with
// the first d columns rebased to the identity, a rational lift vanishing on
// the first d indices, one tropical constant per hyperplane, and a Kahler
// parameter per dependent column. All indices are 0-based internally.
struct HypertoricData {
    int d = 0;
    int n = 0;
    IntMatrix u;                     // d x n, first d columns = identity
    IntMatrix a;                     // (n-d) x d, row l-d holds a_{l,i}
    std::vector<Rational> lambdaR;   // size n, zero on first d entries
    std::vector<Rational> tropConst; // size n
    std::vector<int> permutation;    // column j came from input index permutation[j]
    bool tropConstDefaulted = false;

    KahlerMode kahlerMode = KahlerMode::Formal;
    std::vector<Rational> kahlerValues; // size n-d in numeric mode

    bool hasComplexLift = false;
    std::vector<Rational> lambdaCre, lambdaCim; // size n when present

    std::vector<Int> ucol(int i) const { return u.col(i); }

    Int aENT(int l, int i) const { return a.at(l - d, i); } // l >= d

    // Kahler weight of the dependent column l (0-based, l >= d) as a factor
    LaurentPoly kahler_factor(int l) const {
        if (kahlerMode == KahlerMode::Numeric)
            return LaurentPoly::constant(kahlerValues[static_cast<size_t>(l - d)]);
        return LaurentPoly::variable("q" + std::to_string(l + 1));
    }

    // q^{beta} for an integer class expressed over the column basis
    LaurentPoly kahler_monomial(const std::vector<Int>& beta) const {
        LaurentPoly m = LaurentPoly::constant(Rational(1));
        for (int l = d; l < n; ++l) {
            Int e = beta[l];
            if (e == 0)
                continue;
            if (e < static_cast<long long>(INT32_MIN) || e > static_cast<long long>(INT32_MAX))
                throw math_error("kahler exponent out of range");
            m = m * pow(kahler_factor(l), static_cast<int>(e));
        }
        return m;
    }
};

struct RealHyperplane {
    int index = 0; // 0-based
    std::vector<Int> normal;
    Rational offset;
};

inline std::vector<RealHyperplane> real_hyperplanes(const HypertoricData& h) {
    std::vector<RealHyperplane> out;
    for (int i = 0; i < h.n; ++i)
        out.push_back(RealHyperplane{i, h.ucol(i), h.lambdaR[static_cast<size_t>(i)]});
    return out;
}

namespace detail {

// first subset in lexicographic order whose columns form a Z-basis
inline std::optional<std::vector<int>> first_unimodular_subset(const IntMatrix& u, int d) {
    std::optional<std::vector<int>> found;
    subsets_of_size(u.cols, d, [&](const std::vector<int>& cs) {
        if (found)
            return;
        IntMatrix sub(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                sub.at(r, c) = u.at(r, cs[c]);
        Int dt = det(sub);
        if (dt == 1 || dt == -1)
            found = cs;
    });
    return found;
}

} // namespace detail

struct RawInput {
    int d = 0;
    std::vector<std::vector<Int>> u; // n vectors of length d
    std::vector<Rational> lambdaR;   // size n
    std::vector<Rational> tropConst; // size n or empty (defaulted)
    KahlerMode kahlerMode = KahlerMode::Formal;
    std::vector<Rational> kahlerValues; // size n-d in numeric mode, else empty
    std::vector<Rational> lambdaCre, lambdaCim; // both size n or both empty
};

// Validate and normalize: reorder columns so the first lexicographic
// unimodular d-subset leads (stable order), rewrite all vectors in that
// basis, and translate the lift so it vanishes on the basis columns.
inline HypertoricData load_and_normalize(const RawInput& raw) {
    int d = raw.d;
    int n = static_cast<int>(raw.u.size());
    if (d < 1)
        throw input_error("rank d must be at least 1");
    if (n < d)
        throw input_error("need at least d vectors, got " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(raw.u[static_cast<size_t>(i)].size()) != d)
            throw input_error("vector " + std::to_string(i + 1) + " has wrong dimension");
        if (!is_primitive(raw.u[static_cast<size_t>(i)]))
            throw input_error("vector " + std::to_string(i + 1) + " is not primitive");
    }
    if (static_cast<int>(raw.lambdaR.size()) != n)
        throw input_error("lambdaR must have one entry per vector");
    if (!raw.tropConst.empty() && static_cast<int>(raw.tropConst.size()) != n)
        throw input_error("tropConst must have one entry per vector");
    if (raw.kahlerMode == KahlerMode::Numeric) {
        if (static_cast<int>(raw.kahlerValues.size()) != n - d)
            throw input_error("numeric Kahler mode needs one value per dependent vector");
        for (const Rational& q : raw.kahlerValues)
            if (!(q > 0 && q < 1))
                throw input_error("numeric Kahler values must lie strictly between 0 and 1");
    }
    if (raw.lambdaCre.size() != raw.lambdaCim.size() ||
        (!raw.lambdaCre.empty() && static_cast<int>(raw.lambdaCre.size()) != n))
        throw input_error("complex lift must provide real and imaginary parts for every vector");

    IntMatrix m(d, n);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < d; ++r)
            m.at(r, i) = raw.u[static_cast<size_t>(i)][static_cast<size_t>(r)];

    if (rank(m) < d)
        throw input_error("vectors have rank " + std::to_string(rank(m)) + " < d = " + std::to_string(d));
    auto basis = detail::first_unimodular_subset(m, d);
    if (!basis) {
        std::vector<Int> inv = smith_invariants(m);
        std::ostringstream os;
        os << "vectors do not span the lattice: no unimodular basis subset (Smith invariants";
        for (const Int& v : inv)
            os << " " << int_str(v);
        os << ")";
        throw input_error(os.str());
    }

    // stable reorder: chosen basis columns first, rest in input order
    std::vector<int> order = *basis;
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (int c : order)
        used[static_cast<size_t>(c)] = true;
    for (int i = 0; i < n; ++i)
        if (!used[static_cast<size_t>(i)])
            order.push_back(i);

    IntMatrix b(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            b.at(r, c) = m.at(r, order[static_cast<size_t>(c)]);

    HypertoricData h;
    h.d = d;
    h.n = n;
    h.permutation = order;
    h.u = IntMatrix(d, n);
    h.a = IntMatrix(n - d, d);
    for (int j = 0; j < n; ++j) {
        std::vector<Int> col = m.col(order[static_cast<size_t>(j)]);
        auto x = solve_integer(b, col);
        if (!x)
            throw input_error("internal: basis change failed");
        for (int r = 0; r < d; ++r)
            h.u.at(r, j) = (*x)[static_cast<size_t>(r)];
        if (j >= d)
            for (int i = 0; i < d; ++i)
                h.a.at(j - d, i) = (*x)[static_cast<size_t>(i)];
    }
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            if (h.u.at(r, c) != (r == c ? 1 : 0))
                throw input_error("internal: basis columns did not normalize to the identity");

    // translate the lift so the basis hyperplanes pass through the origin
    auto shift = [&](const std::vector<Rational>& lift) {
        std::vector<Rational> out(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            Rational v = lift[static_cast<size_t>(order[static_cast<size_t>(j)])];
            for (int i = 0; i < d; ++i)
                v -= Rational(h.u.at(i, j)) * lift[static_cast<size_t>(order[static_cast<size_t>(i)])];
            out[static_cast<size_t>(j)] = v;
        }
        return out;
    };
    h.lambdaR = shift(raw.lambdaR);
    if (!raw.lambdaCre.empty()) {
        h.hasComplexLift = true;
        h.lambdaCre = shift(raw.lambdaCre);
        h.lambdaCim = shift(raw.lambdaCim);
    }

    if (raw.tropConst.empty()) {
        h.tropConstDefaulted = true;
        h.tropConst.resize(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k)
            h.tropConst[static_cast<size_t>(k)] = Rational(k + 1);
    } else {
        h.tropConst.resize(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k)
            h.tropConst[static_cast<size_t>(k)] = raw.tropConst[static_cast<size_t>(order[static_cast<size_t>(k)])];
    }

    h.kahlerMode = raw.kahlerMode;
    h.kahlerValues = raw.kahlerValues; // dependent columns keep input order below
    if (raw.kahlerMode == KahlerMode::Numeric) {
        // values were given per dependent input vector; realign to new order
        std::vector<Rational> vals(static_cast<size_t>(n - d));
        std::vector<int> depInput;
        std::vector<bool> isBasis(static_cast<size_t>(n), false);
        for (int c = 0; c < d; ++c)
            isBasis[static_cast<size_t>(order[static_cast<size_t>(c)])] = true;
        for (int i = 0; i < n; ++i)
            if (!isBasis[static_cast<size_t>(i)])
                depInput.push_back(i);
        for (int j = d; j < n; ++j) {
            int src = order[static_cast<size_t>(j)];
            auto it = std::find(depInput.begin(), depInput.end(), src);
            vals[static_cast<size_t>(j - d)] =
                raw.kahlerValues[static_cast<size_t>(it - depInput.begin())];
        }
        h.kahlerValues = vals;
    }
    return h;
}

// feasibility of the real equality system over an index subset
inline bool real_intersection_nonempty(const HypertoricData& h, const std::vector<int>& idx) {
    LinearSystem sys;
    sys.dim = h.d;
    for (int i : idx) {
        std::vector<Rational> c(static_cast<size_t>(h.d));
        for (int r = 0; r < h.d; ++r)
            c[static_cast<size_t>(r)] = Rational(h.u.at(r, i));
        sys.add(c, Rel::EQ, h.lambdaR[static_cast<size_t>(i)]);
    }
    return rational_feasible(sys).feasible;
}

// the complex condition: full lift if present, tropical shadow otherwise
inline bool complex_intersection_nonempty(const HypertoricData& h, const std::vector<int>& idx) {
    auto feasible_with = [&](const std::vector<Rational>& offs) {
        LinearSystem sys;
        sys.dim = h.d;
        for (int i : idx) {
            std::vector<Rational> c(static_cast<size_t>(h.d));
            for (int r = 0; r < h.d; ++r)
                c[static_cast<size_t>(r)] = Rational(h.u.at(r, i));
            sys.add(c, Rel::EQ, offs[static_cast<size_t>(i)]);
        }
        return rational_feasible(sys).feasible;
    };
    if (h.hasComplexLift)
        return feasible_with(h.lambdaCre) && feasible_with(h.lambdaCim);
    return feasible_with(h.tropConst);
}

inline int subset_rank(const HypertoricData& h, const std::vector<int>& idx) {
    IntMatrix sub(h.d, static_cast<int>(idx.size()));
    for (size_t c = 0; c < idx.size(); ++c)
        for (int r = 0; r < h.d; ++r)
            sub.at(r, static_cast<int>(c)) = h.u.at(r, idx[c]);
    return rank(sub);
}

struct UnimodularReport {
    bool ok = true;
    std::vector<int> witnessCols;
    Int witnessDet;
};

// every nonsingular d x d column minor must be +-1
inline UnimodularReport check_unimodular(const HypertoricData& h) {
    UnimodularReport rep;
    for (const Minor& mn : square_minors(h.u, h.d)) {
        if (mn.value == 0 || mn.value == 1 || mn.value == -1)
            continue;
        rep.ok = false;
        rep.witnessCols = mn.col_set;
        rep.witnessDet = mn.value;
        return rep;
    }
    return rep;
}

struct SimpleReport {
    bool ok = true;
    std::vector<int> witness; // intersecting subset with rank < size
};

inline SimpleReport check_simple_real(const HypertoricData& h) {
    SimpleReport rep;
    for (int size = 2; size <= h.n && rep.ok; ++size)
        detail::subsets_of_size(h.n, size, [&](const std::vector<int>& idx) {
            if (!rep.ok)
                return;
            if (!real_intersection_nonempty(h, idx))
                return;
            if (subset_rank(h, idx) < static_cast<int>(idx.size())) {
                rep.ok = false;
                rep.witness = idx;
            }
        });
    return rep;
}

enum class SmoothVerdict { SMOOTH, ORBIFOLD, SINGULAR };

struct SmoothReport {
    SmoothVerdict verdict = SmoothVerdict::SMOOTH;
    std::vector<int> witness;
    std::string reason;
};

// Affine subspaces A_i (real x complex hyperplane pairs) must avoid common
// intersections of size d+1; intersecting independent d-subsets must span
// the lattice.
inline SmoothReport check_smooth(const HypertoricData& h) {
    SmoothReport rep;
    auto a_intersects = [&](const std::vector<int>& idx) {
        return real_intersection_nonempty(h, idx) && complex_intersection_nonempty(h, idx);
    };
    if (h.n >= h.d + 1) {
        bool bad = false;
        detail::subsets_of_size(h.n, h.d + 1, [&](const std::vector<int>& idx) {
            if (bad)
                return;
            if (a_intersects(idx)) {
                bad = true;
                rep.verdict = SmoothVerdict::SINGULAR;
                rep.witness = idx;
                rep.reason = "d+1 affine subspaces intersect";
            }
        });
        if (bad)
            return rep;
    }
    bool orb = false;
    detail::subsets_of_size(h.n, h.d, [&](const std::vector<int>& idx) {
        if (orb)
            return;
        if (subset_rank(h, idx) < h.d || !a_intersects(idx))
            return;
        IntMatrix sub(h.d, h.d);
        for (int c = 0; c < h.d; ++c)
            for (int r = 0; r < h.d; ++r)
                sub.at(r, c) = h.u.at(r, idx[static_cast<size_t>(c)]);
        Int dt = det(sub);
        if (dt != 1 && dt != -1) {
            orb = true;
            rep.verdict = SmoothVerdict::ORBIFOLD;
            rep.witness = idx;
            rep.reason = "intersecting d-subset has determinant " + int_str(dt);
        }
    });
    return rep;
}

struct Circuit {
    std::vector<int> support;  // 0-based column indices, sorted
    std::vector<int> plus, minus;
    std::vector<Int> beta;     // length n, signed so lambdaR . beta > 0
    bool distinguished = false;
    int ell = -1;              // the dependent column when distinguished
    std::map<int, Int> kahlerExp; // exponent of q_{l} per dependent column
};

// Minimal dependent column subsets, each with the signed primitive kernel
// class. With a nondegenerate lift these are exactly the inclusion-minimal
// subsets whose real hyperplanes have empty intersection.
inline std::vector<Circuit> circuits(const HypertoricData& h) {
    std::vector<Circuit> out;
    std::vector<std::vector<int>> minimal;
    auto contains_minimal = [&](const std::vector<int>& idx) {
        for (const auto& s : minimal)
            if (std::includes(idx.begin(), idx.end(), s.begin(), s.end()))
                return true;
        return false;
    };
    for (int size = 2; size <= h.n; ++size)
        detail::subsets_of_size(h.n, size, [&](const std::vector<int>& idx) {
            if (contains_minimal(idx))
                return;
            if (subset_rank(h, idx) == static_cast<int>(idx.size()))
                return;
            minimal.push_back(idx);
        });

    for (const auto& s : minimal) {
        IntMatrix sub(h.d, static_cast<int>(s.size()));
        for (size_t c = 0; c < s.size(); ++c)
            for (int r = 0; r < h.d; ++r)
                sub.at(r, static_cast<int>(c)) = h.u.at(r, s[c]);
        IntMatrix ker = kernel_lattice(sub);
        if (ker.rows != 1)
            throw input_error("degenerate circuit: kernel is not one-dimensional");
        Circuit c;
        c.support = s;
        c.beta.assign(static_cast<size_t>(h.n), Int(0));
        Rational pairing = 0;
        for (size_t j = 0; j < s.size(); ++j) {
            c.beta[static_cast<size_t>(s[j])] = ker.at(0, static_cast<int>(j));
            pairing += h.lambdaR[static_cast<size_t>(s[j])] * Rational(ker.at(0, static_cast<int>(j)));
        }
        if (pairing == 0) {
            std::ostringstream os;
            os << "degenerate lift: pairing vanishes on circuit {";
            for (size_t j = 0; j < s.size(); ++j)
                os << (j ? "," : "") << s[j] + 1;
            os << "}";
            throw input_error(os.str());
        }
        if (pairing < 0)
            for (auto& x : c.beta)
                x = -x;
        for (int i = 0; i < h.n; ++i) {
            if (c.beta[static_cast<size_t>(i)] > 0)
                c.plus.push_back(i);
            else if (c.beta[static_cast<size_t>(i)] < 0)
                c.minus.push_back(i);
        }
        // distinguished circuits carry a single dependent column
        std::vector<int> dep;
        for (int i : c.support)
            if (i >= h.d)
                dep.push_back(i);
        if (dep.size() == 1) {
            int l = dep[0];
            std::vector<int> expected{l};
            for (int i = 0; i < h.d; ++i)
                if (h.aENT(l, i) != 0)
                    expected.push_back(i);
            std::sort(expected.begin(), expected.end());
            if (expected == c.support) {
                c.distinguished = true;
                c.ell = l;
            }
        }
        for (int l = h.d; l < h.n; ++l)
            if (c.beta[static_cast<size_t>(l)] != 0)
                c.kahlerExp[l] = c.beta[static_cast<size_t>(l)];
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Circuit& x, const Circuit& y) { return x.support < y.support; });
    return out;
}

struct ComplementPiece {
    std::vector<int> J;
    // closed half-space description of Delta_J: (hyperplane index, side),
    // side +1 meaning <s,u_j> >= offset and -1 the reverse
    std::vector<std::pair<int, int>> halfspaces;
};

// Pieces of the complement of the cotangent toric core: subsets whose real
// intersection is nonempty but misses the closure of the chamber Delta.
inline std::vector<ComplementPiece> cotangent_complement(const HypertoricData& h,
                                                         const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != h.n)
        throw input_error("sign vector must have one entry per hyperplane");
    for (int s : sigma)
        if (s != 1 && s != -1)
            throw input_error("sign vector entries must be +1 or -1");
    auto rowOf = [&](int i) {
        std::vector<Rational> c(static_cast<size_t>(h.d));
        for (int r = 0; r < h.d; ++r)
            c[static_cast<size_t>(r)] = Rational(h.u.at(r, i));
        return c;
    };
    {
        LinearSystem open;
        open.dim = h.d;
        for (int i = 0; i < h.n; ++i) {
            auto c = rowOf(i);
            if (sigma[static_cast<size_t>(i)] > 0)
                for (auto& x : c)
                    x = -x;
            Rational rhs = h.lambdaR[static_cast<size_t>(i)] * Rational(sigma[static_cast<size_t>(i)] > 0 ? -1 : 1);
            open.add(c, Rel::LT, rhs);
        }
        if (!rational_feasible(open).feasible)
            throw input_error("sign vector does not define a nonempty chamber");
    }
    std::vector<ComplementPiece> out;
    for (int size = 1; size <= h.n; ++size)
        detail::subsets_of_size(h.n, size, [&](const std::vector<int>& idx) {
            if (!real_intersection_nonempty(h, idx))
                return;
            // face test: the intersection must meet the closed chamber
            LinearSystem sys;
            sys.dim = h.d;
            for (int i : idx)
                sys.add(rowOf(i), Rel::EQ, h.lambdaR[static_cast<size_t>(i)]);
            for (int i = 0; i < h.n; ++i) {
                auto c = rowOf(i);
                if (sigma[static_cast<size_t>(i)] > 0)
                    for (auto& x : c)
                        x = -x;
                Rational rhs = h.lambdaR[static_cast<size_t>(i)] * Rational(sigma[static_cast<size_t>(i)] > 0 ? -1 : 1);
                sys.add(c, Rel::LE, rhs);
            }
            if (rational_feasible(sys).feasible)
                return; // a face of the chamber
            ComplementPiece piece;
            piece.J = idx;
            for (int j : idx)
                piece.halfspaces.emplace_back(j, -sigma[static_cast<size_t>(j)]);
            out.push_back(std::move(piece));
        });
    return out;
}

} // namespace hypmirror
