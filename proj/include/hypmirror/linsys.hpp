#pragma once

#include "hypmirror/rational.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <vector>

namespace hypmirror {

enum class Rel { EQ, LE, LT };

struct LinConstraint {
    std::vector<Rational> c;
    Rel rel = Rel::LE;
    Rational rhs;
};

struct LinearSystem {
    int dim = 0;
    std::vector<LinConstraint> rows;

    void add(std::vector<Rational> c, Rel rel, Rational rhs) {
        assert(static_cast<int>(c.size()) == dim);
        rows.push_back(LinConstraint{std::move(c), rel, std::move(rhs)});
    }
};

struct FeasResult {
    bool feasible = false;
    std::vector<Rational> witness;
};

namespace detail {

struct Ineq {
    std::vector<Rational> c; // c . x <= rhs (strict if strict)
    Rational rhs;
    bool strict = false;
};

// Scale so the coefficient vector is integral with content 1; the rhs may
// stay rational. Parallel rows then share an identical coefficient key.
inline void normalize_ineq(Ineq& q) {
    Int l = 1;
    for (const auto& v : q.c)
        l = int_lcm(l, den(v));
    Int g = 0;
    for (auto& v : q.c) {
        v *= l;
        g = int_gcd(g, num(v));
    }
    q.rhs *= l;
    if (g > 1) {
        for (auto& v : q.c)
            v /= g;
        q.rhs /= g;
    }
}

// Fourier-Motzkin elimination, keeping each intermediate system so a witness
// can be reconstructed by back-substitution.
inline FeasResult fourier_motzkin(std::vector<Ineq> sys, int dim) {
    std::vector<std::vector<Ineq>> stages;
    for (int v = dim - 1; v >= 0; --v) {
        stages.push_back(sys);
        std::vector<Ineq> next;
        std::vector<const Ineq*> lower, upper;
        for (const auto& q : sys) {
            int s = sign(q.c[v]);
            if (s == 0)
                next.push_back(q);
            else if (s > 0)
                upper.push_back(&q);
            else
                lower.push_back(&q);
        }
        for (const Ineq* up : upper)
            for (const Ineq* lo : lower) {
                Ineq comb;
                comb.c.assign(dim, Rational(0));
                Rational a = up->c[v];
                Rational b = -lo->c[v];
                for (int j = 0; j < dim; ++j)
                    comb.c[j] = up->c[j] / a + lo->c[j] / b;
                comb.rhs = up->rhs / a + lo->rhs / b;
                comb.strict = up->strict || lo->strict;
                comb.c[v] = 0;
                next.push_back(std::move(comb));
            }
        // dedup: keep the tightest bound per normalized direction
        std::map<std::vector<Rational>, Ineq> best;
        std::vector<Ineq> reduced;
        for (auto& q : next) {
            normalize_ineq(q);
            bool constant = std::all_of(q.c.begin(), q.c.end(), [](const Rational& x) { return x == 0; });
            if (constant) {
                if (q.rhs < 0 || (q.rhs == 0 && q.strict))
                    return FeasResult{false, {}};
                continue;
            }
            auto it = best.find(q.c);
            if (it == best.end()) {
                best.emplace(q.c, q);
            } else {
                Ineq& cur = it->second;
                if (q.rhs < cur.rhs || (q.rhs == cur.rhs && q.strict && !cur.strict))
                    cur = q;
            }
        }
        for (auto& [_, q] : best)
            reduced.push_back(q);
        sys = std::move(reduced);
    }
    for (const auto& q : sys)
        if (q.rhs < 0 || (q.rhs == 0 && q.strict))
            return FeasResult{false, {}};

    // Back-substitute in elimination-reverse order: stage dim-1-v still
    // contains variables 0..v, and x[0..v-1] are already assigned.
    std::vector<Rational> x(dim, Rational(0));
    for (int v = 0; v < dim; ++v) {
        const auto& stage = stages[static_cast<size_t>(dim - 1 - v)];
        bool has_lo = false, has_up = false, lo_strict = false, up_strict = false;
        Rational lo, up;
        for (const auto& q : stage) {
            int s = sign(q.c[v]);
            if (s == 0)
                continue;
            Rational bound = q.rhs;
            for (int j = 0; j < dim; ++j)
                if (j != v)
                    bound -= q.c[j] * x[j];
            bound /= q.c[v];
            if (s > 0) { // x_v <= bound
                if (!has_up || bound < up) {
                    up = bound;
                    up_strict = q.strict;
                    has_up = true;
                } else if (bound == up) {
                    up_strict = up_strict || q.strict;
                }
            } else { // x_v >= bound
                if (!has_lo || bound > lo) {
                    lo = bound;
                    lo_strict = q.strict;
                    has_lo = true;
                } else if (bound == lo) {
                    lo_strict = lo_strict || q.strict;
                }
            }
        }
        if (has_lo && has_up) {
            if (lo == up)
                x[v] = lo; // elimination already certified non-strictness here
            else
                x[v] = (lo + up) / 2;
        } else if (has_lo) {
            x[v] = lo_strict ? lo + 1 : lo;
        } else if (has_up) {
            x[v] = up_strict ? up - 1 : up;
        } else {
            x[v] = 0;
        }
    }
    return FeasResult{true, x};
}

// Exact primal simplex with Bland's rule on the tableau
//   maximize c.y  subject to  A y <= b, y >= 0.
struct SimplexResult {
    bool feasible = false;   // the LP itself
    bool bounded = true;     // objective bounded above
    Rational objective;
    std::vector<Rational> point;
};

class Simplex {
public:
    Simplex(std::vector<std::vector<Rational>> A, std::vector<Rational> b, std::vector<Rational> c)
        : a_(std::move(A)), b_(std::move(b)), c_(std::move(c)), m_(static_cast<int>(a_.size())),
          n_(m_ > 0 ? static_cast<int>(a_[0].size()) : static_cast<int>(c_.size())) {}

    SimplexResult solve() {
        build();
        if (!phase1())
            return SimplexResult{false, true, Rational(0), {}};
        if (!phase2())
            return SimplexResult{true, false, Rational(0), extract()};
        SimplexResult r;
        r.feasible = true;
        r.bounded = true;
        r.point = extract();
        r.objective = 0;
        for (int j = 0; j < n_; ++j)
            r.objective += c_[j] * r.point[j];
        return r;
    }

private:
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_, c_;
    int m_, n_;
    int width_ = 0;
    std::vector<std::vector<Rational>> t_; // m rows of [vars | rhs]
    std::vector<int> basis_;

    void build() {
        // columns: n structural, m slack, m artificial
        width_ = n_ + 2 * m_;
        t_.assign(m_, std::vector<Rational>(width_ + 1, Rational(0)));
        basis_.assign(m_, -1);
        for (int i = 0; i < m_; ++i) {
            int flip = b_[i] < 0 ? -1 : 1;
            for (int j = 0; j < n_; ++j)
                t_[i][j] = flip * a_[i][j];
            t_[i][n_ + i] = flip; // slack
            t_[i][n_ + m_ + i] = 1; // artificial
            t_[i][width_] = flip * b_[i];
            basis_[i] = n_ + m_ + i;
        }
    }

    void pivot(int row, int col) {
        Rational p = t_[row][col];
        for (int j = 0; j <= width_; ++j)
            t_[row][j] /= p;
        for (int i = 0; i < m_; ++i) {
            if (i == row || t_[i][col] == 0)
                continue;
            Rational f = t_[i][col];
            for (int j = 0; j <= width_; ++j)
                t_[i][j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    // Bland: entering = lowest-index improving column, leaving = min ratio
    // with lowest basis index on ties.
    bool optimize(const std::vector<Rational>& obj, int allowed_cols) {
        for (;;) {
            std::vector<Rational> red(allowed_cols, Rational(0));
            std::vector<Rational> dual(m_, Rational(0));
            for (int i = 0; i < m_; ++i)
                dual[i] = obj[basis_[i]];
            for (int j = 0; j < allowed_cols; ++j) {
                red[j] = obj[j];
                for (int i = 0; i < m_; ++i)
                    if (t_[i][j] != 0)
                        red[j] -= dual[i] * t_[i][j];
            }
            int enter = -1;
            for (int j = 0; j < allowed_cols; ++j) {
                bool basic = false;
                for (int i = 0; i < m_; ++i)
                    if (basis_[i] == j)
                        basic = true;
                if (!basic && red[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0)
                return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0)
                    continue;
                Rational ratio = t_[i][width_] / t_[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0)
                return false; // unbounded
            pivot(leave, enter);
        }
    }

    bool phase1() {
        std::vector<Rational> obj(width_ + 1, Rational(0));
        for (int i = 0; i < m_; ++i)
            obj[n_ + m_ + i] = -1;
        optimize(obj, width_);
        Rational value = 0;
        for (int i = 0; i < m_; ++i)
            value += obj[basis_[i]] * t_[i][width_];
        if (value != 0)
            return false;
        // drive artificial variables out of the basis where possible
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_ + m_)
                continue;
            int col = -1;
            for (int j = 0; j < n_ + m_; ++j)
                if (t_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col >= 0)
                pivot(i, col);
        }
        return true;
    }

    bool phase2() {
        std::vector<Rational> obj(width_ + 1, Rational(0));
        for (int j = 0; j < n_; ++j)
            obj[j] = c_[j];
        return optimize(obj, n_ + m_);
    }

    std::vector<Rational> extract() const {
        std::vector<Rational> y(n_, Rational(0));
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_)
                y[basis_[i]] = t_[i][width_];
        return y;
    }
};

// Strict-aware feasibility via LP: maximize the common slack t of the strict
// rows (capped at 1); the system is feasible iff the optimum has t > 0.
inline FeasResult simplex_feasible(const std::vector<Ineq>& sys, int dim) {
    // variables: x = xp - xm (2*dim), t (1)
    int nv = 2 * dim + 1;
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    bool any_strict = false;
    for (const auto& q : sys) {
        std::vector<Rational> row(nv, Rational(0));
        for (int j = 0; j < dim; ++j) {
            row[j] = q.c[j];
            row[dim + j] = -q.c[j];
        }
        if (q.strict) {
            row[2 * dim] = 1;
            any_strict = true;
        }
        A.push_back(std::move(row));
        b.push_back(q.rhs);
    }
    {
        std::vector<Rational> row(nv, Rational(0));
        row[2 * dim] = 1;
        A.push_back(std::move(row));
        b.push_back(Rational(1));
    }
    std::vector<Rational> c(nv, Rational(0));
    c[2 * dim] = 1;
    SimplexResult r = Simplex(A, b, c).solve();
    if (!r.feasible)
        return FeasResult{false, {}};
    if (any_strict && r.objective <= 0)
        return FeasResult{false, {}};
    std::vector<Rational> x(dim);
    for (int j = 0; j < dim; ++j)
        x[j] = r.point[j] - r.point[dim + j];
    return FeasResult{true, x};
}

} // namespace detail

// Exact feasibility with witness. Equalities are eliminated by substitution,
// then Fourier-Motzkin handles up to four remaining variables and an exact
// Bland-rule simplex handles higher dimensions.
inline FeasResult rational_feasible(const LinearSystem& sys) {
    int dim = sys.dim;
    std::vector<detail::Ineq> ineqs;
    std::vector<LinConstraint> eqs;
    for (const auto& row : sys.rows) {
        if (row.rel == Rel::EQ)
            eqs.push_back(row);
        else
            ineqs.push_back(detail::Ineq{row.c, row.rhs, row.rel == Rel::LT});
    }

    // substitution records: (variable, expression over surviving variables, constant)
    struct Subst {
        int var;
        std::vector<Rational> expr;
        Rational cst;
    };
    std::vector<Subst> substs;
    std::vector<bool> eliminated(dim, false);

    for (size_t e = 0; e < eqs.size(); ++e) {
        LinConstraint eq = eqs[e];
        int p = -1;
        for (int j = 0; j < dim; ++j)
            if (!eliminated[j] && eq.c[j] != 0) {
                p = j;
                break;
            }
        if (p < 0) {
            if (eq.rhs != 0)
                return FeasResult{false, {}};
            continue;
        }
        Subst s;
        s.var = p;
        s.expr.assign(dim, Rational(0));
        Rational piv = eq.c[p];
        for (int j = 0; j < dim; ++j)
            if (j != p)
                s.expr[j] = -eq.c[j] / piv;
        s.cst = eq.rhs / piv;
        eliminated[p] = true;
        auto apply = [&](std::vector<Rational>& c, Rational& rhs) {
            if (c[p] == 0)
                return;
            Rational f = c[p];
            c[p] = 0;
            for (int j = 0; j < dim; ++j)
                c[j] += f * s.expr[j];
            rhs -= f * s.cst;
        };
        for (size_t e2 = e + 1; e2 < eqs.size(); ++e2)
            apply(eqs[e2].c, eqs[e2].rhs);
        for (auto& q : ineqs)
            apply(q.c, q.rhs);
        substs.push_back(std::move(s));
    }

    // compress to surviving variables
    std::vector<int> surv;
    for (int j = 0; j < dim; ++j)
        if (!eliminated[j])
            surv.push_back(j);
    int sd = static_cast<int>(surv.size());
    std::vector<detail::Ineq> compact;
    for (auto& q : ineqs) {
        detail::Ineq cq;
        cq.c.resize(sd);
        for (int j = 0; j < sd; ++j)
            cq.c[j] = q.c[surv[j]];
        cq.rhs = q.rhs;
        cq.strict = q.strict;
        bool constant = std::all_of(cq.c.begin(), cq.c.end(), [](const Rational& x) { return x == 0; });
        if (constant) {
            if (cq.rhs < 0 || (cq.rhs == 0 && cq.strict))
                return FeasResult{false, {}};
            continue;
        }
        compact.push_back(std::move(cq));
    }

    FeasResult inner;
    if (sd == 0)
        inner = FeasResult{true, {}};
    else if (sd <= 4)
        inner = detail::fourier_motzkin(compact, sd);
    else
        inner = detail::simplex_feasible(compact, sd);
    if (!inner.feasible)
        return inner;

    std::vector<Rational> x(dim, Rational(0));
    for (int j = 0; j < sd; ++j)
        x[surv[j]] = inner.witness[j];
    for (auto it = substs.rbegin(); it != substs.rend(); ++it) {
        Rational v = it->cst;
        for (int j = 0; j < dim; ++j)
            v += it->expr[j] * x[j];
        x[it->var] = v;
    }
    return FeasResult{true, x};
}

// Convenience check that a witness satisfies a system exactly.
inline bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x) {
    for (const auto& row : sys.rows) {
        Rational v = 0;
        for (int j = 0; j < sys.dim; ++j)
            v += row.c[j] * x[j];
        switch (row.rel) {
        case Rel::EQ:
            if (v != row.rhs)
                return false;
            break;
        case Rel::LE:
            if (v > row.rhs)
                return false;
            break;
        case Rel::LT:
            if (v >= row.rhs)
                return false;
            break;
        }
    }
    return true;
}

} // namespace hypmirror
