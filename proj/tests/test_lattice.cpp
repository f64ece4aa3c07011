#include <catch2/catch_amalgamated.hpp>

#include "hypmirror/intmatrix.hpp"

#include <random>

using namespace hypmirror;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo = -6, int hi = 6) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = d(rng);
    return m;
}

// cofactor-expansion determinant, the slow reference
Int det_oracle(const IntMatrix& m) {
    int n = m.rows;
    if (n == 0)
        return 1;
    if (n == 1)
        return m.at(0, 0);
    Int acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0)
            continue;
        IntMatrix sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        Int term = m.at(0, j) * det_oracle(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

bool is_row_echelon_hnf(const IntMatrix& h, const std::vector<int>& pivot_cols, int rk) {
    int prev = -1;
    for (int i = 0; i < rk; ++i) {
        int c = pivot_cols[i];
        if (c <= prev)
            return false;
        prev = c;
        if (h.at(i, c) <= 0)
            return false;
        for (int j = 0; j < c; ++j)
            if (h.at(i, j) != 0)
                return false;
        for (int r = 0; r < i; ++r)
            if (h.at(r, c) < 0 || h.at(r, c) >= h.at(i, c))
                return false;
    }
    for (int i = rk; i < h.rows; ++i)
        for (int j = 0; j < h.cols; ++j)
            if (h.at(i, j) != 0)
                return false;
    return true;
}

} // namespace

TEST_CASE("row_hnf reproduces the matrix and is canonical") {
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + trial % 5;
        int cols = 1 + (trial / 5) % 5;
        IntMatrix m = random_matrix(rng, rows, cols);
        HnfResult res = row_hnf(m);
        CHECK(res.u * m == res.h);
        Int du = det(res.u);
        CHECK((du == 1 || du == -1));
        CHECK(is_row_echelon_hnf(res.h, res.pivot_cols, res.rank));
        // canonical: HNF of the HNF is itself
        CHECK(row_hnf(res.h).h == res.h);
    }
}

TEST_CASE("row_hnf on identity and simple cases") {
    IntMatrix id = IntMatrix::identity(3);
    CHECK(row_hnf(id).h == id);

    IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
    HnfResult res = row_hnf(m);
    CHECK(res.rank == 2);
    CHECK(res.h == IntMatrix::from_rows({{2, 0}, {0, 4}}));
}

TEST_CASE("determinant matches cofactor oracle") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + trial % 5;
        IntMatrix m = random_matrix(rng, n, n);
        CHECK(det(m) == det_oracle(m));
    }
    CHECK(det(IntMatrix::identity(4)) == 1);
}

TEST_CASE("kernel_lattice spans the kernel and is saturated") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 150; ++trial) {
        int rows = 1 + trial % 4;
        int cols = 1 + (trial / 4) % 5;
        IntMatrix m = random_matrix(rng, rows, cols, -4, 4);
        IntMatrix k = kernel_lattice(m);
        CHECK(k.rows == cols - rank(m));
        if (k.rows > 0) {
            CHECK((m * k.transpose()).is_zero());
            // basis of a saturated lattice: all invariant factors are 1
            std::vector<Int> inv = smith_invariants(k);
            for (const Int& d : inv)
                CHECK(d == 1);
            // canonical form
            CHECK(row_hnf(k).h == k);
        }
    }
}

TEST_CASE("kernel of a known circuit matrix") {
    // columns (1,0), (0,1), (-1,-1): kernel generated by (1,1,1)
    IntMatrix m = IntMatrix::from_rows({{1, 0, -1}, {0, 1, -1}});
    IntMatrix k = kernel_lattice(m);
    REQUIRE(k.rows == 1);
    CHECK(k.row(0) == std::vector<Int>{1, 1, 1});
}

TEST_CASE("square_minors enumerates every subdeterminant") {
    IntMatrix m = IntMatrix::from_rows({{1, 0, -1, 0}, {0, 1, -1, -1}});
    std::vector<Minor> minors = square_minors(m, 2);
    CHECK(minors.size() == 6);
    for (const Minor& mn : minors) {
        IntMatrix sub(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                sub.at(i, j) = m.at(mn.row_set[i], mn.col_set[j]);
        CHECK(mn.value == det_oracle(sub));
    }
    // with row subsets
    IntMatrix tall = IntMatrix::from_rows({{1, 2}, {3, 4}, {5, 6}});
    CHECK(square_minors(tall, 2).size() == 3);
}

TEST_CASE("smith invariants") {
    CHECK(smith_invariants(IntMatrix::identity(3)) == std::vector<Int>{1, 1, 1});
    CHECK(smith_invariants(IntMatrix::from_rows({{2, 4}, {6, 8}})) == std::vector<Int>{2, 4});
    CHECK(smith_invariants(IntMatrix::from_rows({{2, 0}, {0, 3}})) == std::vector<Int>{1, 6});
    CHECK(smith_invariants(IntMatrix::from_rows({{0, 0}, {0, 0}})).empty());

    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int rows = 1 + trial % 4;
        int cols = 1 + (trial / 4) % 4;
        IntMatrix m = random_matrix(rng, rows, cols, -5, 5);
        std::vector<Int> inv = smith_invariants(m);
        CHECK(static_cast<int>(inv.size()) == rank(m));
        for (size_t i = 0; i + 1 < inv.size(); ++i)
            CHECK(inv[i + 1] % inv[i] == 0);
        if (rows == cols && static_cast<int>(inv.size()) == rows) {
            Int prod = 1;
            for (const Int& d : inv)
                prod *= d;
            Int dd = det(m);
            CHECK(prod == (dd < 0 ? Int(-dd) : dd));
        }
    }
}

TEST_CASE("solve_integer") {
    IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
    auto sol = solve_integer(m, {4, 9});
    REQUIRE(sol.has_value());
    CHECK(*sol == std::vector<Int>{2, 3});
    CHECK_FALSE(solve_integer(m, {1, 9}).has_value());

    // underdetermined: any solution must verify exactly
    std::mt19937 rng(2025);
    for (int trial = 0; trial < 100; ++trial) {
        int rows = 1 + trial % 3;
        int cols = rows + trial % 3;
        IntMatrix a = random_matrix(rng, rows, cols, -4, 4);
        std::vector<Int> xs(cols);
        std::uniform_int_distribution<int> d(-5, 5);
        for (auto& x : xs)
            x = d(rng);
        std::vector<Int> b(rows, 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                b[i] += a.at(i, j) * xs[j];
        auto got = solve_integer(a, b);
        REQUIRE(got.has_value());
        for (int i = 0; i < rows; ++i) {
            Int acc = 0;
            for (int j = 0; j < cols; ++j)
                acc += a.at(i, j) * (*got)[j];
            CHECK(acc == b[i]);
        }
    }
}

TEST_CASE("is_primitive") {
    CHECK(is_primitive({1, 0}));
    CHECK(is_primitive({-1, -1}));
    CHECK(is_primitive({2, 3}));
    CHECK_FALSE(is_primitive({2, 4}));
    CHECK_FALSE(is_primitive({0, 0}));
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("2.0") == Rational(2));
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("abc"), parse_error);
    CHECK_THROWS_AS(parse_rational(""), parse_error);
    CHECK(rational_str(Rational(-3, 4)) == "-3/4");
    CHECK(rational_str(Rational(7)) == "7");
}

TEST_CASE("floor_div") {
    CHECK(floor_div(Int(7), Int(2)) == 3);
    CHECK(floor_div(Int(-7), Int(2)) == -4);
    CHECK(floor_div(Int(7), Int(-2)) == -4);
    CHECK(floor_div(Int(-7), Int(-2)) == 3);
    CHECK(floor_div(Int(6), Int(3)) == 2);
    CHECK(floor_div(Int(-6), Int(3)) == -2);
}
