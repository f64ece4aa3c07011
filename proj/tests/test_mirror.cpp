#include <catch2/catch_amalgamated.hpp>

#include "hypmirror/mirror.hpp"

#include <set>

using namespace hypmirror;

namespace {

RawInput raw_of(int d, std::vector<std::vector<Int>> u, std::vector<Rational> lam,
                std::vector<Rational> trop = {}) {
    RawInput raw;
    raw.d = d;
    raw.u = std::move(u);
    raw.lambdaR = std::move(lam);
    raw.tropConst = std::move(trop);
    return raw;
}

HypertoricData tp1() { return load_and_normalize(raw_of(1, {{1}, {-1}}, {0, 1}, {1, 2})); }

HypertoricData tp2() {
    return load_and_normalize(raw_of(2, {{1, 0}, {0, 1}, {-1, -1}}, {0, 0, 1}, {0, 0, 5}));
}

HypertoricData a3() {
    return load_and_normalize(raw_of(1, {{1}, {1}, {1}, {1}}, {0, 1, 2, 3}, {1, 2, 3, 4}));
}

HypertoricData fourline() {
    return load_and_normalize(
        raw_of(2, {{1, 0}, {0, 1}, {-1, -1}, {0, -1}}, {0, 0, 1, 2}, {0, 0, 5, 9}));
}

int chamber_index(const Atlas& atlas, const std::vector<int>& label) {
    for (size_t c = 0; c < atlas.chambers.size(); ++c)
        if (atlas.chambers[c].h == label)
            return static_cast<int>(c);
    return -1;
}

const Transition& transition_of(const Atlas& atlas, int from, int to) {
    for (const auto& t : atlas.transitions)
        if (t.from == from && t.to == to)
            return t;
    throw std::runtime_error("transition not found");
}

LaurentPoly one() { return LaurentPoly::constant(Rational(1)); }

} // namespace

TEST_CASE("maslov two classes on the cotangent line") {
    auto h = tp1();
    std::vector<int> inner{0, 0}, middle{1, 0};

    auto minus = maslov2_classes(h, inner, 0, DiscEnd::Minus);
    REQUIRE(minus.size() == 1);
    CHECK(minus[0].alphas.empty());
    CHECK(minus[0].beta == std::vector<Int>{1});
    CHECK(minus[0].alpha == std::vector<Int>{0, 0});

    auto plus = maslov2_classes(h, inner, 0, DiscEnd::Plus);
    REQUIRE(plus.size() == 4);
    std::set<std::vector<int>> alphaSets;
    for (const auto& c : plus) {
        CHECK(c.beta == std::vector<Int>{1});
        alphaSets.insert(c.alphas);
    }
    CHECK(alphaSets ==
          std::set<std::vector<int>>{{}, {0}, {1}, {0, 1}});
    CHECK(plus[0].alphas.empty());
    CHECK(plus[3].alphas == std::vector<int>{0, 1});

    CHECK(maslov2_classes(h, middle, 0, DiscEnd::Minus).size() == 2);
    CHECK(maslov2_classes(h, middle, 0, DiscEnd::Plus).size() == 2);
    CHECK(disc_wall_set(h, middle, 0, DiscEnd::Minus) == std::vector<int>{0});
    CHECK(disc_wall_set(h, middle, 0, DiscEnd::Plus) == std::vector<int>{1});
}

TEST_CASE("open Gromov-Witten counts are supported on the admissible patterns") {
    auto check_support = [](const HypertoricData& h, const std::vector<int>& label) {
        for (int j = 0; j < h.d; ++j)
            for (DiscEnd end : {DiscEnd::Minus, DiscEnd::Plus}) {
                std::set<std::vector<Int>> fromClasses;
                for (const auto& c : maslov2_classes(h, label, j, end))
                    fromClasses.insert(c.alpha);
                std::set<std::vector<Int>> fromCounts;
                std::vector<Int> beta(static_cast<size_t>(h.d), Int(0));
                beta[static_cast<size_t>(j)] = 1;
                for (int mask = 0; mask < (1 << h.n); ++mask) {
                    std::vector<Int> alpha;
                    for (int k = 0; k < h.n; ++k)
                        alpha.push_back((mask >> k) & 1);
                    int gw = open_gw(h, label, beta, alpha, end);
                    CHECK((gw == 0 || gw == 1));
                    if (gw == 1)
                        fromCounts.insert(alpha);
                }
                CHECK(fromClasses == fromCounts);
            }
    };
    auto h1 = tp1();
    check_support(h1, {0, 0});
    check_support(h1, {1, 1});
    auto h2 = tp2();
    check_support(h2, {1, 2, 0});
    check_support(h2, {0, 0, 0});

    SECTION("classes outside the pattern get count zero") {
        CHECK(open_gw(h1, {0, 0}, {2}, {0, 0}, DiscEnd::Minus) == 0);
        CHECK(open_gw(h1, {0, 0}, {1}, {2, 0}, DiscEnd::Plus) == 0);
        CHECK(open_gw(h1, {0, 0}, {1}, {1, 0}, DiscEnd::Minus) == 0);
        CHECK(open_gw(h2, {1, 2, 0}, {1, 1}, {0, 0, 0}, DiscEnd::Minus) == 0);
        CHECK(open_gw(h2, {1, 2, 0}, {0, 0}, {0, 0, 0}, DiscEnd::Minus) == 0);
    }
}

TEST_CASE("generating functions on the cotangent line") {
    auto h = tp1();
    LaurentPoly u1 = LaurentPoly::variable("u1");
    LaurentPoly Z1 = LaurentPoly::variable("Z1");
    LaurentPoly q2 = LaurentPoly::variable("q2");
    LaurentPoly wall1 = one() + Z1;
    LaurentPoly wall2 = one() + q2 * pow(Z1, -1);

    auto [uInner, vInner] = generating_functions(h, {0, 0}, 0);
    CHECK(uInner == u1);
    CHECK(vInner == pow(u1, -1) * wall1 * wall2);

    auto [uMid, vMid] = generating_functions(h, {1, 0}, 0);
    CHECK(uMid == u1 * wall1);
    CHECK(vMid == pow(u1, -1) * wall2);

    auto [uOuter, vOuter] = generating_functions(h, {1, 1}, 0);
    CHECK(uOuter == u1 * wall1 * wall2);
    CHECK(vOuter == pow(u1, -1));
}

TEST_CASE("mirror equations match the expected strings and every chamber") {
    SECTION("projective plane cotangent bundle") {
        auto h = tp2();
        auto eqs = mirror_equations(h);
        REQUIRE(eqs.size() == 2);
        CHECK(equation_str(eqs[0]) == "u1*v1 = (1+Z1)*(1+q3*Z1^-1*Z2^-1)");
        CHECK(equation_str(eqs[1]) == "u2*v2 = (1+Z2)*(1+q3*Z1^-1*Z2^-1)");

        auto arr = build_tropical(h);
        for (const auto& c : enumerate_chambers(arr))
            for (int j = 0; j < h.d; ++j) {
                auto [u, v] = generating_functions(h, c.h, j);
                CHECK(RationalFn::from_poly(u) * RationalFn::from_poly(v) ==
                      RationalFn::from_poly(eqs[static_cast<size_t>(j)].rhs));
            }
    }
    SECTION("four points on a line") {
        auto eqs = mirror_equations(a3());
        REQUIRE(eqs.size() == 1);
        CHECK(equation_str(eqs[0]) == "u1*v1 = (1+Z1)*(1+q2*Z1)*(1+q3*Z1)*(1+q4*Z1)");
    }
}

TEST_CASE("atlas of the cotangent line") {
    auto atlas = build_atlas(tp1());
    CHECK(atlas.chamberCharts.size() == 3);
    CHECK(atlas.stratumCharts.size() == 2);
    CHECK(atlas.adjacencies.size() == 2);
    CHECK(atlas.transitions.size() == 4);
    CHECK(atlas.embeddings.size() == 4);

    int inner = chamber_index(atlas, {0, 0});
    int middle = chamber_index(atlas, {1, 0});
    REQUIRE(inner >= 0);
    REQUIRE(middle >= 0);

    RationalFn u1 = RationalFn::variable("u1");
    RationalFn wall1 = RationalFn::from_poly(one() + LaurentPoly::variable("Z1"));

    const Transition& t = transition_of(atlas, inner, middle);
    CHECK(t.sub.at("u1") == u1 / wall1);
    CHECK(t.sub.at("Z1") == RationalFn::variable("Z1"));
    CHECK(transition_of(atlas, middle, inner).sub.at("u1") == u1 * wall1);

    // the wall chart at the first hyperplane has coordinates (u, (1+Z1)/u)
    // seen from the inner chamber and ((1+Z1)u, 1/u) from the middle one
    const StratumChart* wallChart = nullptr;
    for (const auto& sc : atlas.stratumCharts)
        if (sc.tied == std::vector<int>{0})
            wallChart = &sc;
    REQUIRE(wallChart != nullptr);
    CHECK(wallChart->yvars.empty());
    REQUIRE(wallChart->xvars.size() == 1);
    CHECK(wallChart->xvars[0] == std::vector<std::string>{"x1_1", "x1_2"});
    CHECK(wallChart->relationRhs[0] == one() + LaurentPoly::variable("Z1"));

    int chartIdx = static_cast<int>(wallChart - atlas.stratumCharts.data());
    const Embedding* fromInner = nullptr;
    const Embedding* fromMiddle = nullptr;
    for (const auto& e : atlas.embeddings) {
        if (e.stratumChart != chartIdx)
            continue;
        if (e.chamber == inner)
            fromInner = &e;
        if (e.chamber == middle)
            fromMiddle = &e;
    }
    REQUIRE(fromInner != nullptr);
    REQUIRE(fromMiddle != nullptr);
    CHECK(fromInner->sub.at("x1_1") == u1);
    CHECK(fromInner->sub.at("x1_2") == wall1 / u1);
    CHECK(fromMiddle->sub.at("x1_1") == wall1 * u1);
    CHECK(fromMiddle->sub.at("x1_2") == RationalFn::constant(Rational(1)) / u1);
}

TEST_CASE("atlas verification passes on the worked examples") {
    SECTION("cotangent line") {
        auto atlas = build_atlas(tp1());
        auto rep = verify_atlas(atlas);
        CHECK(rep.ok());
        CHECK(rep.failures.empty());
        CHECK(rep.triangleCount == 0);
        auto vol = verify_volume_form(atlas);
        CHECK(vol.ok);
        for (int s : vol.signs)
            CHECK(s == 1);
        for (const auto& r : symplectic_residuals(atlas))
            CHECK(r == LogForm::zero(2));
    }
    SECTION("projective plane cotangent bundle") {
        auto atlas = build_atlas(tp2());
        CHECK(atlas.chamberCharts.size() == 8);
        CHECK(atlas.stratumCharts.size() == 15);
        CHECK(atlas.adjacencies.size() == 11);
        CHECK(atlas.embeddings.size() == 37);
        auto rep = verify_atlas(atlas);
        CHECK(rep.ok());
        CHECK(rep.failures.empty());
        CHECK(rep.triangleCount == 1);
        auto vol = verify_volume_form(atlas);
        CHECK(vol.ok);
        for (int s : vol.signs)
            CHECK(s == 1);
        CHECK(symplectic_residuals(atlas).size() == atlas.transitions.size());
    }
    SECTION("four points on a line") {
        auto atlas = build_atlas(a3());
        CHECK(atlas.chamberCharts.size() == 5);
        CHECK(atlas.stratumCharts.size() == 4);
        CHECK(verify_atlas(atlas).ok());
        CHECK(verify_volume_form(atlas).ok);
    }
    SECTION("four lines in the plane") {
        auto atlas = build_atlas(fourline());
        auto rep = verify_atlas(atlas);
        CHECK(rep.ok());
        CHECK(rep.failures.empty());
        CHECK(verify_volume_form(atlas).ok);
    }
}

TEST_CASE("flipping a crossing exponent breaks global descent") {
    auto atlas = build_atlas(tp1());
    int flipped = 0;
    for (auto& t : atlas.transitions) {
        if (!(t.from == atlas.adjacencies[0].chamberA && t.to == atlas.adjacencies[0].chamberB) &&
            !(t.from == atlas.adjacencies[0].chamberB && t.to == atlas.adjacencies[0].chamberA))
            continue;
        RationalFn u = RationalFn::variable("u1");
        t.sub["u1"] = u * (u / t.sub.at("u1"));
        ++flipped;
    }
    REQUIRE(flipped == 2);
    auto rep = verify_atlas(atlas);
    CHECK(rep.inverses);
    CHECK_FALSE(rep.globalDescent);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("mixed wall sets do not define a transition") {
    CHECK_THROWS_MATCHES(make_transition(tp1(), {1, 0}, {0, 1}), input_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("mixed wall set")));
}

TEST_CASE("singular point detection on the mirror of the plane bundle") {
    auto h = tp2();
    auto eqs = mirror_equations(h);
    RationalFn zero = RationalFn::constant(Rational(0));
    RationalFn oneFn = RationalFn::constant(Rational(1));
    RationalFn q3 = RationalFn::variable("q3");

    std::map<std::string, RationalFn> singularPoint{
        {"u1", zero}, {"v1", zero},  {"u2", oneFn}, {"v2", zero},
        {"Z1", -oneFn}, {"Z2", q3},
    };
    CHECK(singular_point_check(h, eqs, singularPoint) == PointVerdict::SINGULAR_POINT);

    RationalFn vGen = RationalFn::constant(Rational(2)) * (oneFn + q3);
    std::map<std::string, RationalFn> smoothPoint{
        {"u1", oneFn}, {"v1", vGen}, {"u2", oneFn}, {"v2", vGen},
        {"Z1", oneFn}, {"Z2", oneFn},
    };
    CHECK(singular_point_check(h, eqs, smoothPoint) == PointVerdict::SMOOTH_POINT);

    SECTION("points off the variety are rejected") {
        auto bad = smoothPoint;
        bad["v1"] = oneFn;
        CHECK_THROWS_MATCHES(singular_point_check(h, eqs, bad), input_error,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("does not satisfy")));
    }
    SECTION("missing coordinates are rejected") {
        auto bad = smoothPoint;
        bad.erase("Z2");
        CHECK_THROWS_MATCHES(singular_point_check(h, eqs, bad), input_error,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("missing a value")));
    }
}

TEST_CASE("period support lists one locus per hyperplane") {
    auto ps = period_support(tp2());
    REQUIRE(ps.loci.size() == 3);
    CHECK(poly_str(ps.loci[0].monomial) == "Z1");
    CHECK(poly_str(ps.loci[1].monomial) == "Z2");
    CHECK(poly_str(ps.loci[2].monomial) == "q3*Z1^-1*Z2^-1");
    CHECK_FALSE(ps.note.empty());

    auto psLine = period_support(a3());
    REQUIRE(psLine.loci.size() == 4);
    CHECK(poly_str(psLine.loci[1].monomial) == "q2*Z1");
}

TEST_CASE("disc class counts obey the two power law") {
    for (const auto& h : {tp1(), tp2(), a3(), fourline()}) {
        auto arr = build_tropical(h);
        for (const auto& c : enumerate_chambers(arr))
            for (int j = 0; j < h.d; ++j)
                for (DiscEnd end : {DiscEnd::Minus, DiscEnd::Plus}) {
                    auto walls = disc_wall_set(h, c.h, j, end);
                    auto classes = maslov2_classes(h, c.h, j, end);
                    CHECK(classes.size() == (size_t{1} << walls.size()));
                    std::set<std::vector<int>> distinct;
                    for (const auto& cl : classes) {
                        distinct.insert(cl.alphas);
                        for (int k : cl.alphas)
                            CHECK(std::find(walls.begin(), walls.end(), k) != walls.end());
                        int betaOnes = 0;
                        for (const auto& b : cl.beta)
                            betaOnes += (b == 1) ? 1 : (b == 0 ? 0 : 100);
                        CHECK(betaOnes == 1);
                    }
                    CHECK(distinct.size() == classes.size());
                }
    }
}
