#include <catch2/catch_amalgamated.hpp>

#include "hypmirror/tropical.hpp"

#include <random>
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

TropicalArrangement single_line() {
    TropicalHyperplane th;
    th.index = 0;
    th.support = {1, 2};
    th.constant = 5;
    return build_tropical_raw(2, {th});
}

// check a chamber witness against its defining strict system
bool witness_in_chamber(const TropicalArrangement& arr, const ChamberLabel& c) {
    LinearSystem sys;
    sys.dim = arr.d;
    for (int k = 0; k < arr.n; ++k)
        detail::add_cell_constraints(sys, arr.hyp[static_cast<size_t>(k)],
                                     {c.h[static_cast<size_t>(k)]});
    return satisfies(sys, c.witness);
}

} // namespace

TEST_CASE("tropical supports follow the dependency pattern") {
    auto arr = build_tropical(tp2());
    REQUIRE(arr.n == 3);
    CHECK(arr.hyp[0].support == std::vector<int>{1});
    CHECK(arr.hyp[1].support == std::vector<int>{2});
    CHECK(arr.hyp[2].support == std::vector<int>{1, 2});
    CHECK(arr.hyp[2].constant == 5);
}

TEST_CASE("non-simple inputs are rejected with witnesses") {
    SECTION("equal support of size two always shares a ray") {
        auto h = load_and_normalize(
            raw_of(2, {{1, 0}, {0, 1}, {1, 1}, {1, 1}}, {0, 0, 1, 2}, {1, 2, 3, 4}));
        CHECK_THROWS_MATCHES(build_tropical(h), non_simple_error,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("share a ray")));
    }
    SECTION("parallel walls need distinct constants") {
        auto h = load_and_normalize(raw_of(1, {{1}, {-1}}, {0, 1}, {3, 3}));
        CHECK_THROWS_MATCHES(build_tropical(h), non_simple_error,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("same constant")));
    }
    SECTION("vertex landing on another wall is caught by the cell check") {
        auto h = load_and_normalize(
            raw_of(2, {{1, 0}, {0, 1}, {1, 1}}, {0, 0, 1}, {0, 5, 0}));
        CHECK_THROWS_MATCHES(build_tropical(h), non_simple_error,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("codimension")));
    }
}

TEST_CASE("chambers of two points on a line") {
    auto arr = build_tropical(tp1());
    auto chambers = enumerate_chambers(arr);
    std::set<std::vector<int>> labels;
    for (const auto& c : chambers) {
        labels.insert(c.h);
        CHECK(witness_in_chamber(arr, c));
    }
    CHECK(labels == std::set<std::vector<int>>{{0, 0}, {1, 0}, {1, 1}});
}

TEST_CASE("chambers of a single tropical line") {
    auto arr = single_line();
    auto chambers = enumerate_chambers(arr);
    std::set<std::vector<int>> labels;
    for (const auto& c : chambers)
        labels.insert(c.h);
    CHECK(labels == std::set<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("strata of a single tropical line") {
    auto arr = single_line();
    auto strata = enumerate_strata(arr);
    REQUIRE(strata.size() == 4);
    int zeroDim = 0, oneDim = 0;
    for (const auto& s : strata) {
        REQUIRE(s.ties.size() == 1);
        const auto& v = s.ties.at(0);
        if (s.dim == 0) {
            ++zeroDim;
            CHECK(v == std::vector<int>{0, 1, 2});
        } else {
            ++oneDim;
            CHECK(s.dim == 1);
            CHECK(v.size() == 2);
        }
    }
    CHECK(zeroDim == 1);
    CHECK(oneDim == 3);
}

TEST_CASE("strata of two points on a line") {
    auto arr = build_tropical(tp1());
    auto strata = enumerate_strata(arr);
    REQUIRE(strata.size() == 2);
    for (const auto& s : strata) {
        CHECK(s.dim == 0);
        CHECK(s.ties.size() == 1);
    }
    CHECK(strata[0].ties.count(0) + strata[1].ties.count(0) == 1);
    CHECK(strata[0].ties.count(1) + strata[1].ties.count(1) == 1);
}

TEST_CASE("admissibility of strata") {
    auto h = tp2();
    auto arr = build_tropical(h);
    for (const auto& s : enumerate_strata(arr)) {
        if (s.ties.size() == 1)
            CHECK(admissible(s, h));
    }
    // two non-parallel real hyperplanes always meet
    for (const auto& s : enumerate_strata(arr))
        CHECK(admissible(s, h));
}

TEST_CASE("wall sets and crossing exponents") {
    SECTION("single flip onto a coordinate") {
        auto ws = wall_sets({0, 0}, {1, 0}, 1);
        REQUIRE(ws.size() == 1);
        REQUIRE(ws.count(1) == 1);
        CHECK(ws[1].members == std::vector<int>{0});
        CHECK(ws[1].deltaFwd == 1);
        CHECK(ws[1].deltaBwd == 0);
        CHECK_FALSE(ws[1].mixed);
    }
    SECTION("identical labels give no walls") {
        CHECK(wall_sets({1, 0, 2}, {1, 0, 2}, 2).empty());
    }
    SECTION("two flips onto the same coordinate") {
        auto ws = wall_sets({0, 0}, {1, 1}, 1);
        REQUIRE(ws.count(1) == 1);
        CHECK(ws[1].members == std::vector<int>{0, 1});
        CHECK(ws[1].deltaFwd == 1);
        CHECK(ws[1].deltaBwd == 0);
    }
    SECTION("opposite flips are reported as mixed") {
        // hyperplane 1 flips 0 -> 1, hyperplane 2 flips 1 -> 0
        auto ws = wall_sets({0, 1}, {1, 0}, 1);
        REQUIRE(ws.count(1) == 1);
        CHECK(ws[1].members == std::vector<int>{0, 1});
        CHECK(ws[1].mixed);
        CHECK(ws[1].deltaFwd == 0);
        CHECK(ws[1].deltaBwd == 0);
    }
    SECTION("coordinate-to-coordinate flip populates both sets") {
        auto ws = wall_sets({1}, {2}, 2);
        REQUIRE(ws.count(1) == 1);
        REQUIRE(ws.count(2) == 1);
        CHECK(ws[1].members == std::vector<int>{0});
        CHECK(ws[1].deltaBwd == 1);
        CHECK(ws[2].members == std::vector<int>{0});
        CHECK(ws[2].deltaFwd == 1);
    }
}

TEST_CASE("chamber adjacency flips exactly one label") {
    auto arr = build_tropical(tp2());
    auto chambers = enumerate_chambers(arr);
    auto adj = chamber_adjacencies(arr);
    REQUIRE_FALSE(adj.empty());
    for (const auto& e : adj) {
        const auto& ha = chambers[static_cast<size_t>(e.chamberA)].h;
        const auto& hb = chambers[static_cast<size_t>(e.chamberB)].h;
        int diff = 0;
        for (size_t k = 0; k < ha.size(); ++k)
            if (ha[k] != hb[k])
                ++diff;
        CHECK(diff == 1);
        CHECK(ha[static_cast<size_t>(e.hyperplane)] == e.labelA);
        CHECK(hb[static_cast<size_t>(e.hyperplane)] == e.labelB);
        // wall sets touch exactly the flipped hyperplane
        auto ws = wall_sets(ha, hb, arr.d);
        std::set<int> touched;
        for (const auto& [j, w] : ws) {
            CHECK_FALSE(w.mixed);
            for (int k : w.members)
                touched.insert(k);
        }
        CHECK(touched == std::set<int>{e.hyperplane});
    }
}

TEST_CASE("every random point lands in exactly one enumerated cell") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-80, 80);
    auto check_arrangement = [&](const TropicalArrangement& arr, int samples) {
        // cell keys are unique, so membership is unambiguous
        std::set<std::vector<std::vector<int>>> keys;
        for (const auto& c : arr.cells)
            keys.insert(c.val);
        REQUIRE(keys.size() == arr.cells.size());
        for (int t = 0; t < samples; ++t) {
            std::vector<Rational> tau;
            for (int i = 0; i < arr.d; ++i)
                tau.push_back(Rational(num(rng), 7));
            int ci = classify(arr, tau);
            REQUIRE(ci >= 0);
        }
    };
    check_arrangement(build_tropical(tp1()), 2000);
    check_arrangement(build_tropical(tp2()), 2000);
    auto fourline = load_and_normalize(
        raw_of(2, {{1, 0}, {0, 1}, {-1, -1}, {0, -1}}, {0, 0, 1, 2}, {1, 2, 3, 4}));
    check_arrangement(build_tropical(fourline), 2000);
}

TEST_CASE("chamber count matches a sampling oracle") {
    auto arr = build_tropical(tp2());
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-200, 200);
    std::set<std::vector<int>> seen;
    for (int t = 0; t < 10000; ++t) {
        std::vector<Rational> tau{Rational(num(rng), 13), Rational(num(rng), 13)};
        int ci = classify(arr, tau);
        REQUIRE(ci >= 0);
        if (arr.cells[static_cast<size_t>(ci)].is_chamber())
            seen.insert(arr.cells[static_cast<size_t>(ci)].chamber_label());
    }
    CHECK(seen.size() == enumerate_chambers(arr).size());
}

TEST_CASE("stratum frame of a point wall on the line") {
    auto arr = build_tropical(tp1());
    auto strata = enumerate_strata(arr);
    const Stratum* wall1 = nullptr;
    for (const auto& s : strata)
        if (s.ties.count(0))
            wall1 = &s;
    REQUIRE(wall1);
    auto frame = stratum_frame(*wall1, arr);
    CHECK(frame.tangent.empty());
    REQUIRE(frame.facetNormals.size() == 1);
    CHECK(frame.vertexLabels[0] == std::vector<int>{1, 0});
    REQUIRE(frame.facetNormals[0].size() == 2);
    CHECK(frame.facetNormals[0][0] == std::vector<Int>{1});
    CHECK(frame.facetNormals[0][1] == std::vector<Int>{-1});
}

TEST_CASE("stratum frames of a single tropical line") {
    auto arr = single_line();
    auto strata = enumerate_strata(arr);
    for (const auto& s : strata) {
        auto frame = stratum_frame(s, arr);
        if (s.dim == 0) {
            CHECK(frame.tangent.empty());
            REQUIRE(frame.facetNormals.size() == 1);
            CHECK(frame.vertexLabels[0] == std::vector<int>{1, 2, 0});
            REQUIRE(frame.facetNormals[0].size() == 3);
            CHECK(frame.facetNormals[0][0] == std::vector<Int>{1, 0});
            CHECK(frame.facetNormals[0][1] == std::vector<Int>{0, 1});
            CHECK(frame.facetNormals[0][2] == std::vector<Int>{-1, -1});
        } else if (s.ties.at(0) == std::vector<int>{1, 2}) {
            REQUIRE(frame.tangent.size() == 1);
            CHECK(frame.tangent[0] == std::vector<Int>{1, 1});
            REQUIRE(frame.facetNormals[0].size() == 2);
            CHECK(frame.facetNormals[0][0] == std::vector<Int>{0, -1});
            CHECK(frame.facetNormals[0][1] == std::vector<Int>{0, 1});
        }
    }
}

TEST_CASE("frame invariants hold on every stratum of the test arrangements") {
    std::vector<HypertoricData> data{tp1(), tp2()};
    data.push_back(load_and_normalize(
        raw_of(2, {{1, 0}, {0, 1}, {-1, -1}, {0, -1}}, {0, 0, 1, 2}, {1, 2, 3, 4})));
    data.push_back(load_and_normalize(raw_of(1, {{1}, {1}, {1}, {1}}, {0, 1, 2, 3})));
    for (const auto& h : data) {
        auto arr = build_tropical(h);
        for (const auto& s : enumerate_strata(arr)) {
            auto frame = stratum_frame(s, arr);
            CHECK(static_cast<int>(frame.tangent.size()) == s.dim);
            REQUIRE(frame.facetNormals.size() == s.ties.size());
            for (size_t t = 0; t < frame.facetNormals.size(); ++t) {
                const auto& normals = frame.facetNormals[t];
                REQUIRE(normals.size() == s.ties.at(frame.tiedHyperplanes[t]).size());
                std::vector<Int> sum(static_cast<size_t>(arr.d), Int(0));
                for (const auto& a : normals) {
                    CHECK(is_primitive(a));
                    for (int c = 0; c < arr.d; ++c)
                        sum[static_cast<size_t>(c)] += a[static_cast<size_t>(c)];
                }
                for (const Int& x : sum)
                    CHECK(x == 0);
                // every normal is parallel to the other tied hyperplanes' strata
                for (size_t tt = 0; tt < frame.facetNormals.size(); ++tt) {
                    if (tt == t)
                        continue;
                    const auto& vv = s.ties.at(frame.tiedHyperplanes[tt]);
                    for (const auto& a : normals)
                        for (size_t j = 1; j < vv.size(); ++j) {
                            Int pair = 0;
                            if (vv[0] >= 1)
                                pair += a[static_cast<size_t>(vv[0] - 1)];
                            if (vv[j] >= 1)
                                pair -= a[static_cast<size_t>(vv[j] - 1)];
                            CHECK(pair == 0);
                        }
                }
            }
            // tangent vectors lie in every tied hyperplane's direction space
            for (const auto& tv : frame.tangent)
                for (const auto& [k, vv] : s.ties)
                    for (size_t j = 1; j < vv.size(); ++j) {
                        Int pair = 0;
                        if (vv[0] >= 1)
                            pair += tv[static_cast<size_t>(vv[0] - 1)];
                        if (vv[j] >= 1)
                            pair -= tv[static_cast<size_t>(vv[j] - 1)];
                        CHECK(pair == 0);
                    }
        }
    }
}

TEST_CASE("single hyperplane with full support has one vertex") {
    auto arr = single_line();
    int vertices = 0;
    for (const auto& s : enumerate_strata(arr))
        if (s.dim == 0)
            ++vertices;
    CHECK(vertices == 1);
}
