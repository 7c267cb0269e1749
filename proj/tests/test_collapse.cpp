#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "delmorse/collapse.hpp"
#include "delmorse/persistence.hpp"
#include "support.hpp"

using namespace delmorse;
using delmorse::testing::random_gp_points;

namespace {

WeightedPointSet obtuse_triangle() {
    return WeightedPointSet::from_rows(2, {{0, 0}, {4, 0}, {2, 1}});
}

WeightedPointSet equilateral() {
    return WeightedPointSet::from_rows(2, {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
}

// Four points whose Cech complex strictly exceeds the Delaunay triangulation:
// the edge cd is not Delaunay.
WeightedPointSet kite() {
    return WeightedPointSet::from_rows(2, {{0, 0}, {2, 0}, {1, 1.2}, {1, -1.2}});
}

BuildOptions capped(double cap) {
    BuildOptions opt;
    opt.sq_radius_cap = cap;
    return opt;
}

}  // namespace

TEST_CASE("pairing map is empty when every simplex is Delaunay") {
    auto X = obtuse_triangle();
    auto g = pairing_map(X, {}, X.all_vertices());
    CHECK(g.g.empty());
}

TEST_CASE("pairing map on the kite pairs the four non-Delaunay simplices") {
    auto X = kite();
    auto g = pairing_map(X, {}, X.all_vertices());
    REQUIRE(g.g.size() == 4);
    // domain: cd, acd, bcd, abcd
    CHECK(g.g.count({2, 3}));
    CHECK(g.g.count({0, 2, 3}));
    CHECK(g.g.count({1, 2, 3}));
    CHECK(g.g.count({0, 1, 2, 3}));
    for (const auto& [Q, x] : g.g) {
        CHECK(g.g.at(simplex_minus(Q, x)) == x);
        CHECK(g.g.at(simplex_plus(Q, x)) == x);
        // the paired vertex keeps the sphere of the smaller selective set
        auto rm = smallest_sphere(X, simplex_minus(Q, x), {});
        auto rp = smallest_sphere(X, simplex_plus(Q, x), {});
        REQUIRE(rm.feasible());
        REQUIRE(rp.feasible());
        CHECK(rm.value() == doctest::Approx(rp.value()).epsilon(1e-12));
    }
}

TEST_CASE("cech collapses to delcech on the kite and verifies") {
    auto X = kite();
    auto seq = collapse_cech_to_delcech(X, kInf);
    CHECK(seq.steps.size() == 2);
    auto cech = build_cech(X, capped(kInf));
    auto delcech = build_delaunay_cech(X, capped(kInf));
    auto v = verify_collapse(cech, seq, delcech);
    CHECK(v.ok);

    SUBCASE("empty sequence below every non-Delaunay value") {
        auto low = collapse_cech_to_delcech(X, 1.0);  // cd enters at 1.44
        CHECK(low.steps.empty());
    }
    SUBCASE("restriction of the master pair set") {
        auto mid = collapse_cech_to_delcech(X, 1.45);
        for (const auto& st : mid.steps) CHECK(st.value <= 1.45);
        auto cech_mid = build_cech(X, capped(1.45));
        auto delcech_mid = build_delaunay_cech(X, capped(1.45));
        CHECK(verify_collapse(cech_mid, mid, delcech_mid).ok);
    }
}

TEST_CASE("delcech collapses to del on the obtuse triangle") {
    auto X = obtuse_triangle();
    SUBCASE("cap 4: the single pair (AB, ABC)") {
        auto seq = collapse_delcech_to_del(X, 4.0);
        REQUIRE(seq.steps.size() == 1);
        CHECK(seq.steps[0].facet == Simplex{0, 1});
        CHECK(seq.steps[0].cofacet == Simplex{0, 1, 2});
        CHECK(seq.steps[0].value == doctest::Approx(4.0));
        auto delcech = build_delaunay_cech(X, capped(4.0));
        auto del = build_delaunay(X, capped(4.0));
        CHECK(verify_collapse(delcech, seq, del).ok);
    }
    SUBCASE("cap 6.25: complexes already agree") {
        CHECK(collapse_delcech_to_del(X, 6.25).steps.empty());
    }
    SUBCASE("cap 1: both sides are the vertex set") {
        CHECK(collapse_delcech_to_del(X, 1.0).steps.empty());
    }
}

TEST_CASE("del collapses to wrap") {
    auto X = obtuse_triangle();
    SUBCASE("the obtuse triangle loses (AB, ABC)") {
        auto seq = collapse_del_to_wrap(X, kInf);
        REQUIRE(seq.steps.size() == 1);
        CHECK(seq.steps[0].facet == Simplex{0, 1});
        CHECK(verify_collapse(build_delaunay(X, capped(kInf)), seq, wrap_complex(X, kInf)).ok);
    }
    SUBCASE("equilateral: everything critical") {
        CHECK(collapse_del_to_wrap(equilateral(), kInf).steps.empty());
    }
    SUBCASE("cap below the vertex values") {
        CHECK(collapse_del_to_wrap(X, -1.0).steps.empty());
    }
}

TEST_CASE("verify_collapse rejects invalid sequences") {
    // Strip of two triangles abc, bcd.
    FilteredComplex K(2, 4, {}, kInf, "");
    for (auto s : {Simplex{0}, Simplex{1}, Simplex{2}, Simplex{3}, Simplex{0, 1}, Simplex{0, 2},
                   Simplex{1, 2}, Simplex{1, 3}, Simplex{2, 3}, Simplex{0, 1, 2}, Simplex{1, 2, 3}})
        K.insert(s, 0.0);
    K.finalize();
    FilteredComplex target(2, 4, {}, kInf, "");
    for (auto s : {Simplex{0}, Simplex{1}, Simplex{2}, Simplex{3}, Simplex{0, 1}, Simplex{0, 2},
                   Simplex{1, 3}})
        target.insert(s, 0.0);
    target.finalize();

    CollapseSequence good;
    good.steps.push_back({{2, 3}, {1, 2, 3}, 0.0});
    good.steps.push_back({{1, 2}, {0, 1, 2}, 0.0});
    SUBCASE("valid order verifies") {
        auto v = verify_collapse(K, good, target);
        CHECK(v.ok);
    }
    SUBCASE("reversed order fails at the first step") {
        CollapseSequence bad;
        bad.steps = {good.steps[1], good.steps[0]};
        auto v = verify_collapse(K, bad, target);
        CHECK(!v.ok);
        CHECK(v.failing_step == 0);
    }
    SUBCASE("non-free facet fails") {
        CollapseSequence bad;
        bad.steps.push_back({{1, 2}, {1, 2, 3}, 0.0});
        auto v = verify_collapse(K, bad, target);
        CHECK(!v.ok);
    }
    SUBCASE("wrong final set reported") {
        CollapseSequence nothing;
        auto v = verify_collapse(K, nothing, target);
        CHECK(!v.ok);
        CHECK(v.failing_step == -2);
    }
}

TEST_CASE("first simplex pairing lemma on refinement vertices") {
    std::mt19937_64 rng(89);
    int checked = 0;
    for (int trial = 0; trial < 4; ++trial) {
        auto X = random_gp_points(rng, 2, 6, trial % 2 == 1);
        auto deltri = build_delaunay(X, {});
        const Simplex all = X.all_vertices();
        for (const auto& e : deltri.entries()) {
            auto re = smallest_sphere(X, e.simplex, {});
            auto rf = smallest_sphere(X, e.simplex, all);
            if (rf.value() <= re.value() + 1e-9) continue;  // same sphere
            const Simplex lower = simplex_union(re.cert.front, rf.cert.front);
            const Simplex upper = simplex_intersection(re.cert.incl_set, rf.cert.incl_set);
            const Simplex free = simplex_difference(upper, lower);
            REQUIRE(!free.empty());
            for (int x : free) {
                CHECK(!simplex_contains_vertex({}, x));  // x in F \ E with E empty
                auto rem = smallest_sphere(X, simplex_minus(e.simplex, x), {});
                auto rep = smallest_sphere(X, simplex_plus(e.simplex, x), {});
                CHECK(rem.value() == doctest::Approx(rep.value()).epsilon(1e-9));
                auto rfm = smallest_sphere(X, simplex_minus(e.simplex, x), all);
                auto rfp = smallest_sphere(X, simplex_plus(e.simplex, x), all);
                REQUIRE(rfm.feasible());
                REQUIRE(rfp.feasible());
                CHECK(rfm.value() == doctest::Approx(rfp.value()).epsilon(1e-9));
                ++checked;
            }
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("property: full hierarchy verifies at critical-value caps") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 4; ++trial) {
        const int n = 2 + trial % 2;
        const int m = 5 + static_cast<int>(rng() % 2);
        auto X = random_gp_points(rng, n, m, trial == 3);
        HierarchyPlan plan(X);

        std::vector<double> caps = {kInf};
        for (double v : plan.critical_values()) {
            caps.push_back(v - 1e-6);
            caps.push_back(v + 1e-6);
        }
        for (double cap : caps) {
            auto cech = plan.cech(cap);
            auto delcech = plan.delcech(cap);
            auto del = plan.delaunay(cap);
            auto wrap = plan.wrap(cap);
            auto s1 = plan.cech_to_delcech(cap);
            auto s2 = plan.delcech_to_del(cap);
            auto s3 = plan.del_to_wrap(cap);
            CHECK(verify_collapse(cech, s1, delcech).ok);
            CHECK(verify_collapse(delcech, s2, del).ok);
            CHECK(verify_collapse(del, s3, wrap).ok);

            // all stages together form one discrete gradient on the cech complex
            DiscreteGradient V;
            for (const auto& seq : {s1, s2, s3})
                for (const auto& st : seq.steps) V.pairs.emplace_back(st.facet, st.cofacet);
            for (const auto& e : wrap.entries()) V.critical.push_back(e.simplex);
            CHECK(is_gradient(V, cech));
        }
    }
}

TEST_CASE("composed pairing and refinement gradients stay acyclic") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 3; ++trial) {
        auto X = random_gp_points(rng, 2, 6, false);
        auto cech = build_cech(X, capped(kInf));
        auto deltri = build_delaunay(X, {});
        auto delcech = build_delaunay_cech(X, capped(kInf));

        // vertex-refined sum refinement on DelTri composed with the pairing pairs
        auto W_cech = radius_gradient(X, {}, cech);
        auto W_del = radius_gradient(X, X.all_vertices(), deltri);
        // restriction of the cech field to the delcech complex
        GeneralizedVectorField W_cech_restr;
        W_cech_restr.complex = &delcech;
        W_cech_restr.interval_of.assign(delcech.size(), -1);
        {
            std::map<std::pair<Simplex, Simplex>, int> seen;
            for (size_t i = 0; i < delcech.size(); ++i) {
                const auto& iv = W_cech.interval_of_simplex(delcech.entry(i).simplex);
                auto key = std::make_pair(iv.lower, iv.upper);
                auto [it, fresh] = seen.try_emplace(key, static_cast<int>(W_cech_restr.intervals.size()));
                if (fresh) W_cech_restr.intervals.push_back(iv);
                W_cech_restr.interval_of[i] = it->second;
            }
        }
        GeneralizedVectorField W_del_restr;
        W_del_restr.complex = &delcech;
        W_del_restr.interval_of.assign(delcech.size(), -1);
        {
            std::map<std::pair<Simplex, Simplex>, int> seen;
            for (size_t i = 0; i < delcech.size(); ++i) {
                const auto& iv = W_del.interval_of_simplex(delcech.entry(i).simplex);
                auto key = std::make_pair(iv.lower, iv.upper);
                auto [it, fresh] = seen.try_emplace(key, static_cast<int>(W_del_restr.intervals.size()));
                if (fresh) W_del_restr.intervals.push_back(iv);
                W_del_restr.interval_of[i] = it->second;
            }
        }
        auto W = sum_refinement(W_cech_restr, W_del_restr, delcech);
        auto refined = vertex_refine(W);

        DiscreteGradient pairing;
        auto g = pairing_map(X, {}, X.all_vertices());
        for (const auto& [Q, x] : g.g)
            if (!simplex_contains_vertex(Q, x)) pairing.pairs.emplace_back(Q, simplex_plus(Q, x));

        auto composed = compose_gradients(refined, delcech, pairing, cech);
        CHECK(is_gradient(composed, cech));
    }
}

TEST_CASE("zigzag diagram") {
    SUBCASE("three points split across two sets") {
        // (1, 1) would sit exactly on the diametral circle of the first two
        // points, so the third point is nudged off it.
        auto X = WeightedPointSet::from_rows(2, {{0, 0}, {2, 0}});
        auto Y = WeightedPointSet::from_rows(2, {{1, 1.1}});
        auto report = zigzag_connect(X, Y, 2.0);
        CHECK(report.inclusions.size() == 10);
        CHECK(report.collapses.size() == 4);
        CHECK(report.all_hold());
        if (!report.all_hold()) MESSAGE(report.summary());
    }
    SUBCASE("exactly cocircular union is rejected as degenerate") {
        auto X = WeightedPointSet::from_rows(2, {{0, 0}, {2, 0}});
        auto Y = WeightedPointSet::from_rows(2, {{1, 1}});
        CHECK_THROWS_AS(zigzag_connect(X, Y, 2.0), DegenerateInput);
    }
    SUBCASE("empty second set") {
        auto X = WeightedPointSet::from_rows(2, {{0, 0}, {2, 0}});
        auto Y = WeightedPointSet::from_rows(2, {});
        auto report = zigzag_connect(X, Y, 2.0);
        CHECK(report.all_hold());
    }
    SUBCASE("identical sets give equalities") {
        auto X = WeightedPointSet::from_rows(2, {{0, 0}, {2, 0}, {1, 0.8}});
        auto report = zigzag_connect(X, X, 1.5);
        CHECK(report.all_hold());
        for (const auto& c : report.collapses) {
            if (c.label.rfind("del(XuY,", 0) == 0) CHECK(c.steps == 0);
        }
    }
    SUBCASE("random pairs") {
        std::mt19937_64 rng(103);
        for (int trial = 0; trial < 3; ++trial) {
            auto XY = random_gp_points(rng, 2, 7, false);
            std::vector<std::vector<double>> xs, ys;
            for (int i = 0; i < 4; ++i) {
                auto p = XY.point(i);
                xs.push_back({p[0], p[1]});
            }
            for (int i = 4; i < 7; ++i) {
                auto p = XY.point(i);
                ys.push_back({p[0], p[1]});
            }
            auto X = WeightedPointSet::from_rows(2, xs);
            auto Y = WeightedPointSet::from_rows(2, ys);
            auto report = zigzag_connect(X, Y, 0.4 + 0.3 * trial);
            CHECK(report.all_hold());
            if (!report.all_hold()) MESSAGE(report.summary());
        }
    }
}
