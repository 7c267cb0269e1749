#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "delmorse/morse.hpp"
#include "support.hpp"

using namespace delmorse;
using delmorse::testing::all_subsets;
using delmorse::testing::random_gp_points;

namespace {

WeightedPointSet obtuse_triangle() {
    return WeightedPointSet::from_rows(2, {{0, 0}, {4, 0}, {2, 1}});
}

WeightedPointSet equilateral() {
    return WeightedPointSet::from_rows(2, {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
}

BuildOptions capped(double cap) {
    BuildOptions opt;
    opt.sq_radius_cap = cap;
    return opt;
}

const Interval* find_interval(const GeneralizedVectorField& W, const Simplex& lower,
                              const Simplex& upper) {
    for (const auto& iv : W.intervals)
        if (iv.lower == lower && iv.upper == upper) return &iv;
    return nullptr;
}

}  // namespace

TEST_CASE("cech gradient of the obtuse triangle pairs AB with ABC at value 4") {
    auto X = obtuse_triangle();
    auto K = build_cech(X, capped(kInf));
    auto W = radius_gradient(X, {}, K);
    REQUIRE(W.intervals.size() == 6);
    const Interval* iv = find_interval(W, {0, 1}, {0, 1, 2});
    REQUIRE(iv != nullptr);
    CHECK(iv->value == doctest::Approx(4.0));
    CHECK(is_generalized_morse(K, W));
    int singular = 0;
    for (const auto& i : W.intervals) singular += i.singular();
    CHECK(singular == 5);
}

TEST_CASE("delaunay gradient of the obtuse triangle: same interval at value 6.25") {
    auto X = obtuse_triangle();
    auto K = build_delaunay(X, capped(kInf));
    auto W = radius_gradient(X, X.all_vertices(), K);
    const Interval* iv = find_interval(W, {0, 1}, {0, 1, 2});
    REQUIRE(iv != nullptr);
    CHECK(iv->value == doctest::Approx(6.25));
    CHECK(find_interval(W, {0, 2}, {0, 2}) != nullptr);  // AC singular
    CHECK(find_interval(W, {1, 2}, {1, 2}) != nullptr);  // BC singular
    CHECK(is_generalized_morse(K, W));
}

TEST_CASE("equilateral triangle: everything singular for E = X") {
    auto X = equilateral();
    auto K = build_delaunay(X, capped(kInf));
    auto W = radius_gradient(X, X.all_vertices(), K);
    for (const auto& iv : W.intervals) CHECK(iv.singular());
    CHECK(W.intervals.size() == 7);
}

TEST_CASE("is_generalized_morse rejects corrupted fields") {
    auto X = obtuse_triangle();
    auto K = build_cech(X, capped(kInf));
    auto W = radius_gradient(X, {}, K);
    REQUIRE(is_generalized_morse(K, W));

    SUBCASE("splitting an equal-value interval into two") {
        GeneralizedVectorField bad = W;
        for (size_t id = 0; id < bad.intervals.size(); ++id) {
            auto& iv = bad.intervals[id];
            if (!iv.singular()) {
                // AB and ABC get distinct intervals with equal value 4.
                Interval upper_only{iv.upper, iv.upper, iv.value};
                iv.upper = iv.lower;
                const int fresh = static_cast<int>(bad.intervals.size());
                const int upper_idx = K.index_of(upper_only.lower);
                bad.intervals.push_back(upper_only);
                bad.interval_of[upper_idx] = fresh;
                break;
            }
        }
        CHECK(!is_generalized_morse(K, bad));
    }
    SUBCASE("wrong complex pointer") {
        auto K2 = build_cech(X, capped(kInf));
        CHECK(!is_generalized_morse(K2, W));
    }
}

TEST_CASE("manufactured cyclic pairing on the triangle boundary is rejected") {
    auto X = equilateral();
    auto K = build_cech(X, capped(0.3));  // 3 vertices + 3 edges
    REQUIRE(K.size() == 6);

    DiscreteGradient V;
    V.pairs.emplace_back(Simplex{0}, Simplex{0, 1});
    V.pairs.emplace_back(Simplex{1}, Simplex{1, 2});
    V.pairs.emplace_back(Simplex{2}, Simplex{0, 2});
    CHECK(!is_gradient(V, K));

    // The same partition as a generalized field fails the Morse value axioms.
    GeneralizedVectorField W;
    W.complex = &K;
    W.interval_of.assign(K.size(), -1);
    for (const auto& [p, r] : V.pairs) {
        const int id = static_cast<int>(W.intervals.size());
        W.intervals.push_back({p, r, 0.0});
        W.interval_of[K.index_of(p)] = id;
        W.interval_of[K.index_of(r)] = id;
    }
    CHECK(!is_generalized_morse(K, W));
}

TEST_CASE("acyclic pairing on the triangle boundary is accepted") {
    auto X = equilateral();
    auto K = build_cech(X, capped(0.3));
    DiscreteGradient V;
    V.pairs.emplace_back(Simplex{1}, Simplex{0, 1});
    V.pairs.emplace_back(Simplex{2}, Simplex{1, 2});
    V.critical = {Simplex{0}, Simplex{0, 2}};
    CHECK(is_gradient(V, K));

    DiscreteGradient empty;
    for (const auto& e : K.entries()) empty.critical.push_back(e.simplex);
    CHECK(is_gradient(empty, K));
}

TEST_CASE("vertex_refine") {
    SUBCASE("a one-pair interval") {
        auto X = obtuse_triangle();
        auto K = build_cech(X, capped(kInf));
        auto W = radius_gradient(X, {}, K);
        auto V = vertex_refine(W);
        REQUIRE(V.pairs.size() == 1);
        CHECK(V.pairs[0].first == Simplex{0, 1});
        CHECK(V.pairs[0].second == Simplex{0, 1, 2});
        CHECK(V.critical.size() == 5);
        CHECK(is_gradient(V, K));
    }
    SUBCASE("free vertex choice follows the order") {
        GeneralizedVectorField W;
        FilteredComplex K(2, 3, {}, kInf, "");
        for (unsigned mask = 1; mask < 8; ++mask) {
            Simplex s;
            for (int v = 0; v < 3; ++v)
                if (mask & (1u << v)) s.push_back(v);
            K.insert(s, 0.0);
        }
        K.finalize();
        W.complex = &K;
        W.intervals.push_back({{0}, {0, 1, 2}, 0.0});
        W.interval_of.assign(K.size(), 0);
        // natural order: refine by vertex 1
        auto V = vertex_refine(W);
        REQUIRE(V.pairs.size() == 2);
        CHECK(std::count(V.pairs.begin(), V.pairs.end(),
                         std::make_pair(Simplex{0}, Simplex{0, 1})) == 1);
        CHECK(std::count(V.pairs.begin(), V.pairs.end(),
                         std::make_pair(Simplex{0, 2}, Simplex{0, 1, 2})) == 1);
        // reversed order: refine by vertex 2
        auto V2 = vertex_refine(W, {2, 1, 0});
        CHECK(std::count(V2.pairs.begin(), V2.pairs.end(),
                         std::make_pair(Simplex{0}, Simplex{0, 2})) == 1);
    }
}

TEST_CASE("critical simplices are independent of E, with centered certificates") {
    auto X = obtuse_triangle();
    auto K_del = build_delaunay(X, capped(kInf));
    auto crit_del = critical_simplices(radius_gradient(X, X.all_vertices(), K_del));
    REQUIRE(crit_del.size() == 5);
    CHECK(crit_del[0].second == doctest::Approx(0.0));
    CHECK(crit_del[3].first == Simplex{0, 2});
    CHECK(crit_del[3].second == doctest::Approx(1.25));
    CHECK(crit_del[4].second == doctest::Approx(1.25));

    auto K_cech = build_cech(X, capped(kInf));
    auto crit_cech = critical_simplices(radius_gradient(X, {}, K_cech));
    REQUIRE(crit_cech.size() == crit_del.size());
    for (size_t i = 0; i < crit_cech.size(); ++i) {
        CHECK(crit_cech[i].first == crit_del[i].first);
        CHECK(crit_cech[i].second == doctest::Approx(crit_del[i].second).epsilon(1e-9));
    }
}

TEST_CASE("equilateral criticals: three vertices, three edges, one triangle") {
    auto X = equilateral();
    auto K = build_cech(X, capped(kInf));
    auto crit = critical_simplices(radius_gradient(X, {}, K));
    REQUIRE(crit.size() == 7);
    CHECK(crit[2].second == doctest::Approx(0.0));
    CHECK(crit[3].second == doctest::Approx(0.25));
    CHECK(crit[6].second == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("compose_gradients") {
    auto X = obtuse_triangle();
    auto K1 = build_cech(X, capped(kInf));
    auto K0 = K1.restrict_to_cap(2.0);  // vertices + AC + BC

    DiscreteGradient V0;
    V0.pairs.emplace_back(Simplex{2}, Simplex{0, 2});
    V0.critical = {Simplex{0}, Simplex{1}, Simplex{1, 2}};
    DiscreteGradient V1;
    V1.pairs.emplace_back(Simplex{0, 1}, Simplex{0, 1, 2});

    auto V = compose_gradients(V0, K0, V1, K1);
    CHECK(V.pairs.size() == 2);
    CHECK(V.critical.size() == 3);
    CHECK(is_gradient(V, K1));

    SUBCASE("second gradient touching the subcomplex is rejected") {
        DiscreteGradient bad;
        bad.pairs.emplace_back(Simplex{2}, Simplex{1, 2});
        CHECK_THROWS_AS(compose_gradients(V0, K0, bad, K1), PreconditionViolated);
    }
    SUBCASE("empty second gradient keeps the first unchanged") {
        DiscreteGradient none;
        auto W = compose_gradients(V0, K0, none, K0);
        CHECK(W.pairs == V0.pairs);
        CHECK(W.critical.size() == 3);
    }
    SUBCASE("empty first gradient leaves the subcomplex critical") {
        DiscreteGradient none;
        auto W = compose_gradients(none, K0, V1, K1);
        CHECK(W.pairs == V1.pairs);
        CHECK(W.critical.size() == K0.size());
    }
}

TEST_CASE("sum_refinement") {
    auto X = obtuse_triangle();
    auto deltri = build_delaunay(X, capped(kInf));
    auto W_del = radius_gradient(X, X.all_vertices(), deltri);
    auto K_cech = build_cech(X, capped(kInf));
    auto W_cech = radius_gradient(X, {}, K_cech);

    SUBCASE("idempotence") {
        auto W = sum_refinement(W_del, W_del, deltri);
        CHECK(W.intervals.size() == W_del.intervals.size());
        CHECK(is_generalized_morse(deltri, W));
    }
    SUBCASE("cech interval meets delaunay interval") {
        auto W = sum_refinement(W_cech, W_del, deltri);
        const Interval* iv = find_interval(W, {0, 1}, {0, 1, 2});
        REQUIRE(iv != nullptr);
        CHECK(is_generalized_morse(deltri, W));
        int singular = 0;
        for (const auto& i : W.intervals) singular += i.singular();
        CHECK(singular == 5);
    }
}

TEST_CASE("property: morse axioms for every E on random instances") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 2 + trial % 2;
        const int m = 4 + static_cast<int>(rng() % 3);
        auto X = random_gp_points(rng, n, m, trial % 2 == 1);
        std::vector<std::pair<Simplex, double>> crit_ref;
        for (const auto& E : all_subsets(m, true)) {
            auto K = build_selective_delaunay(X, E, capped(kInf));
            auto W = radius_gradient(X, E, K);
            CHECK(is_generalized_morse(K, W));
            auto V = vertex_refine(W);
            CHECK(is_gradient(V, K));
            // refinement preserves the critical set
            auto crit = critical_simplices(W);
            std::vector<Simplex> crit_simplices;
            for (const auto& [s, v] : crit) crit_simplices.push_back(s);
            std::sort(crit_simplices.begin(), crit_simplices.end());
            auto vc = V.critical;
            std::sort(vc.begin(), vc.end());
            CHECK(vc == crit_simplices);
            // critical-set invariance across E
            if (E.empty()) {
                crit_ref = crit;
            } else {
                REQUIRE(crit.size() == crit_ref.size());
                for (size_t i = 0; i < crit.size(); ++i) {
                    CHECK(crit[i].first == crit_ref[i].first);
                    CHECK(crit[i].second == doctest::Approx(crit_ref[i].second).epsilon(1e-9));
                }
            }
        }
        // centeredness: critical iff Front = On = Incl for the Delaunay sphere
        auto deltri = build_delaunay(X, capped(kInf));
        std::vector<Simplex> centered;
        for (const auto& e : deltri.entries()) {
            auto r = smallest_sphere(X, e.simplex, X.all_vertices());
            REQUIRE(r.feasible());
            if (r.cert.front == r.cert.incl_set) centered.push_back(e.simplex);
        }
        std::sort(centered.begin(), centered.end());
        std::vector<Simplex> crit_simplices;
        for (const auto& [s, v] : crit_ref) crit_simplices.push_back(s);
        std::sort(crit_simplices.begin(), crit_simplices.end());
        CHECK(centered == crit_simplices);
    }
}
