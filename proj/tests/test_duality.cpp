#include <doctest.h>

#include "test_util.hpp"

#include <spraylab/duality.hpp>

using namespace spraylab;
using tu::vec;

namespace {

/// d = 3, basis centers (0,0), (1,0), (0,1), one extra center (1,1).
CenterConfig cfg3() {
    return CenterConfig(3, {vec({"0", "0"}), vec({"1", "0"}), vec({"0", "1"})}, {vec({"1", "1"})});
}

CenterConfig rnd_config(std::mt19937_64& rng, std::size_t d, std::size_t extras) {
    auto ps = tu::rnd_gp_points(rng, d - 1, d + extras);
    std::vector<QVec> basis(ps.begin(), ps.begin() + d);
    std::vector<QVec> extra(ps.begin() + d, ps.end());
    return CenterConfig(d, std::move(basis), std::move(extra));
}

}  // namespace

TEST_CASE("center configuration validation") {
    CHECK_NOTHROW(cfg3());
    // basis centers affinely dependent on the base hyperplane
    CHECK_THROWS_AS(CenterConfig(3, {vec({"0", "0"}), vec({"1", "0"}), vec({"2", "0"})}),
                    CentersNotWellPlacedError);
    CHECK_THROWS_AS(CenterConfig(3, {vec({"0", "0"}), vec({"1", "0"}), vec({"1", "0"})}),
                    DuplicatePointError);
    CHECK_THROWS_AS(
        CenterConfig(3, {vec({"0", "0"}), vec({"1", "0"}), vec({"0", "1"})}, {vec({"1", "0"})}),
        DuplicatePointError);
    CHECK_THROWS_AS(CenterConfig(3, {vec({"0", "0"}), vec({"1", "0"})}), InputError);
    CHECK_THROWS_AS(HPoint(vec({"0", "0"}), Rational(0)), InputError);
}

TEST_CASE("direction space of an extra center") {
    CenterConfig cfg = cfg3();
    auto us = u_space(cfg, vec({"1", "1"}));
    REQUIRE(us.size() == 1);
    CHECK(us[0] == vec({"-1", "1", "1"}));

    // querying a basis center itself frees exactly its own coordinate
    auto self = u_space(cfg, vec({"0", "0"}));
    REQUIRE(self.size() == 1);
    CHECK(self[0] == vec({"1", "0", "0"}));
}

TEST_CASE("completion coefficients and the pointwise identity") {
    CenterConfig cfg = cfg3();
    QVec q = vec({"1", "1"});
    QVec u = vec({"-1", "1", "1"});
    DualDirection dd = ivan_coefficients(cfg, q, u);
    CHECK(dd.b == Rational(-1));
    CHECK(dd.c == Rational(0));

    // coefficients are linear in u
    DualDirection scaled = ivan_coefficients(cfg, q, Rational(-2) * u);
    CHECK(scaled.b == Rational(-2) * dd.b);
    CHECK(scaled.c == Rational(-2) * dd.c);

    CHECK_THROWS_AS(ivan_coefficients(cfg, q, vec({"1", "0", "0"})), NotInUSpaceError);
    CHECK_THROWS_AS(ivan_coefficients(cfg, q, vec({"0", "0", "0"})), NotInUSpaceError);

    // Σ uᵢ‖x−pᵢ‖² + b‖x−q‖² + c vanishes identically, heights included
    std::mt19937_64 rng(41);
    for (int it = 0; it < 20; ++it) {
        std::size_t d = 3 + it % 2;
        CenterConfig rc = rnd_config(rng, d, 2);
        for (const auto& qc : rc.extra_centers()) {
            QVec uu = u_space(rc, qc)[0];
            DualDirection rdd = ivan_coefficients(rc, qc, uu);
            for (int t = 0; t < 25; ++t) {
                ClosedHPoint x{tu::rnd_vec(rng, d - 1, 6, 4), tu::rnd_positive(rng)};
                Rational acc = rdd.c + rdd.b * x.quadrance_to(qc);
                for (std::size_t i = 0; i < d; ++i)
                    acc += rdd.u[i] * x.quadrance_to(rc.basis_centers()[i]);
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("radii-vector transform worked examples") {
    CenterConfig cfg = cfg3();
    HPoint x(vec({"1", "2"}), Rational(4));
    RadiiVector r = phi(cfg, x);
    CHECK(r.r == vec({"9", "8", "6"}));

    auto back = phi_inverse(cfg, r);
    REQUIRE(back);
    CHECK(back->base == x.base);
    CHECK(back->height_sq == x.height_sq);

    // no preimage in the open upper half-space
    CHECK_FALSE(phi_inverse(cfg, RadiiVector(vec({"1", "2", "100"}))));
    CHECK_FALSE(phi_inverse_closed(cfg, RadiiVector(vec({"1", "2", "100"}))));

    // boundary point: admitted closed, rejected open
    RadiiVector flat(vec({"5", "4", "2"}));
    CHECK_FALSE(phi_inverse(cfg, flat));
    auto closed = phi_inverse_closed(cfg, flat);
    REQUIRE(closed);
    CHECK(closed->boundary());
    CHECK(closed->base == vec({"1", "2"}));

    CHECK_THROWS_AS(RadiiVector(vec({"1", "0", "1"})), InputError);
}

TEST_CASE("transform roundtrip and injectivity on random points") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 10; ++it) {
        std::size_t d = 2 + it % 4;
        CenterConfig cfg = rnd_config(rng, d, 0);
        std::set<QVec> images;
        for (int t = 0; t < 100; ++t) {
            HPoint x(tu::rnd_vec(rng, d - 1, 8, 5), tu::rnd_positive(rng));
            RadiiVector r = phi(cfg, x);
            auto back = phi_inverse(cfg, r);
            REQUIRE(back);
            CHECK(back->base == x.base);
            CHECK(back->height_sq == x.height_sq);
            images.insert(r.r);  // distinct inputs stay distinct
        }
        CHECK(images.size() <= 100);
    }
}

TEST_CASE("sphere images under the transform") {
    CenterConfig cfg = cfg3();

    SUBCASE("basis-center sphere becomes a coordinate hyperplane") {
        Hyperplane h = sphere_image_basis(cfg, 1, Rational(9));
        CHECK(h.normal == vec({"0", "1", "0"}));
        CHECK(h.offset == Rational(9));
        std::mt19937_64 rng(43);
        for (int t = 0; t < 50; ++t) {
            HPoint x(tu::rnd_vec(rng, 2, 6, 4), tu::rnd_positive(rng));
            bool on_sphere = x.quadrance_to(cfg.basis_centers()[1]) == Rational(9);
            CHECK(h.contains(phi(cfg, x).r) == on_sphere);
        }
        CHECK_THROWS_AS(sphere_image_basis(cfg, 3, Rational(1)), InputError);
    }

    SUBCASE("extra-center sphere becomes a tilted hyperplane") {
        DualDirection dd = ivan_coefficients(cfg, vec({"1", "1"}), vec({"-1", "1", "1"}));
        Hyperplane h = sphere_image_extra(cfg, dd, Rational(4));
        CHECK(h.normal == vec({"-1", "1", "1"}));
        CHECK(h.offset == Rational(4));
        // the point (1,1,2) has quadrance 4 to the extra center and maps to (6,5,5)
        HPoint x(vec({"1", "1"}), Rational(4));
        CHECK(phi(cfg, x).r == vec({"6", "5", "5"}));
        CHECK(h.contains(vec({"6", "5", "5"})));

        // equivalence both ways at random points
        std::mt19937_64 rng(44);
        for (int t = 0; t < 50; ++t) {
            HPoint y(tu::rnd_vec(rng, 2, 6, 4), tu::rnd_positive(rng));
            Rational k = y.quadrance_to(vec({"1", "1"}));
            CHECK(sphere_image_extra(cfg, dd, k).contains(phi(cfg, y).r));
            CHECK(h.contains(phi(cfg, y).r) == (k == Rational(4)));
        }
    }
}

TEST_CASE("basis change matrix") {
    std::vector<QVec> id{vec({"1", "0"}), vec({"0", "1"})};
    QMat mi = basis_change(id);
    CHECK(mi.row(0) == QVec::unit(2, 0));
    CHECK(mi.row(1) == QVec::unit(2, 1));

    std::vector<QVec> us{vec({"1", "2"}), vec({"0", "1"})};
    QMat m = basis_change(us);
    CHECK(m.row(0) == us[0]);
    CHECK(m.row(1) == us[1]);

    // w lies on {u_i · w = o} exactly when Mw lies on {y_i = o}
    std::mt19937_64 rng(45);
    for (int t = 0; t < 50; ++t) {
        QVec w = tu::rnd_vec(rng, 2, 6, 4);
        QVec y = m.apply(w);
        for (std::size_t i = 0; i < 2; ++i) CHECK(y[i] == dot(us[i], w));
    }

    CHECK_THROWS_AS(basis_change({vec({"1", "2"}), vec({"2", "4"})}), DependentVectorsError);
    CHECK_THROWS_AS(basis_change({vec({"1", "2"})}), InputError);
}

TEST_CASE("directions derived from a center configuration") {
    auto dirs = directions_from_centers(cfg3());
    REQUIRE(dirs.size() == 4);
    CHECK(dirs[0] == vec({"1", "0", "0"}));
    CHECK(dirs[1] == vec({"0", "1", "0"}));
    CHECK(dirs[2] == vec({"0", "0", "1"}));
    CHECK(dirs[3] == vec({"-1", "1", "1"}));  // coordinate sum already 1
    CHECK(is_general_position_vectors(dirs, 3));

    // an extra center collinear with two basis centers breaks well-placement
    CenterConfig bad(3, {vec({"0", "0"}), vec({"1", "0"}), vec({"0", "1"})}, {vec({"2", "0"})});
    CHECK_THROWS_AS(directions_from_centers(bad), CentersNotWellPlacedError);

    // moment-curve center sets are well placed; derived directions certified
    std::mt19937_64 rng(46);
    for (std::size_t d = 3; d <= 4; ++d) {
        for (int it = 0; it < 5; ++it) {
            std::set<Rational> ts;
            while (ts.size() < d + 5) ts.insert(tu::rnd_rational(rng, 30, 7));
            auto ps = tu::moment_points(d - 1, {ts.begin(), ts.end()});
            CenterConfig cfg(d, {ps.begin(), ps.begin() + d}, {ps.begin() + d, ps.end()});
            auto ds = directions_from_centers(cfg);
            CHECK(ds.size() == d + 5);
            CHECK(is_general_position_vectors(ds, d));
        }
    }
}
