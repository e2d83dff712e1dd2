#include <doctest.h>

#include "test_util.hpp"

#include <algorithm>

using namespace spraylab;
using tu::vec;

namespace {

std::vector<Rational> rats(std::initializer_list<const char*> xs) {
    std::vector<Rational> out;
    for (const char* s : xs) out.push_back(Rational::parse(s));
    return out;
}

CenterConfig cfg3() {
    return CenterConfig(3, {vec({"0", "0"}), vec({"1", "0"}), vec({"0", "1"})}, {vec({"1", "1"})});
}

}  // namespace

TEST_CASE("assignment validation") {
    PointAssignment a{{vec({"0", "0"}), vec({"1", "0"})}, {1, 2}};
    CHECK_NOTHROW(a.validate());
    CHECK(a.part_count() == 2);

    PointAssignment sparse{{vec({"0", "0"}), vec({"1", "0"})}, {1, 3}};
    CHECK_THROWS_AS(sparse.validate(), InputError);
    PointAssignment zero_based{{vec({"0", "0"})}, {0}};
    CHECK_THROWS_AS(zero_based.validate(), InputError);
    PointAssignment mismatched{{vec({"0", "0"})}, {1, 1}};
    CHECK_THROWS_AS(mismatched.validate(), InputError);
}

TEST_CASE("direction streams") {
    auto s = DirectionStream::moment_curve(2);
    CHECK(s.at(0) == vec({"1", "1"}));
    CHECK(s.at(2) == vec({"1", "3"}));

    // every prefix of the moment curve is in general position
    auto s3 = DirectionStream::moment_curve(3);
    std::vector<QVec> prefix;
    for (std::size_t k = 0; k < 6; ++k) prefix.push_back(s3.at(k));
    CHECK(is_general_position_vectors(prefix, 3));

    auto finite = DirectionStream::from_list(2, {vec({"1", "0"}), vec({"0", "1"})});
    CHECK(finite.at(1) == vec({"0", "1"}));
    CHECK_THROWS_AS(finite.at(2), ExhaustedStreamError);
    CHECK_THROWS_AS(DirectionStream::from_list(2, {vec({"1", "0"}), vec({"2", "0"})}), InputError);
}

TEST_CASE("greedy assignment worked examples") {
    auto one = DirectionStream::moment_curve(2);
    auto a1 = greedy_drizzle_assign({vec({"3", "4"})}, one);
    CHECK(a1.part_of == std::vector<std::size_t>{1});

    // (0,0) and (1,−1) share the value 0 against (1,1): second point overflows
    auto s = DirectionStream::moment_curve(2);
    auto a2 = greedy_drizzle_assign({vec({"0", "0"}), vec({"1", "-1"})}, s);
    CHECK(a2.part_of == std::vector<std::size_t>{1, 2});

    auto t = DirectionStream::moment_curve(2);
    auto a3 = greedy_drizzle_assign({vec({"0", "0"}), vec({"1", "0"})}, t);
    CHECK(a3.part_of == std::vector<std::size_t>{1, 1});

    auto u = DirectionStream::moment_curve(2);
    CHECK_THROWS_AS(greedy_drizzle_assign({vec({"1", "1"}), vec({"1", "1"})}, u), DuplicatePointError);
}

TEST_CASE("greedy assignment separates every part and respects the index bound") {
    std::mt19937_64 rng(51);
    std::set<QVec> pts;
    while (pts.size() < 200) pts.insert(tu::rnd_vec(rng, 3, 10, 4));
    std::vector<QVec> points(pts.begin(), pts.end());
    std::shuffle(points.begin(), points.end(), rng);

    auto s = DirectionStream::moment_curve(3);
    auto a = greedy_drizzle_assign(points, s);
    CHECK(a.part_count() <= (points.size() - 1) * 2 + 1);

    std::vector<QVec> dirs;
    for (std::size_t k = 0; k < a.part_count(); ++k) dirs.push_back(s.at(k));
    auto rep = verify_hyperplane_cover(a, dirs);
    CHECK(rep.max_multiplicity == 1);
    for (const auto& pr : rep.parts) CHECK(pr.size >= 1);

    // determinism: the same input reproduces the same assignment
    auto s2 = DirectionStream::moment_curve(3);
    CHECK(greedy_drizzle_assign(points, s2).part_of == a.part_of);
}

TEST_CASE("hyperplane cover verification reports collisions exactly") {
    PointAssignment a{{vec({"0", "0"}), vec({"0", "1"}), vec({"0", "2"}), vec({"1", "0"})}, {1, 1, 1, 2}};
    auto rep = verify_hyperplane_cover(a, {vec({"1", "0"}), vec({"0", "1"})});
    CHECK(rep.max_multiplicity == 3);
    REQUIRE(rep.parts.size() == 2);
    CHECK(rep.parts[0].size == 3);
    CHECK(rep.parts[0].max_multiplicity == 3);  // all three share first coordinate 0
    CHECK(rep.parts[0].histogram.at(3) == 1);
    REQUIRE(rep.parts[0].worst_witness);
    CHECK(rep.parts[0].worst_witness->is_zero());
    CHECK(rep.parts[1].max_multiplicity == 1);

    CHECK_THROWS_AS(verify_hyperplane_cover(a, {vec({"1", "0"})}), InputError);
    CHECK_THROWS_AS(verify_hyperplane_cover(a, {vec({"1", "0"}), vec({"0", "0"})}), ZeroVectorError);
}

TEST_CASE("pullback of a separated assignment stays separated sphere-side") {
    // basis centers plus extra centers on the parabola (t, t²): no three of
    // these eight base points are collinear, so the set is well placed.
    CenterConfig cfg(3, {vec({"0", "0"}), vec({"1", "0"}), vec({"0", "1"})},
                     {vec({"1", "1"}), vec({"2", "4"}), vec({"3", "9"}), vec({"4", "16"}),
                      vec({"5", "25"})});
    auto dirs = directions_from_centers(cfg);

    std::mt19937_64 rng(52);
    std::set<QVec> images;
    while (images.size() < 60) {
        HPoint x(tu::rnd_vec(rng, 2, 8, 5), tu::rnd_positive(rng));
        images.insert(phi(cfg, x).r);
    }
    std::vector<QVec> points(images.begin(), images.end());

    auto stream = DirectionStream::from_list(3, dirs);
    auto a = greedy_drizzle_assign(points, stream);
    REQUIRE(a.part_count() <= dirs.size());
    CHECK(verify_hyperplane_cover(a, dirs).max_multiplicity == 1);

    HalfSpaceCover cover = pullback_drizzle_cover(cfg, a);
    CHECK(verify_spray_cover(cover).max_multiplicity == 1);
    for (std::size_t i = 0; i < cover.points.size(); ++i) {
        CHECK(cover.points[i].lower == (a.part_of[i] % 2 == 1));
        CHECK(cover.points[i].height_sq.sign() >= 0);
        // the pulled-back point reproduces its radii vector
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(cover.points[i].quadrance_to(cfg.basis_centers()[k]) == points[i][k]);
    }

    PointAssignment bad{{vec({"1", "2", "100"})}, {1}};
    CHECK_THROWS_AS(pullback_drizzle_cover(cfg, bad), NotInEError);
}

TEST_CASE("projection of a spray assignment with center gluing") {
    SprayAssignment a;
    a.points = {vec({"1", "1"}), vec({"2", "-1"}), vec({"3", "2"})};
    a.part_of = {1, 2, 1};
    a.centers = {vec({"0", "1"}), vec({"0", "-1"})};
    Hyperplane h(vec({"0", "1"}), Rational(0));

    SprayAssignment plain = project_assignment(a, h, false);
    CHECK(plain.points[0] == vec({"1", "0"}));
    CHECK(plain.points[1] == vec({"2", "0"}));
    CHECK(plain.centers.size() == 2);
    CHECK(plain.centers[0] == plain.centers[1]);  // symmetric centers collapse
    CHECK(plain.part_of == a.part_of);

    SprayAssignment glued = project_assignment(a, h, true);
    CHECK(glued.centers.size() == 1);
    CHECK(glued.part_of == std::vector<std::size_t>{1, 1, 1});
    auto rep = verify_spray_cover(glued);
    REQUIRE(rep.parts.size() == 1);
    CHECK(rep.parts[0].size == 3);
}

TEST_CASE("difference-avoiding set worked example") {
    auto s = difference_avoiding_set(rats({"0", "1"}), Rational(1), 3);
    CHECK(s == rats({"0", "1/73", "-1/73"}));
}

TEST_CASE("difference-avoiding set properties on random input") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 30; ++it) {
        std::set<Rational> xs;
        std::uniform_int_distribution<std::size_t> sz(1, 6);
        std::size_t n = sz(rng);
        while (xs.size() < n) xs.insert(tu::rnd_rational(rng, 12, 5));
        std::vector<Rational> x(xs.begin(), xs.end());
        Rational eps = tu::rnd_positive(rng, 9, 4);
        std::size_t m = 1 + it % 5;
        auto s = difference_avoiding_set(x, eps, m);
        REQUIRE(s.size() == m);
        std::set<Rational> dedup(s.begin(), s.end());
        CHECK(dedup.size() == m);
        for (const auto& a : s) CHECK(a.abs() < eps);
        for (const auto& a : s)
            for (const auto& b : s)
                if (a != b)
                    for (const auto& p : x)
                        for (const auto& q : x) CHECK((p == q || a - b != p - q));
    }
}

TEST_CASE("base layer of the avoiding-set product construction") {
    QVec v = vec({"1", "1", "0"});
    std::vector<Rational> s = rats({"0", "5"});
    std::vector<std::vector<Rational>> x{rats({"0", "1"}), rats({"0", "1"}), rats({"0", "1"})};
    ZSet z = z_set_base(v, s, x);
    CHECK(z.kind() == ZSet::Kind::Base);
    CHECK(z.points().size() == 16);  // |S| · |X₁| · |X₂| · |X₃|
    // a sample point: 5·(1,1,0) + (1,1,1)
    CHECK(std::count(z.points().begin(), z.points().end(), vec({"6", "6", "1"})) == 1);

    // shift differences hitting a scaled factor difference are rejected
    CHECK_THROWS_AS(z_set_base(v, rats({"0", "1"}), x), DisjointnessPreconditionError);
    // malformed directions
    CHECK_THROWS_AS(z_set_base(vec({"2", "1", "0"}), s, x), InputError);
    CHECK_THROWS_AS(z_set_base(vec({"1", "0", "0"}), s, x), InputError);
    CHECK_THROWS_AS(z_set_base(vec({"1", "1"}), s, {rats({"0"}), rats({"0"})}), InputError);
}

TEST_CASE("inductive layer multiplies cardinalities exactly") {
    QVec v = vec({"1", "1", "0"});
    auto inner = std::make_shared<const ZSet>(
        z_set_base(v, rats({"0", "5"}), {rats({"0", "1"}), rats({"0", "1"}), rats({"0", "1"})}));
    ZSet z = z_set_inductive(inner, vec({"0", "0", "1"}), rats({"0", "5", "10"}));
    CHECK(z.kind() == ZSet::Kind::Inductive);
    CHECK(z.points().size() == 48);
    CHECK(&z.inner() == inner.get());

    // a shift difference of 1 along e₃ collides with the inner factor X₃
    CHECK_THROWS_AS(z_set_inductive(inner, vec({"0", "0", "1"}), rats({"0", "1"})),
                    DisjointnessPreconditionError);
    CHECK_THROWS_AS(z_set_inductive(nullptr, vec({"0", "0", "1"}), rats({"0"})), InputError);
    CHECK_THROWS_AS(z_set_inductive(inner, QVec::zero(3), rats({"0"})), ZeroVectorError);
}

TEST_CASE("escape search") {
    QVec v = vec({"1", "1", "0"});
    ZSet z = z_set_base(v, rats({"0", "5"}), {rats({"0", "1"}), rats({"0", "1"}), rats({"0", "1"})});
    Box domain(vec({"-10", "-10", "-10"}), vec({"10", "10", "10"}));
    std::vector<QVec> translates{QVec::zero(3), vec({"1", "0", "0"})};
    std::vector<QVec> dirs{vec({"1", "1", "1"})};

    SUBCASE("fully covered translates exhaust") {
        std::vector<QVec> pts;
        for (const auto& t : translates)
            for (const auto& p : z.points()) pts.push_back(t + p);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        PointAssignment a{pts, std::vector<std::size_t>(pts.size(), 1)};
        auto res = escape_search(a, dirs, z, translates, domain);
        CHECK_FALSE(res.found);
    }

    SUBCASE("a single uncovered point is found and re-verified") {
        std::vector<QVec> pts = z.points();
        QVec missing = pts.back();
        pts.pop_back();
        PointAssignment a{pts, std::vector<std::size_t>(pts.size(), 1)};
        auto res = escape_search(a, dirs, z, {QVec::zero(3)}, domain);
        REQUIRE(res.found);
        CHECK(res.translate_index == 0);
        CHECK(res.witness == missing);
        CHECK(domain.contains(res.witness));
        for (const auto& p : a.points) CHECK(p != res.witness);
    }

    SUBCASE("points outside the domain are skipped") {
        PointAssignment empty;
        Box tiny(vec({"100", "100", "100"}), vec({"101", "101", "101"}));
        auto res = escape_search(empty, dirs, z, translates, tiny);
        CHECK_FALSE(res.found);
    }
}

TEST_CASE("rational box membership") {
    Box b(vec({"0", "-1"}), vec({"1", "1"}));
    CHECK(b.contains(vec({"1/2", "0"})));
    CHECK(b.contains(vec({"0", "-1"})));  // boundary included
    CHECK_FALSE(b.contains(vec({"2", "0"})));
    CHECK_FALSE(b.contains(vec({"1/2"})));
    CHECK_THROWS_AS(Box(vec({"1"}), vec({"0"})), InputError);
}
