#include <doctest.h>

#include "test_util.hpp"

using namespace spraylab;
using tu::vec;

TEST_CASE("rank worked examples") {
    CHECK(rank(QMat::identity(3)) == 3);
    CHECK(rank(QMat({vec({"1", "2"}), vec({"2", "4"})})) == 1);
    CHECK(rank(QMat({vec({"1", "0", "0"}), vec({"0", "1", "0"}), vec({"1", "1", "0"})})) == 2);
    CHECK(rank(QMat({vec({"1/2", "1/3"}), vec({"1/4", "1/5"})})) == 2);
}

TEST_CASE("rank equals rank of transpose on random matrices") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 50; ++it) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::size_t r = dim(rng), c = dim(rng);
        QMat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = tu::rnd_rational(rng, 4, 3);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("null space worked examples") {
    CHECK(null_space(QMat::identity(2)).empty());

    auto basis = null_space(QMat({vec({"1", "1", "1"})}));
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) CHECK((v[0] + v[1] + v[2]).is_zero());

    auto u = null_space(QMat({vec({"-1", "0", "-1"}), vec({"-1", "-1", "0"})}));
    REQUIRE(u.size() == 1);
    // canonical representative of span{(1,−1,−1)}
    CHECK(u[0] == vec({"-1", "1", "1"}));
}

TEST_CASE("null space properties on random matrices") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 50; ++it) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::size_t r = dim(rng), c = dim(rng);
        QMat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = tu::rnd_rational(rng, 3, 2);
        auto basis = null_space(m);
        CHECK(basis.size() == c - rank(m));
        for (const auto& v : basis) CHECK(m.apply(v).is_zero());
    }
}

TEST_CASE("solve_linear worked examples") {
    auto s1 = solve_linear(QMat::identity(2), vec({"3/2", "-1"}));
    REQUIRE(s1);
    CHECK(s1->particular == vec({"3/2", "-1"}));
    CHECK(s1->null_basis.empty());

    CHECK_FALSE(solve_linear(QMat({vec({"1", "0"}), vec({"1", "0"})}), vec({"1", "2"})));

    auto s3 = solve_linear(QMat({vec({"-2", "0"}), vec({"0", "-2"})}), vec({"1", "1"}));
    REQUIRE(s3);
    CHECK(s3->particular == vec({"-1/2", "-1/2"}));
}

TEST_CASE("solve_linear underdetermined returns particular plus null basis") {
    auto s = solve_linear(QMat({vec({"1", "1", "1"})}), vec({"3"}));
    REQUIRE(s);
    CHECK(s->null_basis.size() == 2);
    CHECK(dot(s->particular, vec({"1", "1", "1"})) == Rational(3));
    for (const auto& v : s->null_basis) {
        QVec shifted = s->particular + v;
        CHECK(dot(shifted, vec({"1", "1", "1"})) == Rational(3));
    }
}

TEST_CASE("solve_linear random consistency") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 50; ++it) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::size_t r = dim(rng), c = dim(rng);
        QMat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = tu::rnd_rational(rng, 3, 2);
        QVec x = tu::rnd_vec(rng, c, 3, 2);
        QVec b = m.apply(x);
        auto s = solve_linear(m, b);  // consistent by construction
        REQUIRE(s);
        CHECK(m.apply(s->particular) == b);
    }
}

TEST_CASE("determinant") {
    CHECK(det(QMat::identity(3)) == Rational(1));
    CHECK(det(QMat({vec({"1", "2"}), vec({"3", "4"})})) == Rational(-2));
    CHECK(det(QMat({vec({"1/2", "0"}), vec({"0", "1/3"})})) == Rational(1, 6));
    CHECK(det(QMat({vec({"1", "2"}), vec({"2", "4"})})).is_zero());
}

TEST_CASE("vector arithmetic") {
    QVec a = vec({"1", "2"}), b = vec({"3", "-1"});
    CHECK(a + b == vec({"4", "1"}));
    CHECK(a - b == vec({"-2", "3"}));
    CHECK(Rational(2) * a == vec({"2", "4"}));
    CHECK(dot(a, b) == Rational(1));
    CHECK(norm_sq(a) == Rational(5));
    CHECK(dist_sq(a, b) == Rational(13));
    CHECK(QVec::unit(3, 1) == vec({"0", "1", "0"}));
    CHECK(QVec::zero(2).is_zero());
}
