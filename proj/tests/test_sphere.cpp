#include <algorithm>
#include <random>

#include <doctest.h>

#include "ksnull/error.hpp"
#include "ksnull/sphere.hpp"

using namespace ksnull;

namespace {

Direction dir(long x, long y, long z) { return make_direction(x, y, z); }

int odd_count(const SpherePoint& p)
{
    int c = 0;
    for (std::size_t i = 0; i < 3; ++i)
        c += mpz_odd_p(p[i].get_mpz_t()) ? 1 : 0;
    return c;
}

Rat random_rat(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-200, 200);
    std::uniform_int_distribution<long> den(1, 97);
    return make_rat(num(rng), den(rng));
}

} // namespace

TEST_CASE("make_direction")
{
    CHECK(dir(2, 4, 6) == dir(1, 2, 3));
    CHECK(dir(0, -8, 6).y() == -4);
    CHECK(dir(0, -8, 6).z() == 3);
    CHECK_THROWS_AS(dir(0, 0, 0), DegenerateInput);
    // scale invariance up to sign
    CHECK(dir(-3, -6, -9).projectively_equal(dir(1, 2, 3)));
    CHECK(dir(-3, -6, -9) == dir(-1, -2, -3));
}

TEST_CASE("as_sphere_point")
{
    SpherePoint p = as_sphere_point(dir(1, 2, 2));
    CHECK(p.n() == 3);
    CHECK_THROWS_AS(as_sphere_point(dir(1, 1, 1)), NotOnRationalSphere);
    CHECK(as_sphere_point(dir(0, 0, 1)).n() == 1);
    CHECK(as_sphere_point(dir(0, 0, -7)).dir() == dir(0, 0, -1));
    CHECK(p.coord(0) == Rat(1, 3));
}

TEST_CASE("parity_color")
{
    CHECK(parity_color(sphere_point(0, 0, 1)) == Color::Yes);
    CHECK(parity_color(sphere_point(1, 0, 0)) == Color::No);
    SpherePoint p = sphere_point(2, 6, 3);
    CHECK(p.n() == 7);
    CHECK(parity_color(p) == Color::Yes);
    CHECK(parity_color(-p) == parity_color(p));
    CHECK(std::string(to_string(Color::Yes)) == "yes");
}

TEST_CASE("dot and cross")
{
    CHECK(dot(dir(1, 0, 0), dir(0, 1, 0)) == 0);
    CHECK(dot(dir(1, 2, 2), dir(2, 1, -2)) == 0);
    CHECK(cross(dir(1, 2, 2), dir(2, 1, -2)) == dir(-2, 2, -1));
    CHECK_THROWS_AS(cross(dir(1, 2, 3), dir(-2, -4, -6)), DegenerateInput);
}

TEST_CASE("make_triad and triad_coloring")
{
    RationalTriad t = make_triad(sphere_point(1, 0, 0), sphere_point(0, 1, 0));
    CHECK(t.w().dir() == dir(0, 0, 1));
    auto c = triad_coloring(t);
    CHECK(c == std::array<Color, 3>{Color::No, Color::No, Color::Yes});

    RationalTriad s = make_triad(sphere_point(1, 2, 2), sphere_point(2, 1, -2));
    CHECK(s.w().dir() == dir(-2, 2, -1));
    CHECK(s.u().n() == 3);
    CHECK(s.v().n() == 3);
    CHECK(s.w().n() == 3);
    CHECK_THROWS_AS(make_triad(sphere_point(1, 0, 0), sphere_point(3, 4, 0)), NotOrthogonal);

    auto c2 = triad_coloring(RationalTriad(sphere_point(1, 2, 2), sphere_point(2, 1, -2), sphere_point(2, -2, 1)));
    CHECK(c2 == std::array<Color, 3>{Color::No, Color::No, Color::Yes});

    RationalTriad r = make_triad(sphere_point(0, -4, 3), sphere_point(0, 3, 4));
    auto c3 = triad_coloring(r);
    CHECK(std::count(c3.begin(), c3.end(), Color::Yes) == 1);

    // w must be the cross product direction
    CHECK_THROWS_AS(RationalTriad(sphere_point(1, 0, 0), sphere_point(0, 1, 0), sphere_point(0, 1, 0)), NotOrthogonal);
}

TEST_CASE("equator_point")
{
    CHECK(equator_point(0).dir() == dir(1, 0, 0));
    CHECK(equator_point(1).dir() == dir(0, 1, 0));
    SpherePoint h = equator_point(Rat(1, 2));
    CHECK(h.dir() == dir(3, 4, 0));
    CHECK(h.n() == 5);
    CHECK(parity_color(equator_point(Rat(7, 3))) == Color::No);
}

TEST_CASE("stereographic maps")
{
    CHECK(stereo_inv(0, 0).dir() == dir(0, 0, -1));
    CHECK(stereo_inv(1, 0).dir() == dir(1, 0, 0));
    CHECK_THROWS_AS(stereo(sphere_point(0, 0, 1)), PoleSingularity);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        Rat a = random_rat(rng), b = random_rat(rng);
        SpherePoint p = stereo_inv(a, b);
        auto [a2, b2] = stereo(p);
        CHECK(a2 == a);
        CHECK(b2 == b);
    }
}

TEST_CASE("property: exactly one odd component")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        SpherePoint p = stereo_inv(random_rat(rng), random_rat(rng));
        CHECK(odd_count(p) == 1);
        CHECK(p.n() * p.n() == p.dir().norm2());
    }
}

TEST_CASE("property: quaternion triads have one Yes; orthogonal pairs differ in the odd slot")
{
    // Columns of the Euler-Rodrigues matrix of an integer quaternion are
    // mutually orthogonal with common norm a^2+b^2+c^2+d^2.
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<long> q(-40, 40);
    int tested = 0;
    while (tested < 2000) {
        BigInt a = q(rng), b = q(rng), c = q(rng), d = q(rng);
        if (a == 0 && b == 0 && c == 0 && d == 0)
            continue;
        std::array<Direction, 3> cols{
            make_direction(a * a + b * b - c * c - d * d, 2 * (b * c + a * d), 2 * (b * d - a * c)),
            make_direction(2 * (b * c - a * d), a * a - b * b + c * c - d * d, 2 * (c * d + a * b)),
            make_direction(2 * (b * d + a * c), 2 * (c * d - a * b), a * a - b * b - c * c + d * d)};
        std::array<SpherePoint, 3> pts{as_sphere_point(cols[0]), as_sphere_point(cols[1]), as_sphere_point(cols[2])};
        int yes = 0;
        for (const auto& p : pts) {
            CHECK(odd_count(p) == 1);
            yes += parity_color(p) == Color::Yes ? 1 : 0;
        }
        CHECK(yes == 1);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                CHECK(dot(pts[i], pts[j]) == 0);
                for (std::size_t k = 0; k < 3; ++k)
                    CHECK_FALSE((mpz_odd_p(pts[i][k].get_mpz_t()) && mpz_odd_p(pts[j][k].get_mpz_t())));
            }
        RationalTriad t(pts[0], pts[1], pts[2]);
        auto colors = triad_coloring(t);
        CHECK(std::count(colors.begin(), colors.end(), Color::Yes) == 1);
        ++tested;
    }
}

TEST_CASE("property: cross is orthogonal to its inputs")
{
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> q(-1000, 1000);
    for (int i = 0; i < 1000; ++i) {
        Direction u = make_direction(q(rng), q(rng), q(rng) | 1);
        Direction v = make_direction(q(rng) | 1, q(rng), q(rng));
        if (u.projectively_equal(v))
            continue;
        Direction c = cross(u, v);
        CHECK(dot(c, u) == 0);
        CHECK(dot(c, v) == 0);
    }
}
