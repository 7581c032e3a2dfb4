#include <random>

#include <doctest.h>

#include "ksnull/error.hpp"
#include "ksnull/exact.hpp"

using namespace ksnull;

TEST_CASE("gcd3")
{
    CHECK(gcd3(2, 4, 6) == 2);
    CHECK(gcd3(0, 0, -5) == 5);
    CHECK(gcd3(1, 2, 2) == 1);
    CHECK(gcd3(-6, 0, 9) == 3);
    CHECK_THROWS_AS(gcd3(0, 0, 0), DegenerateInput);
}

TEST_CASE("integer_sqrt_exact")
{
    CHECK(integer_sqrt_exact(49) == BigInt(7));
    CHECK_FALSE(integer_sqrt_exact(50).has_value());
    CHECK(integer_sqrt_exact(0) == BigInt(0));
    CHECK_THROWS_AS(integer_sqrt_exact(-1), DomainError);

    std::mt19937_64 rng(7);
    gmp_randclass gr(gmp_randinit_default);
    gr.seed(11);
    for (int i = 0; i < 300; ++i) {
        BigInt n = gr.get_z_bits(1 + rng() % 400);
        CHECK(integer_sqrt_exact(n * n) == n);
        if (n >= 1)
            CHECK_FALSE(integer_sqrt_exact(n * n + 1).has_value());
    }
}

TEST_CASE("rational parsing is strict")
{
    CHECK(parse_rat("3/6") == Rat(1, 2));
    CHECK(parse_rat("-4") == Rat(-4));
    CHECK(parse_rat("+7/21") == Rat(1, 3));
    CHECK(to_string(parse_rat("0/5")) == "0");
    CHECK(to_string(make_rat(-2, 4)) == "-1/2");
    CHECK_THROWS_AS(parse_rat("0.1"), DomainError);
    CHECK_THROWS_AS(parse_rat("1e3"), DomainError);
    CHECK_THROWS_AS(parse_rat("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rat(""), DomainError);
    CHECK_THROWS_AS(parse_rat("1/"), DomainError);
    CHECK_THROWS_AS(parse_rat("1/-2"), DomainError);
    CHECK_THROWS_AS(make_rat(1, 0), DomainError);
    // zero is 0/1
    Rat z = make_rat(0, -17);
    CHECK(z.get_den() == 1);
    CHECK(z.get_num() == 0);
}

TEST_CASE("square-free check")
{
    CHECK(is_square_free(1));
    CHECK(is_square_free(2));
    CHECK(is_square_free(30));
    CHECK_FALSE(is_square_free(4));
    CHECK_FALSE(is_square_free(18));
    CHECK_FALSE(is_square_free(0));
    CHECK_THROWS_AS(QuadElem(Rat(1), Rat(1), 8), DomainError);
}

TEST_CASE("QuadElem arithmetic in Q(sqrt 2)")
{
    auto q = [](long a, long b) { return QuadElem::from_int(a, b, 2); };
    QuadVec u{q(1, 0), q(0, 1), q(0, 0)};
    QuadVec v{q(0, 1), q(-1, 0), q(0, 0)};
    CHECK(dot3(u, v).is_zero());
    CHECK(q(0, 1) * q(0, 1) == q(2, 0));
    CHECK(dot3(u, u) == q(3, 0));

    QuadVec c = cross3(u, v);
    CHECK(dot3(c, u).is_zero());
    CHECK(dot3(c, v).is_zero());
    CHECK(c[2] == q(-3, 0));

    CHECK(q(1, 1).inverse() * q(1, 1) == q(1, 0));
    CHECK_THROWS_AS(q(0, 0).inverse(), DomainError);
    CHECK(q(1, 1).norm() == Rat(-1));
}

TEST_CASE("QuadElem field mismatch")
{
    QuadElem a = QuadElem::from_int(1, 1, 2);
    QuadElem b = QuadElem::from_int(1, 1, 3);
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(a * b, FieldMismatch);
    CHECK_THROWS_AS((void)(a == b), FieldMismatch);
    CHECK_THROWS_AS(dot3(QuadVec{a, a, a}, QuadVec{b, b, b}), FieldMismatch);
}

TEST_CASE("QuadElem sign")
{
    CHECK(QuadElem::from_int(1, -1, 2).sign() < 0);  // 1 - 1.414
    CHECK(QuadElem::from_int(-1, 1, 2).sign() > 0);
    CHECK(QuadElem::from_int(3, -2, 2).sign() > 0);  // 3 - 2.828
    CHECK(QuadElem::from_int(-3, 2, 2).sign() < 0);
    CHECK(QuadElem::from_int(0, 0, 5).sign() == 0);
    CHECK(QuadElem(Rat(99, 70), Rat(-1), 2).sign() > 0);  // 99/70 > sqrt 2
    CHECK(QuadElem(Rat(140, 99), Rat(-1), 2).sign() < 0);
}

TEST_CASE("QuadElem properties on random samples")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> small(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    const long fields[] = {2, 3, 5, 6, 7};
    for (int i = 0; i < 500; ++i) {
        long d = fields[rng() % 5];
        QuadElem x(make_rat(small(rng), den(rng)), make_rat(small(rng), den(rng)), d);
        QuadElem y(make_rat(small(rng), den(rng)), make_rat(small(rng), den(rng)), d);
        CHECK((x + y) - y == x);
        CHECK(x * y == y * x);
        CHECK(((x + y) * (x + y)).to_double() == doctest::Approx((x + y).to_double() * (x + y).to_double()));
        CHECK((x == y) == (std::abs(x.to_double() - y.to_double()) < 1e-12));
        int s = x.sign();
        double f = x.to_double();
        if (std::abs(f) > 1e-9)
            CHECK(s == (f > 0 ? 1 : -1));
        // self dot is nonnegative and zero only for the zero vector
        QuadVec v{x, y, QuadElem(d)};
        QuadElem n = dot3(v, v);
        CHECK(n.sign() >= 0);
        CHECK(n.is_zero() == is_zero(v));
    }
}

TEST_CASE("field 1 folds the sqrt part")
{
    QuadElem x(Rat(2), Rat(3), 1);
    CHECK(x.a() == 5);
    CHECK(x.b() == 0);
    CHECK(x.is_rational());
}
