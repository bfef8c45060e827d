#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace cotop;
using namespace cotop::test;

TEST_CASE("prime field arithmetic", "[kernel]")
{
    PrimeField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.neg(0) == 0);
    CHECK(f.from_int(-1) == 6);
    CHECK(f.parse("10") == 3);
    CHECK(f.parse("-3") == 4);
    CHECK_THROWS_AS(f.inv(0), Error);
    CHECK_THROWS_AS(PrimeField(6), Error);
}

TEST_CASE("rational field arithmetic", "[kernel]")
{
    RationalField q;
    CHECK(q.parse("3/6") == mpq_class(1, 2));
    CHECK(q.parse("-4") == mpq_class(-4));
    CHECK(q.to_string(q.parse("6/4")) == "3/2");
    CHECK(q.to_string(q.from_int(5)) == "5");
    try {
        q.parse("1/0");
        FAIL("zero denominator accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
    }
    CHECK_THROWS_AS(q.parse("x"), Error);
}

TEST_CASE("field specs", "[kernel]")
{
    CHECK(FieldSpec::parse("F2") == FieldSpec::prime(2));
    CHECK(FieldSpec::parse("Fp:7") == FieldSpec::prime(7));
    CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("F3").to_string() == "F3");
    CHECK_THROWS_AS(FieldSpec::parse("F4"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("R"), Error);
}

TEST_CASE("kernel examples", "[kernel]")
{
    CHECK(kernel(Matrix<PrimeField>::identity(F3, 4)).is_zero());
    Matrix<PrimeField> ones(F2, 1, 2, {1, 1});
    CHECK(kernel(ones) == Subspace<PrimeField>::span(F2, 2, {{1, 1}}));
    CHECK(kernel(Matrix<RationalField>(QQ, 3, 4)).is_full());
}

TEST_CASE("subspace operations", "[kernel]")
{
    auto a = units(F2, 2, {0}), b = units(F2, 2, {1});
    CHECK(sum(a, b).is_full());
    CHECK(intersection(a, b).is_zero());
    CHECK(sum(a, a) == a);
    CHECK(intersection(a, a) == a);
    CHECK(sum(a, b).contains(a));
    CHECK_FALSE(a.contains(b));

    auto x = Subspace<RationalField>::span(QQ, 3, {vec(QQ, {1, 1, 0}), vec(QQ, {0, 1, 1})});
    auto y = units(QQ, 3, {0, 2});
    auto meet = intersection(x, y);
    CHECK(meet == Subspace<RationalField>::span(QQ, 3, {vec(QQ, {1, 0, -1})}));
    CHECK(meet.to_string() == "<(1,0,-1)>");

    CHECK_THROWS_AS(sum(a, units(F2, 3, {0})), Error);
}

TEST_CASE("canonical form ignores the spanning set", "[kernel]")
{
    auto a = Subspace<RationalField>::span(QQ, 3, {vec(QQ, {2, 4, 6}), vec(QQ, {1, 0, 1})});
    auto b = Subspace<RationalField>::span(QQ, 3, {vec(QQ, {1, 2, 3}), vec(QQ, {3, 2, 5}), vec(QQ, {0, 4, 4})});
    CHECK(a == b);
    CHECK(a.dim() == 2);
    auto c = a.coordinates(vec(QQ, {3, 4, 7}));
    REQUIRE(c);
    CHECK(a.from_coordinates(*c) == vec(QQ, {3, 4, 7}));
    CHECK_FALSE(a.coordinates(vec(QQ, {0, 0, 1})));
}

TEST_CASE("preimage examples", "[kernel]")
{
    auto y = units(QQ, 5, {0});
    CHECK(preimage(Matrix<RationalField>::identity(QQ, 5), y) == y);
    CHECK(preimage(shift_power(QQ, 5, 1), Subspace<RationalField>::full(QQ, 5)).is_full());
    CHECK(preimage(shift_power(QQ, 5, 1), y) == chain(QQ, 5, 1));
    CHECK(image(shift_power(QQ, 5, 2), chain(QQ, 5, 3)) == chain(QQ, 5, 1));
    CHECK_THROWS_AS(preimage(shift_power(QQ, 4, 1), y), Error);
}

TEST_CASE("matrix inverse", "[kernel]")
{
    Matrix<RationalField> m(QQ, 2, 2, {QQ.from_int(1), QQ.from_int(2), QQ.from_int(3), QQ.from_int(4)});
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(*inv * m == Matrix<RationalField>::identity(QQ, 2));
    CHECK_FALSE(inverse(Matrix<PrimeField>(F2, 2, 2, {1, 1, 1, 1})));
}

TEST_CASE("subspace counts", "[kernel]")
{
    CHECK(subspace_count(2, 4) == 67);
    CHECK(subspace_count(2, 5) == 374);
    CHECK(subspace_count(3, 3) == 28);
    CHECK(subspace_count(2, 0) == 1);
    std::uint64_t visited = 0;
    std::set<Subspace<PrimeField>> distinct;
    for_each_subspace(F3, 3, [&](const Subspace<PrimeField>& s) {
        ++visited;
        distinct.insert(s);
        return true;
    });
    CHECK(visited == 28);
    CHECK(distinct.size() == 28);
}

TEMPLATE_TEST_CASE("random linear algebra identities", "[kernel][property]", PrimeField, RationalField)
{
    const TestType f = [] {
        if constexpr (std::is_same_v<TestType, PrimeField>) return PrimeField(5);
        else return RationalField{};
    }();
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        auto m = random_matrix(f, r, c, rng);
        CHECK(rank(m) + kernel(m).dim() == c);

        // same row space, different spanning set
        auto p = random_invertible(f, r, rng);
        CHECK(Subspace<TestType>(p * m) == Subspace<TestType>(m));

        auto a = Subspace<TestType>(random_matrix(f, 1 + rng() % 3, c, rng));
        auto b = Subspace<TestType>(random_matrix(f, 1 + rng() % 3, c, rng));
        CHECK(sum(a, b).dim() + intersection(a, b).dim() == a.dim() + b.dim());
        CHECK(intersection(a, b) == intersection(b, a));
        CHECK(sum(a, b).contains(a));
        CHECK(a.contains(intersection(a, b)));

        CHECK(preimage(m, Subspace<TestType>::zero(f, r)) == kernel(m));
    }
}
