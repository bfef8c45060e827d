#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace cotop;
using namespace cotop::test;

TEST_CASE("grouplike", "[catalog]")
{
    auto one = exhaustive(regular_bicomodule(grouplike(1, F2)));
    CHECK(one.spec.cpspec == std::vector<std::size_t>{one.lat.top()});

    auto g2 = exhaustive(regular_bicomodule(grouplike(2, F2)));
    CHECK(g2.lat.size() == 4);

    auto g4 = generated(regular_bicomodule(grouplike(4, QQ)));
    CHECK(g4.lat.size() == 16);
    REQUIRE(g4.spec.cpspec.size() == 4);
    for (auto k : g4.spec.cpspec) CHECK(g4.element(k).dim() == 1);
    CHECK(grouplike(3, F3).is_cocommutative());
    CHECK_THROWS_AS(grouplike(0, F2), Error);
}

TEST_CASE("divided power", "[catalog]")
{
    auto d0 = divided_power(0, F2);
    CHECK(d0 == grouplike(1, F2));

    auto d4 = exhaustive(regular_bicomodule(divided_power(4, F2)));
    REQUIRE(d4.lat.size() == 6);
    for (std::size_t i = 0; i + 1 < d4.lat.size(); ++i) CHECK(d4.lat.leq[i][i + 1]);

    // dual is k[t]/(t^3)
    auto d = dual_algebra(divided_power(2, QQ));
    auto t = unit_vector(QQ, 3, 1);
    CHECK(d.multiply(t, t) == unit_vector(QQ, 3, 2));
    CHECK(is_zero_vector(QQ, d.multiply(d.multiply(t, t), t)));
    CHECK(divided_power(3, QQ).is_cocommutative());
}

TEST_CASE("comatrix", "[catalog]")
{
    CHECK(comatrix(1, F2) == grouplike(1, F2));
    CHECK(exhaustive(regular_bicomodule(comatrix(2, F2))).lat.size() == 2);
    CHECK(endo_algebra(regular_bicomodule(comatrix(2, F3))).dim() == 1);
    CHECK_FALSE(comatrix(2, F3).is_cocommutative());
}

TEST_CASE("posets", "[catalog]")
{
    auto p = Poset::from_relations(3, {{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2));
    CHECK(p.intervals().size() == 6);
    CHECK(Poset::antichain(3).intervals().size() == 3);
    std::vector<std::vector<bool>> cyclic = {{true, true}, {true, true}};
    CHECK_THROWS_AS(Poset(2, cyclic), Error);
    std::vector<std::vector<bool>> irreflexive = {{false, false}, {false, true}};
    CHECK_THROWS_AS(Poset(2, irreflexive), Error);
    CHECK_THROWS_AS(Poset::from_relations(2, {{0, 2}}), Error);
}

TEST_CASE("incidence", "[catalog]")
{
    CHECK(incidence(Poset::antichain(2), F2) == grouplike(2, F2));

    // intervals [0,0], [0,1], [1,1]
    auto c = incidence(Poset::chain(2), F3);
    REQUIRE(c.dim() == 3);
    CHECK(validate_coalgebra(c).ok());
    CHECK(c.counit_vector() == Vector<PrimeField>{1, 0, 1});
    CHECK(c.mu(1, 0, 1) == 1);
    CHECK(c.mu(1, 1, 2) == 1);
    CHECK(c.mu(1, 1, 1) == 0);
    CHECK(c.mu(0, 0, 0) == 1);
}

TEST_CASE("direct sums and quotients", "[catalog]")
{
    auto s = direct_sum(grouplike(1, F2), divided_power(2, F2));
    CHECK(s.dim() == 4);
    CHECK(validate_coalgebra(s).ok());
    CHECK_THROWS_AS(direct_sum(grouplike(1, F2), grouplike(1, F3)), Error);

    auto m = regular_bicomodule(divided_power(4, F2));
    auto q = quotient(m, chain(F2, 5, 1));
    CHECK(q.dim() == 3);
    CHECK(validate_bicomodule(q).ok());
    auto a = exhaustive(q);
    REQUIRE(a.lat.size() == 4);
    for (std::size_t i = 0; i + 1 < a.lat.size(); ++i) CHECK(a.lat.leq[i][i + 1]);
    CHECK_THROWS_AS(quotient(m, units(F2, 5, {2})), Error);
}

TEST_CASE("morphism builders", "[catalog]")
{
    std::mt19937_64 rng(3);
    auto c = incidence(Poset::chain(2), F3);
    auto t = transport_coalgebra(c, random_invertible(F3, 3, rng));
    CHECK(validate_coalgebra(t.target).ok());
    CHECK(validate_morphism(t).ok());
    auto collapse = diagonal_collapse(Poset::chain(2), F2);
    CHECK(collapse.target == grouplike(2, F2));
    CHECK(validate_morphism(collapse).ok());
    CHECK_THROWS_AS(subcoalgebra_inclusion(divided_power(4, F2), units(F2, 5, {1})), Error);
}

TEST_CASE("random instances", "[catalog]")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto a = random_instance(seed, 5, F2);
        auto b = random_instance(seed, 5, F2);
        CHECK(a.description == b.description);
        CHECK(same_bicomodule(a.m, b.m));
        CHECK(a.m.dim() <= 6);
        CHECK(validate_bicomodule(a.m).ok());
        if (a.coalgebra) CHECK(validate_coalgebra(*a.coalgebra).ok());
        auto r = random_incidence_instance(seed, 5, F3);
        CHECK(r.m.dim() <= 5);
        CHECK(r.poset);
        CHECK(incidence(*r.poset, F3) == *r.coalgebra);
    }
    CHECK(random_instance(1, 5, F2).description != random_instance(2, 5, F2).description);
}
