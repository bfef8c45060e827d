#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace cotop;
using namespace cotop::test;

namespace {

template <ExactField F>
std::vector<std::size_t> violated_at(const ValidationReport& r, std::string_view identity)
{
    std::vector<std::size_t> out;
    for (const auto& v : r.violations)
        if (v.identity == identity) out.push_back(v.indices.front());
    return out;
}

} // namespace

TEST_CASE("validate_coalgebra examples", "[coalgebra]")
{
    CHECK(validate_coalgebra(grouplike(2, F2)).ok());
    CHECK(validate_coalgebra(divided_power(4, F2)).ok());
    CHECK(validate_coalgebra(divided_power(4, QQ)).ok());
    CHECK(validate_coalgebra(comatrix(2, F3)).ok());

    // comultiplication indexed from j = 1
    auto bad = divided_power(4, QQ, 1);
    auto r = validate_coalgebra(bad);
    CHECK_FALSE(r.ok());
    CHECK(violated_at<RationalField>(r, "counit-left") == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(violated_at<RationalField>(r, "counit-right") == std::vector<std::size_t>{0});
    // indexing from j = 1 also breaks coassociativity from x_1 on
    CHECK(violated_at<RationalField>(r, "coassociativity") == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK_THROWS_AS(dual_algebra(bad), Error);
    CHECK_THROWS_AS(regular_bicomodule(bad), Error);
}

TEST_CASE("broken coassociativity is reported", "[coalgebra]")
{
    // Δ(c_0) = c_1⊗c_0, Δ(c_1) = c_0⊗c_0
    Coalgebra<PrimeField> c(F3, 2, {{0, 1, 0, 1}, {1, 0, 0, 1}}, {1, 1});
    auto r = validate_coalgebra(c);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(violated_at<PrimeField>(r, "coassociativity").empty());
    CHECK_THROWS_AS(Coalgebra<PrimeField>(F2, 0), Error);
    CHECK_THROWS_AS(Coalgebra<PrimeField>(F2, 2, {{0, 2, 0, 1}}, {1, 1}), Error);
}

TEST_CASE("dual of a group-like coalgebra is pointwise", "[coalgebra]")
{
    auto d = dual_algebra(grouplike(3, F3));
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            CHECK(d.basis_product(a, b) == (a == b ? unit_vector(F3, 3, a) : Vector<PrimeField>(3, 0)));
    CHECK(d.unit() == Vector<PrimeField>{1, 1, 1});
    CHECK(d.is_commutative());
}

TEST_CASE("dual of a divided-power coalgebra is truncated polynomials", "[coalgebra]")
{
    for (std::size_t N : {2u, 4u}) {
        auto d = dual_algebra(divided_power(N, QQ));
        auto t = unit_vector(QQ, N + 1, 1), power = d.unit();
        for (std::size_t k = 0; k <= N; ++k) {
            CHECK(power == unit_vector(QQ, N + 1, k));
            power = d.multiply(power, t);
        }
        CHECK(is_zero_vector(QQ, power));
        CHECK(d.is_commutative());
    }
}

TEST_CASE("dual of a comatrix coalgebra is the matrix algebra", "[coalgebra]")
{
    auto d = dual_algebra(comatrix(2, F3));
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t e = 0; e < 2; ++e) {
                    auto expected = b == c ? unit_vector(F3, 4, a * 2 + e) : Vector<PrimeField>(4, 0);
                    CHECK(d.basis_product(a * 2 + b, c * 2 + e) == expected);
                }
    CHECK_FALSE(d.is_commutative());
}

TEST_CASE("rational actions", "[coalgebra]")
{
    auto m = regular_bicomodule(divided_power(4, F2));
    auto eps = m.right_coalgebra().counit_vector();
    auto v = Vector<PrimeField>{1, 0, 1, 1, 0};
    CHECK(act(m, eps, v, Side::Right) == v);
    CHECK(act(m, eps, v, Side::Left) == v);
    for (std::size_t j = 0; j <= 4; ++j)
        for (std::size_t n = 0; n <= 4; ++n) {
            auto expected = n >= j ? unit_vector(F2, 5, n - j) : Vector<PrimeField>(5, 0);
            CHECK(act(m, unit_vector(F2, 5, j), unit_vector(F2, 5, n), Side::Right) == expected);
        }

    auto g = regular_bicomodule(grouplike(2, F3));
    auto f = Vector<PrimeField>{2, 1};
    CHECK(act(g, f, unit_vector(F3, 2, 0), Side::Right) == Vector<PrimeField>{2, 0});
    CHECK(act(g, f, unit_vector(F3, 2, 1), Side::Right) == Vector<PrimeField>{0, 1});
}

TEST_CASE("regular bicomodules", "[coalgebra]")
{
    CHECK(regular_bicomodule(grouplike(2, F2)).dim() == 2);
    CHECK(regular_bicomodule(divided_power(4, F2)).dim() == 5);
    CHECK(regular_bicomodule(comatrix(2, F2)).dim() == 4);
    for (auto c : {grouplike(2, F2), divided_power(4, F2), comatrix(2, F2)}) {
        auto m = regular_bicomodule(c);
        CHECK(validate_bicomodule(m).ok());
        CHECK(is_regular(m));
    }
}

TEST_CASE("broken bicomodules are reported", "[coalgebra]")
{
    auto g = grouplike(2, F2);
    // ρ(e_0) = e_1 ⊗ g_0 violates the right counit law
    Bicomodule<PrimeField> m(g, g, 2, {{0, 0, 0, 1}, {1, 1, 1, 1}}, {{0, 1, 0, 1}, {1, 1, 1, 1}});
    CHECK_FALSE(validate_bicomodule(m).ok());
    CHECK_THROWS_AS(Bicomodule<PrimeField>(g, g, 2, {}, {{0, 5, 0, 1}}), Error);
}

TEST_CASE("validate_morphism examples", "[coalgebra]")
{
    auto g2 = grouplike(2, F2);
    CHECK(validate_morphism(identity_morphism(g2)).ok());

    auto d4 = divided_power(4, F2);
    auto inc = subcoalgebra_inclusion(d4, chain(F2, 5, 2));
    CHECK(inc.source.dim() == 3);
    CHECK(validate_morphism(inc).ok());
    CHECK(inc.source == divided_power(2, F2));

    CoalgebraMorphism<PrimeField> collapse{g2, grouplike(1, F2), Matrix<PrimeField>(F2, 1, 2, {1, 1})};
    CHECK(validate_morphism(collapse).ok());

    CoalgebraMorphism<PrimeField> zero{g2, g2, Matrix<PrimeField>(F2, 2, 2)};
    CHECK_FALSE(validate_morphism(zero).ok());
    CoalgebraMorphism<PrimeField> sum{g2, g2, Matrix<PrimeField>(F2, 2, 2, {1, 1, 0, 1})};
    CHECK_FALSE(validate_morphism(sum).ok());
}

TEST_CASE("centralizer examples", "[coalgebra]")
{
    auto g = centralizer(regular_bicomodule(grouplike(2, F2)));
    CHECK(g.dim() == 2);
    auto mc = centralizer(regular_bicomodule(comatrix(2, F2)));
    CHECK(mc.dim() == 1);
    CHECK(mc.space == Subspace<PrimeField>::span(F2, 4, {comatrix(2, F2).counit_vector()}));
    auto d = centralizer(regular_bicomodule(divided_power(4, F2)));
    CHECK(d.dim() == 5);
    for (const auto& z : {g, mc, d}) {
        CHECK(z.contains_counit);
        CHECK(z.closed_under_convolution);
    }
}

TEST_CASE("centralizer needs a (C,C)-bicomodule", "[coalgebra]")
{
    CHECK_THROWS_AS(centralizer(right_comodule(grouplike(2, F2))), Error);
}

TEST_CASE("phi_M examples", "[coalgebra]")
{
    auto c = divided_power(4, F2);
    auto m = regular_bicomodule(c);
    CHECK(phi(m, c.counit_vector()) == Matrix<PrimeField>::identity(F2, 5));
    CHECK(phi(m, unit_vector(F2, 5, 1)) == shift_power(F2, 5, 1));

    for (auto b : {regular_bicomodule(grouplike(3, F3)), regular_bicomodule(comatrix(2, F3)), regular_bicomodule(divided_power(3, F3))}) {
        auto e = endo_algebra(b);
        auto r = check_phi(b, e, centralizer(b));
        CHECK(r.ok());
        REQUIRE(r.bijective_regular);
        CHECK(*r.bijective_regular);
        CHECK(*r.endo_commutative);
        for (const auto& g : e.basis()) CHECK(phi(b, psi(b.right_coalgebra(), g)) == g);
    }
}
