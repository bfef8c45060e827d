#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace cotop;
using namespace cotop::test;

namespace {

template <ExactField F>
Subspace<F> ideal_of(const EndoAlgebra<F>& e, const std::vector<Matrix<F>>& ms)
{
    std::vector<Vector<F>> vs;
    for (const auto& m : ms) vs.push_back(*e.coordinates(m));
    return Subspace<F>::span(e.field(), e.dim(), vs);
}

/// (t^j) = span{t^j, ..., t^N} inside E of regular D_N.
template <ExactField F>
Subspace<F> shift_ideal(const EndoAlgebra<F>& e, std::size_t j)
{
    std::vector<Matrix<F>> ms;
    for (std::size_t k = j; k < e.module_dim(); ++k) ms.push_back(shift_power(e.field(), e.module_dim(), k));
    return ideal_of(e, ms);
}

} // namespace

TEST_CASE("endomorphism ring examples", "[lattice]")
{
    auto g = endo_algebra(regular_bicomodule(grouplike(2, F2)));
    CHECK(g.dim() == 2);
    CHECK(g.is_commutative());
    CHECK(g.contains(Matrix<PrimeField>(F2, 2, 2, {1, 0, 0, 0})));
    CHECK(g.contains(Matrix<PrimeField>(F2, 2, 2, {0, 0, 0, 1})));

    auto d = endo_algebra(regular_bicomodule(divided_power(4, F2)));
    CHECK(d.dim() == 5);
    for (std::size_t j = 0; j < 5; ++j) CHECK(d.contains(shift_power(F2, 5, j)));
    CHECK_FALSE(d.contains(transpose(shift_power(F2, 5, 1))));
    CHECK(d.unit() == *d.coordinates(Matrix<PrimeField>::identity(F2, 5)));

    CHECK(endo_algebra(regular_bicomodule(comatrix(2, F2))).dim() == 1);
}

TEST_CASE("endomorphism ring multiplies by opposite composition", "[lattice]")
{
    auto e = endo_algebra(regular_bicomodule(divided_power(3, QQ)));
    auto x = *e.coordinates(shift_power(QQ, 4, 1));
    auto y = *e.coordinates(shift_power(QQ, 4, 2));
    CHECK(e.element(e.multiply(x, y)) == shift_power(QQ, 4, 3));
    CHECK(e_multiply(e, x, y) == e.multiply(x, y));
    CHECK(e.multiply(e.unit(), x) == x);
}

TEST_CASE("cyclic subbicomodules", "[lattice]")
{
    auto d = regular_bicomodule(divided_power(4, F2));
    CHECK(cyclic_subbicomodule(d, Vector<PrimeField>(5, 0)).is_zero());
    CHECK(cyclic_subbicomodule(d, unit_vector(F2, 5, 3)) == chain(F2, 5, 3));
    auto g = regular_bicomodule(grouplike(2, F3));
    CHECK(cyclic_subbicomodule(g, Vector<PrimeField>{1, 1}).is_full());
    auto c = cyclic_subbicomodule(d, unit_vector(F2, 5, 2));
    CHECK(generated_subbicomodule(d, c) == c);
}

TEST_CASE("exhaustive lattices", "[lattice]")
{
    auto d = exhaustive(regular_bicomodule(divided_power(4, F2)));
    REQUIRE(d.lat.size() == 6);
    CHECK(d.lat.certified());
    CHECK(d.lat.elements[0].is_zero());
    for (std::size_t k = 0; k < 5; ++k) CHECK(d.lat.elements[k + 1] == chain(F2, 5, k));
    CHECK(d.lat.fully_invariant_indices().size() == 6);

    auto g = exhaustive(regular_bicomodule(grouplike(2, F2)));
    CHECK(members(g, {0, 1, 2, 3}) == std::vector{Subspace<PrimeField>::zero(F2, 2), units(F2, 2, {1}), units(F2, 2, {0}), units(F2, 2, {0, 1})});
    CHECK_FALSE(g.lat.contains(Subspace<PrimeField>::span(F2, 2, {{1, 1}})));
    CHECK(g.lat.fully_invariant_indices().size() == 4);

    auto mc = exhaustive(regular_bicomodule(comatrix(2, F2)));
    CHECK(mc.lat.size() == 2);
}

TEST_CASE("lattice modes and budgets", "[lattice]")
{
    auto m = regular_bicomodule(divided_power(4, F2));
    auto e = endo_algebra(m);
    LatticeOptions o;
    o.mode = LatticeMode::Exhaustive;
    o.budget = 100;
    try {
        enumerate_lattice(m, e, o);
        FAIL("budget not enforced");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::BudgetExceeded);
    }
    o.mode = LatticeMode::Auto;
    CHECK(enumerate_lattice(m, e, o).completeness == Completeness::Generated);
    o.budget = 374;
    CHECK(enumerate_lattice(m, e, o).completeness == Completeness::Exhaustive);

    auto q = regular_bicomodule(divided_power(4, QQ));
    auto eq = endo_algebra(q);
    o.mode = LatticeMode::Exhaustive;
    try {
        enumerate_lattice(q, eq, o);
        FAIL("exhaustive mode accepted over Q");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::ExhaustiveUnavailableOverQ);
    }
    o.mode = LatticeMode::Generated;
    auto lq = enumerate_lattice(q, eq, o);
    CHECK(lq.size() == 6);
    CHECK_FALSE(lq.certified());
}

TEST_CASE("degenerate coactions over Q are refused", "[lattice]")
{
    // every line of a trivially coacting bicomodule is a subbicomodule
    auto k = grouplike(1, QQ);
    Bicomodule<RationalField> m(k, k, 2, {{0, 0, 0, QQ.one()}, {1, 0, 1, QQ.one()}}, {{0, 0, 0, QQ.one()}, {1, 1, 0, QQ.one()}});
    REQUIRE(validate_bicomodule(m).ok());
    try {
        generated(m);
        FAIL("infinite lattice not detected");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::ExhaustiveUnavailableOverQ);
    }
}

TEST_CASE("an and ke", "[lattice]")
{
    auto m = regular_bicomodule(divided_power(4, F2));
    auto e = endo_algebra(m);
    auto zero = Subspace<PrimeField>::zero(F2, 5), full = Subspace<PrimeField>::full(F2, 5);
    auto ezero = Subspace<PrimeField>::zero(F2, 5), efull = Subspace<PrimeField>::full(F2, e.dim());
    CHECK(an(e, zero).space.is_full());
    CHECK(ke(e, efull).is_zero());
    CHECK(an(e, full).space.is_zero());
    CHECK(ke(e, ezero).is_full());

    for (std::size_t k = 0; k < 5; ++k) {
        auto a = an(e, chain(F2, 5, k));
        CHECK(a.space == shift_ideal(e, k + 1));
        CHECK(a.is_right_ideal);
        CHECK(a.is_two_sided);
    }
    for (std::size_t j = 1; j <= 5; ++j) CHECK(ke(e, shift_ideal(e, j)) == chain(F2, 5, j - 1));
    CHECK_THROWS_AS(an(e, chain(F2, 4, 1)), Error);

    auto g = endo_algebra(regular_bicomodule(grouplike(2, F2)));
    CHECK(an(g, units(F2, 2, {0})).space == ideal_of(g, {Matrix<PrimeField>(F2, 2, 2, {0, 0, 0, 1})}));
}

TEST_CASE("simples and coradical", "[lattice]")
{
    auto g = exhaustive(regular_bicomodule(grouplike(2, F2)));
    CHECK(members(g, g.simples.simple) == std::vector{units(F2, 2, {1}), units(F2, 2, {0})});
    CHECK(g.simples.corad.is_full());

    auto d = exhaustive(regular_bicomodule(divided_power(4, F2)));
    CHECK(members(d, d.simples.simple) == std::vector{chain(F2, 5, 0)});
    CHECK(d.simples.corad == chain(F2, 5, 0));

    auto mc = exhaustive(regular_bicomodule(comatrix(2, F2)));
    CHECK(mc.simples.simple.size() == 1);
    CHECK(mc.simples.corad.is_full());
}

TEST_CASE("predicate examples", "[lattice]")
{
    auto d = exhaustive(regular_bicomodule(divided_power(4, F2))).pred;
    CHECK(d.certified);
    CHECK(d.duo);
    CHECK(d.self_cogenerator);
    CHECK(d.self_injective);
    CHECK(d.intrinsically_injective == true);
    CHECK(d.subdirectly_irreducible);
    CHECK_FALSE(d.semisimple);
    CHECK(d.property_S);
    CHECK(d.corad_essential);
    CHECK(d.e_right_duo == true);

    auto g = exhaustive(regular_bicomodule(grouplike(2, F2))).pred;
    CHECK(g.duo);
    CHECK(g.semisimple);
    CHECK_FALSE(g.subdirectly_irreducible);

    // every regular bicomodule is duo
    for (auto c : {comatrix(2, F2), incidence(Poset::chain(2), F2), divided_power(3, F3)})
        CHECK(exhaustive(regular_bicomodule(c)).pred.duo);
}

TEST_CASE("ideal enumeration", "[lattice]")
{
    auto d = endo_algebra(regular_bicomodule(divided_power(4, F2)));
    auto right = enumerate_ideals(d, IdealSide::Right);
    auto two = enumerate_ideals(d, IdealSide::TwoSided);
    CHECK(right.size() == 6);
    CHECK(two == right);
    for (std::size_t j = 0; j <= 5; ++j)
        CHECK(std::find(right.begin(), right.end(), j == 5 ? Subspace<PrimeField>::zero(F2, 5) : shift_ideal(d, j)) != right.end());

    auto g = endo_algebra(regular_bicomodule(grouplike(2, F2)));
    CHECK(enumerate_ideals(g, IdealSide::Right).size() == 4);
    CHECK(enumerate_ideals(endo_algebra(regular_bicomodule(comatrix(2, F2))), IdealSide::TwoSided).size() == 2);

    CHECK_THROWS_AS(enumerate_ideals(d, IdealSide::Right, 16), Error);
    auto q = endo_algebra(regular_bicomodule(grouplike(2, QQ)));
    try {
        enumerate_ideals(q, IdealSide::Right);
        FAIL("ideal enumeration over Q");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::UnsupportedOverQ);
    }
}

TEST_CASE("ideal analysis of D_4", "[lattice]")
{
    auto e = endo_algebra(regular_bicomodule(divided_power(4, F2)));
    auto ia = analyze_ideals(e);
    REQUIRE(ia.primes.size() == 1);
    CHECK(ia.primes[0] == shift_ideal(e, 1));
    CHECK(ia.prad == shift_ideal(e, 1));
    CHECK(ia.jacobson == shift_ideal(e, 1));
    CHECK(ia.right_duo);
    CHECK(ia.primes_maximal);
}

TEST_CASE("non-duo bicomodule", "[lattice]")
{
    // F_2^2 with trivial coactions: every line is a subbicomodule, only 0 and M are fully invariant
    auto k = grouplike(1, F2);
    Bicomodule<PrimeField> m(k, k, 2, {{0, 0, 0, 1}, {1, 0, 1, 1}}, {{0, 0, 0, 1}, {1, 1, 0, 1}});
    auto a = exhaustive(m);
    CHECK(a.e.dim() == 4);
    CHECK(a.lat.size() == 5);
    CHECK(a.lat.fully_invariant_indices().size() == 2);
    CHECK_FALSE(a.pred.duo);
    CHECK_FALSE(a.pred.quasi_duo);
    CHECK(a.pred.e_right_duo == false);
}
