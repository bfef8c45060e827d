#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace cotop;
using namespace cotop::test;

namespace {

constexpr std::uint64_t kSeeds = 40;

template <class Fn>
void for_instances(Fn&& fn)
{
    for (std::uint64_t s = 0; s < kSeeds; ++s) {
        INFO("seed " << s);
        auto r = s % 2 ? random_incidence_instance(s, 4, s % 4 == 1 ? F2 : F3) : random_instance(s, 4, s % 4 == 0 ? F2 : F3);
        INFO(r.description);
        fn(r);
    }
}

} // namespace

TEST_CASE("dual algebras are associative and unital", "[properties]")
{
    std::mt19937_64 rng(11);
    for_instances([&](const RandomInstance<PrimeField>& r) {
        if (!r.coalgebra) return;
        auto d = dual_algebra(*r.coalgebra);
        const auto& f = r.coalgebra->field();
        auto n = r.coalgebra->dim();
        for (int k = 0; k < 5; ++k) {
            auto x = random_vector(f, n, rng), y = random_vector(f, n, rng), z = random_vector(f, n, rng);
            CHECK(d.multiply(d.multiply(x, y), z) == d.multiply(x, d.multiply(y, z)));
            CHECK(d.multiply(d.unit(), x) == x);
            CHECK(d.multiply(x, d.unit()) == x);
        }
    });
}

TEST_CASE("rational actions respect convolution and commute", "[properties]")
{
    std::mt19937_64 rng(12);
    for_instances([&](const RandomInstance<PrimeField>& r) {
        const auto& m = r.m;
        const auto& f = m.field();
        auto dr = dual_algebra(m.right_coalgebra());
        auto dl = dual_algebra(m.left_coalgebra());
        for (int k = 0; k < 4; ++k) {
            auto a = random_vector(f, m.right_coalgebra().dim(), rng), b = random_vector(f, m.right_coalgebra().dim(), rng);
            CHECK(m.right_action_of(dr.multiply(a, b)) == m.right_action_of(a) * m.right_action_of(b));
            auto c = random_vector(f, m.left_coalgebra().dim(), rng), d = random_vector(f, m.left_coalgebra().dim(), rng);
            CHECK(m.left_action_of(dl.multiply(c, d)) == m.left_action_of(d) * m.left_action_of(c));
            CHECK(m.left_action_of(c) * m.right_action_of(a) == m.right_action_of(a) * m.left_action_of(c));
        }
        CHECK(m.right_action_of(m.right_coalgebra().counit_vector()) == Matrix<PrimeField>::identity(f, m.dim()));
    });
}

TEST_CASE("phi identifies the centralizer with E on regular bicomodules", "[properties]")
{
    for_instances([&](const RandomInstance<PrimeField>& r) {
        if (!r.coalgebra) return;
        auto m = regular_bicomodule(*r.coalgebra);
        auto e = endo_algebra(m);
        auto z = centralizer(m);
        auto rep = check_phi(m, e, z);
        CHECK(rep.ok());
        CHECK(z.dim() == e.dim());
        CHECK(e.is_commutative());
        CHECK(exhaustive(m).pred.duo);
    });
}

TEST_CASE("an and ke form a Galois connection", "[properties]")
{
    for_instances([&](const RandomInstance<PrimeField>& r) {
        auto a = exhaustive(r.m);
        for (std::size_t x = 0; x < a.lat.size(); ++x) {
            const auto& X = a.element(x);
            auto anx = an(a.e, X).space;
            CHECK(ke(a.e, anx).contains(X));
            CHECK(an(a.e, ke(a.e, anx)).space == anx);
            CHECK(an(a.e, X).is_right_ideal);
            for (std::size_t y = 0; y < a.lat.size(); ++y)
                if (a.lat.leq[x][y]) CHECK(anx.contains(an(a.e, a.element(y)).space));
        }
        if (a.ideals)
            for (const auto& i : a.ideals->right) {
                auto k = ke(a.e, i);
                CHECK(an(a.e, k).space.contains(i));
                CHECK(ke(a.e, an(a.e, k).space) == k);
            }
    });
}

TEST_CASE("exhaustive and full generated lattices agree", "[properties]")
{
    for_instances([&](const RandomInstance<PrimeField>& r) {
        auto e = endo_algebra(r.m);
        LatticeOptions o;
        o.mode = LatticeMode::Exhaustive;
        auto ex = enumerate_lattice(r.m, e, o);
        o.mode = LatticeMode::Generated;
        o.all_vectors = true;
        auto gen = enumerate_lattice(r.m, e, o);
        CHECK(ex.elements == gen.elements);
        CHECK(ex.fully_invariant == gen.fully_invariant);
    });
}

TEST_CASE("internal coproduct bounds", "[properties]")
{
    for_instances([&](const RandomInstance<PrimeField>& r) {
        auto a = exhaustive(r.m);
        for (std::size_t x = 0; x < a.lat.size(); ++x)
            for (std::size_t y = 0; y < a.lat.size(); ++y) {
                const auto& X = a.element(x);
                const auto& Y = a.element(y);
                auto c = internal_coproduct(a.e, X, Y);
                CHECK(c.contains(sum(X, Y)));
                CHECK(r.m.is_subbicomodule(c));
                if (a.lat.fully_invariant[x]) CHECK(is_fully_invariant(a.e, c));
                for (std::size_t z = 0; z < a.lat.size(); ++z) {
                    if (a.lat.leq[y][z]) CHECK(internal_coproduct(a.e, X, a.element(z)).contains(c));
                    if (a.lat.leq[x][z]) CHECK(internal_coproduct(a.e, a.element(z), Y).contains(c));
                }
                auto b = ke_product_bound(a.e, X, Y);
                CHECK(b.included);
                if (a.pred.self_cogenerator) CHECK(b.equal);
            }
    });
}

TEST_CASE("coradical equalities under self-cogeneration", "[properties]")
{
    for_instances([&](const RandomInstance<PrimeField>& r) {
        auto a = exhaustive(r.m);
        if (!a.pred.self_cogenerator) return;
        auto c = corad_cross_check(a.e, a.lat, a.spec);
        REQUIRE(c);
        CHECK(c->ep_subset_cpspec);
        CHECK(c->esp_subset_csp);
        CHECK(c->prad_equals_an_cpcorad);
        CHECK(c->cpcorad_equals_ke_prad);
        CHECK(c->cosemiprime_iff_corad);
        if (a.pred.intrinsically_injective.value_or(false)) {
            CHECK(c->ep_equals_cpspec);
            CHECK(c->esp_equals_csp);
        }
    });
}

TEST_CASE("closure is a Kuratowski operator and the space is T0", "[properties]")
{
    for_instances([&](const RandomInstance<PrimeField>& r) {
        auto a = exhaustive(r.m);
        auto t = build_topology(a.lat, a.spec, Flavor::Full);
        CHECK(separation(t).t0);
        if (a.pred.duo) CHECK(t.is_topology);
        if (!t.is_topology) return;
        const PointSet n = PointSet{1} << t.size();
        for (PointSet x = 0; x < n; ++x) {
            auto cx = closure(t, a.lat, x).formula;
            CHECK((cx & x) == x);
            CHECK(closure(t, a.lat, cx).formula == cx);
            CHECK(closure(t, a.lat, x).smallest == cx);
            CHECK(t.is_closed(cx));
            for (PointSet y = 0; y < n; ++y) CHECK(closure(t, a.lat, x | y).formula == (cx | closure(t, a.lat, y).formula));
        }
        CHECK(closure(t, a.lat, 0).formula == 0);
        CHECK(build_topology(a.lat, a.spec, Flavor::FullyInvariant).is_topology);
    });
}

TEST_CASE("engine agrees with brute force", "[properties]")
{
    for_instances([&](const RandomInstance<PrimeField>& r) {
        auto a = exhaustive(r.m);
        auto c = oracle::compare(a);
        CHECK(c.identical());
        CHECK(c.lattice_size == a.lat.size());
    });
}

TEST_CASE("statement suite has no failures on random instances", "[properties]")
{
    for_instances([&](const RandomInstance<PrimeField>& r) {
        auto a = exhaustive(r.m);
        for (const auto& v : run_checks(a, CheckOptions{}, SuiteFilter{})) {
            INFO(v.id << ": " << v.detail << " " << v.witness);
            CHECK(v.status != Status::Fail);
        }
    });
}

TEST_CASE("trace radical over Q is a nil two-sided ideal", "[properties]")
{
    std::mt19937_64 rng(13);
    std::vector<Coalgebra<RationalField>> cs;
    for (std::size_t n = 1; n <= 4; ++n) cs.push_back(divided_power(n, QQ));
    cs.push_back(direct_sum(divided_power(2, QQ), grouplike(2, QQ)));
    cs.push_back(direct_sum(divided_power(1, QQ), divided_power(2, QQ)));
    cs.push_back(incidence(Poset::chain(2), QQ));
    cs.push_back(comatrix(2, QQ));
    for (const auto& c : cs) {
        auto t = transport_coalgebra(c, random_invertible(QQ, c.dim(), rng)).target;
        auto e = endo_algebra(regular_bicomodule(t));
        auto rad = trace_radical(e);
        // basis change preserves the radical
        CHECK(rad.dim() == trace_radical(endo_algebra(regular_bicomodule(c))).dim());
        for (std::size_t i = 0; i < rad.dim(); ++i) {
            auto x = rad.basis_vector(i);
            for (std::size_t j = 0; j < e.dim(); ++j) {
                auto b = unit_vector(QQ, e.dim(), j);
                CHECK(rad.contains(e.multiply(x, b)));
                CHECK(rad.contains(e.multiply(b, x)));
            }
            auto p = Matrix<RationalField>::identity(QQ, e.module_dim());
            for (std::size_t k = 0; k < e.module_dim(); ++k) p = p * e.element(x);
            CHECK(p == Matrix<RationalField>(QQ, e.module_dim(), e.module_dim()));
        }
    }
    CHECK(trace_radical(endo_algebra(regular_bicomodule(divided_power(4, QQ)))).dim() == 4);
    CHECK(trace_radical(endo_algebra(regular_bicomodule(incidence(Poset::chain(2), QQ)))).dim() == 0);
}
