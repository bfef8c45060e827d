// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.

#include "cotop/cotop.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace cotop;

namespace {

using Clock = std::chrono::steady_clock;

const PrimeField F2{2};
const PrimeField F3{3};
const RationalField QQ{};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Accumulates failures for one criterion.
struct Outcome {
    std::vector<std::string> failures;
    std::string note;
    double slowest = 0; ///< slowest single instance, for per-instance limits

    void require(bool ok, const std::string& what)
    {
        if (!ok) failures.push_back(what);
    }
};

template <ExactField F>
Subspace<F> chain(const F& f, std::size_t n, std::size_t k)
{
    std::vector<Vector<F>> vs;
    for (std::size_t i = 0; i <= k; ++i) vs.push_back(unit_vector(f, n, i));
    return Subspace<F>::span(f, n, vs);
}

template <ExactField F>
std::vector<Subspace<F>> members(const Analysis<F>& a, const std::vector<std::size_t>& idx)
{
    std::vector<Subspace<F>> out;
    for (auto i : idx) out.push_back(a.element(i));
    std::sort(out.begin(), out.end());
    return out;
}

template <ExactField F>
Status verdict(const Analysis<F>& a, const std::string& id)
{
    auto vs = run_checks(a, CheckOptions{}, SuiteFilter::parse(id));
    for (const auto& v : vs)
        if (v.id == id) return v.status;
    return Status::Fail;
}

std::string field_name(const PrimeField& f) { return "F" + std::to_string(f.characteristic()); }
std::string field_name(const RationalField&) { return "Q"; }

template <ExactField F>
void grouplike_case(const F& f, std::size_t n, Outcome& out)
{
    auto t0 = Clock::now();
    const std::string tag = "grouplike:" + std::to_string(n) + "/" + field_name(f);
    auto a = analyze(regular_bicomodule(grouplike(n, f)));
    std::vector<Subspace<F>> lines;
    for (std::size_t i = 0; i < n; ++i) lines.push_back(Subspace<F>::span(f, n, {unit_vector(f, n, i)}));
    std::sort(lines.begin(), lines.end());
    out.require(members(a, a.spec.cpspec) == lines, tag + " CPSpec");
    out.require(members(a, a.simples.simple) == lines, tag + " S(M)");
    auto t = build_topology(a.lat, a.spec, Flavor::Full);
    auto s = separation(t);
    out.require(s.discrete && s.t1 && s.t2, tag + " separation");
    out.require(verdict(a, "Theorem-T1") == Status::Pass, tag + " Theorem-T1");
    out.require(!is_connected(t, t.all()), tag + " connected");
    out.slowest = std::max(out.slowest, seconds_since(t0));
}

template <ExactField F>
void divided_case(const F& f, std::size_t N, Outcome& out)
{
    const std::string tag = "divided:" + std::to_string(N) + "/" + field_name(f);
    const std::size_t d = N + 1;
    auto a = analyze(regular_bicomodule(divided_power(N, f)));
    bool is_chain = a.lat.size() == N + 2 && a.element(0).is_zero();
    for (std::size_t k = 0; is_chain && k <= N; ++k) is_chain = a.element(k + 1) == chain(f, d, k);
    out.require(is_chain, tag + " lattice is not the chain");
    if (!is_chain) return;
    auto c0 = chain(f, d, 0);
    out.require(members(a, a.spec.cpspec) == std::vector{c0}, tag + " CPSpec");
    out.require(members(a, a.spec.csp) == std::vector{c0}, tag + " CSP");
    out.require(a.spec.cpcorad == c0, tag + " CPcorad");
    for (std::size_t n = 1; n <= N; ++n) {
        auto c = internal_coproduct(a.e, chain(f, d, n - 1), chain(f, d, n));
        out.require(c == chain(f, d, std::min(2 * n, N)), tag + " coproduct n=" + std::to_string(n));
        out.require(c.contains(chain(f, d, n)), tag + " containment n=" + std::to_string(n));
        out.require(!is_fully_coprime(a.lat, a.table, n + 1), tag + " C_n coprime n=" + std::to_string(n));
    }
    out.require(a.spec.prad && *a.spec.prad == an(a.e, c0).space, tag + " Prad = an(C_0)");
    out.require(a.spec.prad && ke(a.e, *a.spec.prad) == c0, tag + " ke(Prad) = C_0");
    auto t = build_topology(a.lat, a.spec, Flavor::Full);
    out.require(t.size() == 1 && is_connected(t, t.all()) && is_irreducible(t, t.all()), tag + " topology");
}

void comatrix_case(const PrimeField& f, Outcome& out)
{
    auto t0 = Clock::now();
    const std::string tag = "comatrix:2/" + field_name(f);
    auto m = regular_bicomodule(comatrix(2, f));
    auto a = analyze(m);
    out.require(a.spec.cpspec == std::vector<std::size_t>{a.lat.top()}, tag + " CPSpec");
    out.require(a.spec.cpcorad.is_full() && is_fully_coprime_subspace(a.lat, a.table, a.spec.cpcorad), tag + " CPcorad");
    auto t = build_topology(a.lat, a.spec, Flavor::Full);
    out.require(is_irreducible(t, t.all()), tag + " irreducible");
    out.require(verdict(a, "Prop-duo-irr") == Status::Pass, tag + " Prop-duo-irr");
    out.require(a.e.dim() == 1 && centralizer(m).dim() == 1, tag + " End(C) = Z");
    out.require(verdict(a, "Lemma-End(C)=Z") == Status::Pass, tag + " Lemma-End(C)=Z");
    out.slowest = std::max(out.slowest, seconds_since(t0));
}

Outcome criterion1()
{
    Outcome out;
    for (std::size_t n : {2, 3, 4}) {
        grouplike_case(F2, n, out);
        grouplike_case(F3, n, out);
        grouplike_case(QQ, n, out);
    }
    out.note = "9 instances";
    return out;
}

Outcome criterion2()
{
    Outcome out;
    for (std::size_t N : {2, 3, 4}) {
        divided_case(F2, N, out);
        divided_case(QQ, N, out);
    }
    out.note = "6 instances";
    return out;
}

Outcome criterion3()
{
    Outcome out;
    comatrix_case(F2, out);
    comatrix_case(F3, out);
    out.note = "2 instances";
    return out;
}

Outcome criterion4()
{
    Outcome out;
    constexpr std::uint64_t count = 120;
    std::size_t hypothesis = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const PrimeField& f = i % 2 ? F3 : F2;
        auto r = random_incidence_instance(i, 5, f);
        const std::string tag = "seed " + std::to_string(i) + " " + r.description;
        AnalysisOptions o;
        o.lattice.mode = LatticeMode::Exhaustive;
        auto a = analyze(r.m, o);
        auto c = oracle::compare(a);
        out.require(c.identical(), tag + " oracle diff");
        if (a.pred.certified && a.pred.self_cogenerator && a.pred.intrinsically_injective.value_or(false)) {
            ++hypothesis;
            out.require(a.spec.ep && *a.spec.ep == a.spec.cpspec, tag + " EP ≠ CPSpec");
            out.require(a.spec.esp && *a.spec.esp == a.spec.csp, tag + " ESP ≠ CSP");
        }
    }
    out.note = std::to_string(count) + " instances, " + std::to_string(hypothesis) + " with certified hypotheses";
    return out;
}

Outcome criterion5()
{
    Outcome out;
    constexpr std::uint64_t seed = 7, count = 100;
    std::size_t verdicts = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        auto inst = random_instance(seed * 1000003 + i, 5, F2);
        AnalysisOptions ao;
        ao.lattice.seed = seed;
        CheckOptions co{ao};
        co.seed = seed;
        auto a = analyze(inst.m, ao);
        std::vector<Verdict> vs = run_checks(a, co, SuiteFilter{});
        if (inst.coalgebra)
            for (const auto& [name, theta] : suite_morphisms(inst, seed))
                for (auto& v : check_morphism(analyze_morphism(theta, ao), SuiteFilter{})) vs.push_back(std::move(v));
        verdicts += vs.size();
        for (const auto& v : vs) out.require(v.status != Status::Fail, "random#" + std::to_string(i) + " " + v.id + ": " + v.detail);
    }
    out.note = std::to_string(count) + " instances, " + std::to_string(verdicts) + " verdicts";
    return out;
}

Outcome criterion6()
{
    Outcome out;
    auto d4 = divided_power(4, F2);
    auto inc = analyze_morphism(subcoalgebra_inclusion(d4, chain(F2, 5, 2)));
    const auto& r = inc.report;
    bool mapped = r.map.size() == 1 && r.map[0] && inc.source.element(r.source_points[0]) == chain(F2, 3, 0) &&
                  inc.target.element(inc.tgt_full.points[*r.map[0]]) == chain(F2, 5, 0);
    out.require(mapped, "C_2 into D_4 does not send C_0 to C_0");
    out.require(r.continuous_full, "C_2 into D_4 not continuous");

    auto g2 = grouplike(2, F2);
    auto sw = analyze_morphism(CoalgebraMorphism<PrimeField>{g2, g2, Matrix<PrimeField>(F2, 2, 2, {0, 1, 1, 0})});
    const auto& s = sw.report;
    bool exchanged = s.map.size() == 2 && s.map[0] == std::optional<std::size_t>(1) && s.map[1] == std::optional<std::size_t>(0);
    out.require(exchanged, "swap does not exchange the points");
    out.require(s.homeomorphism_fi && s.continuous_full, "swap not a homeomorphism");
    out.require(s.cpcorad_equal, "swap moves CPcorad");
    for (const auto& v : check_morphism(sw, SuiteFilter::parse("Prop-th-tel")))
        out.require(v.status == Status::Pass || v.status == Status::Vacuous, "swap " + v.id + ": " + v.detail);
    return out;
}

Outcome criterion7()
{
    Outcome out;
    auto rep = validate_coalgebra(divided_power(4, QQ, 1));
    out.require(!rep.ok(), "j = 1 variant accepted");
    std::vector<bool> witnessed(5, false);
    for (const auto& v : rep.violations)
        if (v.identity == "counit-left" || v.identity == "counit-right") witnessed[v.indices.front()] = true;
    for (std::size_t n = 1; n <= 4; ++n) out.require(witnessed[n], "no counit witness at index " + std::to_string(n));
    out.note = std::to_string(rep.violations.size()) + " violations";
    return out;
}

struct Criterion {
    int id;
    double limit;
    bool per_instance;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, 1.0, true, criterion1},  {2, 2.0, false, criterion2}, {3, 1.0, true, criterion3},   {4, 300.0, false, criterion4},
        {5, 600.0, false, criterion5}, {6, 1.0, false, criterion6}, {7, 1.0, false, criterion7},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = Clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.failures.push_back(std::string("exception: ") + e.what());
        }
        double elapsed = seconds_since(t0);
        double measured = c.per_instance ? out.slowest : elapsed;
        if (measured > c.limit) {
            std::ostringstream w;
            w << std::fixed << std::setprecision(2) << "time " << measured << "s over limit";
            out.failures.push_back(w.str());
        }
        bool ok = out.failures.empty();
        failed += !ok;
        std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << std::fixed << std::setprecision(2) << "  elapsed=" << elapsed
                  << "s limit=" << c.limit << (c.per_instance ? "s/instance" : "s");
        if (c.per_instance) std::cout << " slowest=" << out.slowest << "s";
        if (!out.note.empty()) std::cout << "  " << out.note;
        std::cout << '\n';
        for (std::size_t i = 0; i < std::min<std::size_t>(out.failures.size(), 10); ++i) std::cout << "  - " << out.failures[i] << '\n';
        if (out.failures.size() > 10) std::cout << "  - ... " << out.failures.size() - 10 << " more\n";
        std::cout.flush();
    }
    return failed ? 1 : 0;
}
