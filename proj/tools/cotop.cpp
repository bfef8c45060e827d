// Command-line front end: validate, spectrum, topology, check, oracle, catalog.
//
// Exit codes: 0 success, 1 invalid input or a FAIL verdict, 2 usage error,
// 3 budget exceeded or unsupported over Q.

#include "cotop/cotop.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace cotop;

namespace {

struct Options {
    std::string ref;
    std::string field;
    std::string mode = "auto";
    std::uint64_t budget = 200000;
    std::uint64_t ideal_budget = 50000;
    std::uint64_t probes = 64;
    std::uint64_t seed = 0;
    std::string report = "text";
    std::string bicomodule;
    bool fi = false;
    std::string suite = "all";
    std::size_t random = 0;
    std::size_t dim = 5;
    std::string output;
};

int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::Usage: return 2;
    case ErrorKind::BudgetExceeded:
    case ErrorKind::ExhaustiveUnavailableOverQ:
    case ErrorKind::UnsupportedOverQ: return 3;
    default: return 1;
    }
}

AnalysisOptions analysis_options(const Options& o)
{
    AnalysisOptions a;
    a.lattice.mode = parse_lattice_mode(o.mode);
    a.lattice.budget = o.budget;
    a.lattice.probes = o.probes;
    a.lattice.seed = o.seed;
    a.ideal_budget = o.ideal_budget;
    return a;
}

/// Field for a reference: a file's own field, else --field (default F2).
FieldSpec field_for(const Options& o)
{
    auto fallback = o.field.empty() ? FieldSpec::prime(2) : FieldSpec::parse(o.field);
    auto spec = o.ref.empty() ? fallback : reference_field(o.ref, fallback);
    if (!o.field.empty() && !(spec == fallback))
        throw Error(ErrorKind::Usage, "--field " + o.field + " conflicts with the instance field " + spec.to_string());
    return spec;
}

template <ExactField F>
void require_valid(const NamedBicomodule<F>& b)
{
    auto check = [&](const Coalgebra<F>& c, const std::string& side) {
        auto r = validate_coalgebra(c);
        if (!r.ok()) throw Error(ErrorKind::InvalidCoalgebra, side + " coalgebra \"" + (side == "left" ? b.left : b.right) + "\" violates " + r.violations.front().identity);
    };
    check(b.module.left_coalgebra(), "left");
    check(b.module.right_coalgebra(), "right");
    auto r = validate_bicomodule(b.module);
    if (!r.ok()) throw Error(ErrorKind::InvalidBicomodule, "\"" + b.name + "\" violates " + r.violations.front().identity);
}

template <ExactField F>
int cmd_validate(const Options& o, const F& f, std::ostream& os)
{
    auto res = resolve(o.ref, f);
    std::vector<Record> recs;
    bool ok = true;
    auto add = [&](std::vector<Record> r) {
        ok = ok && r.front()["ok"].template get<bool>();
        recs.insert(recs.end(), r.begin(), r.end());
    };
    for (const auto& [name, c] : res.instance.coalgebras) add(validation_records(name, "coalgebra", validate_coalgebra(c)));
    for (const auto& b : res.instance.bicomodules) add(validation_records(b.name, "bicomodule", validate_bicomodule(b.module)));
    for (const auto& m : res.instance.morphisms) add(validation_records(m.name, "morphism", validate_morphism(m.morphism)));
    recs.push_back({{"kind", "result"}, {"valid", ok}});
    render(os, recs, parse_report_format(o.report));
    return ok ? 0 : 1;
}

template <ExactField F>
int cmd_spectrum(const Options& o, const F& f, std::ostream& os)
{
    auto res = resolve(o.ref, f);
    auto b = select_bicomodule(res.instance, o.bicomodule);
    require_valid(b);
    auto a = analyze(b.module, analysis_options(o));
    render(os, spectrum_records(res.label, a), parse_report_format(o.report));
    return 0;
}

const std::vector<std::string> topology_statements = {
    "Theorem-Topology", "Remark-simple-char", "Theorem-T1", "Prop-bireg", "Theorem-compact", "Prop-lf", "Prop-duo-irr",
    "Lemma-it-irr", "Prop-irr-components", "Lemma-1n", "Lemma-closure", "Theorem-11",
};

template <ExactField F>
int cmd_topology(const Options& o, const F& f, std::ostream& os)
{
    auto res = resolve(o.ref, f);
    auto b = select_bicomodule(res.instance, o.bicomodule);
    require_valid(b);
    auto a = analyze(b.module, analysis_options(o));
    CheckOptions co{analysis_options(o)};
    co.seed = o.seed;
    Checker<F> checker(a, co);
    const auto& t = o.fi ? checker.fi() : checker.full();
    std::vector<Record> recs;
    recs.push_back(instance_record(res.label, a.m));
    recs.push_back(set_record("CPSpec", a.lat, a.spec.cpspec));
    recs.push_back(subspace_record("CPcorad", a.spec.cpcorad));
    auto top = topology_records(a, t);
    recs.insert(recs.end(), top.begin(), top.end());
    recs.push_back(hypotheses_record(a));
    bool fail = false;
    for (const auto& v : checker.run(SuiteFilter(topology_statements))) {
        fail = fail || v.status == Status::Fail;
        recs.push_back(verdict_record(v, res.label));
    }
    render(os, recs, parse_report_format(o.report));
    return fail ? 1 : 0;
}

/// Verdicts for one bicomodule and, when it is regular, for the morphism suite on its coalgebra.
template <ExactField F>
void check_one(const std::string& label, const NamedBicomodule<F>& b, std::optional<Coalgebra<F>> regular, std::optional<Poset> poset,
               const std::vector<NamedMorphism<F>>& morphisms, const Options& o, const SuiteFilter& filter, std::vector<Record>& recs,
               VerdictTally& tally)
{
    auto ao = analysis_options(o);
    auto a = analyze(b.module, ao);
    CheckOptions co{ao};
    co.seed = o.seed;
    auto emit = [&](const Verdict& v, const std::string& where) {
        tally.add(v);
        recs.push_back(verdict_record(v, where));
    };
    for (const auto& v : run_checks(a, co, filter)) emit(v, label);
    std::vector<std::pair<std::string, CoalgebraMorphism<F>>> ms;
    if (regular) ms = suite_morphisms(RandomInstance<F>{label, regular, b.module, poset}, o.seed);
    bool any_theta = std::any_of(statement_ids().begin(), statement_ids().end(), [&](const std::string& id) { return id.starts_with("Prop-th-tel") && filter.matches(id); });
    if (!any_theta) return;
    for (const auto& [name, theta] : ms)
        for (const auto& v : check_morphism(analyze_morphism(theta, ao), filter)) emit(v, label + " θ=" + name);
    for (const auto& m : morphisms) {
        auto ma = analyze_morphism(m.morphism, ao);
        auto sm = spectral_map_records(m.name, ma);
        recs.insert(recs.end(), sm.begin(), sm.end());
        for (const auto& v : check_morphism(ma, filter)) emit(v, label + " θ=" + m.name);
    }
}

template <ExactField F>
int cmd_check(const Options& o, const F& f, std::ostream& os)
{
    auto filter = SuiteFilter::parse(o.suite);
    std::vector<Record> recs;
    VerdictTally tally;
    if (o.random > 0) {
        if (!o.ref.empty()) throw Error(ErrorKind::Usage, "give either an instance or --random, not both");
        for (std::size_t i = 0; i < o.random; ++i) {
            auto inst = random_instance(o.seed * 1000003 + i, o.dim, f);
            auto label = "random#" + std::to_string(i) + " " + inst.description;
            check_one<F>(label, {label, "C", "C", inst.m}, inst.coalgebra, inst.poset, {}, o, filter, recs, tally);
        }
    } else {
        if (o.ref.empty()) throw Error(ErrorKind::Usage, "check needs an instance or --random N");
        auto res = resolve(o.ref, f);
        auto b = select_bicomodule(res.instance, o.bicomodule);
        require_valid(b);
        check_one<F>(res.label, b, regular_coalgebra(res.instance, b), res.poset, res.instance.morphisms, o, filter, recs, tally);
    }
    recs.push_back(tally.record());
    render(os, recs, parse_report_format(o.report));
    return tally.fail ? 1 : 0;
}

template <ExactField F>
int cmd_oracle(const Options& o, const F& f, std::ostream& os)
{
    if constexpr (!FiniteField<F>) {
        (void)o, (void)f, (void)os;
        throw Error(ErrorKind::UnsupportedOverQ, "the brute-force oracle needs a finite field");
    } else {
        auto res = resolve(o.ref, f);
        auto b = select_bicomodule(res.instance, o.bicomodule);
        require_valid(b);
        auto ao = analysis_options(o);
        ao.lattice.mode = LatticeMode::Exhaustive;
        auto a = analyze(b.module, ao);
        auto c = oracle::compare(a, o.budget);
        render(os, oracle_records(res.label, c), parse_report_format(o.report));
        return c.identical() ? 0 : 1;
    }
}

template <ExactField F>
int cmd_emit(const Options& o, const F& f)
{
    auto res = resolve(o.ref, f);
    auto text = render_instance(res.instance);
    if (o.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.output, std::ios::binary);
        if (!out) throw Error(ErrorKind::Usage, "cannot write \"" + o.output + "\"");
        out << text;
    }
    return 0;
}

void add_common(CLI::App* c, Options& o, bool analysis)
{
    c->add_option("--field", o.field, "F<p> or Q (default F2; instance files carry their own field)");
    c->add_option("--report", o.report, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    c->add_option("--bicomodule", o.bicomodule, "bicomodule name inside an instance file");
    if (!analysis) return;
    c->add_option("--mode", o.mode, "lattice mode: auto, exhaustive or generated")->check(CLI::IsMember({"auto", "exhaustive", "generated"}));
    c->add_option("--budget", o.budget, "subspace budget for exhaustive enumeration");
    c->add_option("--ideal-budget", o.ideal_budget, "budget for ideal enumeration");
    c->add_option("--probes", o.probes, "random probe vectors in generated mode");
    c->add_option("--seed", o.seed, "seed for sampling and random instances");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fully coprime spectra of finite-dimensional bicomodules"};
    app.require_subcommand(1);
    Options o;

    auto* validate = app.add_subcommand("validate", "check coalgebra, bicomodule and morphism axioms");
    validate->add_option("instance", o.ref, "instance file or catalog reference")->required();
    add_common(validate, o, false);

    auto* spectrum = app.add_subcommand("spectrum", "CPSpec, CPcorad, CSP, EP, ESP and hypotheses");
    spectrum->add_option("instance", o.ref, "instance file or catalog reference")->required();
    add_common(spectrum, o, true);

    auto* topology = app.add_subcommand("topology", "the topology on CPSpec with separation and irreducibility");
    topology->add_option("instance", o.ref, "instance file or catalog reference")->required();
    topology->add_flag("--fi", o.fi, "use closed sets from fully invariant subbicomodules only");
    add_common(topology, o, true);

    auto* check = app.add_subcommand("check", "run the statement suite");
    check->add_option("instance", o.ref, "instance file or catalog reference");
    check->add_option("--random", o.random, "number of seeded random instances");
    check->add_option("--dim", o.dim, "dimension budget for random instances");
    check->add_option("--suite", o.suite, "all, or comma-separated statement id prefixes");
    add_common(check, o, true);

    auto* oracle_cmd = app.add_subcommand("oracle", "compare with the brute-force path over F_p");
    oracle_cmd->add_option("instance", o.ref, "instance file or catalog reference")->required();
    add_common(oracle_cmd, o, true);

    auto* catalog = app.add_subcommand("catalog", "list catalog entries or emit instance files");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "list catalog references");
    auto* emit = catalog->add_subcommand("emit", "write an instance file for a reference");
    emit->add_option("instance", o.ref, "catalog reference")->required();
    emit->add_option("--field", o.field, "F<p> or Q (default F2)");
    emit->add_option("-o,--output", o.output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            for (const auto& [ref, what] : catalog_entries()) std::cout << ref << "  " << what << '\n';
            return 0;
        }
        auto spec = field_for(o);
        return with_field(spec, [&](const auto& f) -> int {
            if (validate->parsed()) return cmd_validate(o, f, std::cout);
            if (spectrum->parsed()) return cmd_spectrum(o, f, std::cout);
            if (topology->parsed()) return cmd_topology(o, f, std::cout);
            if (check->parsed()) return cmd_check(o, f, std::cout);
            if (oracle_cmd->parsed()) return cmd_oracle(o, f, std::cout);
            if (emit->parsed()) return cmd_emit(o, f);
            return 2;
        });
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    }
}
