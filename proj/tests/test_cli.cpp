#include "support.hpp"

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

using namespace cotop;

namespace {

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args)
{
    std::string cmd = std::string(COTOP_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string instance(const std::string& name) { return std::string(COTOP_INSTANCES_DIR) + "/" + name; }

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::size_t count(const std::string& hay, const std::string& needle)
{
    std::size_t c = 0;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++c;
    return c;
}

} // namespace

TEST_CASE("validate", "[cli]")
{
    auto ok = cli("validate " + instance("d4.json"));
    CHECK(ok.code == 0);
    CHECK(has(ok.out, "result: valid=yes"));

    auto bad = cli("validate " + instance("d4_shifted.json"));
    CHECK(bad.code == 1);
    CHECK(count(bad.out, "identity=counit-left") == 5);
    CHECK(count(bad.out, "identity=counit-right indices=[0]") == 1);
    CHECK(has(bad.out, "result: valid=no"));

    auto frac = cli("validate " + instance("bad_fraction.json"));
    CHECK(frac.code == 1);
    CHECK(has(frac.out, "ParseError"));
    CHECK(has(frac.out, "line 7, column 19"));

    CHECK(cli("validate " + instance("c2_in_d4.json")).code == 0);
    CHECK(cli("validate " + instance("g2_swap.json")).code == 0);
    CHECK(cli("validate divided-shifted:4 --field Q").code == 1);
    CHECK(cli("validate /nonexistent/file.json").code == 2);
}

TEST_CASE("spectrum", "[cli]")
{
    auto g = cli("spectrum grouplike:4 --mode exhaustive");
    CHECK(g.code == 0);
    CHECK(has(g.out, "CPSpec (4):"));
    CHECK(has(g.out, "certification=exhaustive"));

    auto d = cli("spectrum divided:4");
    CHECK(d.code == 0);
    CHECK(has(d.out, "CPSpec (1):\n  index=1 basis=<(1,0,0,0,0)>"));
    CHECK(has(d.out, "name=CPcorad dim=1"));

    auto m = cli("spectrum comatrix:2");
    CHECK(m.code == 0);
    CHECK(has(m.out, "endo_dim=1"));
    CHECK(has(m.out, "name=CPcorad dim=4"));

    auto q = cli("spectrum " + instance("g2_q.json") + " --mode generated");
    CHECK(q.code == 0);
    CHECK(has(q.out, "field=Q"));
    CHECK(has(q.out, "certification=generated"));
}

TEST_CASE("error exit codes", "[cli]")
{
    auto q = cli("spectrum grouplike:4 --field Q --mode exhaustive");
    CHECK(q.code == 3);
    CHECK(has(q.out, "ExhaustiveUnavailableOverQ"));
    CHECK(cli("spectrum divided:4 --mode exhaustive --budget 10").code == 3);
    CHECK(cli("spectrum bogus:1").code == 2);
    CHECK(cli("spectrum divided:4 --field F4").code != 0);
    CHECK(cli("check grouplike:2 --suite Bogus").code == 2);
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("").code == 2);
}

TEST_CASE("topology", "[cli]")
{
    auto g = cli("topology grouplike:2");
    CHECK(g.code == 0);
    CHECK(has(g.out, "discrete=yes"));
    CHECK(has(g.out, "connected=no"));

    auto d = cli("topology divided:4");
    CHECK(has(d.out, "points=1"));
    CHECK(has(d.out, "irreducible=yes"));

    auto m = cli("topology comatrix:2");
    CHECK(has(m.out, "irreducible=yes"));
    CHECK(has(m.out, "cpcorad_fully_coprime=yes"));

    CHECK(has(cli("topology divided:4 --fi").out, "flavor=fully-invariant"));
}

TEST_CASE("check", "[cli]")
{
    auto all = cli("check divided:4 --suite all");
    CHECK(all.code == 0);
    CHECK(has(all.out, "fail=0"));

    auto t1 = cli("check grouplike:2 --suite Theorem-T1");
    CHECK(t1.code == 0);
    CHECK(has(t1.out, "PASS        Theorem-T1"));
    CHECK(has(t1.out, "summary: pass=1 "));

    auto mor = cli("check " + instance("g2_swap.json") + " --suite Prop-th-tel");
    CHECK(mor.code == 0);
    CHECK(has(mor.out, "Prop-th-tel-5  homeomorphism"));

    auto rnd = cli("check --random 3 --seed 7 --suite all");
    CHECK(rnd.code == 0);
    CHECK(has(rnd.out, "fail=0"));
}

TEST_CASE("oracle", "[cli]")
{
    for (const auto* args : {"oracle divided:4", "oracle grouplike:3 --field F3", "oracle comatrix:2"}) {
        auto r = cli(args);
        INFO(args << "\n" << r.out);
        CHECK(r.code == 0);
        CHECK(has(r.out, "identical=yes"));
    }
    CHECK(has(cli("oracle divided:4").out, "subspaces=374"));
}

TEST_CASE("structured report", "[cli]")
{
    auto r = cli("spectrum divided:2 --report structured");
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<nlohmann::json> records;
    while (std::getline(in, line))
        if (!line.empty()) records.push_back(nlohmann::json::parse(line));
    REQUIRE(records.size() >= 3);
    CHECK(records[0]["kind"] == "instance");
    CHECK(records[0]["dim"] == 3);
    bool seen = false;
    for (const auto& rec : records)
        if (rec["kind"] == "set" && rec["name"] == "CPSpec") {
            seen = true;
            CHECK(rec["members"].size() == 1);
            CHECK(rec["members"][0]["basis"] == "<(1,0,0)>");
        }
    CHECK(seen);
}

TEST_CASE("catalog list and emit", "[cli]")
{
    auto list = cli("catalog list");
    CHECK(list.code == 0);
    for (const auto* ref : {"grouplike:n", "divided:N", "comatrix:n", "incidence:chain:n", "sum:(a,b)", "quotient:(ref,v)"}) CHECK(has(list.out, ref));

    auto path = (std::filesystem::temp_directory_path() / "cotop_emit_d2q.json").string();
    REQUIRE(cli("catalog emit divided:2 --field Q -o " + path).code == 0);
    auto v = cli("validate " + path);
    CHECK(v.code == 0);
    auto s = cli("spectrum " + path + " --mode generated");
    CHECK(has(s.out, "field=Q"));
    CHECK(has(s.out, "CPSpec (1):"));
    std::filesystem::remove(path);

    auto emitted = cli("catalog emit comatrix:2 --field F3");
    REQUIRE(emitted.code == 0);
    auto inst = parse_instance(emitted.out, PrimeField(3));
    CHECK(render_instance(inst) == emitted.out);
}

TEST_CASE("instance files round trip", "[cli]")
{
    for (const auto* name : {"d4.json", "d4_shifted.json", "c2_in_d4.json", "g2_swap.json", "g2_q.json"}) {
        INFO(name);
        auto text = read_file(instance(name));
        with_field(instance_field(text), [&](const auto& f) {
            auto inst = parse_instance(text, f);
            auto again = parse_instance(render_instance(inst), f);
            CHECK(again == inst);
            CHECK(render_instance(again) == render_instance(inst));
            return 0;
        });
    }
}
