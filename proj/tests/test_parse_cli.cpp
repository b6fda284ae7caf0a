#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "json.hpp"

#include "cgknot/cli.hpp"
#include "cgknot/parse.hpp"

using namespace cgknot;

namespace {
struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}
}

TEST_CASE("expression parsing")
{
    KnotExpr head = parse_expression("T(2,3;2,13) + T(2,15) - T(2,3;2,15) - T(2,13)");
    CHECK(head.terms().size() == 4);
    CHECK(head.coeff(CableWord::torus(2, 3).cabled(2, 13)) == 1);
    CHECK(head.coeff(CableWord::torus(2, 13)) == -1);

    CHECK(parse_expression("U").is_zero());
    CHECK(parse_expression("2*T(2,5) - T(2,5) - T(2,5)").is_zero());
    CHECK(parse_expression("0").is_zero());
    CHECK(parse_expression("  T( 2 , 3 )  ") == parse_expression("T(2,3)"));
    CHECK(parse_expression("-T(2,3)").coeff(CableWord::torus(2, 3)) == -1);
    CHECK(parse_expression("3*T(2,3;2,13)").coeff(CableWord::torus(2, 3).cabled(2, 13)) == 3);
}

TEST_CASE("parse errors carry positions")
{
    try {
        parse_expression("T(2,4)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.column() == 3);
        CHECK(e.source() == "T(2,4)");
        CHECK(std::string(e.what()).find("coprime") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_expression("0*T(2,3)"), ParseError);
    CHECK_THROWS_AS(parse_expression("T(2,3) junk"), ParseError);
    CHECK_THROWS_AS(parse_expression(""), ParseError);
    CHECK_THROWS_AS(parse_expression("T(1,3)"), ParseError);
    CHECK_THROWS_AS(parse_word("T(2,3) + T(2,5)"), ParseError);
    CHECK_THROWS_AS(parse_word("2*T(2,3)"), ParseError);
}

TEST_CASE("print parse round trip")
{
    std::mt19937 rng(20260822u);
    const long qs[] = {3, 5, 7, 9, 11, 13, 15};
    for (int iter = 0; iter < 300; ++iter) {
        KnotExpr e;
        int terms = static_cast<int>(rng() % 4);
        for (int t = 0; t <= terms; ++t) {
            CableWord w = CableWord::torus(2, qs[rng() % 7]);
            if (rng() % 2) w = w.cabled(2, qs[rng() % 7]);
            long c = static_cast<long>(rng() % 7) - 3;
            if (c != 0) e = e + KnotExpr::knot(w, c);
        }
        CHECK(parse_expression(e.str()) == e);
    }
}

TEST_CASE("family parsing")
{
    FamilySpec f1 = parse_family("K=T(2,3); q=13,15");
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].base == CableWord::torus(2, 3));
    CHECK(f1[0].q_odd == 13);
    CHECK(f1[0].q_even == 15);
    CHECK(f1[0].n == 1);

    FamilySpec f2 = parse_family("K=T(2,3); q=13,11; n=2 | K=T(2,5); q=17,11; n=-1");
    REQUIRE(f2.size() == 2);
    CHECK(f2[0].n == 2);
    CHECK(f2[1].base == CableWord::torus(2, 5));
    CHECK(f2[1].q_odd == 17);
    CHECK(f2[1].n == -1);

    FamilySpec f3 = parse_family("K=U; q=3,1");
    CHECK(f3[0].base == CableWord());

    CHECK_THROWS_AS(parse_family(""), ParseError);
    CHECK_THROWS_AS(parse_family("q=13,15"), ParseError);
    CHECK_THROWS_AS(parse_family("K=T(2,3); q=13"), ParseError);
    CHECK_THROWS_AS(parse_family("K=T(2,3); q=13,15; x=1"), ParseError);
}

TEST_CASE("angle and order parsing")
{
    CHECK(parse_angle("1/26") == UnitAngle(1, 26));
    CHECK(parse_angle("27/26") == UnitAngle(1, 26));
    CHECK(parse_angle("-1/26") == UnitAngle(25, 26));
    CHECK(parse_angle("0") == UnitAngle(0, 1));
    CHECK(parse_angle("2") == UnitAngle(0, 1));
    CHECK_THROWS_AS(parse_angle("1/0"), ParseError);
    CHECK_THROWS_AS(parse_angle("x"), ParseError);

    CHECK(parse_orders("6,26") == std::set<long>({6, 26}));
    CHECK(parse_orders("5") == std::set<long>({5}));
    CHECK_THROWS_AS(parse_orders(""), ParseError);
    CHECK_THROWS_AS(parse_orders("5,-3"), ParseError);
}

TEST_CASE("cli alex")
{
    RunResult r = run_cli({"alex", "U", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    CHECK(r.err.empty());

    RunResult r2 = run_cli({"alex", "T(2,3)", "--format", "text"});
    CHECK(r2.code == 0);
    CHECK(r2.out == "t^2 - t + 1\n");
}

TEST_CASE("cli json envelopes")
{
    RunResult r = run_cli({"jumps", "T(2,13)", "--format", "json"});
    CHECK(r.code == 0);
    REQUIRE(!r.out.empty());
    CHECK(r.out.back() == '\n');
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "cgknot.jumps/1");
    CHECK(j["version"] == "0.1.0");
    CHECK(j["input"] == "T(2,13)");
    REQUIRE(j["jumps"].is_array());
    CHECK(j["jumps"].size() == 12);
    CHECK(j["jumps"][0]["angle"] == "1/26");
    CHECK(j["jumps"][0]["jump"] == "-1");

    RunResult o = run_cli({"obstruct", "--family", "K=T(2,3); q=13,15", "--mode", "structural",
                           "--format", "json"});
    CHECK(o.code == 0);
    auto jo = nlohmann::json::parse(o.out);
    CHECK(jo["schema"] == "cgknot.obstruction/1");
    CHECK(jo["verdict"] == "NOT_SLICE");
    CHECK(jo["mode_run"] == "structural");
    CHECK(jo["chosen"] == 0);
    CHECK(jo["deficiency"]["certified"] == true);
    CHECK(jo["independence"]["certified"] == true);
}

TEST_CASE("cli exit codes")
{
    // exit 2: the machinery cannot decide (unknot base refutes independence)
    RunResult inc = run_cli({"obstruct", "--family", "K=U; q=13,15", "--mode", "structural"});
    CHECK(inc.code == 2);
    CHECK(inc.out.find("INCONCLUSIVE") != std::string::npos);

    // exit 1: malformed input, diagnostic on err with a caret
    RunResult bad = run_cli({"alex", "T(2,4)"});
    CHECK(bad.code == 1);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("error:") != std::string::npos);
    CHECK(bad.err.find("^") != std::string::npos);

    // exit 1: composite order without the experimental flag
    RunResult comp = run_cli({"twisted", "9", "1"});
    CHECK(comp.code == 1);
    CHECK(comp.err.find("error:") != std::string::npos);

    RunResult unk = run_cli({"nosuchverb"});
    CHECK(unk.code == 1);
}

TEST_CASE("cli csv output")
{
    RunResult r = run_cli({"jumps", "T(2,13)", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("angle,jump\n", 0) == 0);
    CHECK(r.out.find("1/26,-1\n") != std::string::npos);

    RunResult d = run_cli({"disc", "--char", "5,1", "--format", "csv"});
    CHECK(d.code == 0);
    CHECK(d.out == "root\n2/5\n3/5\n");
}

TEST_CASE("cli determinism")
{
    std::vector<std::string> args = {"obstruct", "--family", "K=T(2,3); q=13,15", "--mode",
                                     "exhaustive", "--jobs", "2", "--format", "json"};
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    auto j = nlohmann::json::parse(a.out);
    CHECK(j["enumerated"] == 48);
    CHECK(j["cases"].size() == 48);
}

TEST_CASE("cli help and version")
{
    RunResult h = run_cli({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("obstruct") != std::string::npos);

    RunResult v = run_cli({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("cli demo")
{
    RunResult r = run_cli({"demo"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
