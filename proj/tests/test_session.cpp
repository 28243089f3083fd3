#include "doctest.h"
#include "idealclose/report.hpp"
#include "idealclose/session.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace idealclose;

namespace {

std::string json_lines(const CheckReport& rep) {
    std::ostringstream out;
    write_json_lines(out, rep);
    return out.str();
}

const CheckRecord* find_check(const CheckReport& rep, const std::string& name) {
    return rep.find(name);
}

std::string extra_of(const CheckRecord& r, const std::string& key) {
    for (const auto& kv : r.extra)
        if (kv.first == key) return kv.second;
    return "";
}

}  // namespace

TEST_CASE("parsing statements and canonical printing") {
    const std::string text =
        "# sanity on the square-zero ring\n"
        "ring R = poly(F2; x, y | x^2, x*y, y^2)   # relations\n"
        "ideal m = (x,y) in R\n"
        "ideal z = () in R\n"
        "map f : R -> R = [x -> y, y -> x]\n"
        "closure c = meet(radical, sat((x)))\n"
        "budget e_max = 4, n_max = 6\n"
        "check axioms c on lattice(R) strict\n"
        "check persistence frob along f on lattice(R)\n"
        "check semiprime vop on lattice(R) expect violation\n"
        "compute c(m)\n"
        "report spread identity m in R\n"
        "report census frob in R\n"
        "assert x*y + y in c(m)\n"
        "assert y not in delta[m](z)\n"
        "assert vop(m) = (1)\n";
    Session s = parse_session(text);
    CHECK(s.statements.size() == 15);

    // print is a fixpoint: reparsing the canonical text reproduces it
    std::string canon = print_session(s);
    CHECK(print_session(parse_session(canon)) == canon);
    CHECK(canon.find("ideal m = (x, y) in R") != std::string::npos);
    CHECK(canon.find("assert vop(m) = (1)") != std::string::npos);

    CHECK(std::get<RingStmt>(s.statements[0].node).characteristic == 2);
    CHECK(std::get<IdealStmt>(s.statements[2].node).gens.empty());
    CHECK(std::get<CheckStmt>(s.statements[6].node).strict);
    CHECK(std::get<CheckStmt>(s.statements[7].node).map == "f");
    CHECK(std::get<CheckStmt>(s.statements[8].node).expect_violation);
    CHECK(std::get<AssertStmt>(s.statements[13].node).form ==
          AssertStmt::Form::not_member);

    CHECK(parse_session("").statements.empty());
    CHECK(parse_session("  \n# only a comment\n").statements.empty());
}

TEST_CASE("parse diagnostics carry line and column") {
    // reference before declaration: R is unknown on line 1, column 18
    try {
        parse_session("ideal I = (x) in R\n");
        FAIL("expected a parse error");
    } catch (const session_parse_error& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 18);
        CHECK(std::string(e.what()).find("unknown ring 'R'") != std::string::npos);
    }

    const std::string ring = "ring R = poly(F2; x | x^3)\n";
    CHECK_THROWS_WITH_AS(parse_session("rng R = poly(F2; x)\n"),
                         doctest::Contains("unknown statement"), session_parse_error);
    CHECK_THROWS_WITH_AS(parse_session(ring + ring), doctest::Contains("duplicate ring"),
                         session_parse_error);
    CHECK_THROWS_WITH_AS(parse_session("ring frob = poly(F2; x)\n"),
                         doctest::Contains("reserved word"), session_parse_error);
    CHECK_THROWS_WITH_AS(parse_session("ring R = poly(Z5; x)\n"),
                         doctest::Contains("coefficient field"), session_parse_error);
    CHECK_THROWS_WITH_AS(parse_session(ring + "closure c = meet(radical)\n"),
                         doctest::Contains("at least two"), session_parse_error);
    CHECK_THROWS_WITH_AS(parse_session(ring + "check axioms d on lattice(R)\n"),
                         doctest::Contains("unknown closure 'd'"), session_parse_error);
    CHECK_THROWS_WITH_AS(parse_session(ring + "ideal I = (x) in R\n" +
                                       "check nakayama identity on family(I)\n"),
                         doctest::Contains("lattice scope"), session_parse_error);
    CHECK_THROWS_WITH_AS(parse_session(ring + "check axioms identity on lattice(R) junk\n"),
                         doctest::Contains("trailing input"), session_parse_error);
    CHECK_THROWS_WITH_AS(parse_session("map f : R -> R = [x -> x]\n"),
                         doctest::Contains("unknown ring"), session_parse_error);
    CHECK_THROWS_WITH_AS(parse_session(ring + "map f : R -> R = [y -> x]\n"),
                         doctest::Contains("not a variable"), session_parse_error);
    CHECK_THROWS_WITH_AS(parse_session(ring + "budget q_max = 3\n"),
                         doctest::Contains("budget key"), session_parse_error);
}

TEST_CASE("expected violations flip the exit sense") {
    // the v-operation is not semi-prime on the square-zero lattice; m_v = R
    // while (m*m)_v = (0)_v = 0
    const std::string base =
        "ring R = poly(F2; x, y | x^2, x*y, y^2)\n"
        "ideal m = (x, y) in R\n"
        "ideal z = (0) in R\n"
        "assert vop(m) = (1)\n"
        "assert vop(z) = (0)\n";

    SessionResult expected =
        run_session(parse_session(base + "check semiprime vop on lattice(R) expect violation\n"));
    CHECK(expected.ok);
    const CheckRecord* flag = find_check(expected.report, "expected-violation");
    REQUIRE(flag != nullptr);
    CHECK(flag->status == "pass");
    CHECK(extra_of(*flag, "note") == "violation expected and found");

    // same session without the annotation: the genuine failure breaks the run
    SessionResult bare =
        run_session(parse_session(base + "check semiprime vop on lattice(R)\n"));
    CHECK_FALSE(bare.ok);
    CHECK(bare.report.has_failure());

    // expecting a violation that never happens is itself a failure
    SessionResult vacuous = run_session(
        parse_session(base + "check axioms identity on lattice(R) expect violation\n"));
    CHECK_FALSE(vacuous.ok);
    const CheckRecord* missing = find_check(vacuous.report, "expected-violation");
    REQUIRE(missing != nullptr);
    CHECK(missing->status == "fail");

    CHECK(run_session(Session{}).ok);
}

TEST_CASE("strict checks refuse unknown verdicts") {
    // y is y^q in every bracket power, never certified outside frob(0) on an
    // infinite quotient, so the verdict stays unknown
    const std::string text =
        "ring R = poly(F2; x, y | x^2, x*y)\n"
        "ideal z = (0) in R\n"
        "assert y not in frob(z)\n";
    SessionResult lax = run_session(parse_session(text));
    CHECK(lax.ok);
    REQUIRE(lax.report.records.size() == 1);
    CHECK(lax.report.records[0].status == "unknown");

    SessionResult strict = run_session(parse_session(text), Budget{}, /*strict_all=*/true);
    CHECK_FALSE(strict.ok);
}

TEST_CASE("runtime errors abort with the offending command") {
    const std::string text =
        "ring R = poly(F2; x | x^3)\n"
        "ring S = poly(F2; y | y^2)\n"
        "ideal I = (x) in R\n"
        "closure c = sat(I)\n"
        "check axioms c on lattice(S)\n"
        "compute c(I)\n";
    SessionResult res = run_session(parse_session(text));
    CHECK_FALSE(res.ok);
    REQUIRE(res.report.records.size() == 1);
    const CheckRecord& err = res.report.records[0];
    CHECK(err.check == "error");
    CHECK(err.status == "fail");
    CHECK(extra_of(err, "command") == "check axioms c on lattice(S)");
    CHECK(extra_of(err, "line") == "5");
    CHECK(extra_of(err, "kind") == "ring-mismatch");

    // invalid budgets die the same way
    SessionResult zero = run_session(parse_session("budget e_max = 0\n"));
    CHECK_FALSE(zero.ok);
    REQUIRE(zero.report.records.size() == 1);
    CHECK(zero.report.records[0].check == "error");

    // vop needs a finite ring
    SessionResult infinite = run_session(parse_session(
        "ring R = poly(Q; x, y)\n"
        "ideal I = (x) in R\n"
        "check semiprime vop on lattice(R)\n"));
    CHECK_FALSE(infinite.ok);
    CHECK(extra_of(infinite.report.records.back(), "kind") == "domain");
}

TEST_CASE("persistence of the basically full closure fails along the embedding") {
    // n = (x, y) in F2[x,y]/(x^2, xy); along R -> S = F2[x,y,z]/(x^2, xy, z^2)
    // the element x certifies (y)^bf not landing in ((y)S)^bf
    const std::string text =
        "ring R = poly(F2; x, y | x^2, x*y)\n"
        "ring S = poly(F2; x, y, z | x^2, x*y, z^2)\n"
        "map f : R -> S = [x -> x, y -> y]\n"
        "ideal I = (y) in R\n"
        "check persistence bf along f on family(I) expect violation\n"
        "assert bf(I) = (x, y)\n";
    SessionResult res = run_session(parse_session(text));
    CHECK(res.ok);
    const CheckRecord* pc = find_check(res.report, "persistence");
    REQUIRE(pc != nullptr);
    CHECK(pc->status == "fail");
    REQUIRE(!pc->witnesses.empty());
    CHECK(pc->witnesses[0] == "I = (y) : x");
}

TEST_CASE("compute and report statements surface engine results") {
    const std::string text =
        "ring R = poly(F2; x, y | x^2, x*y, y^2)\n"
        "ideal m = (x, y) in R\n"
        "compute frob(m)\n"
        "report spread identity m in R\n"
        "report census frob in R\n";
    SessionResult res = run_session(parse_session(text));
    CHECK(res.ok);

    const CheckRecord* comp = find_check(res.report, "compute");
    REQUIRE(comp != nullptr);
    CHECK(comp->closure == "frob");
    CHECK(extra_of(*comp, "result") == "(x, y)");

    const CheckRecord* spread = find_check(res.report, "report/spread");
    REQUIRE(spread != nullptr);
    CHECK(spread->status == "pass");
    CHECK(extra_of(*spread, "spread") == "2");
    CHECK(extra_of(*spread, "core") == "(x, y)");
    CHECK(extra_of(*spread, "nakayama") == "pass");

    // Frobenius fixed points: only m and R survive, 0^F = m eats the rest
    const CheckRecord* census = find_check(res.report, "report/census");
    REQUIRE(census != nullptr);
    CHECK(census->witnesses == std::vector<std::string>{"(x, y)", "(1)"});
    CHECK(extra_of(*census, "zero-closed") == "false");
    CHECK(extra_of(*census, "all-closed") == "false");
}

TEST_CASE("identical sessions produce byte-identical reports") {
    const std::string text =
        "ring R = poly(F2; x, y | x^2, x*y, y^2)\n"
        "ideal m = (x, y) in R\n"
        "check exhaustive frob on lattice(R)\n"
        "check semiprime vop on lattice(R) expect violation\n"
        "report census vop in R\n"
        "compute cw(vop)(m)\n";
    Session s = parse_session(text);
    SessionResult a = run_session(s);
    SessionResult b = run_session(parse_session(text));
    CHECK(a.ok);
    CHECK(json_lines(a.report) == json_lines(b.report));
    CHECK(!a.report.records.empty());

    // the weak construction over v sends m to the whole ring
    const CheckRecord* comp = find_check(a.report, "compute");
    REQUIRE(comp != nullptr);
    CHECK(comp->closure == "cw(vop)");
    CHECK(extra_of(*comp, "result") == "(1)");
}
