#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "laytrop/cli.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = laytrop::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body)
{
    std::string path = "/tmp/laytrop_test_" + name;
    std::ofstream(path) << body;
    return path;
}

} // namespace

TEST_CASE("roots of a rational-exponent binomial")
{
    auto r = cli({"roots", "x^(5/3) + 7", "--mode", "supertropical", "--exponents", "rational"});
    CHECK(r.code == 0);
    CHECK(r.out == "21/5\n");
    auto p = cli({"roots", "x^(5/3) + 7", "--exponents", "poly"});
    CHECK(p.code == 1);
    CHECK(p.err.find("ModeViolation") != std::string::npos);
    CHECK(cli({"roots", "x^2 + 5v*x + 7"}).out == "2\n5\n");
}

TEST_CASE("permanent identity")
{
    auto r = cli({"identity", "--perm", "x1", "x2", "0", "--mode", "supertropical"});
    CHECK(r.code == 0);
    CHECK(r.out.find("relation: Equal\n") != std::string::npos);
    auto l = cli({"identity", "--perm", "x1", "x2", "0", "--mode", "layered"});
    CHECK(l.code == 0);
    CHECK(l.out.find("relation: SurpassesNu\n") != std::string::npos);
}

TEST_CASE("division")
{
    auto bad = cli({"divide", "x^2+5*x+7", "by", "x+9"});
    CHECK(bad.code == 2);
    CHECK(bad.out.find("verified: false\n") != std::string::npos);
    CHECK(bad.out.find("witness: ") != std::string::npos);
    auto ok = cli({"divide", "x^2+5*x+7", "by", "x+2"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "quotient: x + 5\nrelation: Equal\nverified: true\n");
}

TEST_CASE("factorization output")
{
    auto r = cli({"factor", "x^2 + 5v*x + 7"});
    CHECK(r.code == 0);
    CHECK(r.out == "unit: 0\nfactor: x^2 + 5v*x + 7\nghost interval: [2,5]\nexpansion: x^2 + 5v*x + 7\nrelation: Equal\n");
    auto s = cli({"factor", "x^2+4"});
    CHECK(s.out == "unit: 0\nfactor: (x + 2)^2\nexpansion: x^2 + 2v*x + 4\nrelation: NuEquivalent\n");
    auto b = cli({"factor-binomial", "x^3+6"});
    CHECK(b.out == "monomial: 0\nirreducible: x + 2\nmultiplicity: 3\nrelation: Equal\n");
}

TEST_CASE("evaluation and loci")
{
    CHECK(cli({"eval", "x^2 + 5v*x + 7", "2"}).out == "7v\n");
    CHECK(cli({"eval", "x^2 + 5v*x + 7", "6"}).out == "12\n");
    CHECK(cli({"eval", "x1 + x2 + 0", "0,0", "--mode", "layered"}).out == "0[3]\n");
    CHECK(cli({"essential", "x^2 + x + 3"}).out == "(2) essential\n(1) inessential\n(0) essential\nessential part: x^2 + 3\n");
    CHECK(cli({"csupp", "x^2 + 5v*x + 7", "2"}).out == "(1)\n(0)\n");
    CHECK(cli({"ghost", "x + 3", "3"}).out == "layer: inf\ncorner-root: true\nghost-root: true\n");
    CHECK(cli({"components", "x^2+5*x+7"}).out
          == "cell (-inf,2] exponent 0 coeff 7 layer 1\nbreakpoint 2 layer inf\ncell [2,5] exponent 1 coeff 5 layer 1\n"
             "breakpoint 5 layer inf\ncell [5,inf) exponent 2 coeff 0 layer 1\n");
    auto c = cli({"covered", "x+2", "x+1", "-1*x+2"});
    CHECK(c.out == "covered: true\ncell 0: generator 1\ncell 1: generator 0\n");
}

TEST_CASE("binomial lattice commands")
{
    auto r = cli({"reduce-binomials", "x1*x2 + 3", "x1*x2^2 + 5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("status: proper\n") == 0);
    auto i = cli({"reduce-binomials", "x + 1", "x + 2"});
    CHECK(i.out.find("status: improper") != std::string::npos);
    auto m = cli({"member", "x1*x2^2 + 5", "x1*x2 + 3", "x2 + 2"});
    CHECK(m.code == 0);
    CHECK(m.out.find("generated: true\n") == 0);
    auto n = cli({"member", "x1*x2^2 + 6", "x1*x2 + 3", "x2 + 2"});
    CHECK(n.out.find("generated: false\n") == 0);
}

TEST_CASE("principal and exchange")
{
    auto p = cli({"principal", "x+1", "x+3"});
    CHECK(p.code == 2);
    CHECK(p.out.find("generator: x + 1\n") == 0);
    auto q = cli({"principal", "x+2", "(x+2)*(x+3)"});
    CHECK(q.code == 0);
    auto e = cli({"exchange", "x^2+3*x", "3*x+4"});
    CHECK(e.out == "common: 3*x\nexchanged: x^2 + 4\n");
    CHECK(cli({"exchange", "x+1", "x+1"}).code == 1);
}

TEST_CASE("classical polynomial commands")
{
    auto f = temp_file("f.json", R"({"vars":1,"monomials":[{"exponents":[2],"coeff":[[1,0]]},)"
                                 R"({"exponents":[1],"coeff":[[1,1]]},{"exponents":[0],"coeff":[[1,0]]}]})");
    auto g = temp_file("g.json", R"({"vars":1,"monomials":[{"exponents":[1],"coeff":[[1,0]]},)"
                                 R"({"exponents":[0],"coeff":[[1,0]]}]})");
    CHECK(cli({"tropicalize", f}).out == "x^2 + -1*x + 0\n");
    CHECK(cli({"tropicalize", R"({"vars":1,"monomials":[{"exponents":[1],"coeff":[[1,0]]},{"exponents":[0],"coeff":[[2,0]]}]})"}).out
          == "x + 0\n");
    auto e = cli({"eliminate", f, g, "--at", "0"});
    CHECK(e.code == 0);
    CHECK(e.out == "p: 0\nq: x^2 + x\n");
    CHECK(cli({"eliminate", f, g, "--at", "x^2"}).code == 1);
    std::remove(f.c_str());
    std::remove(g.c_str());
}

TEST_CASE("structured output")
{
    auto r = cli({"roots", "x^2+5*x+7", "--format", "structured"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "roots");
    CHECK(j["exit"] == 0);
    CHECK(j["roots"] == nlohmann::json::array({"2", "5"}));
    auto d = nlohmann::json::parse(cli({"divide", "x^2+5*x+7", "x+9", "--format", "structured"}).out);
    CHECK(d["exit"] == 2);
}

TEST_CASE("usage errors")
{
    CHECK(cli({}).code == 3);
    CHECK(cli({"bogus"}).code == 3);
    CHECK(cli({"roots", "x +"}).code == 3);
    CHECK(cli({"roots", "x", "--mode", "tropical"}).code == 3);
    CHECK(cli({"roots", "x + 3v", "--mode", "layered"}).code == 1);
}

TEST_CASE("output is deterministic under a fixed seed")
{
    std::vector<std::string> args{"identity", "--perm", "x1 + 1", "x2", "x1*x2 + 0", "--seed", "7"};
    CHECK(cli(args).out == cli(args).out);
}
