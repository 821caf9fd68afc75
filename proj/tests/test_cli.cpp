#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = qcd::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& s, const std::string& ending) {
    int n = 0;
    size_t pos = 0;
    while ((pos = s.find(ending, pos)) != std::string::npos) {
        ++n;
        pos += ending.size();
    }
    return n;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("k subcommand emits the expected flat JSON") {
    const auto r = run({"k", "--x", "0.25"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 10) == "{\"x\":0.25,");
    CHECK(r.out.find("\"phi\":15.745454349338") != std::string::npos);
    CHECK(r.out.find("\"K\":1.2896668993309") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("phi subcommand and csv format") {
    const auto r = run({"phi", "--R", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 7) == "R,phi\r\n");
    CHECK(r.out.find("7.4592835968117") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical output") {
    const auto a = run({"map", "--x", "0.3", "--grid", "6", "--format", "csv"});
    const auto b = run({"map", "--x", "0.3", "--grid", "6", "--format", "csv"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const auto c = run({"k", "--x", "0.125"});
    const auto d = run({"k", "--x", "0.125"});
    CHECK(c.out == d.out);
}

TEST_CASE("map csv layout: header plus exactly grid^2 rows") {
    const auto r = run({"map", "--x", "0.25", "--grid", "5", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("re_in,im_in,re_out,im_out\r\n", 0) == 0);
    CHECK(count_lines(r.out, "\r\n") == 1 + 25);
}

TEST_CASE("domain guard: gehring with K = 1") {
    const auto r = run({"gehring", "--K", "1.0"});
    CHECK(r.code == 1);
    CHECK(r.err.find("K must exceed 1") != std::string::npos);
}

TEST_CASE("usage errors carry help text") {
    const auto r = run({"k", "--bogus", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("usage error") != std::string::npos);
    CHECK(r.err.find("--x") != std::string::npos);

    const auto r2 = run({"kra", "--z1", "nope", "--z2", "0,0"});
    CHECK(r2.code == 1);
    CHECK(r2.err.find("--z1") != std::string::npos);

    const auto r3 = run({});
    CHECK(r3.code == 1);
}

TEST_CASE("kra subcommand computes both metrics") {
    const auto r = run({"kra", "--z1", "0,0", "--z2", "-0.25,0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"rho\":0.25") != std::string::npos);
    CHECK(r.out.find("\"kra\":0.1271919837283") != std::string::npos);
    CHECK(r.out.find("\"hyperbolic\":0.5108256237659") != std::string::npos);
}

TEST_CASE("gehring subcommand round trip") {
    const auto r = run({"gehring", "--K", "1.2896668993309636"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"h\":0.510825623") != std::string::npos);
    CHECK(r.out.find("\"x_star\":0.2499999") != std::string::npos);
}

TEST_CASE("beltrami subcommand summarizes the field") {
    const auto r = run({"beltrami", "--x", "0.25", "--samples", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"k_teichmuller\":0.126510") != std::string::npos);
    CHECK(r.out.find("\"samples\":12") != std::string::npos);

    const auto rc =
        run({"beltrami", "--x", "0.25", "--samples", "5", "--format", "csv"});
    CHECK(rc.code == 0);
    CHECK(rc.out.rfind("z_re,z_im,mu_re,mu_im,q_re,q_im,abs_mu\r\n", 0) == 0);
    CHECK(count_lines(rc.out, "\r\n") == 1 + 5);
}

TEST_CASE("verify suites pass") {
    const auto r = run({"verify", "--suite", "modulus"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verification passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    const auto r2 = run({"verify", "--suite", "metrics"});
    CHECK(r2.code == 0);
    CHECK(r2.out.find("verification passed") != std::string::npos);
}

TEST_CASE("tolerance can come from the environment") {
    setenv("QCD_TOL", "1e-7", 1);
    const auto r = run({"k", "--x", "0.25"});
    unsetenv("QCD_TOL");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"K\":1.2896668993309") != std::string::npos);
}

TEST_CASE("output file and svg are written") {
    const std::string path = "cli_test_out.json";
    const auto r = run({"k", "--x", "0.5", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string content((std::istreambuf_iterator<char>(f)),
                        std::istreambuf_iterator<char>());
    CHECK(content.find("\"K\":1.7151356110188") != std::string::npos);
    std::remove(path.c_str());

    const std::string svg = "cli_test_out.svg";
    const auto r2 = run({"map", "--x", "0.25", "--grid", "3", "--svg", svg,
                         "--format", "csv"});
    CHECK(r2.code == 0);
    std::ifstream sf(svg);
    REQUIRE(sf.good());
    std::string sc((std::istreambuf_iterator<char>(sf)),
                   std::istreambuf_iterator<char>());
    CHECK(sc.rfind("<?xml", 0) == 0);
    CHECK(sc.find("</svg>") != std::string::npos);
    std::remove(svg.c_str());
}

} // TEST_SUITE
