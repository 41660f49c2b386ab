#include <doctest.h>

#include <fstream>
#include <sstream>

#include "tvx/jobs.hpp"
#include "tvx/json_io.hpp"
#include "tvx/poly_expr.hpp"
#include "tvx/svg.hpp"

using namespace tvx;

TEST_CASE("expression parsing") {
    ParsedPoly p = parse_poly("1 + x^3");
    CHECK(p.formal == 'x');
    REQUIRE(p.degree() == 3);
    CHECK(p.coeffs[0].is_one());
    CHECK(p.coeffs[1].is_zero());
    CHECK(p.coeffs[3].is_one());

    ParsedPoly b = parse_poly("(1+s*x)^3");
    REQUIRE(b.degree() == 3);
    for (int j = 0; j <= 3; ++j) {
        CoeffPolynomial expect(Monomial::var(VarId::s(), j), Rational(binomial(3, j)));
        CHECK(b.coeffs[j] == expect);
    }

    ParsedPoly full = parse_poly("1+p[1,1]*x+p[1,2]*x^2+p[1,3]*x^3");
    CHECK(full.coeffs[2] == pvar(1, 2));

    CHECK_THROWS_AS(parse_poly("2 + x"), ParseError);
    CHECK_THROWS_AS(parse_poly("1 + x*y"), ParseError);
    CHECK_THROWS_AS(parse_poly("1 + "), ParseError);
    CHECK_THROWS_AS(parse_poly("1 + p[3,1]*x"), ParseError);
    try {
        parse_poly("1 + @");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("pretty print round trip") {
    for (const char* src : {"1 + x^3", "(1+s*x)^3", "1+p[1,1]*x+p[1,2]*x^2+p[1,3]*x^3",
                            "1 + (p[2,1]+p[2,2])*y + p[2,2]^2*y^2", "1"}) {
        ParsedPoly p = parse_poly(src);
        std::string printed = pretty_print(p);
        ParsedPoly q = parse_poly(printed);
        CHECK(p.formal == q.formal);
        CHECK(p.coeffs == q.coeffs);
        CHECK(pretty_print(q) == printed);
    }
}

TEST_CASE("jobs are deterministic") {
    JobSpec job;
    job.command = "wallfn";
    job.a = 2;
    job.b = 1;
    job.p1 = "1+p[1,1]*x+p[1,2]*x^2+p[1,3]*x^3";
    job.p2 = "1+p[2,1]*y";
    job.order = 9;
    std::ostringstream out1, out2, err;
    CHECK(run_job(job, out1, err) == 0);
    CHECK(run_job(job, out2, err) == 0);
    CHECK(out1.str() == out2.str());
    CHECK(out1.str().find("schema_version") != std::string::npos);
}

TEST_CASE("wallfn output matches the reference coefficients") {
    JobSpec job;
    job.command = "wallfn";
    job.a = 2;
    job.b = 1;
    job.p1 = "1+p[1,1]*x+p[1,2]*x^2+p[1,3]*x^3";
    job.p2 = "1+p[2,1]*y";
    job.order = 9;
    std::ostringstream out, err;
    REQUIRE(run_job(job, out, err) == 0);
    Json j = Json::parse(out.str());
    CHECK(j["schema_version"] == "1");
    REQUIRE(j["coefficients"].size() == 3);
    CHECK(j["coefficients"][0]["k"] == 1);
    // p[1,2] * p[2,1]
    CHECK(j["coefficients"][0]["value"][0]["monomial"].dump() == R"([["p[1,2]",1],["p[2,1]",1]])");
}

TEST_CASE("check command exits zero on good data") {
    JobSpec job;
    job.command = "check";
    job.p1 = "1+x^3";
    job.p2 = "1+y^2";
    job.order = 8;
    std::ostringstream out, err;
    CHECK(run_job(job, out, err) == 0);
    CHECK(out.str().find("tight-vs-oracle: ok") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    JobSpec job;
    job.command = "wallfn";
    job.a = 2;
    job.b = 1;
    job.p1 = "2+x";
    job.p2 = "1+y";
    std::ostringstream out, err;
    CHECK(run_job(job, out, err) == 2);
    job.p1 = "";
    CHECK(run_job(job, out, err) == 2);
    JobSpec bad;
    bad.command = "nonsense";
    CHECK(run_job(bad, out, err) == 2);
}

TEST_CASE("greedy job") {
    JobSpec job;
    job.command = "greedy";
    job.a1 = -2;
    job.a2 = -3;
    job.ell1 = 2;
    job.ell2 = 2;
    std::ostringstream out, err;
    REQUIRE(run_job(job, out, err) == 0);
    Json j = Json::parse(out.str());
    REQUIRE(j["element"].size() == 1);
    CHECK(j["element"][0]["x1"] == 2);
    CHECK(j["element"][0]["x2"] == 3);
}

TEST_CASE("svg rendering smoke") {
    DyckPath p(7, 4);
    Grading g{{2, 2, 0, 0, 0, 0, 0}, {0, 0, 3, 3}};
    std::string svg = render_grading_svg(p, g);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("#4169e1") != std::string::npos);  // blue tiles present
    CHECK(svg.find("#d0342c") != std::string::npos);  // red tiles present

    JobSpec job;
    job.command = "render";
    job.kind = "diagram";
    job.method = "oracle";
    job.p1 = "1+x^2";
    job.p2 = "1+y^2";
    job.order = 6;
    job.format = "svg";
    std::ostringstream out, err;
    REQUIRE(run_job(job, out, err) == 0);
    CHECK(out.str().find("<svg") == 0);
}

TEST_CASE("file outputs are byte-identical across runs") {
    JobSpec job;
    job.command = "scatter";
    job.method = "oracle";
    job.p1 = "1+p[1,1]*x+p[1,2]*x^2";
    job.p2 = "1+p[2,1]*y";
    job.order = 8;
    job.out_path = "/tmp/tvx_det_a.json";
    REQUIRE(run_job(job) == 0);
    job.out_path = "/tmp/tvx_det_b.json";
    REQUIRE(run_job(job) == 0);
    auto slurp = [](const char* p) {
        std::ifstream f(p, std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    std::string a = slurp("/tmp/tvx_det_a.json"), b = slurp("/tmp/tvx_det_b.json");
    CHECK(!a.empty());
    CHECK(a == b);
}

TEST_CASE("grading and broken-line dumps") {
    JobSpec job;
    job.command = "wallfn";
    job.a = 2;
    job.b = 1;
    job.p1 = "1+p[1,1]*x+p[1,2]*x^2+p[1,3]*x^3";
    job.p2 = "1+p[2,1]*y";
    job.order = 9;
    job.with_gradings = true;
    std::ostringstream out, err;
    REQUIRE(run_job(job, out, err) == 0);
    Json j = Json::parse(out.str());
    REQUIRE(j["tight_gradings"].size() == 3);
    CHECK(j["tight_gradings"][0]["domain"].dump() == "[3,1]");
    REQUIRE(j["tight_gradings"][0]["gradings"].size() == 1);
    CHECK(j["tight_gradings"][0]["gradings"][0]["vertical"].dump() == "[2]");
    CHECK(j["tight_gradings"][0]["gradings"][0]["weight"].size() == 1);

    JobSpec tj;
    tj.command = "theta";
    tj.m0x = -1;
    tj.m0y = 0;
    tj.p1 = "1+x^2";
    tj.p2 = "1+y^2";
    tj.order = 6;
    tj.with_lines = true;
    std::ostringstream tout, terr;
    REQUIRE(run_job(tj, tout, terr) == 0);
    Json t = Json::parse(tout.str());
    // x[1,0] = x1^{-1}(1 + x2^2): two broken lines
    CHECK(t["theta"].size() == 2);
    REQUIRE(t["broken_lines"].size() == 2);
    CHECK(t["broken_lines"][0]["bends"].size() + t["broken_lines"][1]["bends"].size() == 1);
}

TEST_CASE("specialized seed from expressions") {
    JobSpec job;
    job.command = "clustervar";
    job.k = 4;
    job.p1 = "1+x^2";
    job.p2 = "1+y^2";
    std::ostringstream out, err;
    REQUIRE(run_job(job, out, err) == 0);
    Json j = Json::parse(out.str());
    CHECK(j["prevariable"].size() > 1);
}
