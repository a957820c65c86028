#include <doctest.h>

#include <set>
#include <sstream>

#include "chaincode/cli.hpp"
#include "chaincode/io.hpp"
#include "chaincode/oracle.hpp"
#include "chaincode/presets.hpp"
#include "support.hpp"

using namespace testing;
using chaincode::io::Json;

namespace {

struct Run {
    int rc = -1;
    std::string out, err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    Run r;
    r.rc = cli::dispatch(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Json run_json(std::vector<std::string> args, const std::string& input = "") {
    args.push_back("--json");
    const Run r = run(args, input);
    REQUIRE_MESSAGE(r.rc == 0, r.err);
    return io::parse_json(r.out);
}

const std::string kF4 = R"({"p":2,"a":1,"m":2})";

}  // namespace

TEST_CASE("poly factor reproduces the worked factorization") {
    const Json j = run_json({"poly", "factor", "--ring", kF4, "--poly", "X^5 - b"});
    const Ring f = io::ring_from_json(j["ring"]);
    std::set<std::string> got;
    for (const auto& h : j["factors"]) got.insert(io::poly_from_json(h, f).to_string());
    const std::set<std::string> expected{io::parse_poly("X - b^2", f).to_string(),
                                         io::parse_poly("X^2 + X + b", f).to_string(),
                                         io::parse_poly("X^2 + b*X + b", f).to_string()};
    CHECK(got == expected);

    const Run table = run({"poly", "factor", "--ring", kF4, "--poly", "X^5 - b"});
    CHECK(table.rc == 0);
    CHECK(table.out.find("X^2 + X + w") != std::string::npos);
}

TEST_CASE("poly lift and period") {
    const Json j = run_json({"poly", "lift", "--preset", "gr42n5", "--factor", "X^2+X+w"});
    const Ring s = io::ring_from_json(j["ring"]);
    const Poly lift = io::poly_from_json(j["lift"], s);
    CHECK(lift == io::parse_poly("X^2 + (1+2w)X + w", s));
    CHECK(divides(lift, preset("gr42n5").a.ambient()));

    CHECK(run({"poly", "lift", "--preset", "gr42n5"}).rc == 2);
    const Run bad = run({"poly", "lift", "--preset", "gr42n5", "--factor", "X+1"});
    CHECK(bad.rc == 1);
    CHECK(bad.err.rfind("NotADivisor", 0) == 0);

    CHECK(run_json({"poly", "period", "--poly", "X^3 - 1"})["period"] == 3);
    CHECK(run_json({"poly", "period", "--preset", "gr42n2"})["period"] ==
          period(preset("gr42n2").a));
}

TEST_CASE("ring info") {
    const Json j = run_json({"ring", "info", "--preset", "gr42n5"});
    CHECK(j["name"] == "GR(4,2)");
    CHECK(j["size"] == 16);
    CHECK(j["units"] == 12);
    CHECK(io::ring_from_json(j["ring"]) == gr42());
    CHECK(io::ring_from_json(j["residue_field"]) == f4());
}

TEST_CASE("code build") {
    const Json full = run_json({"code", "build", "--g", "1", "--n", "3"});
    CHECK(full["type"] == Json::array({3, 0}));
    CHECK(full["log_cardinality"] == 6);
    CHECK(io::polycyclic_from_json(full).code() == LinearCode::full(z4(), 3));

    const WorkedExample ex = worked_example();
    const Json worked = run_json({"code", "build", "--preset", "gr42n5"});
    CHECK(worked["type"] == Json::array({1, 2}));
    CHECK(io::polycyclic_from_json(worked).code() == LinearCode(ex.printed));

    const Json from_flags =
        run_json({"code", "build", "--preset", "gr42n5", "--sgb", io::to_json(ex.sgb).dump()});
    CHECK(from_flags == worked);
}

TEST_CASE("emitted JSON is accepted back") {
    const std::vector<std::vector<std::string>> polycyclic_verbs{
        {"code", "build", "--preset", "gr42n5"},
        {"code", "sgb", "--preset", "gr42n5"},
        {"code", "dual", "--form", "annihilator", "--preset", "gr42n5"},
        {"code", "build", "--preset", "z4n3", "--g", "X-1"},
    };
    for (const auto& args : polycyclic_verbs) {
        const Json j = run_json(args);
        const PolycyclicCode c = io::polycyclic_from_json(j);
        CHECK(io::to_json(c) == [&] {
            Json k = j;
            k.erase("matrix");
            k.erase("check");
            return k;
        }());
        // Feeding the output back through stdin reproduces the code.
        CHECK(run_json({"code", "build", "--code", "-"}, j.dump())["generators"] == j["generators"]);
    }
    const std::vector<std::vector<std::string>> linear_verbs{
        {"code", "dual", "--preset", "gr42n5"},
        {"galois", "res", "--preset", "gr42n5"},
        {"galois", "trace", "--preset", "gr42n5"},
    };
    for (const auto& args : linear_verbs) {
        const Json j = run_json(args);
        CHECK(io::to_json(io::code_from_json(j)) == j);
        CHECK(run_json({"code", "type", "--code", "-"}, j.dump())["type"] == j["type"]);
    }
    const Json factors = run_json({"poly", "factor", "--preset", "gr42n5"});
    const Ring s = io::ring_from_json(factors["ring"]);
    Poly prod = Poly::constant(s.one());
    for (const auto& h : factors["factors"]) prod = prod * io::poly_from_json(h, s);
    CHECK(prod == io::poly_from_json(factors["poly"], s));
}

TEST_CASE("galois verbs") {
    // X^2 + X + 1 = (X - w)(X - w^2) over GR(4,2).
    const Json disjoint = run_json({"galois", "disjoint", "--preset", "gr42n2", "--g", "X - w"});
    CHECK(disjoint["galois_disjoint"] == true);
    CHECK(disjoint["complete_disjoint"] == true);
    CHECK(disjoint["criterion"]["complete"] == true);

    const Json worked = run_json({"galois", "disjoint", "--preset", "gr42n5"});
    CHECK(worked["galois_disjoint"] == false);
    CHECK(worked["criterion"].is_null());

    const Json orbit = run_json({"galois", "orbit", "--preset", "gr42n5"});
    CHECK(orbit["d"] == 2);
    REQUIRE(orbit["orbit"].size() == 2);
    CHECK(io::polycyclic_from_json(orbit["orbit"][1]).code() == frobenius(LinearCode(worked_example().printed), 1));

    const Json pair = run_json({"galois", "delsarte", "--preset", "gr42n3", "--g", "X-1"});
    CHECK(pair["equal"] == true);
    CHECK(io::code_from_json(pair["lhs"]) == io::code_from_json(pair["rhs"]));

    const Run unfixed = run({"galois", "delsarte", "--preset", "gr42n5"});
    CHECK(unfixed.rc == 1);
    CHECK(unfixed.err.rfind("InvalidArgument", 0) == 0);
}

TEST_CASE("verify") {
    const Run all = run({"verify", "--suite", "all", "--preset", "z4n3", "--json"});
    CHECK(all.rc == 0);
    std::istringstream lines(all.out);
    int count = 0;
    for (std::string line; std::getline(lines, line); ++count) CHECK(io::parse_json(line)["pass"] == true);
    CHECK(count == static_cast<int>(claim_registry().size()));

    const Run table = run({"verify", "--preset", "z4n3", "--suite", "P4,L4"});
    CHECK(table.rc == 0);
    CHECK(table.out.find("2 passed, 0 failed, 0 skipped") != std::string::npos);

    const Run zero = run({"verify", "--preset", "z4n3", "--suite", "P4", "--no-lattice", "--sgb", "[]"});
    CHECK(zero.rc == 0);
    CHECK(zero.out.find("skip") != std::string::npos);

    const Json list = run_json({"verify", "--list"});
    CHECK(list.size() == claim_registry().size());

    CHECK(run({"verify", "--preset", "z4n3", "--suite", "P99"}).rc == 1);
    CHECK(run({"verify"}).rc == 2);
}

TEST_CASE("exit codes and messages") {
    CHECK(run({}).rc == 2);
    CHECK(run({"frobnicate"}).rc == 2);
    CHECK(run({"code"}).rc == 2);
    CHECK(run({"code", "build", "--n", "3"}).rc == 2);
    CHECK(run({"code", "build", "--preset", "nope", "--g", "1"}).rc == 2);
    CHECK(run({"code", "dual", "--form", "hermitian", "--g", "1", "--n", "2"}).rc == 2);
    CHECK(run({"code", "build", "--help"}).rc == 0);

    const Run parse = run({"code", "build", "--ring", "{oops", "--g", "1", "--n", "3"});
    CHECK(parse.rc == 1);
    CHECK(parse.err.rfind("ParseError", 0) == 0);

    const Run domain = run({"code", "build", "--g", "X^2", "--n", "3"});
    CHECK(domain.rc == 1);
    CHECK(domain.err.rfind("NonUnitConstantTerm", 0) == 0);

    const Run two_stdin = run({"code", "build", "--code", "-", "--ring", "-"}, "{}");
    CHECK(two_stdin.rc == 2);
}

TEST_CASE("output is deterministic") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"code", "sgb", "--preset", "gr42n5"},
          std::vector<std::string>{"code", "sgb", "--preset", "gr42n5", "--json"},
          std::vector<std::string>{"poly", "factor", "--preset", "gr42n5", "--json"},
          std::vector<std::string>{"verify", "--preset", "gr42n2", "--json"}}) {
        const Run a = run(args), b = run(args);
        CHECK(a.rc == 0);
        CHECK(a.out == b.out);
    }
}
