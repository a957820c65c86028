#include <doctest.h>

#include <random>

#include "chaincode/io.hpp"
#include "chaincode/oracle.hpp"
#include "chaincode/presets.hpp"
#include "support.hpp"

using namespace testing;
using chaincode::io::Json;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvariantViolation;
}

Poly random_poly(const Ring& r, std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<std::uint64_t> elem(0, r.size() - 1);
    std::uniform_int_distribution<int> deg(-1, max_degree);
    Vec c;
    for (int i = 0, d = deg(rng); i <= d; ++i) c.push_back(r.from_index(elem(rng)));
    return Poly(r, c);
}

}  // namespace

TEST_CASE("ring descriptors") {
    const Ring s = gr42();
    CHECK(io::ring_from_json(io::to_json(s)) == s);
    CHECK(io::to_json(s).dump() == R"({"p":2,"a":2,"m":2,"modulus":[1,1,1]})");
    CHECK(io::ring_from_json(io::parse_json(R"({"p":2,"a":2,"m":1})")) == z4());
    CHECK(io::ring_from_json(io::parse_json(R"({"p":2,"a":2,"m":2,"modulus":[3,3,1]})")).spec().modulus ==
          std::vector<std::int64_t>{3, 3, 1});

    CHECK(kind_of([] { io::ring_from_json(io::parse_json(R"({"p":2,"a":2})")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { io::ring_from_json(io::parse_json(R"({"p":2,"a":2,"m":2,"k":1})")); }) ==
          ErrorKind::ParseError);
    CHECK(kind_of([] { io::ring_from_json(io::parse_json(R"({"p":2,"a":"2","m":2})")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { io::ring_from_json(io::parse_json(R"({"p":4,"a":1,"m":1})")); }) == ErrorKind::NonPrime);
    CHECK(kind_of([] { io::ring_from_json(io::parse_json(R"({"p":2,"a":2,"m":2,"modulus":[1,0,1]})")); }) ==
          ErrorKind::ReducibleModulus);
    CHECK(kind_of([] { io::ring_from_json(io::parse_json(R"({"p":2,"a":2,"m":2,"e":2})")); }) ==
          ErrorKind::UnsupportedExtension);
    CHECK(kind_of([] { io::parse_json("{\"p\":"); }) == ErrorKind::ParseError);
}

TEST_CASE("element and vector encodings") {
    const Ring s = gr42();
    for (const auto& x : s.elements()) {
        CHECK(io::element_from_json(io::to_json(x), s) == x);
        CHECK(io::element_from_json(Json(x.to_string()), s) == x);
    }
    CHECK(io::element_from_json(Json(7), s) == s.from_int(3));
    CHECK(io::element_from_json(Json(-1), s) == s.from_int(3));
    CHECK(io::element_from_json(io::parse_json("[5,-1]"), s) == el(s, {1, 3}));
    CHECK(kind_of([&] { io::element_from_json(io::parse_json("[1]"), s); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { io::element_from_json(Json("X+1"), s); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { io::element_from_json(Json(1.5), s); }) == ErrorKind::ParseError);

    const Vec v{s.one(), s.generator(), s.zero()};
    CHECK(io::vec_from_json(io::to_json(v), s) == v);
}

TEST_CASE("polynomial text") {
    const Ring s = gr42();
    const RingElem w = s.generator();
    const Poly x = Poly::x(s);

    const Poly f = io::parse_poly("X^5 + 2*X^3 + 2*w^2*X + w", s);
    CHECK(f == Poly::monomial(s.one(), 5) + s.from_int(2) * Poly::monomial(s.one(), 3) +
                   Poly::monomial(s.from_int(2) * w * w, 1) + Poly::constant(w));

    CHECK(io::parse_poly("2wX", s) == io::parse_poly("2*w*X", s));
    CHECK(io::parse_poly("(X+1)(X-1)", s) == x * x - Poly::constant(s.one()));
    CHECK(io::parse_poly("-X^2", s) == -(x * x));
    CHECK(io::parse_poly("X - -1", s) == x + Poly::constant(s.one()));
    CHECK(io::parse_poly("α + β + alpha + beta + b", s) == Poly::constant(s.from_int(5) * w));
    CHECK(io::parse_poly("x^0", s).is_one());
    CHECK(io::parse_poly("  4 ", s).is_zero());
    CHECK(io::parse_poly("(X+w)^3", s) == (x + Poly::constant(w)) * (x + Poly::constant(w)) * (x + Poly::constant(w)));

    for (const char* bad : {"", "X^", "X^-1", "(X", "X)", "y", "X +", "2**X", "X^99999999", "99999999999999999999"})
        CHECK_MESSAGE(kind_of([&] { io::parse_poly(bad, s); }) == ErrorKind::ParseError, bad);

    CHECK(io::poly_from_json(Json("X+w"), s) == x + Poly::constant(w));
    CHECK(io::poly_from_json(io::parse_json("[[0,1],[1,0]]"), s) == x + Poly::constant(w));
}

TEST_CASE("polynomials round-trip through text and JSON") {
    std::mt19937 rng(20261016);
    for (const Ring& r : {z4(), gr42(), f4(), Ring::create(3, 2, 2), Ring::create(2, 3, 3)})
        for (int trial = 0; trial < 200; ++trial) {
            const Poly f = random_poly(r, rng, 6);
            CHECK(io::parse_poly(f.to_string(), r) == f);
            CHECK(io::poly_from_json(io::to_json(f), r) == f);
        }
    const WorkedExample ex = worked_example();
    for (const Poly& f : {ex.g0, ex.g1, ex.g2, ex.a.ambient()}) CHECK(io::parse_poly(f.to_string(), ex.ring) == f);
}

TEST_CASE("code descriptors") {
    const WorkedExample ex = worked_example();
    const LinearCode code(ex.printed);
    const Json j = io::to_json(code);
    CHECK(j["type"] == Json::array({1, 2}));
    CHECK(j["log_cardinality"] == 8);
    CHECK(io::code_from_json(j) == code);
    CHECK(io::code_from_json(io::parse_json(j.dump())) == code);

    Json bare = j;
    bare.erase("ring");
    CHECK(io::code_from_json(bare, ex.ring) == code);
    CHECK(kind_of([&] { io::code_from_json(bare); }) == ErrorKind::ParseError);

    Json typo = j;
    typo["generator"] = typo["generators"];
    CHECK(kind_of([&] { io::code_from_json(typo); }) == ErrorKind::ParseError);

    const Json zero = io::parse_json(R"({"ring":{"p":2,"a":2,"m":1},"n":3,"generators":[]})");
    CHECK(io::code_from_json(zero).is_zero());
    CHECK(kind_of([] {
              io::code_from_json(io::parse_json(R"({"ring":{"p":2,"a":2,"m":1},"n":3,"generators":[[1,0]]})"));
          }) == ErrorKind::LengthMismatch);
}

TEST_CASE("polycyclic descriptors") {
    const WorkedExample ex = worked_example();
    const PolycyclicCode c = from_sgb(ex.sgb, ex.a);
    const Json j = io::to_json(c);
    const PolycyclicCode back = io::polycyclic_from_json(io::parse_json(j.dump()));
    CHECK(back.code() == c.code());
    CHECK(back.a() == c.a());
    CHECK(back.sgb() == c.sgb());

    SUBCASE("every lattice code round-trips") {
        for (const char* name : {"z4n3", "gr42n2", "gr42n3"}) {
            const Preset p = preset(name);
            const FactorSet fs = hensel_lift_factors(p.a.ambient());
            for (const auto& pt : lattice(fs, p.a)) {
                const PolycyclicCode r = io::polycyclic_from_json(io::to_json(pt.code));
                CHECK(r.code() == pt.code.code());
                CHECK(r.a() == p.a);
            }
        }
    }

    SUBCASE("associate vector derived from g") {
        const PolycyclicCode d = io::polycyclic_from_json(io::parse_json(R"({"ring":{"p":2,"a":2,"m":1},"n":3,"g":"X-1"})"));
        CHECK(d.a() == AssociateVector(vec_int(z4(), {1, 0, 0})));
        CHECK(d.code().log_cardinality() == 4);
    }

    SUBCASE("sources must agree") {
        Json both = j;
        both["g"] = "1";
        CHECK(kind_of([&] { io::polycyclic_from_json(both); }) == ErrorKind::InvalidArgument);
        Json consistent = j;
        consistent.erase("sgb");
        CHECK(io::polycyclic_from_json(consistent).code() == c.code());
    }

    SUBCASE("malformed") {
        Json none = j;
        none.erase("sgb");
        none.erase("generators");
        CHECK(kind_of([&] { io::polycyclic_from_json(none); }) == ErrorKind::ParseError);
        Json no_a = j;
        no_a.erase("a");
        CHECK(kind_of([&] { io::polycyclic_from_json(no_a); }) == ErrorKind::ParseError);
        Json bad_lambda = j;
        bad_lambda["sgb"][0]["lambda"] = 2;
        CHECK(kind_of([&] { io::polycyclic_from_json(bad_lambda); }) == ErrorKind::InvalidArgument);
        Json short_a = j;
        short_a["a"].erase(4);
        CHECK(kind_of([&] { io::polycyclic_from_json(short_a); }) == ErrorKind::LengthMismatch);
    }

    SUBCASE("zero code") {
        Json zero = j;
        zero["sgb"] = Json::array();
        zero.erase("generators");
        CHECK(io::polycyclic_from_json(zero).code().is_zero());
    }
}
