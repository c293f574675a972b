#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "bidisc/catalog.hpp"
#include "bidisc/io.hpp"
#include "bidisc/random.hpp"

using namespace bidisc;
using io::json;

TEST_CASE("complex and matrix JSON") {
    CHECK(io::to_json(Complex(1.5, -2.0)) == json::array({1.5, -2.0}));
    CHECK(io::complex_from_json(json::array({0.25, 3.0})) == Complex(0.25, 3.0));
    CHECK(io::complex_from_json(json(2.0)) == Complex(2.0, 0.0));
    CHECK_THROWS_AS(io::complex_from_json(json("x")), InvalidInput);
    CHECK_THROWS_AS(io::complex_from_json(json::array({1.0})), InvalidInput);

    CMatrix A(2, 3);
    A << 1.0, Complex(0.0, 2.0), 3.0, 4.0, 5.0, Complex(-6.0, 0.5);
    const json j = io::to_json(A);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 3);
    CHECK(j["data"][1] == json::array({0.0, 2.0}));   // row-major
    CHECK(io::matrix_from_json(j) == A);

    json bad = j;
    bad["data"].erase(0);
    CHECK_THROWS_AS(io::matrix_from_json(bad), InvalidInput);
}

TEST_CASE("colligation round trip through JSON") {
    Rng rng(81);
    const Colligation c = random_colligation(rng, 3);
    const Colligation back = io::colligation_from_json(json::parse(io::to_json(c).dump()));
    CHECK(back.a == c.a);
    CHECK(back.D == c.D);
    CHECK(back.P1 == c.P1);
    CHECK(back.beta == c.beta);
    CHECK(back.gamma == c.gamma);

    json j = io::to_json(c);
    j["D"]["data"][0] = json::array({5.0, 0.0});
    // parsing is schema-only, unitarity is checked against the active tolerances
    const Colligation bent = io::colligation_from_json(j);
    CHECK_THROWS_AS(bent.validate(), InvalidInput);
    j.erase("gamma");
    CHECK_THROWS_AS(io::colligation_from_json(j), InvalidInput);
}

TEST_CASE("measure, Nevanlinna and representation JSON") {
    const json m = json::parse(R"({"atoms": [{"s": 0.5, "w": 1}, {"s": 0.1, "w": 2}]})");
    const DiscreteMeasure01 nu = io::measure_from_json(m);
    REQUIRE(nu.atoms.size() == 2);
    CHECK(nu.atoms[0].s == 0.1);
    CHECK(io::measure_from_json(io::to_json(nu)).atoms.size() == 2);
    CHECK_THROWS_AS(io::measure_from_json(json::parse(R"({"atoms": [{"s": 0.5, "w": -1}]})")), InvalidInput);
    CHECK_THROWS_AS(io::measure_from_json(json::parse(R"({"atoms": [{"s": 0.5}]})")), InvalidInput);

    const NevanlinnaData nd = io::nevanlinna_from_json(json::parse(R"({"c": -1, "d": 0, "atoms": [{"t": -1, "m": 3.14}]})"));
    CHECK(nd.c == -1.0);
    CHECK(nd.atoms[0].m == 3.14);

    Rng rng(82);
    const TwoVarNevRep r = random_rep(rng, 2);
    const TwoVarNevRep rb = io::rep_from_json(io::to_json(r));
    CHECK(rb.b == r.b);
    CHECK(rb.alpha == r.alpha);
    CHECK(rb.B == r.B);
    CHECK(rb.Y == r.Y);
}

TEST_CASE("generalized realization JSON") {
    const Desingularization d = desingularize(favourite_colligation(), CHI);
    const GeneralizedRealization g = io::generalized_from_json(io::to_json(d.g));
    CHECK(g.Q == d.g.Q);
    CHECK(g.Y == d.g.Y);
    CHECK(g.u_tau == d.g.u_tau);
    CHECK(g.tau.l1 == d.g.tau.l1);
}

TEST_CASE("tolerances") {
    const Tolerances t = io::parse_tolerance_spec("rank_rel=1e-8,structural=1e-6");
    CHECK(t.rank_rel == 1e-8);
    CHECK(t.structural == 1e-6);
    CHECK(t.solve_cond_max == Tolerances{}.solve_cond_max);
    CHECK_THROWS_AS(io::parse_tolerance_spec("bogus=1"), InvalidInput);
    CHECK_THROWS_AS(io::parse_tolerance_spec("rank_rel=abc"), InvalidInput);
    CHECK_THROWS_AS(io::parse_tolerance_spec("rank_rel=2"), InvalidInput);

    const Tolerances j = io::tolerances_from_json(json::parse(R"({"structural": 1e-7})"));
    CHECK(j.structural == 1e-7);
    CHECK(j.rank_rel == Tolerances{}.rank_rel);

    setenv(io::TOLERANCE_ENV, "solve_cond_max=1e10", 1);
    CHECK(io::default_tolerances().solve_cond_max == 1e10);
    unsetenv(io::TOLERANCE_ENV);
    CHECK(io::default_tolerances().solve_cond_max == Tolerances{}.solve_cond_max);
}

TEST_CASE("complex and pair parsing") {
    CHECK(io::parse_complex("1") == Complex(1.0, 0.0));
    CHECK(io::parse_complex("-1") == Complex(-1.0, 0.0));
    CHECK(io::parse_complex("i") == Complex(0.0, 1.0));
    CHECK(io::parse_complex("-i") == Complex(0.0, -1.0));
    CHECK(io::parse_complex("2.5i") == Complex(0.0, 2.5));
    CHECK(io::parse_complex("1+2i") == Complex(1.0, 2.0));
    CHECK(io::parse_complex("1e-3-0.5i") == Complex(1e-3, -0.5));
    CHECK_THROWS_AS(io::parse_complex("abc"), InvalidInput);
    CHECK_THROWS_AS(io::parse_complex(""), InvalidInput);

    const BidiscPoint p = io::parse_pair("1,-1");
    CHECK(p.l1 == Complex(1.0));
    CHECK(p.l2 == Complex(-1.0));
    CHECK_THROWS_AS(io::parse_pair("1"), InvalidInput);
}

TEST_CASE("format_double round trips") {
    for (double x : {0.1, 1.0 / 3.0, -2.5e-17, 1e300, 0.0}) CHECK(std::stod(io::format_double(x)) == x);
    CHECK(io::format_double(0.5) == "0.5");
}

TEST_CASE("read_json_file reports malformed input") {
    const std::string path = "test_io_malformed.json";
    io::write_text_file(path, "{ not json");
    CHECK_THROWS_AS(io::read_json_file(path), InvalidInput);
    CHECK_THROWS_AS(io::read_json_file("does/not/exist.json"), InvalidInput);
    std::remove(path.c_str());
}
