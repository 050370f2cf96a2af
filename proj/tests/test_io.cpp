#include <monowalk/io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

using namespace monowalk;
using Catch::Matchers::ContainsSubstring;

namespace {

LpInstance demo_instance() {
    return LpInstance{
        mat_of_ints({{2, 1, 0, 1, 2, 2, 1}, {0, 1, 1, 1, 0, 1, 0}, {2, 2, 1, 0, 0, 1, 1}}),
        vec_of_ints({0, 0, 0}), vec_of_ints({-5, -5, 0, -5, 0, -5, 0}),
        vec_of_ints({0, 0, 9, 0, 9, 0, 9}), vec_of_ints({1, 1, -1, 1, -1, 1, -1})};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("instance files round-trip bit-exactly") {
    InstanceFile f;
    f.inst = demo_instance();
    f.x0 = vec_of_ints({-2, -5, 9, -1, 4, -3, 8});
    (*f.x0)[0] = Rat(-1, 2);
    f.mode = "circuit";

    InstanceFile g = parse_instance(serialize_instance(f));
    CHECK(g.inst.a == f.inst.a);
    CHECK(g.inst.b == f.inst.b);
    CHECK(g.inst.l == f.inst.l);
    CHECK(g.inst.u == f.inst.u);
    CHECK(g.inst.w == f.inst.w);
    REQUIRE(g.x0.has_value());
    CHECK(*g.x0 == *f.x0);
    REQUIRE(g.mode.has_value());
    CHECK(*g.mode == "circuit");

    f.x0.reset();
    f.mode.reset();
    g = parse_instance(serialize_instance(f));
    CHECK_FALSE(g.x0.has_value());
    CHECK_FALSE(g.mode.has_value());

    // serialization is itself stable
    std::string text = serialize_instance(f);
    CHECK(serialize_instance(parse_instance(text)) == text);
}

TEST_CASE("certificate files round-trip every phase") {
    WalkCertificate c;
    c.mode = WalkMode::Graver;
    c.start = vec_of_ints({0, 0});
    c.steps.push_back({vec_of_ints({1, -1}), Rat(5, 4), Phase::Decay, Rat(5, 4)});
    c.steps.push_back({Vec{Rat(1, 3), Rat(0)}, Rat(3), Phase::Descent, Rat(9, 4)});
    c.steps.push_back({vec_of_ints({0, 1}), Rat(2), Phase::Trivial, Rat(17, 4)});
    c.terminal = Vec{Rat(9, 4), Rat(2)};

    WalkCertificate d = parse_certificate(serialize_certificate(c));
    CHECK(d.mode == WalkMode::Graver);
    CHECK(d.start == c.start);
    REQUIRE(d.steps.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        CAPTURE(k);
        CHECK(d.steps[k].direction == c.steps[k].direction);
        CHECK(d.steps[k].multiplier == c.steps[k].multiplier);
        CHECK(d.steps[k].phase == c.steps[k].phase);
        CHECK(d.steps[k].objective_after == c.steps[k].objective_after);
    }
    CHECK(d.terminal == c.terminal);
}

TEST_CASE("decompose files round-trip arbitrary precision values") {
    DecomposeFile f;
    f.a = Mat(1, 2);
    f.a.at(0, 0) = Rat(int_from_string("12345678901234567890123456789012345678901234567890"));
    f.a.at(0, 1) = Rat(-1);
    f.h = Vec{Rat(Int(1), Int(7919)), Rat(int_from_string("99999999999999999999999999"))};

    DecomposeFile g = parse_decompose(serialize_decompose(f));
    CHECK(g.a == f.a);
    CHECK(g.h == f.h);
}

TEST_CASE("raw JSON integers are accepted alongside strings") {
    InstanceFile f = parse_instance(R"({
        "A": [[1, "2"]], "b": [0], "l": [0, -1], "u": ["3", 4], "w": [1, 1],
        "x0": ["1/2", 0]
    })");
    CHECK(f.inst.a == mat_of_ints({{1, 2}}));
    CHECK(f.inst.u == vec_of_ints({3, 4}));
    REQUIRE(f.x0.has_value());
    CHECK((*f.x0)[0] == Rat(1, 2));
}

TEST_CASE("parse errors carry an anchored message") {
    CHECK_THROWS_MATCHES(parse_instance("{ bad"), parse_error,
                         Catch::Matchers::MessageMatches(ContainsSubstring("line 1")));
    CHECK_THROWS_MATCHES(parse_instance("[1, 2]"), parse_error,
                         Catch::Matchers::MessageMatches(ContainsSubstring("expected an object")));
    CHECK_THROWS_MATCHES(parse_instance(R"({"b": [0]})"), parse_error,
                         Catch::Matchers::MessageMatches(ContainsSubstring("missing key 'A'")));
    CHECK_THROWS_MATCHES(
        parse_instance(R"({"A": [["1/2"]], "b": [0], "l": [0], "u": [1], "w": [1]})"),
        parse_error, Catch::Matchers::MessageMatches(ContainsSubstring("expected an integer")));
    CHECK_THROWS_MATCHES(
        parse_instance(R"({"A": [[1]], "b": [0], "l": [2], "u": [1], "w": [1]})"), parse_error,
        Catch::Matchers::MessageMatches(ContainsSubstring("instance")));
    CHECK_THROWS_MATCHES(
        parse_instance(R"({"A": [[1]], "b": [0], "l": [0], "u": [1], "w": [1], "x0": [0, 0]})"),
        parse_error,
        Catch::Matchers::MessageMatches(ContainsSubstring("key 'x0': dimension mismatch")));
    CHECK_THROWS_MATCHES(
        parse_instance(
            R"({"A": [[1]], "b": [0], "l": [0], "u": [1], "w": [1], "mode": "steep"})"),
        parse_error,
        Catch::Matchers::MessageMatches(ContainsSubstring("expected \"circuit\" or \"graver\"")));
    CHECK_THROWS_MATCHES(parse_instance(R"({"A": 7, "b": [0], "l": [0], "u": [1], "w": [1]})"),
                         parse_error,
                         Catch::Matchers::MessageMatches(ContainsSubstring("a list of rows")));
    CHECK_THROWS_MATCHES(
        parse_instance(R"({"A": [[1], [1, 2]], "b": [0], "l": [0], "u": [1], "w": [1]})"),
        parse_error, Catch::Matchers::MessageMatches(ContainsSubstring("equally long")));

    CHECK_THROWS_MATCHES(
        parse_certificate(R"({"mode": "circuit", "start": [0], "steps": 3, "terminal": [0]})"),
        parse_error,
        Catch::Matchers::MessageMatches(ContainsSubstring("key 'steps': expected a list")));
    CHECK_THROWS_MATCHES(
        parse_certificate(R"({"mode": "circuit", "start": [0],
                              "steps": [{"multiplier": "1", "phase": "decay",
                                         "objective_after": "0"}],
                              "terminal": [0]})"),
        parse_error,
        Catch::Matchers::MessageMatches(ContainsSubstring("missing key 'direction'")));
    CHECK_THROWS_MATCHES(
        parse_certificate(R"({"mode": "circuit", "start": [0],
                              "steps": [{"direction": ["1"], "multiplier": "1",
                                         "phase": "sideways", "objective_after": "0"}],
                              "terminal": [0]})"),
        parse_error, Catch::Matchers::MessageMatches(ContainsSubstring("step 0 phase")));

    CHECK_THROWS_MATCHES(parse_decompose(R"({"A": [[1, -1]], "h": ["1"]})"), parse_error,
                         Catch::Matchers::MessageMatches(
                             ContainsSubstring("key 'h': dimension mismatch")));
    CHECK_THROWS_MATCHES(parse_decompose(R"({"A": [[1]], "h": ["1/0"]})"), parse_error,
                         Catch::Matchers::MessageMatches(ContainsSubstring("key 'h' entry 0")));
}

TEST_CASE("the shipped data files parse to the demo fixtures") {
    std::string dir(MONOWALK_DATA_DIR);

    DecomposeFile d = parse_decompose(slurp(dir + "/example1.json"));
    CHECK(d.a == demo_instance().a);
    CHECK(d.h == vec_of_ints({2, 5, -9, 1, -4, 3, -8}));

    InstanceFile f = parse_instance(slurp(dir + "/example2.json"));
    CHECK(f.inst.a == demo_instance().a);
    CHECK(f.inst.w == demo_instance().w);
    REQUIRE(f.x0.has_value());
    CHECK(*f.x0 == vec_of_ints({-2, -5, 9, -1, 4, -3, 8}));
    REQUIRE(f.mode.has_value());
    CHECK(*f.mode == "circuit");

    WalkCertificate c = parse_certificate(slurp(dir + "/example2_walk.json"));
    CHECK(c.mode == WalkMode::Circuit);
    CHECK(c.start == *f.x0);
    REQUIRE(c.steps.size() == 4);
    CHECK(c.steps[0].multiplier == Rat(5, 4));
    CHECK(c.steps[1].multiplier == Rat(1));
    CHECK(c.steps[2].multiplier == Rat(1));
    CHECK(c.steps[3].multiplier == Rat(1));
    CHECK(c.terminal == Vec(7, Rat(0)));
}
