#include <doctest.h>

#include "demroots/errors.hpp"
#include "demroots/io.hpp"
#include "demroots/verify.hpp"

using namespace demroots;

namespace {

IntVec v(std::initializer_list<long long> xs) {
    IntVec r;
    for (long long x : xs) r.emplace_back(x);
    return r;
}

const char* kRankOneText =
    "# fixture\n"
    "kind: rank-one\n"
    "rank: 3\n"
    "generator: 1 1 0\n"
    "generator: 0 0 1\n"
    "alpha: 2 0 0\n"
    "alpha_dual: 1 0 0\n"
    "box: 5\n";

}  // namespace

TEST_CASE("parsing the line format") {
    InputDescription d = parse_input_text(kRankOneText);
    CHECK(d.kind == InputKind::RankOne);
    CHECK(d.rank == 3);
    REQUIRE(d.generators.size() == 2);
    CHECK(d.generators[0] == v({1, 1, 0}));
    REQUIRE(d.alpha.has_value());
    CHECK(*d.alpha == v({2, 0, 0}));
    REQUIRE(d.box.has_value());
    CHECK(*d.box == 5);
}

TEST_CASE("serialize-parse round trip") {
    InputDescription d = parse_input_text(kRankOneText);
    CHECK(parse_input_text(serialize_input(d)) == d);

    InputDescription horo;
    horo.kind = InputKind::Horospherical;
    horo.rank = 2;
    horo.generators = {v({1, 0}), v({1, 1})};
    horo.coroots = {v({1, -1})};
    CHECK(parse_input_text(serialize_input(horo)) == horo);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_input_text("rank: 2\ngenerator: 1 0\n"), ParseError);  // missing kind
    CHECK_THROWS_AS(parse_input_text("kind: cone\ngenerator: 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_input_text("kind: cone\nrank: 2\ngenerator: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_input_text("kind: widget\nrank: 2\n"), ParseError);
    CHECK_THROWS_AS(parse_input_text("kind: rank-one\nrank: 2\ngenerator: 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_input_text("kind: cone\nrank: 2\ngenerator: 1 0\nbox: 99\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_input_text("kind: cone\nrank: 2\ngenerator: 1 0\nalpha: 1 0\n"),
                    ParseError);
}

TEST_CASE("the echoed input section reproduces the description") {
    InputDescription d = parse_input_text(kRankOneText);
    Report rep = cmd_classify(d, std::nullopt);
    std::string echoed = rep.json["input_text"].get<std::string>();
    CHECK(parse_input_text(echoed) == d);
}

TEST_CASE("dual report on the plane orthant") {
    InputDescription d;
    d.kind = InputKind::Cone;
    d.rank = 2;
    d.generators = {v({1, 0}), v({0, 1})};
    Report rep = cmd_dual(d);
    CHECK(rep.json["result"]["dual_rays"].size() == 2);
    CHECK(rep.human.find("dual rays") != std::string::npos);
    // degenerate input: a line is not strictly convex after dualization
    InputDescription line = d;
    line.generators = {v({1, 0}), v({-1, 0})};
    CHECK_THROWS_AS(cmd_dual(line), StructureError);
}

TEST_CASE("roots report and dominance filter") {
    InputDescription d;
    d.kind = InputKind::ToricMonoid;
    d.rank = 2;
    d.generators = {v({1, -1}), v({0, -2})};
    d.coroots = {v({1, 0})};
    d.box = 4;
    Report rep = cmd_roots(d, true, std::nullopt);
    const auto& groups = rep.json["result"]["groups"];
    std::size_t total = 0;
    for (const auto& g : groups) total += g["roots"].size();
    CHECK(total == 5);
    CHECK(rep.json["box"] == "4");
}

TEST_CASE("classify reports agree across the two engines on the fixture") {
    InputDescription rank_one = parse_input_text(kRankOneText);
    InputDescription horo;
    horo.kind = InputKind::Horospherical;
    horo.rank = 3;
    horo.generators = {v({1, 1, 0}), v({0, 0, 1})};
    horo.coroots = {v({1, 0, 0})};
    horo.box = 5;
    Report a = cmd_classify(rank_one, std::nullopt);
    Report b = cmd_classify(horo, std::nullopt);
    CHECK(a.json["result"]["horizontal_weights"] == b.json["result"]["horizontal_weights"]);
}

TEST_CASE("act report") {
    InputDescription d;
    d.kind = InputKind::ToricMonoid;
    d.rank = 2;
    d.generators = {v({1, 0}), v({0, 1})};
    ActRequest req;
    req.root = v({-1, 2});
    req.element = AlgebraElement::monomial(v({3, 1}));
    req.parameter = 1;
    Report rep = cmd_act(d, req);
    CHECK(rep.json["result"]["derivative"][0]["coefficient"] == "3");
    CHECK(rep.json["result"]["nilpotency"][0]["nilpotency_index"] == "4");
    // an invalid root is a domain error (exit code 2 at the CLI)
    req.root = v({1, 1});
    CHECK_THROWS_AS(cmd_act(d, req), DomainError);
}

TEST_CASE("reports are deterministic") {
    InputDescription d = parse_input_text(kRankOneText);
    std::string a = cmd_classify(d, std::nullopt).json.dump(2);
    std::string b = cmd_classify(d, std::nullopt).json.dump(2);
    CHECK(a == b);
    std::string v1 = verify_to_json(run_builtin_fixture_suite()).dump(2);
    std::string v2 = verify_to_json(run_builtin_fixture_suite()).dump(2);
    CHECK(v1 == v2);
}
