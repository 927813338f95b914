#include <doctest.h>

#include "netgeom/io.hpp"
#include "test_support.hpp"

using namespace netgeom;
using netgeom::io::json;

namespace {

ErrorKind arrangement_error(const char* doc) {
    try {
        io::parse_arrangement(doc);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("document accepted");
    return ErrorKind::InvalidArgument;
}

ErrorKind selection_error(const char* doc) {
    try {
        io::parse_selection(doc);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("document accepted");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("round12") {
    CHECK(io::round12(0.1 + 0.2) == 0.3);
    CHECK(io::round12(1.0 / 3.0) == 0.333333333333);
    CHECK(io::round12(-0.0) == 0.0);
    CHECK_FALSE(std::signbit(io::round12(-0.0)));
    CHECK(io::round12(123456789012345.0) == 123456789012000.0);
    CHECK(io::dump(json(io::round12(0.1 + 0.2))) == "0.3\n");
}

TEST_CASE("labels are written 1-based and sorted") {
    RegionLabel l = RegionLabel{}.with(2).with(0);
    CHECK(io::label_to_json(l) == json::parse("[1, 3]"));
    CHECK(io::label_to_json(RegionLabel{}) == json::array());

    const Selection s{3, {RegionLabel{}.with(1), RegionLabel{}, RegionLabel{}.with(0).with(2), RegionLabel{}.with(0)}};
    CHECK(io::to_json(s) == json::parse(R"({"universe": 3, "selected": [[], [1], [1, 3], [2]]})"));
}

TEST_CASE("dump sorts keys and ends with a newline") {
    const json j = {{"b", 1}, {"a", {2, 3}}};
    CHECK(io::dump(j) == "{\n  \"a\": [\n    2,\n    3\n  ],\n  \"b\": 1\n}\n");
}

TEST_CASE("arrangement round trip preserves the regions") {
    testing::Rng rng(89);
    for (int trial = 0; trial < 5; ++trial) {
        const auto A = testing::gaussian_arrangement(rng, 4 + trial, 2);
        const auto B = io::parse_arrangement(io::to_json(A).dump());
        REQUIRE(B.size() == A.size());
        for (std::size_t i = 0; i < A.size(); ++i) {
            CHECK((B[i].normal() - A[i].normal()).norm() < 1e-11);
            CHECK(std::abs(B[i].offset() - A[i].offset()) < 1e-11);
        }
        const auto ra = enumerate_regions(A), rb = enumerate_regions(B);
        REQUIRE(ra.size() == rb.size());
        for (std::size_t r = 0; r < ra.size(); ++r) CHECK(ra[r].label == rb[r].label);
    }
}

TEST_CASE("arrangement parse errors") {
    CHECK(arrangement_error("{") == ErrorKind::MalformedJson);
    CHECK(arrangement_error("[]") == ErrorKind::SchemaViolation);
    CHECK(arrangement_error(R"({"hyperplanes": []})") == ErrorKind::SchemaViolation);
    CHECK(arrangement_error(R"({"dimension": 0, "hyperplanes": []})") == ErrorKind::SchemaViolation);
    CHECK(arrangement_error(R"({"dimension": 2, "hyperplanes": [{"normal": [1], "offset": 0}]})") ==
          ErrorKind::DimensionMismatch);
    CHECK(arrangement_error(R"({"dimension": 2, "hyperplanes": [{"normal": [0, 0], "offset": 1}]})") ==
          ErrorKind::DegenerateHyperplane);
    CHECK(arrangement_error(R"({"dimension": 2, "hyperplanes": [{"normal": [1, "x"], "offset": 1}]})") ==
          ErrorKind::SchemaViolation);
    CHECK(arrangement_error(R"({"dimension": 2, "hyperplanes": [{"normal": [1, 1e999], "offset": 1}]})") ==
          ErrorKind::NonFinite);

    try {
        io::parse_arrangement(R"({"dimension": 2, "hyperplanes": [
            {"normal": [1, 0], "offset": 0}, {"normal": [0, 0], "offset": 1}]})");
        FAIL("zero normal accepted");
    } catch (const Error& e) {
        CHECK(e.index() == std::optional<std::size_t>(1));
    }
}

TEST_CASE("selection parsing") {
    const auto s = io::parse_selection(R"({"universe": 2, "selected": [[1, 2], [], [2]]})");
    CHECK(s.universe_size == 2);
    CHECK(s.selected == std::set<RegionLabel>{RegionLabel{}, RegionLabel{}.with(1), RegionLabel{}.with(0).with(1)});
    CHECK(io::parse_selection(io::to_json(s).dump()) == s);

    CHECK(selection_error(R"({"universe": 2, "selected": [[0]]})") == ErrorKind::SchemaViolation);
    CHECK(selection_error(R"({"universe": 2, "selected": [[3]]})") == ErrorKind::SchemaViolation);
    CHECK(selection_error(R"({"universe": 2})") == ErrorKind::SchemaViolation);
    CHECK(selection_error(R"({"universe": 2, "selected": [1]})") == ErrorKind::SchemaViolation);
    CHECK(selection_error("not json") == ErrorKind::MalformedJson);
}

TEST_CASE("compiled network JSON shape") {
    const auto N = parse_network(R"({"inputs": 2, "layers": [
        {"weights": [[1, 1], [1, 1]], "offsets": [-0.5, -1.5]},
        {"weights": [[1, -1]], "offsets": [-0.5]}]})");
    const json j = io::to_json(compile(N));
    CHECK(j["regions"].size() == 3);
    CHECK(j["regions"][0]["label"] == json::array());
    CHECK(j["regions"][1]["label"] == json::parse("[1]"));
    CHECK(j["regions"][2]["label"] == json::parse("[1, 2]"));
    CHECK(j["regions"][0]["witness"].size() == 2);
    CHECK(j["selections"] == json::parse(R"([{"universe": 2, "selected": [[1]]}])"));
    CHECK(j["layer_selections"].size() == 1);
    CHECK(j["arrangement"]["hyperplanes"].size() == 2);
    CHECK(parse_network(io::to_json(N).dump()).layers().size() == 2);
}

TEST_CASE("poset JSON") {
    const auto A = testing::lines({{1, 0, 0}, {0, 1, 0}});
    const auto P = intersection_poset(A);
    const json j = io::to_json(P, hasse_edges(P));
    CHECK(j["universe"] == 2);
    CHECK(j["elements"] == json::parse("[[], [1], [2], [1, 2]]"));
    CHECK(j["covers"].size() == 4);
    CHECK(j["covers"][0] == json::parse(R"({"lower": [], "upper": [1]})"));
}

TEST_CASE("verify report JSON") {
    VerifyReport r{10, 2, {Mismatch{Eigen::Vector2d(0.1 + 0.2, 1), Bits{0}, Bits{1}}}};
    CHECK(io::to_json(r) == json::parse(R"({"samples": 10, "discarded": 2,
        "mismatches": [{"point": [0.3, 1.0], "expected": [0], "got": [1]}]})"));
}
