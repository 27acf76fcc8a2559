#include <catch2/catch_amalgamated.hpp>

#include "segkit/json_io.hpp"
#include "segkit/skewrep.hpp"

using namespace segkit;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
} // namespace

TEST_CASE("json forms") {
    CHECK(to_json(P({3, 2})).dump() == "[3,2]");
    CHECK(to_json(P({})).dump() == "[]");
    CHECK(to_json(Multipartition({P({2}), P({})})).dump() == "[[2],[]]");
    CHECK(to_json(SkewShape(P({2, 2}), P({1}))).dump() == R"({"outer":[2,2],"inner":[1]})");
    CHECK(to_json(SegmentZ(-1, 2)).dump() == "[-1,2]");
    CHECK(to_json(MultisegmentZ({SegmentZ(0, 1), SegmentZ(-1, -1)})).dump() ==
          "[[-1,-1],[0,1]]");
    CHECK(to_json(StandardWord({1}, {0})).dump() == R"({"tops":[1],"bottoms":[0]})");
    CHECK(to_json(Charge({2, 0, -1})).dump() == "[2,0,-1]");
    CHECK(to_json(DrinfeldRoots(2, {{2, -2}, {0}})).dump() == R"({"n":2,"roots":[[-2,2],[0]]})");
}

TEST_CASE("json tableau forms") {
    Tableau t(TableauShape(SkewShape(P({2, 2}), P({1}))), {1, 2, 3});
    CHECK(to_json(t).dump() ==
          R"({"shape":{"outer":[2,2],"inner":[1]},"rows":[[null,1],[2,3]]})");

    Tableau u(TableauShape(P({2, 1})), {1, 3, 2});
    CHECK(to_json(u).dump() == R"({"shape":[2,1],"rows":[[1,3],[2]]})");
}

TEST_CASE("json matrix export uses num/den strings") {
    SkewRepMatrices m = skew_rep_matrices(SkewShape(P({2, 2}), P({1})), Scalar(2));
    Json j = to_json(m.T[0]);
    CHECK(j[0][0].get<std::string>() == "-1/5");
    CHECK(j[1][0].get<std::string>() == "4/5");
    CHECK(to_json(Matrix::identity(1))[0][0].get<std::string>() == "1");
}

TEST_CASE("json parsing round trips") {
    auto ms = multisegment_from_json(Json::parse("[[0,1],[-1,-1]]"));
    CHECK(to_json(ms) == Json::parse("[[-1,-1],[0,1]]"));
    auto w = word_from_json(Json::parse(R"({"tops":[2],"bottoms":[0]})"));
    CHECK(w == StandardWord({2}, {0}));
    auto q = drinfeld_from_json(Json::parse(R"({"n":1,"roots":[[0,2]]})"));
    CHECK(q == DrinfeldRoots(1, {{0, 2}}));
    auto f = charge_from_json(Json::parse("[1,0]"));
    CHECK(f == Charge({1, 0}));

    CHECK_THROWS_AS(multisegment_from_json(Json::parse("[[0]]")), std::invalid_argument);
    CHECK_THROWS_AS(word_from_json(Json::parse("[1,2]")), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(Json::parse("[1,2]")), std::invalid_argument);
    CHECK_THROWS_AS(charge_from_json(Json::parse(R"(["a"])")), std::invalid_argument);
    CHECK_THROWS_AS(drinfeld_from_json(Json::parse(R"({"n":2,"roots":[[0]]})")),
                    std::invalid_argument);
}

TEST_CASE("scalar parsing") {
    CHECK(parse_rational("2") == Scalar(2));
    CHECK(parse_rational("-5/2") == Scalar(-5, 2));
    CHECK(rational_str(Scalar(-5, 2)) == "-5/2");
    CHECK(rational_str(Scalar(7)) == "7");
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK(valid_q0(Scalar(5, 2)));
    CHECK_FALSE(valid_q0(Scalar(1)));
    CHECK_FALSE(valid_q0(Scalar(-1)));
    CHECK_FALSE(valid_q0(Scalar(0)));
}

TEST_CASE("desk limits respect the environment cap") {
    setenv("SEGKIT_MAX_R", "4", 1);
    DeskLimits lim = desk_limits();
    unsetenv("SEGKIT_MAX_R");
    CHECK(lim.regular_r == 4);
    CHECK(lim.ideal_r == 4);
    CHECK(lim.skew_r == 4);
    CHECK(desk_limits().skew_r == 8);
}
