#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "segkit/correspondences.hpp"

using namespace segkit;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
Multipartition MP(std::vector<std::vector<int>> v) {
    std::vector<Partition> comps;
    for (auto& p : v) comps.emplace_back(std::move(p));
    return Multipartition(std::move(comps));
}
} // namespace

TEST_CASE("eta on the worked example") {
    StandardWord w({-1, 0, 1, 2, 2}, {-4, -5, -2, -1, -2});
    auto [gamma, f] = eta(word_to_multisegment(w));
    CHECK(gamma == MP({{4}, {6, 4, 4}, {5}}));
    CHECK(f == Charge({2, 0, -1}));
    CHECK(is_standard_kleshchev(gamma, f_star(f)));
}

TEST_CASE("eta edge cases") {
    auto [g1, f1] = eta(MultisegmentZ({SegmentZ(-3, 2)}));
    CHECK(g1 == MP({{6}}));
    CHECK(f1 == Charge({2}));

    auto [g2, f2] = eta(MultisegmentZ({SegmentZ(0, 0), SegmentZ(0, 0)}));
    CHECK(g2 == MP({{1}, {1}}));
    CHECK(f2 == Charge({0, 0}));

    CHECK_THROWS_AS(eta(MultisegmentZ{}), std::invalid_argument);
}

TEST_CASE("theta inverts eta") {
    StandardWord w = theta(MP({{4}, {6, 4, 4}, {5}}), Charge({2, 0, -1}));
    CHECK(w == StandardWord({-1, 0, 1, 2, 2}, {-4, -5, -2, -1, -2}));

    CHECK(theta(MP({{6}}), Charge({2})) == StandardWord({2}, {-3}));

    SECTION("rejects non-standard-kleshchev input naming the clause") {
        CHECK_THROWS_WITH(theta(MP({{1}, {}}), Charge({0, 0})),
                          Catch::Matchers::ContainsSubstring("SK1"));
        CHECK_THROWS_WITH(theta(MP({{3}, {3}}), Charge({0, -1})),
                          Catch::Matchers::ContainsSubstring("SK3"));
    }

    SECTION("exhaustive round trip on a window") {
        for (int r = 1; r <= 4; ++r)
            for (const auto& ms : enumerate_multisegments(r, -2, 2)) {
                auto [gamma, f] = eta(ms);
                CHECK(is_standard_kleshchev(gamma, f_star(f)));
                CHECK(word_to_multisegment(theta(gamma, f)) == ms);
            }
    }
}

TEST_CASE("drinfeld root map") {
    CHECK(partial_map(MultisegmentZ({SegmentZ(0, 2)}), 3) ==
          DrinfeldRoots(3, {{4}, {2}, {0}}));
    CHECK(partial_map(MultisegmentZ({SegmentZ(-1, -1), SegmentZ(0, 1)}), 2) ==
          DrinfeldRoots(2, {{-2, 2}, {0}}));
    CHECK(partial_map(MultisegmentZ({SegmentZ(0, 0)}), 1) == DrinfeldRoots(1, {{0}}));
    CHECK_THROWS_AS(partial_map(MultisegmentZ({SegmentZ(0, 2)}), 2), std::invalid_argument);
}

TEST_CASE("dominance") {
    CHECK(is_dominant(DrinfeldRoots(2, {{-2, 2}, {0}})));
    CHECK_FALSE(is_dominant(DrinfeldRoots(2, {{0}, {0}})));
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        SegmentSeq segs;
        int left = 1 + t % 6;
        while (left > 0) {
            int len = 1 + static_cast<int>(rng() % left);
            int hi = static_cast<int>(rng() % 9) - 4;
            segs.emplace_back(hi - len + 1, hi);
            left -= len;
        }
        CHECK(is_dominant(partial_map(MultisegmentZ(segs), 6)));
    }
}

TEST_CASE("drinfeld inverse") {
    CHECK(partial_inverse(DrinfeldRoots(3, {{4}, {2}, {0}})) ==
          MultisegmentZ({SegmentZ(0, 2)}));
    CHECK(partial_inverse(DrinfeldRoots(1, {{0}})) == MultisegmentZ({SegmentZ(0, 0)}));
    CHECK_THROWS_AS(partial_inverse(DrinfeldRoots(2, {{0}, {0}})), std::invalid_argument);
    CHECK_THROWS_AS(partial_inverse(DrinfeldRoots(1, {{1}})), std::invalid_argument);

    SECTION("exhaustive inverse on a window") {
        for (int r = 1; r <= 4; ++r)
            for (const auto& ms : enumerate_multisegments(r, -2, 2)) {
                DrinfeldRoots q = partial_map(ms, 4);
                CHECK(q.integral());
                CHECK(q.degree() == r);
                CHECK(partial_inverse(q) == ms);
            }
    }
}

TEST_CASE("drinfeld roots from row residues") {
    CHECK(drinfeld_from_multipartition(MP({{1}}), Charge({0}), 1) == DrinfeldRoots(1, {{0}}));
    CHECK(drinfeld_from_multipartition(MP({{2, 1}}), Charge({0}), 2) ==
          DrinfeldRoots(2, {{0, 2}, {-2}}));
    CHECK_THROWS_AS(drinfeld_from_multipartition(MP({{1, 1}}), Charge({0}), 1),
                    std::invalid_argument);

    SECTION("agrees with the composite through column segments") {
        std::vector<Charge> charges{Charge({0}), Charge({1, -1}), Charge({2, 0, -1})};
        for (const auto& f : charges)
            for (int r = 1; r <= 5; ++r)
                for (const auto& mp : enumerate_multipartitions(r, f.count())) {
                    if (!is_kleshchev(multipartition_conjugate(mp), f_star(f))) continue;
                    CHECK(drinfeld_from_multipartition(mp, f, 5) ==
                          partial_map(MultisegmentZ(column_residual_segments(mp, f)), 5));
                }
    }
}

TEST_CASE("omega twist") {
    CHECK(omega_twist(DrinfeldRoots(1, {{0}}), 1) == DrinfeldRoots(1, {{2}}));
    DrinfeldRoots q(2, {{-2, 2}, {0}});
    CHECK(omega_twist(q, 0) == q);
    CHECK(is_dominant(omega_twist(q, 3)));

    std::mt19937 rng(17);
    for (int t = 0; t < 100; ++t) {
        SegmentSeq segs;
        int left = 1 + t % 6;
        while (left > 0) {
            int len = 1 + static_cast<int>(rng() % left);
            int hi = static_cast<int>(rng() % 9) - 4;
            segs.emplace_back(hi - len + 1, hi);
            left -= len;
        }
        MultisegmentZ ms(segs);
        int c = static_cast<int>(rng() % 7) - 3;
        CHECK(partial_map(shift(ms, c), 6) == omega_twist(partial_map(ms, 6), c));
    }
}

TEST_CASE("skew column segments") {
    CHECK(skew_multisegment(SkewShape(P({2, 2}), P({1}))) ==
          SegmentSeq{SegmentZ(-1, -1), SegmentZ(0, 1)});
    CHECK(skew_multisegment(SkewShape(P({1}), P({}))) == SegmentSeq{SegmentZ(0, 0)});
    CHECK(skew_multisegment(SkewShape(P({3, 1}), P({1}))) ==
          SegmentSeq{SegmentZ(-1, -1), SegmentZ(1, 1), SegmentZ(2, 2)});
    CHECK_THROWS_AS(skew_multisegment(SkewShape(P({2}), P({2}))), std::invalid_argument);

    SECTION("always standard") {
        for (const auto& s : enumerate_skew_shapes(6))
            CHECK(is_standard_seq(skew_multisegment(s)));
    }
}

TEST_CASE("skew drinfeld roots") {
    CHECK(skew_drinfeld(SkewShape(P({2, 2}), P({1})), 2) == DrinfeldRoots(2, {{-2, 2}, {0}}));
    CHECK(skew_drinfeld(SkewShape(P({1}), P({})), 1) == DrinfeldRoots(1, {{0}}));
    CHECK_THROWS_AS(skew_drinfeld(SkewShape(P({1, 1}), P({})), 1), std::invalid_argument);

    SECTION("agrees with the composite through the skew multisegment") {
        for (const auto& s : enumerate_skew_shapes(6))
            CHECK(skew_drinfeld(s, 6) == partial_map(MultisegmentZ(skew_multisegment(s)), 6));
    }
}
