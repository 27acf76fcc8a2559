#include <catch2/catch_amalgamated.hpp>

#include "segkit/tableaux.hpp"

using namespace segkit;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
Multipartition MP(std::vector<std::vector<int>> v) {
    std::vector<Partition> comps;
    for (auto& p : v) comps.emplace_back(std::move(p));
    return Multipartition(std::move(comps));
}
} // namespace

TEST_CASE("reading tableaux of a partition") {
    // labels listed in canonical cell order (row, then column)
    Tableau trow = row_reading_tableau(P({3, 2}));
    CHECK(trow.labels == std::vector<int>{1, 2, 3, 4, 5});
    Tableau tcol = column_reading_tableau(P({3, 2}));
    CHECK(tcol.labels == std::vector<int>{1, 3, 5, 2, 4});
    CHECK(trow.is_standard());
    CHECK(tcol.is_standard());
}

TEST_CASE("reading tableaux of a multipartition") {
    Multipartition mp = MP({{3, 1}, {2, 2}, {1}});
    Tableau trow = row_reading_tableau(mp);
    CHECK(trow.labels == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    Tableau tcol = column_reading_tableau(mp);
    // ((6 8 9 / 7), (2 4 / 3 5), (1))
    CHECK(tcol.labels == std::vector<int>{6, 8, 9, 7, 2, 4, 3, 5, 1});
    CHECK(trow.is_standard());
    CHECK(tcol.is_standard());
}

TEST_CASE("w_lambda carries row reading to column reading") {
    CHECK(w_lambda(P({3, 2})) == Permutation({1, 3, 5, 2, 4}));
    CHECK(w_lambda(P({5})) == Permutation::identity(5));

    SECTION("inverse is the conjugate's permutation") {
        CHECK(w_lambda(P({2, 1})).inverse() == w_lambda(conjugate(P({2, 1}))));
        for (int r = 1; r <= 6; ++r)
            for (int m = 1; m <= 3; ++m)
                for (const auto& mp : enumerate_multipartitions(r, m))
                    CHECK(w_lambda(mp).inverse() == w_lambda(multipartition_conjugate(mp)));
    }
}

TEST_CASE("node residues") {
    // t = (3 4 1 / 2 5): the node of 4 is (1,2)
    Tableau t(TableauShape(P({3, 2})), {3, 4, 1, 2, 5});
    CHECK(node_residue(t.node_of_label(4)) == 1);
    CHECK(node_residue(Node{1, 1, 1}) == 0);

    Multipartition mp = MP({{3, 1}, {2, 2}, {1}});
    Tableau tcol = column_reading_tableau(mp);
    Node n4 = tcol.node_of_label(4);
    CHECK(n4 == Node{1, 2, 2});
    std::vector<int> f{5, 7, -1};
    CHECK(node_residue(n4, f) == 7 + 1);
}

TEST_CASE("standard tableau enumeration") {
    CHECK(standard_tableaux(SkewShape(P({2, 2}), P({1}))).size() == 2);
    CHECK(standard_tableaux(P({1, 1, 1})).size() == 1);
    CHECK(standard_tableaux(P({2, 1})).size() == 2);

    SECTION("matches hook counts") {
        for (int n = 1; n <= 8; ++n)
            for (const auto& lam : enumerate_partitions(n))
                CHECK(static_cast<long long>(standard_tableaux(lam).size()) ==
                      hook_length_count(lam));
    }

    SECTION("all results standard, sorted, distinct") {
        auto tabs = standard_tableaux(SkewShape(P({3, 2, 1}), P({1})));
        for (const auto& t : tabs) CHECK(t.is_standard());
        for (std::size_t i = 0; i + 1 < tabs.size(); ++i) CHECK(tabs[i].labels < tabs[i + 1].labels);
    }

    SECTION("multipartition count is multinomial times hook counts") {
        for (int r = 1; r <= 5; ++r)
            for (int m = 1; m <= 2; ++m)
                for (const auto& mp : enumerate_multipartitions(r, m)) {
                    long long expected = 1;
                    // multinomial over component sizes
                    long long fact = 1;
                    for (int k = 2; k <= r; ++k) fact *= k;
                    long long denom = 1;
                    for (const auto& p : mp.components) {
                        long long f = 1;
                        for (int k = 2; k <= p.size(); ++k) f *= k;
                        denom *= f;
                    }
                    expected = fact / denom;
                    for (const auto& p : mp.components) expected *= hook_length_count(p);
                    CHECK(static_cast<long long>(standard_tableaux(mp).size()) == expected);
                }
    }
}

TEST_CASE("tableau validation") {
    CHECK_THROWS_AS(Tableau(TableauShape(P({2})), {1}), std::invalid_argument);
    CHECK_THROWS_AS(Tableau(TableauShape(P({2})), {1, 1}), std::invalid_argument);
    Tableau t(TableauShape(P({2, 1})), {1, 3, 2});
    CHECK(t.is_standard());
    Tableau u(TableauShape(P({2, 1})), {2, 1, 3});
    CHECK_FALSE(u.is_standard());
}
