#include <catch2/catch_amalgamated.hpp>

#include "segkit/hecke.hpp"
#include "segkit/verify.hpp"

using namespace segkit;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
const Scalar kQ(2);
} // namespace

TEST_CASE("symmetric group tables") {
    auto G = SymmetricGroup::get(4);
    CHECK(G->order() == 24);
    CHECK(G->length(G->identity_index()) == 0);
    for (int idx = 0; idx < G->order(); ++idx) {
        // rebuild the permutation from its reduced word
        std::vector<int> img(4);
        std::iota(img.begin(), img.end(), 1);
        int cur = G->index_of(img);
        const auto& word = G->reduced_word(idx);
        for (auto it = word.rbegin(); it != word.rend(); ++it) cur = G->left_mult(*it, cur);
        CHECK(cur == idx);
        CHECK(static_cast<int>(word.size()) == G->length(idx));
        CHECK(G->length(G->inverse(idx)) == G->length(idx));
    }
}

TEST_CASE("regular generator matrices") {
    CHECK(regular_generator_matrices(1, kQ).empty());

    for (int r = 2; r <= 4; ++r) {
        auto gens = regular_generator_matrices(r, kQ);
        REQUIRE(static_cast<int>(gens.size()) == r - 1);
        int n = gens[0].rows();
        Matrix id = Matrix::identity(n);
        Scalar q2 = kQ * kQ;
        for (const auto& t : gens) CHECK(((t - id * q2) * (t + id)).is_zero());
        for (int i = 0; i + 2 < r; ++i)
            CHECK(gens[i] * gens[i + 1] * gens[i] == gens[i + 1] * gens[i] * gens[i + 1]);
        for (int i = 0; i + 1 < r; ++i)
            for (int j = i + 2; j + 1 < r; ++j)
                CHECK(gens[i] * gens[j] == gens[j] * gens[i]);
    }

    CHECK_THROWS_AS(regular_generator_matrices(9, kQ), std::invalid_argument);
}

TEST_CASE("element level relations") {
    CHECK(suite_relations(kQ, 6).all_pass());
    CHECK(suite_relations(Scalar(5, 2), 4).all_pass());
}

TEST_CASE("x and y elements") {
    SECTION("trivial composition gives the identity element") {
        Composition ones({1, 1, 1});
        CHECK(x_mu(ones) == hecke_one(3));
        CHECK(y_mu(ones, kQ) == hecke_one(3));
    }

    SECTION("rank two eigen identities") {
        auto G = SymmetricGroup::get(2);
        Composition mu({2});
        HeckeElement x = x_mu(mu), y = y_mu(mu, kQ);
        CHECK(gen_apply(*G, 1, x, kQ) == x * (kQ * kQ));
        CHECK(gen_apply(*G, 1, y, kQ) == y * Scalar(-1));
    }

    SECTION("eigen identities over a parabolic") {
        auto G = SymmetricGroup::get(4);
        Composition mu({3, 1});
        HeckeElement x = x_mu(mu), y = y_mu(mu, kQ);
        for (int sidx : young_subgroup(*G, mu)) {
            int l = G->length(sidx);
            CHECK(perm_apply(*G, sidx, x, kQ) == x * q_pow(kQ, 2 * l));
            CHECK(perm_apply(*G, sidx, y, kQ) == y * (l % 2 == 0 ? Scalar(1) : Scalar(-1)));
        }
    }
}

TEST_CASE("cell element") {
    CHECK(c_w0(Composition({1, 1}), kQ) == hecke_one(2));

    SECTION("explicit rank two form") {
        auto G = SymmetricGroup::get(2);
        HeckeElement c = c_w0(Composition({2}), kQ);
        // q (q^{-2} T_{s1} - T_e)
        HeckeElement expected{2, {}};
        expected.set(G->identity_index(), -kQ);
        expected.set(G->left_mult(1, G->identity_index()), Scalar(1) / kQ);
        CHECK(c == expected);
        CHECK(gen_apply(*G, 1, c, kQ) == c * Scalar(-1));
    }

    SECTION("sign action and ideal dimensions") {
        CHECK(suite_cell_ideals(kQ, 4).all_pass());
        CHECK(ideal_dimension(Composition({2, 2}), kQ) == 6);
        CHECK(ideal_dimension(Composition({1, 1, 1}), kQ) == 6);
        CHECK(ideal_dimension(Composition({3}), kQ) == 1);
    }
}

TEST_CASE("z elements and Specht ranks") {
    CHECK(z_lambda(P({1}), kQ) == hecke_one(1));
    CHECK(left_ideal_rank(z_lambda(P({2, 1}), kQ), kQ) == 2);
    CHECK(left_ideal_rank(z_lambda(P({3}), kQ), kQ) == 1);
    CHECK(left_ideal_rank(z_lambda(P({1, 1, 1}), kQ), kQ) == 1);

    SECTION("all shapes of size four, two specializations") {
        for (const Scalar& q0 : {Scalar(2), Scalar(5, 2)})
            for (const auto& lam : enumerate_partitions(4))
                CHECK(left_ideal_rank(z_lambda(lam, q0), q0) == hook_length_count(lam));
    }
}

TEST_CASE("jucys-murphy elements") {
    CHECK(jm_element(1, 3, kQ) == hecke_one(3));
    CHECK(jm_prime(1, 3, kQ).is_zero());

    SECTION("bridge identity") {
        for (int r = 2; r <= 5; ++r)
            for (int k = 1; k <= r; ++k) {
                HeckeElement rhs = jm_prime(k, r, kQ) * (kQ * kQ - 1);
                rhs += hecke_one(r);
                CHECK(jm_element(k, r, kQ) == rhs);
            }
    }

    SECTION("commuting family") {
        auto G = SymmetricGroup::get(4);
        for (int a = 1; a <= 4; ++a)
            for (int b = a + 1; b <= 4; ++b) {
                HeckeElement ja = jm_element(a, 4, kQ), jb = jm_element(b, 4, kQ);
                CHECK(mul(*G, ja, jb, kQ) == mul(*G, jb, ja, kQ));
            }
    }

    SECTION("eigenvalues on z_lambda") {
        Report rep = jm_eigenvalue_check(P({2, 1}), kQ);
        CHECK(rep.all_pass());
        REQUIRE(rep.checks.size() == 4); // nonzero check + one per k
        CHECK(rep.checks[1].name == "J_1 eigenvalue exponent 0");
        CHECK(rep.checks[2].name == "J_2 eigenvalue exponent -1");
        CHECK(rep.checks[3].name == "J_3 eigenvalue exponent 1");

        Report rep22 = jm_eigenvalue_check(P({2, 2}), kQ);
        CHECK(rep22.all_pass());
        CHECK(rep22.checks[1].name == "J_1 eigenvalue exponent 0");
        CHECK(rep22.checks[2].name == "J_2 eigenvalue exponent -1");
        CHECK(rep22.checks[3].name == "J_3 eigenvalue exponent 1");
        CHECK(rep22.checks[4].name == "J_4 eigenvalue exponent 0");

        CHECK(jm_eigenvalue_check(P({1}), kQ).all_pass());
        for (const auto& lam : enumerate_partitions(4))
            CHECK(jm_eigenvalue_check(lam, Scalar(3)).all_pass());
    }
}

TEST_CASE("sharp twist pairs a module with its conjugate") {
    SECTION("row pairs with column") {
        IdealModule triv = left_ideal_module(z_lambda(P({2}), kQ), kQ);
        IdealModule sign = left_ideal_module(z_lambda(P({1, 1}), kQ), kQ);
        REQUIRE(triv.dim == 1);
        REQUIRE(sign.dim == 1);
        CHECK(character_vector(triv, kQ, true) == character_vector(sign, kQ, false));
        CHECK(character_vector(triv, kQ, false) != character_vector(sign, kQ, false));
    }

    CHECK(sharp_twist_check(P({1}), kQ).all_pass());
    CHECK(sharp_twist_check(P({2, 1}), kQ).all_pass());
    for (const auto& lam : enumerate_partitions(4)) CHECK(sharp_twist_check(lam, kQ).all_pass());
    CHECK_THROWS_AS(sharp_twist_check(P({3, 2}), kQ), std::invalid_argument);
}
