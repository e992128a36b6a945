#include <doctest.h>

#include <numeric>

#include "plumb/canonical.hpp"
#include "plumb/matrix.hpp"
#include "plumb/moves.hpp"
#include "plumb/seifert.hpp"

using namespace plumb;

namespace {

mpq_class evaluate_ncf(const std::vector<std::int64_t>& terms) {
    mpq_class acc(static_cast<long>(terms.back()));
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it)
        acc = mpq_class(static_cast<long>(*it)) - 1 / acc;
    return acc;
}

PlumbingGraph e8() {
    return build_graph({-2, -2, -2, -2, -2, -2, -2, -2},
                       {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}});
}

}  // namespace

TEST_CASE("neg_cont_frac") {
    CHECK(neg_cont_frac(2, 1).terms == std::vector<std::int64_t>{2});
    CHECK(neg_cont_frac(7, 4).terms == std::vector<std::int64_t>{2, 4});
    CHECK(neg_cont_frac(5, 3).terms == std::vector<std::int64_t>{2, 3});
    CHECK(neg_cont_frac(5, 1).terms == std::vector<std::int64_t>{5});

    SUBCASE("preconditions") {
        CHECK_THROWS_AS(neg_cont_frac(4, 4), DomainError);
        CHECK_THROWS_AS(neg_cont_frac(3, 5), DomainError);
        CHECK_THROWS_AS(neg_cont_frac(6, 4), DomainError);  // not coprime
        CHECK_THROWS_AS(neg_cont_frac(5, 0), DomainError);
    }

    SUBCASE("round trip and term bounds, all coprime q < p <= 200") {
        for (std::int64_t p = 2; p <= 200; ++p)
            for (std::int64_t q = 1; q < p; ++q) {
                if (std::gcd(p, q) != 1) continue;
                NcfExpansion e = neg_cont_frac(p, q);
                for (std::int64_t c : e.terms) REQUIRE(c >= 2);
                mpq_class v = evaluate_ncf(e.terms);
                REQUIRE(v == mpq_class(static_cast<long>(p), static_cast<long>(q)));
            }
    }
}

TEST_CASE("brieskorn_plumbing known graphs") {
    SUBCASE("Sigma(2,3,5) is E8") {
        CHECK(isomorphic(brieskorn_plumbing(2, 3, 5), e8()));
    }
    SUBCASE("Sigma(2,3,7) is star(-1; -2, -3, -7)") {
        PlumbingGraph want = build_graph({-1, -2, -3, -7}, {{0, 1}, {0, 2}, {0, 3}});
        CHECK(isomorphic(brieskorn_plumbing(2, 3, 7), want));
    }
    SUBCASE("Sigma(3,1,2) normalizes to the empty graph (S^3)") {
        PlumbingGraph g = brieskorn_plumbing(3, 1, 2);
        CHECK(reduce_to_normal_form(g).final_graph.empty());
    }
    SUBCASE("argument order does not matter") {
        std::string code = canonical_code(brieskorn_plumbing(2, 3, 7)).code;
        CHECK(canonical_code(brieskorn_plumbing(3, 7, 2)).code == code);
        CHECK(canonical_code(brieskorn_plumbing(7, 2, 3)).code == code);
        CHECK(canonical_code(brieskorn_plumbing(3, 2, 7)).code == code);
    }
    SUBCASE("rejects bad triples") {
        CHECK_THROWS_AS(brieskorn_plumbing(2, 4, 5), DomainError);
        CHECK_THROWS_AS(brieskorn_plumbing(1, 1, 5), DomainError);
        CHECK_THROWS_AS(brieskorn_plumbing(0, 3, 5), DomainError);
    }
}

// Soundness sweep: every pairwise-coprime triple with product <= 500 gives a
// unimodular, negative-definite star whose Seifert data round-trips.
TEST_CASE("brieskorn_plumbing soundness, a1*a2*a3 <= 500") {
    int checked = 0;
    for (std::int64_t a1 = 1; a1 <= 500; ++a1)
        for (std::int64_t a2 = a1; a1 * a2 <= 500; ++a2)
            for (std::int64_t a3 = a2; a1 * a2 * a3 <= 500; ++a3) {
                if (std::gcd(a1, a2) != 1 || std::gcd(a1, a3) != 1 ||
                    std::gcd(a2, a3) != 1)
                    continue;
                if ((a1 == 1) + (a2 == 1) > 1) continue;
                PlumbingGraph g = brieskorn_plumbing(a1, a2, a3);
                REQUIRE(is_unimodular(g));
                REQUIRE(is_negative_definite(g));
                // a1 = 1 yields a two-armed (linear) graph with no Seifert star
                if (a1 == 1) continue;
                SeifertData sd = seifert_data_from_star(g);
                // arms recover the a_i > 1, and |e| = 1/(a1 a2 a3)
                std::vector<std::int64_t> as;
                for (auto& [a, b] : sd.arms) as.push_back(a);
                std::vector<std::int64_t> want;
                for (std::int64_t a : {a1, a2, a3})
                    if (a > 1) want.push_back(a);
                REQUIRE(as == want);  // both sorted ascending
                mpq_class e_want(-1, static_cast<long>(a1 * a2 * a3));
                e_want.canonicalize();
                REQUIRE(sd.e == e_want);
                ++checked;
            }
    CHECK(checked > 100);
}

TEST_CASE("seifert_data_from_star") {
    SUBCASE("E8") {
        SeifertData sd = seifert_data_from_star(e8());
        REQUIRE(sd.arms.size() == 3);
        CHECK(sd.arms[0] == std::pair<std::int64_t, std::int64_t>{2, 1});
        CHECK(sd.arms[1] == std::pair<std::int64_t, std::int64_t>{3, 2});
        CHECK(sd.arms[2] == std::pair<std::int64_t, std::int64_t>{5, 4});
        mpq_class want(-1, 30);
        CHECK(sd.e == want);
        CHECK(sd.b0 == -2);
    }
    SUBCASE("Sigma(2,3,7) star") {
        PlumbingGraph g = build_graph({-1, -2, -3, -7}, {{0, 1}, {0, 2}, {0, 3}});
        SeifertData sd = seifert_data_from_star(g);
        std::vector<std::int64_t> as;
        for (auto& [a, b] : sd.arms) as.push_back(a);
        CHECK(as == std::vector<std::int64_t>{2, 3, 7});
        mpq_class want(-1, 42);
        CHECK(sd.e == want);
    }
    SUBCASE("two-vertex graph treated as single-arm star") {
        PlumbingGraph g = build_graph({-2, -2}, {{0, 1}});
        SeifertData sd = seifert_data_from_star(g);
        REQUIRE(sd.arms.size() == 1);
        CHECK(sd.arms[0] == std::pair<std::int64_t, std::int64_t>{2, 1});
        mpq_class want(-3, 2);
        CHECK(sd.e == want);  // e = -2 + 1/2
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(seifert_data_from_star(build_graph({}, {})), NotStarError);
        CHECK_THROWS_AS(
            seifert_data_from_star(build_graph({-2, -2, -2}, {{0, 1}, {1, 2}})),
            NotStarError);  // linear, no node
        PlumbingGraph bad = build_graph({-1, -2, -1, -7}, {{0, 1}, {0, 2}, {0, 3}});
        CHECK_THROWS_AS(seifert_data_from_star(bad), NotReducedError);
    }
}

TEST_CASE("central_weight_obstruction") {
    CHECK(central_weight_obstruction(brieskorn_plumbing(2, 3, 7)) ==
          ObstructionVerdict::NotObstructed);
    CHECK(central_weight_obstruction(brieskorn_plumbing(2, 3, 5)) ==
          ObstructionVerdict::Obstructed);  // E8, central -2
    CHECK(central_weight_obstruction(build_graph({-2, -2}, {{0, 1}})) ==
          ObstructionVerdict::NotApplicable);
    // star-shaped but not unimodular: chain counts stay out of scope
    PlumbingGraph star = build_graph({-2, -2, -2, -2}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(central_weight_obstruction(star) == ObstructionVerdict::NotApplicable);
}

// Both Casson-Harer style triples give central
// weight -1 for p in {3,5,7,9}, s in 1..4.
TEST_CASE("Casson-Harer triples have central weight -1") {
    for (std::int64_t p : {3, 5, 7, 9})
        for (std::int64_t s = 1; s <= 4; ++s) {
            PlumbingGraph ga = brieskorn_plumbing(p, p * s + 1, p * s + 2);
            CHECK(central_weight_obstruction(ga) == ObstructionVerdict::NotObstructed);
            if (p == 3 || s >= 2) {
                PlumbingGraph gb = brieskorn_plumbing(p, p * s - 2, p * s - 1);
                if (p == 3 && s == 1) continue;  // Sigma(3,1,2) = S^3, no 3 arms
                CHECK(central_weight_obstruction(gb) ==
                      ObstructionVerdict::NotObstructed);
            }
        }
}
