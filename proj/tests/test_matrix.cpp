#include <doctest.h>

#include "plumb/matrix.hpp"

using namespace plumb;

namespace {

// E8: central node with arms of lengths 1, 2, 4, all weights -2.
PlumbingGraph e8() {
    return build_graph({-2, -2, -2, -2, -2, -2, -2, -2},
                       {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}});
}

}  // namespace

TEST_CASE("intersection matrix layout") {
    PlumbingGraph g = build_graph({-1, -2, -3, -7}, {{0, 1}, {0, 2}, {0, 3}});
    IntegerSymmetricMatrix m = intersection_matrix(g);
    REQUIRE(m.dim() == 4);
    CHECK(m.at(0, 0) == -1);
    CHECK(m.at(1, 1) == -2);
    CHECK(m.at(2, 2) == -3);
    CHECK(m.at(3, 3) == -7);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(1, 0) == 1);
    CHECK(m.at(1, 2) == 0);
}

TEST_CASE("determinant") {
    SUBCASE("empty matrix is 1") {
        CHECK(determinant(intersection_matrix(build_graph({}, {}))) == 1);
    }
    SUBCASE("single vertex") {
        CHECK(determinant(intersection_matrix(build_graph({-2}, {}))) == -2);
    }
    // [DERIVED] chain (-2,-2): det [[-2,1],[1,-2]] = 3, by hand.
    SUBCASE("chain (-2,-2)") {
        CHECK(determinant(intersection_matrix(build_graph({-2, -2}, {{0, 1}}))) == 3);
    }
    // [DERIVED] (-2)-chain of length k has det (-1)^k (k+1); cofactor recurrence.
    SUBCASE("(-2)-chains") {
        std::vector<Weight> w;
        std::vector<std::pair<int, int>> e;
        for (int k = 1; k <= 9; ++k) {
            w.push_back(-2);
            if (k > 1) e.emplace_back(k - 2, k - 1);
            mpz_class want = (k % 2 == 0) ? (k + 1) : -(k + 1);
            CHECK(determinant(intersection_matrix(build_graph(w, e))) == want);
        }
    }
    // [DERIVED] star(-1;-2,-3,-7) has det 1 (4x4 cofactor expansion by hand).
    SUBCASE("Sigma(2,3,7) star") {
        PlumbingGraph g = build_graph({-1, -2, -3, -7}, {{0, 1}, {0, 2}, {0, 3}});
        CHECK(determinant(intersection_matrix(g)) == 1);
    }
    // [DERIVED] E8 det = 1 (8x8 cofactor-expansion oracle, see test_oracles).
    SUBCASE("E8") { CHECK(determinant(intersection_matrix(e8())) == 1); }
    SUBCASE("singular chain (-2,-1,-2)") {
        PlumbingGraph g = build_graph({-2, -1, -2}, {{0, 1}, {1, 2}});
        CHECK(determinant(intersection_matrix(g)) == 0);
    }
}

TEST_CASE("signature") {
    SUBCASE("positive 1x1") {
        IntegerSymmetricMatrix m(1);
        m.set(0, 0, 1);
        CHECK(signature(m) == SignatureTriple{1, 0, 0});
    }
    SUBCASE("hyperbolic plane") {
        IntegerSymmetricMatrix m(2);
        m.set(0, 1, 1);
        CHECK(signature(m) == SignatureTriple{1, 1, 0});
    }
    SUBCASE("zero matrix") {
        IntegerSymmetricMatrix m(3);
        CHECK(signature(m) == SignatureTriple{0, 0, 3});
    }
    // [DERIVED] E8 is negative definite: all leading principal minors alternate
    // in sign (checked via the char-poly oracle in test_oracles).
    SUBCASE("E8 is (0,8,0)") {
        CHECK(signature(intersection_matrix(e8())) == SignatureTriple{0, 8, 0});
    }
    SUBCASE("singular chain has a zero") {
        PlumbingGraph g = build_graph({-2, -1, -2}, {{0, 1}, {1, 2}});
        CHECK(signature(intersection_matrix(g)) == SignatureTriple{0, 2, 1});
    }
    SUBCASE("indefinite example") {
        PlumbingGraph g = build_graph({1, -1}, {{0, 1}});
        // det = -2 < 0: one of each sign
        CHECK(signature(intersection_matrix(g)) == SignatureTriple{1, 1, 0});
    }
}

TEST_CASE("predicates") {
    CHECK(is_homology_sphere(e8()));
    CHECK(is_negative_definite(e8()));
    CHECK(is_unimodular(e8()));
    PlumbingGraph c22 = build_graph({-2, -2}, {{0, 1}});
    CHECK(!is_homology_sphere(c22));  // det 3
    CHECK(is_negative_definite(c22));
    CHECK(is_homology_sphere(build_graph({}, {})));  // S^3
    CHECK(is_negative_definite(build_graph({}, {})));
}

TEST_CASE("determinant of a disjoint union is the product") {
    PlumbingGraph g = build_graph({-2, -2, -3}, {{0, 1}});  // chain + isolated -3
    CHECK(determinant(intersection_matrix(g)) == 3 * -3);
}

// Vertex relabeling conjugates by a permutation matrix, so the determinant
// (not just |det|) must be order-independent.
TEST_CASE("determinant is invariant under relabeling") {
    PlumbingGraph g1 = build_graph({-1, -2, -3, -7}, {{0, 1}, {0, 2}, {0, 3}});
    PlumbingGraph g2 = build_graph({-7, -3, -2, -1}, {{3, 2}, {3, 1}, {3, 0}});
    CHECK(determinant(intersection_matrix(g1)) == determinant(intersection_matrix(g2)));
}
