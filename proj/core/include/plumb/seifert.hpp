#pragma once

// Negative continued fractions, Brieskorn plumbing graphs, Seifert data of
// star-shaped graphs, and the central-weight obstruction.
//
// Conventions used throughout (pinned by the executable constraints |det| = 1
// and negative definiteness, see brieskorn_plumbing):
//   * an arm with center-out weights (-c_1, ..., -c_k) encodes the fraction
//     a/b = c_1 - 1/(c_2 - 1/(... - 1/c_k)) with all c_j >= 2, 0 < b < a;
//   * the Euler number of a star is  e = central_weight + sum b_i / a_i.
// For the Brieskorn sphere Sigma(a1,a2,a3) this yields e = -1/(a1*a2*a3).

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb {

struct NcfExpansion {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::vector<std::int64_t> terms;  // all >= 2
};

// Unique all-terms->=2 expansion of p/q; requires p > q >= 1, gcd(p,q) = 1.
// Throws DomainError.
NcfExpansion neg_cont_frac(std::int64_t p, std::int64_t q);

struct SeifertData {
    Weight b0 = 0;  // literal central weight
    std::vector<std::pair<std::int64_t, std::int64_t>> arms;  // (a_i, b_i), sorted
    mpq_class e;    // exact Euler number

    bool operator==(const SeifertData&) const = default;
};

// Star-shaped negative-definite unimodular plumbing of Sigma(a1,a2,a3).
// Requires a_i >= 1 pairwise coprime, at most one a_i = 1.  Postconditions
// (|det| = 1, negative definite) are asserted; InternalError on failure.
PlumbingGraph brieskorn_plumbing(std::int64_t a1, std::int64_t a2, std::int64_t a3);

// Inverse dictionary: requires a star-shaped graph (or <= 2 vertices) with all
// arm weights <= -2.  Throws NotStarError / NotReducedError.
SeifertData seifert_data_from_star(const PlumbingGraph& g);

enum class ObstructionVerdict { Obstructed, NotObstructed, NotApplicable };

const char* obstruction_name(ObstructionVerdict v);

// Neumann-Zagier criterion: for a star-shaped, unimodular, negative-definite
// graph with >= 3 arms, Obstructed iff the node weight != -1.
ObstructionVerdict central_weight_obstruction(const PlumbingGraph& g);

}  // namespace plumb
