#pragma once

// Parameterized graph families and the claim-verification harness.
//
// The X(n) / X'(a,b) / W(n) shapes are transcribed into fixture template
// files (JSON, see fixtures/) rather than hard-coded; each template carries
// its provenance label and a checksum that the loader re-validates, so a
// silently edited fixture fails loudly as TranscriptionError.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb {

enum class Family {
    MaruyamaX,        // X(n),  n >= 1
    MaruyamaXPrime,   // X'(n) = X'(n,n)
    XPrimeTwoParam,   // X'(a,b), a,b >= 1
    RamanujamW,       // W(n),  n >= 1
    CassonHarerA,     // Sigma(p, ps+1, ps+2), p >= 3 odd, s >= 1
    CassonHarerB,     // Sigma(p, ps-2, ps-1), (3,1) allowed; s >= 2 when p >= 5
    Fig8Sigma2_3_13,
    Fig8Sigma2_3_25,
};

std::optional<Family> family_from_name(const std::string& name);
const char* family_name(Family f);

struct FamilySpec {
    Family family;
    std::vector<std::int64_t> params;
};

// Fixture directory resolution: $PLUMBTOOL_FIXTURES if set, else the
// built-in default (the source tree's fixtures/ directory).
std::string fixture_dir();

// Throws DomainError on out-of-range params, TranscriptionError if a fixture
// fails its checksum or a structural postcondition.
PlumbingGraph generate(const FamilySpec& spec);

struct ClaimReport {
    std::string claim_id;
    std::string range_checked;
    bool pass = false;
    std::string witness;  // first failing parameter, empty if pass
    std::string detail;   // free-form notes (e.g. observed parity for C3)
};

// Evaluates claims C1..C7 for parameters up to range_bound.
std::vector<ClaimReport> verify_claims(int range_bound);

}  // namespace plumb
