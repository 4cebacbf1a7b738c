#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "subsetsums/counting.hpp"
#include "subsetsums/group.hpp"

namespace subsetsums {

// Order cutoffs for the expensive structural checks; a group beyond a
// cutoff gets a skip verdict for that check rather than a silent pass.
struct VerifyLimits {
    std::uint64_t exhaustive_order_limit = 16;   // brute force, duality, recurrence table
    std::uint64_t eq3_order_limit = 12;          // per-element g sums
    std::uint64_t g_recurrence_order_limit = 8;  // pairwise g identities
    std::uint64_t code_order_limit = 14;         // full codebook sweeps
    CountLimits counting;
    std::uint64_t seed = 12345;
};

enum class Verdict { pass, fail, skip };

struct CheckResult {
    std::string name;
    nlohmann::ordered_json inputs;
    Verdict verdict = Verdict::skip;
    std::string detail;  // empty on pass; reason on skip; witness on fail
};

struct VerifyReport {
    std::string group;
    std::uint64_t n = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const;  // no check failed (skips permitted)
    nlohmann::ordered_json json() const;
};

// Runs the whole battery against one group: arithmetic axioms, the
// canonical index bijection, the counting identities (column sums,
// duality, translation invariance), agreement of the three counting
// methods, the g recurrences, the deviation and ratio bounds, codebook
// structure, and serialization round-trips.
VerifyReport verify_group(const GroupSpec& g, const VerifyLimits& limits = {});

}  // namespace subsetsums
