// spda.hpp - student-proposing deferred acceptance for total-order priority
// profiles, with the per-school rejection log used to detect underdemanded
// schools.
#pragma once

#include <cstdint>
#include <vector>

#include "schoolmatch/market.hpp"

namespace schoolmatch {

struct DaOutcome {
    Matching matching;
    // rejections[s]: students school s rejected at any step, sorted.
    std::vector<std::vector<int>> rejections;
    long proposal_count = 0;

    bool rejection_free(int school) const { return rejections[school].empty(); }
};

// A restriction of an instance: which students and schools take part, and the
// (possibly truncated) preference lists to use. Preference lists only name
// active schools.
struct SubProblem {
    std::vector<char> student_in;
    std::vector<char> school_in;
    std::vector<std::vector<int>> prefs;

    static SubProblem whole(const Instance& inst);
};

// Deferred acceptance under the instance's own (singleton, total) priorities.
DaOutcome run_da(const Instance& inst);

// Deferred acceptance under an explicit total-order profile.
DaOutcome run_da(const Instance& inst, const Profile& totals);

DaOutcome run_da(const Instance& inst, const Profile& totals, const SubProblem& sub);

// Proposal-order variant for invariance tests: the proposer is drawn with the
// seeded generator instead of lowest-id-first.
DaOutcome run_da_randomized(const Instance& inst, const Profile& totals, std::uint64_t seed);

// Schools whose seats nobody wants more than what they hold: every active
// student weakly prefers their own assignment. Evaluated against the
// instance's original preferences, restricted to the active students.
std::vector<int> underdemanded_schools(const Matching& mu, const Instance& inst,
                                       const std::vector<char>& student_in,
                                       const std::vector<char>& school_in);

// Convenience over a full deferred-acceptance run; equals the set of schools
// with an empty rejection log.
std::vector<int> underdemanded(const DaOutcome& out, const Instance& inst);

} // namespace schoolmatch
