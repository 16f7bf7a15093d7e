// eada.hpp - efficiency-adjusted deferred acceptance over partial-order
// priority profiles, run against a chosen total-order extension profile.
//
// Round 1 runs deferred acceptance under the extension. Each later round
// settles the students matched at underdemanded schools (or unmatched),
// removes those schools and students, makes every school unacceptable to the
// remaining students it was defended from (a just-removed student with higher
// base priority still desires it), and re-runs deferred acceptance on the
// subproblem. The run ends when every school has been removed.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schoolmatch/spda.hpp"

namespace schoolmatch {

struct EadaRound {
    std::vector<int> students;                 // remaining students this round
    std::vector<int> schools;                  // remaining schools this round
    std::vector<std::vector<int>> truncations; // newly banned schools, per student
    std::vector<std::vector<int>> prefs;       // working preference lists, per student
    Matching round_matching;                   // deferred acceptance on the subproblem
    std::vector<int> underdemanded;            // schools settled after this round
    std::vector<int> eliminated;               // students settled after this round
    std::vector<int> cumulative_eliminated;    // all students settled so far
    Matching snapshot;                         // settled assignments plus this round's
    // The round removed no school by the demand criterion and no student;
    // rejection-free schools were settled instead to guarantee progress.
    bool rejection_fallback = false;
};

struct EadaTrace {
    std::vector<EadaRound> rounds;
    std::vector<int> elimination_round_of_student; // 1-based
    std::vector<int> elimination_round_of_school;  // 1-based
    // Set when some base priority is not transitive: the stable-outcome
    // guarantee is void and the result may violate the base profile.
    bool intransitive_base = false;
    Profile extension;
};

struct EadaResult {
    Matching matching;
    EadaTrace trace;
};

// Runs on the instance's own single-priority profile. Each base priority must
// be asymmetric and acyclic; each extension component must be a total order
// containing it. Intransitive bases are allowed but flag the trace.
EadaResult run_eada(const Instance& inst, const Profile& extension);

// As above with an explicit base profile (used by the multi-priority entry
// point and by tests). `desire_clause` restricts truncation to schools the
// removed student actually desires; disabling it is a test-only switch.
EadaResult run_eada_base(const Instance& inst, const Profile& base, const Profile& extension,
                         bool desire_clause = true);

// Multi-priority entry point: combines each school's priority set, refuses
// intransitive combined relations, and runs on the combined profile. When
// `chosen` names a member order per school it must be total and is used as
// the extension; otherwise the canonical linear extension of the combined
// relation is taken.
EadaResult run_ea_multi(const Instance& inst,
                        const std::optional<std::vector<int>>& chosen = std::nullopt);

// Checks the per-trace guarantees that hold whenever the base profile is a
// partial-order profile: every snapshot is stable for the base, assignments
// only improve between rounds, and per-school roster sizes never change.
// Returns a human-readable complaint for the first violated guarantee.
std::optional<std::string> check_trace_claims(const Instance& inst, const Profile& base,
                                              const EadaResult& result);

// Round-by-round plain-text report.
std::string trace_to_text(const EadaTrace& trace, const Instance& inst);

} // namespace schoolmatch
