// improve.hpp - relations between total-order priority profiles that model
// priority-based affirmative action, the mechanism built on the combined
// two-order profile, and the responsiveness verdict.
#pragma once

#include <string>
#include <vector>

#include "schoolmatch/eada.hpp"

namespace schoolmatch {

// `improved` improves `base` for the group when every student who gains a
// pairwise priority over someone, at any school, belongs to the group.
bool is_improvement(const Instance& inst, const Profile& base, const Profile& improved,
                    const std::vector<int>& group);

struct MoreImprovesReport {
    bool holds = false;
    // Which condition failed: "", "improvement(more)", "improvement(less)",
    // "improvement(more over less)", or "monotone".
    std::string failed_condition;
    int school = -1;            // for the monotonicity condition
    int winner = -1, loser = -1; // base-order pair whose reversal was dropped
};

// `more` more-improves `base` than `less` when both are improvements of the
// base for the group, `more` improves `less`, and every reversal granted by
// `less` is preserved by `more`.
MoreImprovesReport more_improves_report(const Instance& inst, const Profile& base,
                                        const Profile& more, const Profile& less,
                                        const std::vector<int>& group);
bool more_improves(const Instance& inst, const Profile& base, const Profile& more,
                   const Profile& less, const std::vector<int>& group);

// Strict improvement: group members never lose a pairwise win they had in the
// base, and priorities among non-members are unchanged.
bool is_strict_improvement(const Instance& inst, const Profile& base, const Profile& improved,
                           const std::vector<int>& group);

// The mechanism: pair each school's base and improved orders, combine them,
// and run the adjusted deferred acceptance with the improved order as the
// extension.
EadaResult phi_star(const Instance& inst, const Profile& base, const Profile& improved);

struct ResponsivenessVerdict {
    MoreImprovesReport precondition;
    // Per school: combined(more pair) is contained in combined(less pair).
    std::vector<char> m_inclusion;
    Matching outcome_more;
    Matching outcome_less;
    // Whether the more-improved outcome is Pareto dominated for the group by
    // the less-improved outcome. Never true when the precondition holds.
    bool more_dominated_by_less = false;
    bool diagnostic = false;
};

// Computes both mechanism outcomes and the dominance verdict. Unless
// `diagnostic` is set, requires more_improves(base, more, less, group).
ResponsivenessVerdict check_responsiveness(const Instance& inst, const Profile& base,
                                           const Profile& more, const Profile& less,
                                           const std::vector<int>& group,
                                           bool diagnostic = false);

} // namespace schoolmatch
