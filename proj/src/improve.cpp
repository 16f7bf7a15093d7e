// improve.cpp
#include "schoolmatch/improve.hpp"

#include <algorithm>

namespace schoolmatch {

namespace {

void require_total(const Instance& inst, const Profile& profile, const char* what) {
    inst.check_profile(profile);
    for (const Relation& r : profile) {
        if (r.classify().order != RelationOrder::Total) {
            throw err::not_total(what);
        }
    }
}

bool in_group(const std::vector<int>& group, int i) {
    return std::find(group.begin(), group.end(), i) != group.end();
}

// Multi-priority instance pairing each school's base and improved orders.
Instance paired_instance(const Instance& inst, const Profile& base, const Profile& improved) {
    std::map<std::string, std::vector<std::string>> prefs;
    for (int i = 0; i < inst.num_students(); ++i) {
        std::vector<std::string> listed;
        for (int s : inst.prefs(i)) {
            listed.push_back(inst.school_id(s));
        }
        prefs[inst.student_id(i)] = std::move(listed);
    }
    std::vector<PrioritySet> priorities;
    for (int s = 0; s < inst.num_schools(); ++s) {
        priorities.push_back({inst.school_id(s), {base[s], improved[s]}});
    }
    return Instance(inst.students(), inst.schools(), std::move(prefs), std::move(priorities));
}

} // namespace

bool is_improvement(const Instance& inst, const Profile& base, const Profile& improved,
                    const std::vector<int>& group) {
    require_total(inst, base, "base profile");
    require_total(inst, improved, "improved profile");
    if (group.empty()) {
        throw err::empty_group();
    }
    for (int s = 0; s < inst.num_schools(); ++s) {
        for (int i = 0; i < inst.num_students(); ++i) {
            for (int j = 0; j < inst.num_students(); ++j) {
                if (base[s].at(j, i) && improved[s].at(i, j) && !in_group(group, i)) {
                    return false;
                }
            }
        }
    }
    return true;
}

MoreImprovesReport more_improves_report(const Instance& inst, const Profile& base,
                                        const Profile& more, const Profile& less,
                                        const std::vector<int>& group) {
    MoreImprovesReport report;
    if (!is_improvement(inst, base, more, group)) {
        report.failed_condition = "improvement(more)";
        return report;
    }
    if (!is_improvement(inst, base, less, group)) {
        report.failed_condition = "improvement(less)";
        return report;
    }
    if (!is_improvement(inst, less, more, group)) {
        report.failed_condition = "improvement(more over less)";
        return report;
    }
    for (int s = 0; s < inst.num_schools(); ++s) {
        for (int i = 0; i < inst.num_students(); ++i) {
            for (int j = 0; j < inst.num_students(); ++j) {
                if (base[s].at(i, j) && less[s].at(j, i) && !more[s].at(j, i)) {
                    report.failed_condition = "monotone";
                    report.school = s;
                    report.winner = i;
                    report.loser = j;
                    return report;
                }
            }
        }
    }
    report.holds = true;
    return report;
}

bool more_improves(const Instance& inst, const Profile& base, const Profile& more,
                   const Profile& less, const std::vector<int>& group) {
    return more_improves_report(inst, base, more, less, group).holds;
}

bool is_strict_improvement(const Instance& inst, const Profile& base, const Profile& improved,
                           const std::vector<int>& group) {
    require_total(inst, base, "base profile");
    require_total(inst, improved, "improved profile");
    if (group.empty()) {
        throw err::empty_group();
    }
    for (int s = 0; s < inst.num_schools(); ++s) {
        for (int i = 0; i < inst.num_students(); ++i) {
            for (int j = 0; j < inst.num_students(); ++j) {
                if (!base[s].at(i, j) || improved[s].at(i, j)) {
                    continue;
                }
                // the pair (i over j) was lost
                if (in_group(group, i)) {
                    return false; // (S1)
                }
                if (!in_group(group, j)) {
                    return false; // (S2)
                }
            }
        }
    }
    return true;
}

EadaResult phi_star(const Instance& inst, const Profile& base, const Profile& improved) {
    require_total(inst, base, "base profile");
    require_total(inst, improved, "improved profile");
    Instance paired = paired_instance(inst, base, improved);
    std::vector<int> chosen(inst.num_schools(), 1); // the improved member
    return run_ea_multi(paired, chosen);
}

ResponsivenessVerdict check_responsiveness(const Instance& inst, const Profile& base,
                                           const Profile& more, const Profile& less,
                                           const std::vector<int>& group, bool diagnostic) {
    ResponsivenessVerdict verdict;
    verdict.diagnostic = diagnostic;
    verdict.precondition = more_improves_report(inst, base, more, less, group);
    if (!verdict.precondition.holds && !diagnostic) {
        throw err::precondition("the candidate profile does not more-improve the base (" +
                                verdict.precondition.failed_condition + ")");
    }
    verdict.m_inclusion.assign(inst.num_schools(), 0);
    for (int s = 0; s < inst.num_schools(); ++s) {
        Relation m_more = m_combine({inst.school_id(s), {base[s], more[s]}});
        Relation m_less = m_combine({inst.school_id(s), {base[s], less[s]}});
        verdict.m_inclusion[s] = m_more.subset_of(m_less);
    }
    verdict.outcome_more = phi_star(inst, base, more).matching;
    verdict.outcome_less = phi_star(inst, base, less).matching;
    verdict.more_dominated_by_less =
        pareto_dominates(verdict.outcome_less, verdict.outcome_more, inst, group);
    return verdict;
}

} // namespace schoolmatch
