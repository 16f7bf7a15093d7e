// oracle.cpp
#include "schoolmatch/oracle.hpp"

namespace schoolmatch {

void for_each_matching(const Instance& inst, const std::function<void(const Matching&)>& fn) {
    if (inst.num_students() > kOracleMaxStudents) {
        throw err::too_large("oracle enumeration is capped at " +
                             std::to_string(kOracleMaxStudents) + " students");
    }
    const int n = inst.num_students();
    std::vector<int> assign(n, kUnmatched);
    std::vector<int> load(inst.num_schools(), 0);

    auto recurse = [&](auto&& self, int i) -> void {
        if (i == n) {
            fn(Matching::from_assignment(inst, assign));
            return;
        }
        assign[i] = kUnmatched;
        self(self, i + 1);
        for (int s : inst.prefs(i)) {
            if (load[s] < inst.capacity(s)) {
                assign[i] = s;
                ++load[s];
                self(self, i + 1);
                --load[s];
                assign[i] = kUnmatched;
            }
        }
    };
    recurse(recurse, 0);
}

std::vector<Matching> enumerate_matchings(const Instance& inst) {
    std::vector<Matching> out;
    for_each_matching(inst, [&](const Matching& mu) { out.push_back(mu); });
    return out;
}

namespace {

std::vector<Matching> filtered(const Instance& inst,
                               const std::function<bool(const Matching&)>& keep) {
    std::vector<Matching> out;
    for_each_matching(inst, [&](const Matching& mu) {
        if (keep(mu)) {
            out.push_back(mu);
        }
    });
    return out;
}

} // namespace

std::vector<Matching> stable_set(const Instance& inst, const Profile& profile) {
    return filtered(inst, [&](const Matching& mu) { return is_stable(mu, inst, profile); });
}

std::vector<Matching> m_stable_set(const Instance& inst) {
    return filtered(inst, [&](const Matching& mu) { return is_m_stable(mu, inst); });
}

std::vector<Matching> weakly_m_stable_set(const Instance& inst) {
    return filtered(inst, [&](const Matching& mu) { return is_weakly_m_stable(mu, inst); });
}

std::vector<Matching> optimal_subset(const Instance& inst, const std::vector<Matching>& pool,
                                     const std::vector<int>& group) {
    std::vector<Matching> out;
    for (const Matching& candidate : pool) {
        bool dominated = false;
        for (const Matching& other : pool) {
            if (pareto_dominates(other, candidate, inst, group)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            out.push_back(candidate);
        }
    }
    return out;
}

OracleReport analyze(const Instance& inst, const std::optional<std::vector<int>>& group) {
    OracleReport report;
    for_each_matching(inst, [&](const Matching& mu) {
        ++report.feasible_count;
        report.feasible.push_back(mu);
        if (is_individually_rational(mu, inst) && is_nonwasteful(mu, inst)) {
            report.ir_nonwasteful.push_back(mu);
        }
        if (is_m_stable(mu, inst)) {
            report.m_stable.push_back(mu);
        }
        if (is_weakly_m_stable(mu, inst)) {
            report.weakly_m_stable.push_back(mu);
        }
    });
    if (inst.single_priority()) {
        Profile single = inst.single_profile();
        report.stable = stable_set(inst, single);
        report.sosm = optimal_subset(inst, report.stable, all_students_group(inst));
    }
    report.somsm = optimal_subset(inst, report.m_stable, all_students_group(inst));
    if (group.has_value()) {
        report.has_group = true;
        report.group_optimal_m_stable = optimal_subset(inst, report.m_stable, *group);
    }
    return report;
}

} // namespace schoolmatch
