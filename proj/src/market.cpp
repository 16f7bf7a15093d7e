// market.cpp
#include "schoolmatch/market.hpp"

#include <algorithm>

namespace schoolmatch {

Instance::Instance(std::vector<std::string> students, std::vector<SchoolInfo> schools,
                   std::map<std::string, std::vector<std::string>> prefs,
                   std::vector<PrioritySet> priorities)
    : students_(std::move(students)), schools_(std::move(schools)) {
    if (students_.empty()) {
        throw err::parse("instance has no students");
    }
    std::sort(students_.begin(), students_.end());
    if (std::adjacent_find(students_.begin(), students_.end()) != students_.end()) {
        throw err::parse("duplicate student id");
    }
    if (schools_.empty()) {
        throw err::parse("instance has no schools");
    }
    for (const SchoolInfo& school : schools_) {
        if (school.capacity < 1) {
            throw err::parse("school '" + school.id + "' must have positive capacity");
        }
        if (school_index(school.id) != (&school - schools_.data())) {
            throw err::parse("duplicate school id '" + school.id + "'");
        }
    }

    prefs_.assign(students_.size(), {});
    for (const auto& [sid, listed] : prefs) {
        int i = student_index(sid);
        if (i < 0) {
            throw err::parse("preferences name unknown student '" + sid + "'");
        }
        for (const std::string& school : listed) {
            int s = school_index(school);
            if (s < 0) {
                throw err::parse("student '" + sid + "' lists unknown school '" + school + "'");
            }
            if (std::find(prefs_[i].begin(), prefs_[i].end(), s) != prefs_[i].end()) {
                throw err::parse("student '" + sid + "' lists school '" + school + "' twice");
            }
            prefs_[i].push_back(s);
        }
    }

    if (priorities.size() != schools_.size()) {
        throw err::parse("expected exactly one priority set per school");
    }
    priorities_.resize(schools_.size());
    for (PrioritySet& ps : priorities) {
        int s = school_index(ps.school);
        if (s < 0) {
            throw err::parse("priorities name unknown school '" + ps.school + "'");
        }
        if (!priorities_[s].orders.empty()) {
            throw err::parse("duplicate priority set for school '" + ps.school + "'");
        }
        if (ps.orders.empty()) {
            throw err::parse("priority set of school '" + ps.school + "' is empty");
        }
        for (const Relation& order : ps.orders) {
            if (order.ground() != students_) {
                throw err::parse("priority of school '" + ps.school +
                                 "' is not over the instance's students");
            }
        }
        priorities_[s] = std::move(ps);
    }

    // Recovered total order per student: acceptable schools first (as listed),
    // then the outside option, then the unlisted schools in input order.
    rank_.assign(students_.size(), std::vector<int>(schools_.size() + 1, 0));
    for (int i = 0; i < num_students(); ++i) {
        std::vector<int>& row = rank_[i];
        std::fill(row.begin(), row.end(), -1);
        int next = 0;
        for (int s : prefs_[i]) {
            row[s] = next++;
        }
        row[schools_.size()] = next++; // outside option
        for (int s = 0; s < num_schools(); ++s) {
            if (row[s] < 0) {
                row[s] = next++;
            }
        }
    }
}

int Instance::student_index(std::string_view id) const {
    auto it = std::lower_bound(students_.begin(), students_.end(), id);
    if (it == students_.end() || *it != id) {
        return -1;
    }
    return static_cast<int>(it - students_.begin());
}

int Instance::school_index(std::string_view id) const {
    for (int s = 0; s < num_schools(); ++s) {
        if (schools_[s].id == id) {
            return s;
        }
    }
    return -1;
}

int Instance::rank(int i, int school) const {
    return rank_[i][school == kUnmatched ? schools_.size() : school];
}

bool Instance::acceptable(int i, int school) const {
    return school != kUnmatched && rank(i, school) < rank(i, kUnmatched);
}

bool Instance::single_priority() const {
    return std::all_of(priorities_.begin(), priorities_.end(),
                       [](const PrioritySet& ps) { return ps.orders.size() == 1; });
}

Profile Instance::single_profile() const {
    if (!single_priority()) {
        throw err::precondition("instance carries multiple priority orders per school");
    }
    Profile out;
    out.reserve(priorities_.size());
    for (const PrioritySet& ps : priorities_) {
        out.push_back(ps.orders.front());
    }
    return out;
}

Profile Instance::m_profile() const {
    Profile out;
    out.reserve(priorities_.size());
    for (const PrioritySet& ps : priorities_) {
        out.push_back(m_combine(ps));
    }
    return out;
}

Profile Instance::w_profile() const {
    Profile out;
    out.reserve(priorities_.size());
    for (const PrioritySet& ps : priorities_) {
        out.push_back(w_combine(ps));
    }
    return out;
}

void Instance::check_profile(const Profile& profile) const {
    if (static_cast<int>(profile.size()) != num_schools()) {
        throw err::precondition("profile does not cover every school");
    }
    for (const Relation& r : profile) {
        if (r.ground() != students_) {
            throw err::precondition("profile relation is not over the instance's students");
        }
    }
}

std::vector<int> Instance::group_from_ids(const std::vector<std::string>& ids) const {
    std::vector<int> group;
    group.reserve(ids.size());
    for (const std::string& id : ids) {
        int i = student_index(id);
        if (i < 0) {
            throw err::parse("group names unknown student '" + id + "'");
        }
        group.push_back(i);
    }
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
    return group;
}

Matching Matching::from_assignment(const Instance& inst, std::vector<int> assign) {
    if (static_cast<int>(assign.size()) != inst.num_students()) {
        throw err::parse("matching does not cover every student");
    }
    Matching mu;
    mu.assign_ = std::move(assign);
    mu.rosters_.assign(inst.num_schools(), {});
    for (int i = 0; i < inst.num_students(); ++i) {
        int s = mu.assign_[i];
        if (s == kUnmatched) {
            continue;
        }
        if (s < 0 || s >= inst.num_schools()) {
            throw err::parse("matching assigns an unknown school");
        }
        mu.rosters_[s].push_back(i);
    }
    for (int s = 0; s < inst.num_schools(); ++s) {
        if (mu.roster_size(s) > inst.capacity(s)) {
            throw err::parse("matching exceeds the capacity of school '" + inst.school_id(s) +
                             "'");
        }
    }
    return mu;
}

Matching Matching::from_parts(const Instance& inst, std::vector<int> assign,
                              const std::vector<std::vector<int>>& rosters) {
    Matching mu = from_assignment(inst, std::move(assign));
    if (rosters.size() != mu.rosters_.size()) {
        throw err::parse("matching rosters do not cover every school");
    }
    for (size_t s = 0; s < rosters.size(); ++s) {
        std::vector<int> sorted = rosters[s];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != mu.rosters_[s]) {
            throw err::parse("matching rosters are not the inverse of the assignment");
        }
    }
    return mu;
}

bool is_individually_rational(const Matching& mu, const Instance& inst) {
    for (int i = 0; i < inst.num_students(); ++i) {
        int s = mu.of(i);
        if (s != kUnmatched && !inst.acceptable(i, s)) {
            return false;
        }
    }
    return true;
}

bool is_nonwasteful(const Matching& mu, const Instance& inst) {
    for (int i = 0; i < inst.num_students(); ++i) {
        for (int s : inst.prefs(i)) {
            if (inst.prefers(i, s, mu.of(i)) && mu.roster_size(s) < inst.capacity(s)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

void sort_witnesses(std::vector<ViolationWitness>& out, const Instance& inst) {
    std::sort(out.begin(), out.end(), [&](const ViolationWitness& a, const ViolationWitness& b) {
        if (a.student != b.student) {
            return a.student < b.student; // student index order == id order
        }
        if (a.school != b.school) {
            return inst.school_id(a.school) < inst.school_id(b.school);
        }
        return a.order_index < b.order_index;
    });
}

// Violations of one order, with the given index recorded in the witness.
void collect_violations(const Matching& mu, const Instance& inst, int school,
                        const Relation& order, int order_index,
                        std::vector<ViolationWitness>& out) {
    for (int i = 0; i < inst.num_students(); ++i) {
        if (!inst.prefers(i, school, mu.of(i))) {
            continue;
        }
        for (int j : mu.roster(school)) {
            if (j != i && order.at(i, j)) {
                out.push_back({i, j, school, order_index});
            }
        }
    }
}

} // namespace

std::vector<ViolationWitness> fairness_violations(const Matching& mu, const Instance& inst,
                                                  const Profile& profile) {
    inst.check_profile(profile);
    std::vector<ViolationWitness> out;
    for (int s = 0; s < inst.num_schools(); ++s) {
        collect_violations(mu, inst, s, profile[s], 0, out);
    }
    sort_witnesses(out, inst);
    return out;
}

bool is_fair(const Matching& mu, const Instance& inst, const Profile& profile) {
    return fairness_violations(mu, inst, profile).empty();
}

bool is_stable(const Matching& mu, const Instance& inst, const Profile& profile) {
    return is_individually_rational(mu, inst) && is_nonwasteful(mu, inst) &&
           is_fair(mu, inst, profile);
}

std::vector<ViolationWitness> m_fairness_violations(const Matching& mu, const Instance& inst) {
    std::vector<ViolationWitness> out;
    for (int s = 0; s < inst.num_schools(); ++s) {
        const std::vector<Relation>& orders = inst.priority_set(s).orders;
        std::vector<ViolationWitness> raw;
        for (size_t k = 0; k < orders.size(); ++k) {
            collect_violations(mu, inst, s, orders[k], static_cast<int>(k), raw);
        }
        for (const ViolationWitness& w : raw) {
            bool excused = std::any_of(orders.begin(), orders.end(), [&](const Relation& other) {
                return other.at(w.incumbent, w.student);
            });
            if (!excused) {
                out.push_back(w);
            }
        }
    }
    sort_witnesses(out, inst);
    return out;
}

bool is_m_fair(const Matching& mu, const Instance& inst) {
    return m_fairness_violations(mu, inst).empty();
}

bool is_m_stable(const Matching& mu, const Instance& inst) {
    return is_individually_rational(mu, inst) && is_nonwasteful(mu, inst) &&
           is_m_fair(mu, inst);
}

std::vector<ViolationWitness> weak_m_fairness_violations(const Matching& mu,
                                                         const Instance& inst) {
    std::vector<ViolationWitness> out;
    for (int s = 0; s < inst.num_schools(); ++s) {
        const std::vector<Relation>& orders = inst.priority_set(s).orders;
        for (int i = 0; i < inst.num_students(); ++i) {
            if (!inst.prefers(i, s, mu.of(i))) {
                continue;
            }
            for (int j : mu.roster(s)) {
                if (j == i) {
                    continue;
                }
                bool in_all = std::all_of(orders.begin(), orders.end(),
                                          [&](const Relation& order) { return order.at(i, j); });
                if (in_all) {
                    out.push_back({i, j, s, 0});
                }
            }
        }
    }
    sort_witnesses(out, inst);
    return out;
}

bool is_weakly_m_fair(const Matching& mu, const Instance& inst) {
    return weak_m_fairness_violations(mu, inst).empty();
}

bool is_weakly_m_stable(const Matching& mu, const Instance& inst) {
    return is_individually_rational(mu, inst) && is_nonwasteful(mu, inst) &&
           is_weakly_m_fair(mu, inst);
}

bool pareto_dominates(const Matching& mu2, const Matching& mu1, const Instance& inst,
                      const std::vector<int>& group) {
    if (group.empty()) {
        throw err::empty_group();
    }
    bool someone_gains = false;
    for (int i : group) {
        if (inst.prefers(i, mu1.of(i), mu2.of(i))) {
            return false;
        }
        if (inst.prefers(i, mu2.of(i), mu1.of(i))) {
            someone_gains = true;
        }
    }
    return someone_gains;
}

bool weakly_pareto_dominates(const Matching& mu2, const Matching& mu1, const Instance& inst,
                             const std::vector<int>& group) {
    if (group.empty()) {
        throw err::empty_group();
    }
    bool equal_on_group = std::all_of(group.begin(), group.end(),
                                      [&](int i) { return mu2.of(i) == mu1.of(i); });
    return equal_on_group || pareto_dominates(mu2, mu1, inst, group);
}

std::vector<int> all_students_group(const Instance& inst) {
    std::vector<int> group(inst.num_students());
    for (int i = 0; i < inst.num_students(); ++i) {
        group[i] = i;
    }
    return group;
}

std::vector<std::pair<int, int>> double_blocking_pairs(const Matching& mu, const Instance& inst,
                                                       const Relation& score,
                                                       const Profile& school_pref) {
    inst.check_profile(school_pref);
    if (score.ground() != inst.students()) {
        throw err::precondition("score order is not over the instance's students");
    }
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < inst.num_students(); ++i) {
        for (int s = 0; s < inst.num_schools(); ++s) {
            if (!inst.prefers(i, s, mu.of(i))) {
                continue;
            }
            bool score_blocked = false;
            bool pref_blocked = false;
            for (int j : mu.roster(s)) {
                if (j == i) {
                    continue;
                }
                score_blocked = score_blocked || score.at(i, j);
                pref_blocked = pref_blocked || school_pref[s].at(i, j);
            }
            if (score_blocked && pref_blocked) {
                out.emplace_back(i, s);
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) {
            return a.first < b.first;
        }
        return inst.school_id(a.second) < inst.school_id(b.second);
    });
    return out;
}

} // namespace schoolmatch
