// market.hpp - school choice instances, matchings, and the fairness /
// stability predicates over single and multiple priority orders.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "schoolmatch/combine.hpp"
#include "schoolmatch/relation.hpp"

namespace schoolmatch {

struct SchoolInfo {
    std::string id;
    int capacity = 1;
};

// One priority relation per school, aligned with the instance school order.
using Profile = std::vector<Relation>;

inline constexpr int kUnmatched = -1;

class Matching;

class Instance {
public:
    // Students are canonicalized to id order; school order is kept as given.
    // `prefs` lists each student's acceptable schools, best first.
    // `priorities` holds one nonempty PrioritySet per school; all-singleton
    // sets form a single-priority problem.
    Instance(std::vector<std::string> students, std::vector<SchoolInfo> schools,
             std::map<std::string, std::vector<std::string>> prefs,
             std::vector<PrioritySet> priorities);

    int num_students() const { return static_cast<int>(students_.size()); }
    int num_schools() const { return static_cast<int>(schools_.size()); }

    const std::vector<std::string>& students() const { return students_; }
    const std::vector<SchoolInfo>& schools() const { return schools_; }
    const std::string& student_id(int i) const { return students_[i]; }
    const std::string& school_id(int s) const { return schools_[s].id; }
    int capacity(int s) const { return schools_[s].capacity; }

    int student_index(std::string_view id) const; // -1 when absent
    int school_index(std::string_view id) const;

    // Acceptable schools of student i, best first.
    const std::vector<int>& prefs(int i) const { return prefs_[i]; }

    // Position of `school` (or kUnmatched for the outside option) in student
    // i's recovered total order over schools-and-outside; smaller is better.
    int rank(int i, int school) const;
    bool prefers(int i, int a, int b) const { return rank(i, a) < rank(i, b); }
    bool weakly_prefers(int i, int a, int b) const { return rank(i, a) <= rank(i, b); }
    bool acceptable(int i, int school) const;

    const std::vector<PrioritySet>& priorities() const { return priorities_; }
    const PrioritySet& priority_set(int s) const { return priorities_[s]; }

    bool single_priority() const;
    Profile single_profile() const; // throws unless every set is a singleton
    Profile m_profile() const;      // m_combine per school
    Profile w_profile() const;      // w_combine per school

    // Validates that `profile` has one relation per school over the student
    // ground set; used by operations taking explicit profiles.
    void check_profile(const Profile& profile) const;

    std::vector<int> group_from_ids(const std::vector<std::string>& ids) const;

private:
    std::vector<std::string> students_; // sorted ids; index is canonical
    std::vector<SchoolInfo> schools_;
    std::vector<std::vector<int>> prefs_;
    std::vector<PrioritySet> priorities_;
    std::vector<std::vector<int>> rank_; // [student][school]; last slot = outside
};

class Matching {
public:
    Matching() = default;

    // `assign` maps student index -> school index or kUnmatched.
    static Matching from_assignment(const Instance& inst, std::vector<int> assign);

    // Validates that rosters are exactly the inverse of assign.
    static Matching from_parts(const Instance& inst, std::vector<int> assign,
                               const std::vector<std::vector<int>>& rosters);

    int of(int student) const { return assign_[student]; }
    const std::vector<int>& assign() const { return assign_; }
    const std::vector<int>& roster(int school) const { return rosters_[school]; }
    int roster_size(int school) const { return static_cast<int>(rosters_[school].size()); }

    bool operator==(const Matching& other) const { return assign_ == other.assign_; }

private:
    std::vector<int> assign_;
    std::vector<std::vector<int>> rosters_; // sorted student indices per school
};

// A priority violation: student claims a seat of incumbent at school, under
// the order with the given index inside the school's priority set.
struct ViolationWitness {
    int student = -1;
    int incumbent = -1;
    int school = -1;
    int order_index = 0;

    bool operator==(const ViolationWitness&) const = default;
};

bool is_individually_rational(const Matching& mu, const Instance& inst);
bool is_nonwasteful(const Matching& mu, const Instance& inst);

// All (student, incumbent, school) triples violating the single profile,
// sorted by (student id, school id, order index). Empty list iff fair.
std::vector<ViolationWitness> fairness_violations(const Matching& mu, const Instance& inst,
                                                  const Profile& profile);
bool is_fair(const Matching& mu, const Instance& inst, const Profile& profile);
bool is_stable(const Matching& mu, const Instance& inst, const Profile& profile);

// Unexcused violations under multiple priorities: a violation of one order
// counts unless another order of the same school ranks the incumbent above
// the claimant.
std::vector<ViolationWitness> m_fairness_violations(const Matching& mu, const Instance& inst);
bool is_m_fair(const Matching& mu, const Instance& inst);
bool is_m_stable(const Matching& mu, const Instance& inst);

// Weak variants: a violation counts only when every order of the school
// ranks the claimant above the incumbent.
std::vector<ViolationWitness> weak_m_fairness_violations(const Matching& mu,
                                                         const Instance& inst);
bool is_weakly_m_fair(const Matching& mu, const Instance& inst);
bool is_weakly_m_stable(const Matching& mu, const Instance& inst);

// mu2 dominates mu1 for the group: nobody in the group prefers mu1 and
// someone in the group prefers mu2. The weak variant is also true when the
// two matchings agree on the group.
bool pareto_dominates(const Matching& mu2, const Matching& mu1, const Instance& inst,
                      const std::vector<int>& group);
bool weakly_pareto_dominates(const Matching& mu2, const Matching& mu1, const Instance& inst,
                             const std::vector<int>& group);

std::vector<int> all_students_group(const Instance& inst);

// Pairs (student, school) whose claim violates both the score order and the
// school's own preference order, sorted by (student id, school id).
std::vector<std::pair<int, int>> double_blocking_pairs(const Matching& mu, const Instance& inst,
                                                       const Relation& score,
                                                       const Profile& school_pref);

} // namespace schoolmatch
