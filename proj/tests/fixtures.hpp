// fixtures.hpp - the worked examples used as golden data across the suites.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "schoolmatch/market.hpp"

namespace fixtures {

using schoolmatch::Instance;
using schoolmatch::Matching;
using schoolmatch::PrioritySet;
using schoolmatch::Profile;
using schoolmatch::Relation;
using schoolmatch::SchoolInfo;

using PrefMap = std::map<std::string, std::vector<std::string>>;

inline PrefMap all_want(const std::vector<std::string>& students,
                        const std::vector<std::string>& ranking) {
    PrefMap prefs;
    for (const std::string& sid : students) {
        prefs[sid] = ranking;
    }
    return prefs;
}

inline Matching match(const Instance& inst,
                      const std::map<std::string, std::string>& assign) {
    std::vector<int> slots(inst.num_students(), schoolmatch::kUnmatched);
    for (const auto& [sid, school] : assign) {
        slots[inst.student_index(sid)] = school.empty() ? schoolmatch::kUnmatched
                                                        : inst.school_index(school);
    }
    return Matching::from_assignment(inst, std::move(slots));
}

// Sibling and walk-zone priorities at one school with two seats; four
// students, all finding the school acceptable.
struct SiblingWalkZone {
    std::vector<std::string> students{"i1", "i2", "i3", "i4"};
    Relation sibling{students,
                     {{"i1", "i3"}, {"i2", "i3"}, {"i1", "i4"}, {"i2", "i4"}}};
    Relation walkzone{students,
                      {{"i1", "i2"}, {"i3", "i2"}, {"i1", "i4"}, {"i3", "i4"}}};
    Relation combined{students,
                      {{"i1", "i2"}, {"i1", "i3"}, {"i1", "i4"}, {"i2", "i4"}, {"i3", "i4"}}};
    Relation boston_total = Relation::chain({"i1", "i2", "i3", "i4"});

    Instance instance{students,
                      {{"s", 2}},
                      all_want(students, {"s"}),
                      {{"s", {sibling, walkzone}}}};

    Matching mu = match(instance, {{"i1", "s"}, {"i2", "s"}, {"i3", ""}, {"i4", ""}});
    Matching mu_prime = match(instance, {{"i1", "s"}, {"i3", "s"}, {"i2", ""}, {"i4", ""}});
};

// A total order plus single-pair partial orders; the combined relation is
// intransitive for the pair set and cyclic for the triple set.
struct ConflictingPairSets {
    std::vector<std::string> students{"i1", "i2", "i3"};
    Relation total1 = Relation::chain({"i1", "i2", "i3"});
    Relation pair31{students, {{"i3", "i1"}}};
    Relation pair12{students, {{"i1", "i2"}}};
    Relation pair23{students, {{"i2", "i3"}}};

    Instance pair_instance{students,
                           {{"s", 1}},
                           all_want(students, {"s"}),
                           {{"s", {total1, pair31}}}};
    Instance cyclic_instance{students,
                             {{"s", 1}},
                             all_want(students, {"s"}),
                             {{"s", {pair31, pair12, pair23}}}};
};

// Score-based priorities with three bonus-point schemes for the minority
// group {i1..i4}; the listed orders are the authoritative data.
struct BonusPoints {
    std::vector<std::string> students{"i1", "i2", "i3", "i4", "i5", "i6"};
    Relation scores = Relation::chain({"i6", "i4", "i2", "i5", "i3", "i1"});
    Relation bonus_a = Relation::chain({"i2", "i6", "i4", "i1", "i5", "i3"});
    Relation bonus_b = Relation::chain({"i2", "i6", "i4", "i3", "i1", "i5"});
    Relation bonus_c = Relation::chain({"i2", "i6", "i1", "i4", "i5", "i3"});
    std::vector<std::string> group_ids{"i1", "i2", "i3", "i4"};

    Instance instance{students,
                      {{"s", 2}},
                      all_want(students, {"s"}),
                      {{"s", {scores}}}};
    std::vector<int> group = instance.group_from_ids(group_ids);
};

// Acyclic but intransitive priority at one school; the adjusted run settles
// on a matching that violates the base priorities.
struct IntransitiveMarket {
    std::vector<std::string> students{"i1", "i2", "i3", "i4", "i5"};
    Relation pri_s1{students, {{"i1", "i5"}, {"i5", "i3"}, {"i3", "i2"}}};
    Relation pri_s2 = Relation::chain({"i2", "i1", "i3", "i4", "i5"});
    Relation pri_s3 = Relation::chain({"i3", "i4", "i2", "i1", "i5"});
    Relation pri_s4 = Relation::from_tiers({{"i4"}, {"i3", "i5"}, {"i1", "i2"}});

    Relation ext_s1 = Relation::chain({"i1", "i5", "i3", "i2", "i4"});
    Relation ext_s4 = Relation::chain({"i4", "i5", "i3", "i1", "i2"});

    Instance instance{students,
                      {{"s1", 1}, {"s2", 1}, {"s3", 1}, {"s4", 1}},
                      {
                          {"i1", {"s2", "s1"}},
                          {"i2", {"s1", "s2"}},
                          {"i3", {"s1", "s4", "s3"}},
                          {"i4", {"s3", "s4"}},
                          {"i5", {"s1", "s4"}},
                      },
                      {
                          {"s1", {pri_s1}},
                          {"s2", {pri_s2}},
                          {"s3", {pri_s3}},
                          {"s4", {pri_s4}},
                      }};

    Profile base = instance.single_profile();
    Profile extension{ext_s1, pri_s2, pri_s3, ext_s4};

    Matching round1 = match(instance, {{"i1", "s1"},
                                       {"i2", "s2"},
                                       {"i3", "s3"},
                                       {"i4", "s4"},
                                       {"i5", ""}});
    Matching mu_star = match(instance, {{"i1", "s2"},
                                        {"i2", "s1"},
                                        {"i3", "s4"},
                                        {"i4", "s3"},
                                        {"i5", ""}});
};

// Two improvements of a base profile for {i1, i2} where the monotonicity
// condition fails; the only student-optimal outcomes under the two pairings
// are dominance-ordered for the group.
struct CrossedImprovements {
    std::vector<std::string> students{"i1", "i2", "i3"};

    Profile base{Relation::chain({"i1", "i3", "i2"}), Relation::chain({"i3", "i1", "i2"}),
                 Relation::chain({"i2", "i3", "i1"})};
    Profile more{Relation::chain({"i1", "i2", "i3"}), Relation::chain({"i3", "i1", "i2"}),
                 Relation::chain({"i2", "i1", "i3"})};
    Profile less{Relation::chain({"i1", "i3", "i2"}), Relation::chain({"i3", "i2", "i1"}),
                 Relation::chain({"i2", "i1", "i3"})};
    std::vector<std::string> group_ids{"i1", "i2"};

    Instance instance{students,
                      {{"s1", 1}, {"s2", 1}, {"s3", 1}},
                      {
                          {"i1", {"s2", "s1", "s3"}},
                          {"i2", {"s2", "s3", "s1"}},
                          {"i3", {"s3", "s2", "s1"}},
                      },
                      {
                          {"s1", {base[0]}},
                          {"s2", {base[1]}},
                          {"s3", {base[2]}},
                      }};
    std::vector<int> group = instance.group_from_ids(group_ids);

    Matching mu = match(instance, {{"i1", "s1"}, {"i2", "s3"}, {"i3", "s2"}});
    Matching mu_prime = match(instance, {{"i1", "s1"}, {"i2", "s2"}, {"i3", "s3"}});

    Instance paired(const Profile& improved) const {
        return Instance(students,
                        {{"s1", 1}, {"s2", 1}, {"s3", 1}},
                        {
                            {"i1", {"s2", "s1", "s3"}},
                            {"i2", {"s2", "s3", "s1"}},
                            {"i3", {"s3", "s2", "s1"}},
                        },
                        {
                            {"s1", {base[0], improved[0]}},
                            {"s2", {base[1], improved[1]}},
                            {"s3", {base[2], improved[2]}},
                        });
    }
};

// Weak-order profiles where the more-improving pair leads to an outcome that
// the less-improving pair dominates for the group.
struct WeakOrderDomain {
    std::vector<std::string> students{"i1", "i2", "i3"};

    Profile base{Relation::chain({"i3", "i1", "i2"}),
                 Relation::from_tiers({{"i1"}, {"i2", "i3"}}),
                 Relation::chain({"i3", "i1", "i2"})};
    Profile more{Relation::chain({"i3", "i1", "i2"}), Relation::chain({"i1", "i2", "i3"}),
                 Relation::chain({"i1", "i2", "i3"})};
    Profile less{Relation::chain({"i3", "i1", "i2"}),
                 Relation::from_tiers({{"i1"}, {"i2", "i3"}}),
                 Relation::chain({"i1", "i3", "i2"})};
    std::vector<std::string> group_ids{"i1", "i2"};

    PrefMap prefs{
        {"i1", {"s1", "s2", "s3"}},
        {"i2", {"s1", "s2", "s3"}},
        {"i3", {"s2", "s1", "s3"}},
    };

    Instance paired(const Profile& improved) const {
        return Instance(students,
                        {{"s1", 1}, {"s2", 1}, {"s3", 1}},
                        prefs,
                        {
                            {"s1", {base[0], improved[0]}},
                            {"s2", {base[1], improved[1]}},
                            {"s3", {base[2], improved[2]}},
                        });
    }

    Instance with_more = paired(more);
    Instance with_less = paired(less);
    std::vector<int> group = with_more.group_from_ids(group_ids);

    Matching mu_more = match(with_more, {{"i1", "s2"}, {"i2", "s3"}, {"i3", "s1"}});
    Matching mu_less = match(with_less, {{"i1", "s1"}, {"i2", "s3"}, {"i3", "s2"}});
};

// Score order against the school's own preference order: the M-stable
// matching leaves (i1, s) as a double blocking pair. The school's capacity is
// fixed at two so that the matching is non-wasteful.
struct ScoreVsPreference {
    std::vector<std::string> students{"i1", "i2", "i3"};
    Relation score = Relation::chain({"i2", "i1", "i3"});
    Relation school_pref = Relation::chain({"i3", "i1", "i2"});

    Instance instance{students,
                      {{"s", 2}},
                      all_want(students, {"s"}),
                      {{"s", {score, school_pref}}}};

    Matching mu = match(instance, {{"i1", ""}, {"i2", "s"}, {"i3", "s"}});
    Matching mu_alt = match(instance, {{"i1", "s"}, {"i2", "s"}, {"i3", ""}});
};

} // namespace fixtures
