// oracle.hpp - exhaustive ground truth on small instances: enumerate every
// capacity-feasible assignment of students to acceptable schools (or none),
// filter by each stability notion, and compute the non-dominated sets.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "schoolmatch/market.hpp"

namespace schoolmatch {

inline constexpr int kOracleMaxStudents = 9;

// Calls fn for every feasible matching exactly once, in a deterministic
// order (students by id; per student: unmatched first, then the acceptable
// schools best-first). Throws when the instance exceeds the size cap.
void for_each_matching(const Instance& inst, const std::function<void(const Matching&)>& fn);

std::vector<Matching> enumerate_matchings(const Instance& inst);

std::vector<Matching> stable_set(const Instance& inst, const Profile& profile);
std::vector<Matching> m_stable_set(const Instance& inst);
std::vector<Matching> weakly_m_stable_set(const Instance& inst);

// Members of the pool not Pareto dominated for the group by another member.
std::vector<Matching> optimal_subset(const Instance& inst, const std::vector<Matching>& pool,
                                     const std::vector<int>& group);

struct OracleReport {
    long feasible_count = 0;
    std::vector<Matching> feasible;
    std::vector<Matching> ir_nonwasteful;
    std::vector<Matching> stable;   // only for single-priority instances
    std::vector<Matching> m_stable;
    std::vector<Matching> weakly_m_stable;
    std::vector<Matching> sosm;     // only for single-priority instances
    std::vector<Matching> somsm;
    std::vector<Matching> group_optimal_m_stable; // when a group was given
    bool has_group = false;
};

OracleReport analyze(const Instance& inst,
                     const std::optional<std::vector<int>>& group = std::nullopt);

} // namespace schoolmatch
