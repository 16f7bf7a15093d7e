// spda.cpp
#include "schoolmatch/spda.hpp"

#include <algorithm>
#include <random>

namespace schoolmatch {

namespace {

// Per-school rank arrays from the total orders; rank 0 is the highest
// priority student.
std::vector<std::vector<int>> priority_ranks(const Instance& inst, const Profile& totals) {
    inst.check_profile(totals);
    std::vector<std::vector<int>> ranks(totals.size());
    for (int s = 0; s < inst.num_schools(); ++s) {
        if (totals[s].classify().order != RelationOrder::Total) {
            throw err::not_total_order(inst.school_id(s));
        }
        ranks[s].assign(inst.num_students(), 0);
        for (int a = 0; a < inst.num_students(); ++a) {
            int beaten_by = 0;
            for (int b = 0; b < inst.num_students(); ++b) {
                beaten_by += totals[s].at(b, a);
            }
            ranks[s][a] = beaten_by;
        }
    }
    return ranks;
}

DaOutcome run_da_core(const Instance& inst, const Profile& totals, const SubProblem& sub,
                      std::mt19937_64* shuffle_rng) {
    const auto ranks = priority_ranks(inst, totals);
    const int n = inst.num_students();
    const int m = inst.num_schools();

    std::vector<int> next(n, 0);
    std::vector<std::vector<int>> held(m);
    std::vector<int> assigned(n, kUnmatched);
    std::vector<std::vector<char>> rejected_flag(m, std::vector<char>(n, 0));
    long proposals = 0;

    std::vector<int> pool; // students who still have schools to try
    for (int i = 0; i < n; ++i) {
        if (sub.student_in[i] && !sub.prefs[i].empty()) {
            pool.push_back(i);
        }
    }

    while (!pool.empty()) {
        size_t pick = 0; // lowest student id unless a shuffle generator is given
        if (shuffle_rng != nullptr) {
            pick = std::uniform_int_distribution<size_t>(0, pool.size() - 1)(*shuffle_rng);
        } else {
            for (size_t k = 1; k < pool.size(); ++k) {
                if (pool[k] < pool[pick]) {
                    pick = k;
                }
            }
        }
        int i = pool[pick];
        pool.erase(pool.begin() + pick);

        int s = sub.prefs[i][next[i]++];
        ++proposals;

        int loser = i;
        if (static_cast<int>(held[s].size()) < inst.capacity(s)) {
            held[s].push_back(i);
            assigned[i] = s;
            loser = -1;
        } else {
            // the school keeps the q_s best of holders plus the proposer
            int worst_slot = -1;
            int worst = i;
            for (size_t slot = 0; slot < held[s].size(); ++slot) {
                if (ranks[s][held[s][slot]] > ranks[s][worst]) {
                    worst = held[s][slot];
                    worst_slot = static_cast<int>(slot);
                }
            }
            loser = worst;
            if (worst != i) {
                held[s][worst_slot] = i;
                assigned[i] = s;
                assigned[worst] = kUnmatched;
            }
            rejected_flag[s][loser] = 1;
        }
        if (loser >= 0 && next[loser] < static_cast<int>(sub.prefs[loser].size())) {
            pool.push_back(loser);
        }
    }

    DaOutcome out;
    out.matching = Matching::from_assignment(inst, std::move(assigned));
    out.rejections.assign(m, {});
    for (int s = 0; s < m; ++s) {
        for (int i = 0; i < n; ++i) {
            if (rejected_flag[s][i]) {
                out.rejections[s].push_back(i);
            }
        }
    }
    out.proposal_count = proposals;
    return out;
}

} // namespace

SubProblem SubProblem::whole(const Instance& inst) {
    SubProblem sub;
    sub.student_in.assign(inst.num_students(), 1);
    sub.school_in.assign(inst.num_schools(), 1);
    sub.prefs.resize(inst.num_students());
    for (int i = 0; i < inst.num_students(); ++i) {
        sub.prefs[i] = inst.prefs(i);
    }
    return sub;
}

DaOutcome run_da(const Instance& inst) { return run_da(inst, inst.single_profile()); }

DaOutcome run_da(const Instance& inst, const Profile& totals) {
    return run_da(inst, totals, SubProblem::whole(inst));
}

DaOutcome run_da(const Instance& inst, const Profile& totals, const SubProblem& sub) {
    return run_da_core(inst, totals, sub, nullptr);
}

DaOutcome run_da_randomized(const Instance& inst, const Profile& totals, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return run_da_core(inst, totals, SubProblem::whole(inst), &rng);
}

std::vector<int> underdemanded_schools(const Matching& mu, const Instance& inst,
                                       const std::vector<char>& student_in,
                                       const std::vector<char>& school_in) {
    std::vector<int> out;
    for (int s = 0; s < inst.num_schools(); ++s) {
        if (!school_in[s]) {
            continue;
        }
        bool demanded = false;
        for (int i = 0; i < inst.num_students() && !demanded; ++i) {
            demanded = student_in[i] && inst.prefers(i, s, mu.of(i));
        }
        if (!demanded) {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<int> underdemanded(const DaOutcome& out, const Instance& inst) {
    std::vector<int> result;
    for (int s = 0; s < inst.num_schools(); ++s) {
        if (out.rejection_free(s)) {
            result.push_back(s);
        }
    }
    return result;
}

} // namespace schoolmatch
