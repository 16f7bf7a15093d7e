// eada.cpp
#include "schoolmatch/eada.hpp"

#include <algorithm>
#include <sstream>

namespace schoolmatch {

namespace {

constexpr int kUnset = -2;

std::vector<int> active_list(const std::vector<char>& mask) {
    std::vector<int> out;
    for (size_t k = 0; k < mask.size(); ++k) {
        if (mask[k]) {
            out.push_back(static_cast<int>(k));
        }
    }
    return out;
}

} // namespace

EadaResult run_eada(const Instance& inst, const Profile& extension) {
    return run_eada_base(inst, inst.single_profile(), extension);
}

EadaResult run_eada_base(const Instance& inst, const Profile& base, const Profile& extension,
                         bool desire_clause) {
    inst.check_profile(base);
    inst.check_profile(extension);

    EadaTrace trace;
    for (int s = 0; s < inst.num_schools(); ++s) {
        RelationClass cls = base[s].classify();
        if (!cls.asymmetric) {
            throw err::precondition("base priority of school '" + inst.school_id(s) +
                                    "' is not asymmetric");
        }
        if (!cls.acyclic) {
            throw err::cyclic_priority(inst.school_id(s));
        }
        if (!cls.transitive) {
            trace.intransitive_base = true;
        }
        if (extension[s].classify().order != RelationOrder::Total ||
            !base[s].subset_of(extension[s])) {
            throw err::extension_mismatch(inst.school_id(s));
        }
    }
    trace.extension = extension;

    const int n = inst.num_students();
    const int m = inst.num_schools();
    std::vector<int> settled(n, kUnset);
    trace.elimination_round_of_student.assign(n, 0);
    trace.elimination_round_of_school.assign(m, 0);

    SubProblem sub = SubProblem::whole(inst);
    std::vector<std::vector<int>> truncations(n);

    for (int round = 1; std::count(sub.school_in.begin(), sub.school_in.end(), 1) > 0; ++round) {
        EadaRound rec;
        rec.students = active_list(sub.student_in);
        rec.schools = active_list(sub.school_in);
        rec.truncations = truncations;
        rec.prefs = sub.prefs;

        DaOutcome out = run_da(inst, extension, sub);
        rec.round_matching = out.matching;

        std::vector<int> snapshot_assign(n, kUnmatched);
        for (int i = 0; i < n; ++i) {
            snapshot_assign[i] = settled[i] != kUnset ? settled[i] : out.matching.of(i);
        }
        rec.snapshot = Matching::from_assignment(inst, std::move(snapshot_assign));

        // Settle the schools no remaining student desires, judged by the
        // original preferences, and the students they hold. If nothing
        // qualifies and every remaining student is matched, settle the
        // rejection-free schools instead; one always exists, so the run
        // cannot loop on an unchanged subproblem.
        rec.underdemanded =
            underdemanded_schools(rec.snapshot, inst, sub.student_in, sub.school_in);
        std::vector<char> under(m, 0);
        for (int s : rec.underdemanded) {
            under[s] = 1;
        }
        auto eliminated_students = [&] {
            std::vector<int> out_students;
            for (int i : rec.students) {
                int s = rec.snapshot.of(i);
                if (s == kUnmatched || under[s]) {
                    out_students.push_back(i);
                }
            }
            return out_students;
        };
        rec.eliminated = eliminated_students();
        if (rec.underdemanded.empty() && rec.eliminated.empty()) {
            rec.rejection_fallback = true;
            for (int s : rec.schools) {
                if (out.rejection_free(s)) {
                    rec.underdemanded.push_back(s);
                    under[s] = 1;
                }
            }
            rec.eliminated = eliminated_students();
            if (rec.underdemanded.empty()) {
                // Unreachable: with every remaining student matched, the last
                // rejection chain must have ended at a rejection-free school.
                throw err::precondition("internal error: no removable school in a round");
            }
        }

        for (int s : rec.underdemanded) {
            sub.school_in[s] = 0;
            trace.elimination_round_of_school[s] = round;
        }
        for (int i : rec.eliminated) {
            sub.student_in[i] = 0;
            settled[i] = rec.snapshot.of(i);
            trace.elimination_round_of_student[i] = round;
        }
        for (int i = 0; i < n; ++i) {
            if (settled[i] != kUnset) {
                rec.cumulative_eliminated.push_back(i);
            }
        }

        bool done = std::count(sub.school_in.begin(), sub.school_in.end(), 1) == 0;
        if (done) {
            for (int i = 0; i < n; ++i) {
                if (settled[i] == kUnset) {
                    settled[i] = rec.snapshot.of(i);
                    trace.elimination_round_of_student[i] = round;
                }
            }
        } else {
            // Truncations for the next round: a remaining school becomes
            // unacceptable to student i when some just-settled student j both
            // desires it and holds base priority over i there. A desire only
            // counts while the school is still on j's working list: a claim
            // that was itself truncated in an earlier round stays surrendered.
            std::vector<std::vector<char>> still_wants(n);
            for (int j : rec.eliminated) {
                still_wants[j].assign(m, 0);
                for (int s : sub.prefs[j]) {
                    still_wants[j][s] = inst.prefers(j, s, settled[j]);
                }
            }
            truncations.assign(n, {});
            for (int i = 0; i < n; ++i) {
                if (!sub.student_in[i]) {
                    continue;
                }
                for (int s : sub.prefs[i]) {
                    if (!sub.school_in[s]) {
                        continue;
                    }
                    for (int j : rec.eliminated) {
                        if ((still_wants[j][s] || !desire_clause) && base[s].at(j, i)) {
                            truncations[i].push_back(s);
                            break;
                        }
                    }
                }
                if (!truncations[i].empty()) {
                    std::vector<int> kept;
                    for (int s : sub.prefs[i]) {
                        if (std::find(truncations[i].begin(), truncations[i].end(), s) ==
                            truncations[i].end()) {
                            kept.push_back(s);
                        }
                    }
                    sub.prefs[i] = std::move(kept);
                }
            }
            // Drop removed schools from the working lists.
            for (int i = 0; i < n; ++i) {
                std::erase_if(sub.prefs[i], [&](int s) { return !sub.school_in[s]; });
            }
        }

        trace.rounds.push_back(std::move(rec));
    }

    EadaResult result;
    result.matching = Matching::from_assignment(inst, std::move(settled));
    result.trace = std::move(trace);
    return result;
}

EadaResult run_ea_multi(const Instance& inst, const std::optional<std::vector<int>>& chosen) {
    Profile base;
    base.reserve(inst.num_schools());
    for (int s = 0; s < inst.num_schools(); ++s) {
        Relation combined = m_combine(inst.priority_set(s));
        if (!combined.classify().transitive) {
            throw err::refuse_non_partial(inst.school_id(s));
        }
        base.push_back(std::move(combined));
    }

    Profile extension;
    extension.reserve(inst.num_schools());
    if (chosen.has_value()) {
        if (static_cast<int>(chosen->size()) != inst.num_schools()) {
            throw err::precondition("chosen member list does not cover every school");
        }
        for (int s = 0; s < inst.num_schools(); ++s) {
            const std::vector<Relation>& orders = inst.priority_set(s).orders;
            int idx = (*chosen)[s];
            if (idx < 0 || idx >= static_cast<int>(orders.size())) {
                throw err::not_a_member(inst.school_id(s));
            }
            if (orders[idx].classify().order != RelationOrder::Total) {
                throw err::not_total("chosen member of school '" + inst.school_id(s) + "'");
            }
            extension.push_back(orders[idx]);
        }
    } else {
        for (const Relation& r : base) {
            extension.push_back(r.extended());
        }
    }
    return run_eada_base(inst, base, extension);
}

std::optional<std::string> check_trace_claims(const Instance& inst, const Profile& base,
                                              const EadaResult& result) {
    const std::vector<EadaRound>& rounds = result.trace.rounds;
    for (size_t k = 0; k < rounds.size(); ++k) {
        const Matching& snap = rounds[k].snapshot;
        if (!is_stable(snap, inst, base)) {
            return "round " + std::to_string(k + 1) + " snapshot is not stable for the base";
        }
        if (k == 0) {
            continue;
        }
        const Matching& prev = rounds[k - 1].snapshot;
        for (int i = 0; i < inst.num_students(); ++i) {
            if (inst.prefers(i, prev.of(i), snap.of(i))) {
                return "student " + inst.student_id(i) + " got worse in round " +
                       std::to_string(k + 1);
            }
        }
        for (int s = 0; s < inst.num_schools(); ++s) {
            if (snap.roster_size(s) != prev.roster_size(s)) {
                return "school " + inst.school_id(s) + " changed roster size in round " +
                       std::to_string(k + 1);
            }
        }
    }
    // Settled assignments never change after elimination.
    for (int i = 0; i < inst.num_students(); ++i) {
        auto from = static_cast<size_t>(result.trace.elimination_round_of_student[i]);
        for (size_t k = from; k <= rounds.size(); ++k) {
            if (rounds[k - 1].snapshot.of(i) != result.matching.of(i)) {
                return "settled assignment of " + inst.student_id(i) + " changed";
            }
        }
    }
    return std::nullopt;
}

std::string trace_to_text(const EadaTrace& trace, const Instance& inst) {
    std::ostringstream os;
    auto school_names = [&](const std::vector<int>& schools) {
        std::string out;
        for (int s : schools) {
            out += (out.empty() ? "" : " ") + inst.school_id(s);
        }
        return out.empty() ? "(none)" : out;
    };
    auto student_names = [&](const std::vector<int>& students) {
        std::string out;
        for (int i : students) {
            out += (out.empty() ? "" : " ") + inst.student_id(i);
        }
        return out.empty() ? "(none)" : out;
    };
    if (trace.intransitive_base) {
        os << "warning: base priorities are not transitive; the outcome may violate them\n";
    }
    for (size_t k = 0; k < trace.rounds.size(); ++k) {
        const EadaRound& round = trace.rounds[k];
        os << "round " << (k + 1) << (round.rejection_fallback ? " (rejection-free fallback)" : "")
           << "\n";
        os << "  students: " << student_names(round.students) << "\n";
        os << "  schools: " << school_names(round.schools) << "\n";
        bool any_trunc = false;
        for (int i : round.students) {
            if (!round.truncations[i].empty()) {
                os << "  removed from " << inst.student_id(i) << ": "
                   << school_names(round.truncations[i]) << "\n";
                any_trunc = true;
            }
        }
        if (!any_trunc) {
            os << "  removed: (none)\n";
        }
        os << "  underdemanded: " << school_names(round.underdemanded) << "\n";
        os << "  eliminated: " << student_names(round.eliminated) << "\n";
        os << "  matching:";
        for (int i = 0; i < inst.num_students(); ++i) {
            int s = round.snapshot.of(i);
            os << " " << inst.student_id(i) << "->"
               << (s == kUnmatched ? std::string("-") : inst.school_id(s));
        }
        os << "\n";
    }
    return os.str();
}

} // namespace schoolmatch
