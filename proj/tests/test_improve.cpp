// test_improve.cpp - improvement relations between profiles, the combined
// mechanism, and responsiveness.
#include "doctest.h"

#include "fixtures.hpp"
#include "schoolmatch/gen.hpp"
#include "schoolmatch/improve.hpp"
#include "schoolmatch/oracle.hpp"

using namespace schoolmatch;

namespace {

Profile repeat(const Relation& r, int schools) { return Profile(schools, r); }

} // namespace

TEST_CASE("bonus-point orders improve the score order for the minority group") {
    fixtures::BonusPoints ex;
    const Instance& inst = ex.instance;
    CHECK(is_improvement(inst, repeat(ex.scores, 1), repeat(ex.bonus_a, 1), ex.group));
    CHECK(is_improvement(inst, repeat(ex.scores, 1), repeat(ex.bonus_b, 1), ex.group));
    CHECK(is_improvement(inst, repeat(ex.scores, 1), repeat(ex.bonus_c, 1), ex.group));
    // a profile improves itself for any group
    CHECK(is_improvement(inst, repeat(ex.scores, 1), repeat(ex.scores, 1), ex.group));
    // majority students may not gain: swapping i5 over i2 is not an improvement
    Relation majority_gain = Relation::chain({"i6", "i4", "i5", "i2", "i3", "i1"});
    CHECK_FALSE(is_improvement(inst, repeat(ex.scores, 1), repeat(majority_gain, 1), ex.group));
    CHECK_THROWS_AS(is_improvement(inst, repeat(ex.scores, 1), repeat(ex.scores, 1), {}), Error);
}

TEST_CASE("the more-improves ordering and its witness") {
    fixtures::BonusPoints ex;
    const Instance& inst = ex.instance;
    CHECK(more_improves(inst, repeat(ex.scores, 1), repeat(ex.bonus_c, 1),
                        repeat(ex.bonus_a, 1), ex.group));

    MoreImprovesReport failed = more_improves_report(
        inst, repeat(ex.scores, 1), repeat(ex.bonus_b, 1), repeat(ex.bonus_a, 1), ex.group);
    CHECK_FALSE(failed.holds);
    CHECK(failed.failed_condition == "monotone");
    CHECK(inst.student_id(failed.winner) == "i3");
    CHECK(inst.student_id(failed.loser) == "i1");

    // reflexive triple
    CHECK(more_improves(inst, repeat(ex.scores, 1), repeat(ex.scores, 1), repeat(ex.scores, 1),
                        ex.group));
}

TEST_CASE("crossed profiles: improvements but not monotone") {
    fixtures::CrossedImprovements crossed;
    const Instance& inst = crossed.instance;
    CHECK(is_improvement(inst, crossed.base, crossed.more, crossed.group));
    CHECK(is_improvement(inst, crossed.base, crossed.less, crossed.group));
    CHECK(is_improvement(inst, crossed.less, crossed.more, crossed.group));
    MoreImprovesReport report = more_improves_report(inst, crossed.base, crossed.more, crossed.less, crossed.group);
    CHECK_FALSE(report.holds);
    CHECK(report.failed_condition == "monotone");
    CHECK(inst.school_id(report.school) == "s2");
}

TEST_CASE("strict improvements") {
    fixtures::BonusPoints ex;
    const Instance& inst = ex.instance;
    // unequal bonuses reorder the group internally, so these are not strict
    CHECK_FALSE(is_strict_improvement(inst, repeat(ex.scores, 1), repeat(ex.bonus_a, 1),
                                      ex.group));
    CHECK_FALSE(is_strict_improvement(inst, repeat(ex.scores, 1), repeat(ex.bonus_c, 1),
                                      ex.group));
    CHECK(is_strict_improvement(inst, repeat(ex.scores, 1), repeat(ex.scores, 1), ex.group));

    // swapping two non-members is never strict
    Instance abc({"a", "b", "c"}, {{"s", 1}},
                 {{"a", {"s"}}, {"b", {"s"}}, {"c", {"s"}}},
                 {{"s", {Relation::chain({"a", "b", "c"})}}});
    Profile base{Relation::chain({"a", "b", "c"})};
    Profile swapped{Relation::chain({"a", "c", "b"})};
    std::vector<int> group_a = abc.group_from_ids({"a"});
    CHECK_FALSE(is_strict_improvement(abc, base, swapped, group_a));
}

TEST_CASE("strict chains satisfy the stronger monotone ordering") {
    gen::Rng rng(112);
    for (int trial = 0; trial < 200; ++trial) {
        gen::StrictChain chain =
            gen::random_strict_chain(rng, 3 + static_cast<int>(rng() % 4), 2, 2);
        CAPTURE(trial);
        REQUIRE(is_strict_improvement(chain.inst, chain.base, chain.mid, chain.group));
        REQUIRE(is_strict_improvement(chain.inst, chain.mid, chain.top, chain.group));
        CHECK(is_strict_improvement(chain.inst, chain.base, chain.top, chain.group));
        CHECK(more_improves(chain.inst, chain.base, chain.top, chain.mid, chain.group));
    }
}

TEST_CASE("the lesser of two chained strict improvements never dominates") {
    gen::Rng rng(122);
    for (int trial = 0; trial < 100; ++trial) {
        gen::StrictChain chain =
            gen::random_strict_chain(rng, 3 + static_cast<int>(rng() % 3), 2, 2);
        Matching with_top = phi_star(chain.inst, chain.base, chain.top).matching;
        Matching with_mid = phi_star(chain.inst, chain.base, chain.mid).matching;
        CHECK_FALSE(pareto_dominates(with_mid, with_top, chain.inst, chain.group));
    }
}

TEST_CASE("the mechanism reproduces both crossed outcomes") {
    fixtures::CrossedImprovements crossed;
    EadaResult more = phi_star(crossed.instance, crossed.base, crossed.more);
    EadaResult less = phi_star(crossed.instance, crossed.base, crossed.less);
    CHECK(more.matching == crossed.mu);
    CHECK(less.matching == crossed.mu_prime);

    // each is the unique student-optimal M-stable matching of its pairing
    Instance paired_more = crossed.paired(crossed.more);
    Instance paired_less = crossed.paired(crossed.less);
    std::vector<Matching> somsm_more = analyze(paired_more).somsm;
    std::vector<Matching> somsm_less = analyze(paired_less).somsm;
    REQUIRE(somsm_more.size() == 1);
    REQUIRE(somsm_less.size() == 1);
    CHECK(somsm_more.front() == crossed.mu);
    CHECK(somsm_less.front() == crossed.mu_prime);
}

TEST_CASE("identical profiles collapse the mechanism to the plain adjusted run") {
    gen::Rng rng(113);
    for (int trial = 0; trial < 40; ++trial) {
        Instance inst = gen::random_single_instance(rng, 2 + static_cast<int>(rng() % 5), 3, 2,
                                                    gen::SingleKind::Total);
        Profile totals = inst.single_profile();
        EadaResult same = phi_star(inst, totals, totals);
        EadaResult plain = run_eada(inst, totals);
        CHECK(same.matching == plain.matching);
    }
}

TEST_CASE("responsiveness verdict on the one-school bonus market") {
    fixtures::BonusPoints ex;
    ResponsivenessVerdict verdict =
        check_responsiveness(ex.instance, repeat(ex.scores, 1), repeat(ex.bonus_c, 1),
                             repeat(ex.bonus_a, 1), ex.group);
    CHECK(verdict.precondition.holds);
    CHECK_FALSE(verdict.more_dominated_by_less);
    CHECK(verdict.m_inclusion == std::vector<char>{1});

    // oracle cross-check: the mechanism output is group-optimal M-stable
    Instance paired({"i1", "i2", "i3", "i4", "i5", "i6"}, {{"s", 2}},
                    fixtures::all_want(ex.students, {"s"}),
                    {{"s", {ex.scores, ex.bonus_c}}});
    std::vector<Matching> group_optimal =
        optimal_subset(paired, m_stable_set(paired), ex.group);
    CHECK(std::find(group_optimal.begin(), group_optimal.end(), verdict.outcome_more) !=
          group_optimal.end());
}

TEST_CASE("failed precondition throws unless diagnostics are requested") {
    fixtures::CrossedImprovements crossed;
    CHECK_THROWS_AS(
        check_responsiveness(crossed.instance, crossed.base, crossed.more, crossed.less, crossed.group, false), Error);

    ResponsivenessVerdict verdict =
        check_responsiveness(crossed.instance, crossed.base, crossed.more, crossed.less, crossed.group, true);
    CHECK_FALSE(verdict.precondition.holds);
    // the strict-responsiveness impossibility: the less-improved outcome
    // dominates the more-improved one for the group
    CHECK(verdict.more_dominated_by_less);
    CHECK(verdict.outcome_more == crossed.mu);
    CHECK(verdict.outcome_less == crossed.mu_prime);
}

TEST_CASE("trivially non-dominated when both candidates coincide") {
    fixtures::BonusPoints ex;
    ResponsivenessVerdict verdict =
        check_responsiveness(ex.instance, repeat(ex.scores, 1), repeat(ex.bonus_a, 1),
                             repeat(ex.bonus_a, 1), ex.group);
    CHECK(verdict.precondition.holds);
    CHECK(verdict.outcome_more == verdict.outcome_less);
    CHECK_FALSE(verdict.more_dominated_by_less);
}
