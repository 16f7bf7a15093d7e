// gen.hpp - seeded random instances and profiles. Used by the property
// suites and by the CLI generator; all output is a deterministic function of
// the seed.
#pragma once

#include <random>
#include <vector>

#include "schoolmatch/market.hpp"

namespace schoolmatch {
namespace gen {

using Rng = std::mt19937_64;

std::vector<std::string> student_ids(int n);
std::vector<std::string> school_ids(int m);

// Random market shell: capacities in [1, max_capacity], each student ranks a
// random nonempty-ish subset of schools (empty lists allowed).
Instance market_shell(Rng& rng, int students, int schools, int max_capacity,
                      std::vector<PrioritySet> priorities);

Relation random_total(Rng& rng, const std::vector<std::string>& ground);
Relation random_weak(Rng& rng, const std::vector<std::string>& ground);
// Transitive closure of a random sub-relation of a random total order.
Relation random_partial(Rng& rng, const std::vector<std::string>& ground);

// Instance with one priority relation per school.
enum class SingleKind { Total, Partial };
Instance random_single_instance(Rng& rng, int students, int schools, int max_capacity,
                                SingleKind kind);

// Instance with `orders` weak orders per school; optionally forces the first
// order of every school to be total.
Instance random_multi_instance(Rng& rng, int students, int schools, int max_capacity, int orders,
                               bool first_total);

struct ImprovementTriple {
    Instance inst; // single-priority instance carrying the base profile
    Profile base;
    Profile more;
    Profile less;
    std::vector<int> group;
    std::vector<std::string> group_ids;
};

// Bonus-point construction: distinct base scores, group bonuses drawn twice
// (the larger bonus profile second), rejection-sampled until the pair passes
// the more-improves predicate. Throws after `budget` failed draws.
ImprovementTriple random_improvement_triple(Rng& rng, int students, int schools,
                                            int max_capacity, int budget);

// Chain of strict improvements: mid is a strict improvement of base, top of
// mid (hence of base), priorities among non-members pinned throughout.
struct StrictChain {
    Instance inst;
    Profile base;
    Profile mid;
    Profile top;
    std::vector<int> group;
};
StrictChain random_strict_chain(Rng& rng, int students, int schools, int max_capacity);

// Random sub-relation: keeps each pair with probability 1/2.
Relation random_subrelation(Rng& rng, const Relation& rel);

} // namespace gen
} // namespace schoolmatch
