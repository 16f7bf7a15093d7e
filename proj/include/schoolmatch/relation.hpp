// relation.hpp - finite binary relations over student identifiers.
//
// A Relation is an irreflexive binary relation over a fixed ground set of
// student ids. The ground set is ordered by the id token, which is also the
// tie-breaking order used wherever determinism is required.
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schoolmatch/errors.hpp"

namespace schoolmatch {

enum class RelationOrder { General, Partial, Weak, Total };

const char* to_string(RelationOrder order);

// Property flags plus the strongest order class they imply.
struct RelationClass {
    bool asymmetric = false;
    bool complete = false;
    bool transitive = false;
    bool negatively_transitive = false;
    bool acyclic = false;
    RelationOrder order = RelationOrder::General;
};

class Relation {
public:
    Relation() = default;

    // Ground ids are deduplicated and sorted; pairs must connect ground ids
    // and may not be reflexive.
    Relation(std::vector<std::string> ground,
             const std::vector<std::pair<std::string, std::string>>& pairs);

    // Weak-order encoding: earlier tiers beat later tiers, students within a
    // tier are incomparable. The tiers must partition the ground set.
    static Relation from_tiers(const std::vector<std::vector<std::string>>& tiers);

    // Total order written best-first.
    static Relation chain(const std::vector<std::string>& ranked);

    static Relation empty(std::vector<std::string> ground);

    const std::vector<std::string>& ground() const { return ground_; }
    int size() const { return static_cast<int>(ground_.size()); }

    int index_of(std::string_view id) const; // -1 when absent
    const std::string& id(int index) const { return ground_[index]; }

    bool at(int a, int b) const { return adj_[static_cast<size_t>(a) * ground_.size() + b]; }
    bool contains(std::string_view a, std::string_view b) const;

    int pair_count() const;
    // All pairs, ordered by (higher id, lower id).
    std::vector<std::pair<std::string, std::string>> pairs() const;

    RelationClass classify() const;

    // (x,y) kept iff (y,x) is absent.
    Relation asymmetric_part() const;

    // Deterministic linear extension: repeatedly emits the minimal-id source
    // of the remaining digraph of the asymmetric part. Throws when cyclic.
    Relation extended() const;

    bool subset_of(const Relation& other) const; // throws on ground mismatch

    Relation union_with(const Relation& other) const;
    Relation intersect_with(const Relation& other) const;

    bool same_ground(const Relation& other) const { return ground_ == other.ground_; }

    // Ranked ids, best first. Requires a total order.
    std::vector<std::string> as_ranking() const;

    // Tier lists, best tier first. Requires a weak order.
    std::vector<std::vector<std::string>> as_tiers() const;

    bool operator==(const Relation& other) const = default;

private:
    void set(int a, int b) { adj_[static_cast<size_t>(a) * ground_.size() + b] = 1; }

    std::vector<std::string> ground_; // sorted unique ids
    std::vector<char> adj_;           // size() * size() adjacency matrix
};

} // namespace schoolmatch
