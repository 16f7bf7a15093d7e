// combine.cpp
#include "schoolmatch/combine.hpp"

namespace schoolmatch {

namespace {

void require_asymmetric(const PrioritySet& ps) {
    if (ps.orders.empty()) {
        throw err::precondition("priority set of school '" + ps.school + "' is empty");
    }
    for (size_t k = 0; k < ps.orders.size(); ++k) {
        if (!ps.orders[k].classify().asymmetric) {
            throw err::not_asymmetric(static_cast<int>(k));
        }
        if (!ps.orders[k].same_ground(ps.orders.front())) {
            throw err::ground_mismatch();
        }
    }
}

} // namespace

Relation m_combine(const PrioritySet& ps) {
    require_asymmetric(ps);
    Relation acc = ps.orders.front();
    for (size_t k = 1; k < ps.orders.size(); ++k) {
        acc = acc.union_with(ps.orders[k]);
    }
    return acc.asymmetric_part();
}

Relation w_combine(const PrioritySet& ps) {
    require_asymmetric(ps);
    Relation acc = ps.orders.front();
    for (size_t k = 1; k < ps.orders.size(); ++k) {
        acc = acc.intersect_with(ps.orders[k]);
    }
    return acc;
}

bool check_total_intersection(const PrioritySet& ps) {
    for (const Relation& order : ps.orders) {
        if (order.classify().order != RelationOrder::Total) {
            throw err::not_total("priority order of school '" + ps.school + "'");
        }
    }
    return m_combine(ps) == w_combine(ps);
}

bool is_member_extension(const PrioritySet& ps, const Relation& candidate) {
    if (candidate.classify().order != RelationOrder::Total) {
        throw err::not_total("candidate extension");
    }
    return m_combine(ps).subset_of(candidate);
}

} // namespace schoolmatch
