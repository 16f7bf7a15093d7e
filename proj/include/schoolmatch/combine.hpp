// combine.hpp - combining a school's set of priority orders into the single
// relations that characterize M-fairness and weak M-fairness.
#pragma once

#include <string>
#include <vector>

#include "schoolmatch/relation.hpp"

namespace schoolmatch {

// One school's nonempty set of priority orders. The list order is canonical
// for reporting (violation witnesses cite the order index).
struct PrioritySet {
    std::string school;
    std::vector<Relation> orders;
};

// Asymmetric part of the union of the orders: (i,j) survives iff some order
// ranks i over j and no order ranks j over i. Every order must be asymmetric.
Relation m_combine(const PrioritySet& ps);

// Intersection of the orders: (i,j) survives iff every order ranks i over j.
Relation w_combine(const PrioritySet& ps);

// Self-check: for all-total sets, m_combine must coincide with the pairwise
// intersection of the orders. Requires every order to be total.
bool check_total_intersection(const PrioritySet& ps);

// Whether `candidate` (a total order) contains m_combine(ps), i.e. qualifies
// as an extension of the combined relation. Any total member of ps does.
bool is_member_extension(const PrioritySet& ps, const Relation& candidate);

} // namespace schoolmatch
