// relation.cpp - binary-relation algebra: classification, asymmetric part,
// linear extensions.
#include "schoolmatch/relation.hpp"

#include <algorithm>
#include <numeric>

namespace schoolmatch {

const char* to_string(RelationOrder order) {
    switch (order) {
    case RelationOrder::General: return "general";
    case RelationOrder::Partial: return "partial";
    case RelationOrder::Weak: return "weak";
    case RelationOrder::Total: return "total";
    }
    return "general";
}

Relation::Relation(std::vector<std::string> ground,
                   const std::vector<std::pair<std::string, std::string>>& pairs)
    : ground_(std::move(ground)) {
    std::sort(ground_.begin(), ground_.end());
    ground_.erase(std::unique(ground_.begin(), ground_.end()), ground_.end());
    adj_.assign(ground_.size() * ground_.size(), 0);
    for (const auto& [hi, lo] : pairs) {
        int a = index_of(hi);
        int b = index_of(lo);
        if (a < 0 || b < 0) {
            throw err::parse("relation pair (" + hi + ", " + lo + ") leaves the ground set");
        }
        if (a == b) {
            throw err::parse("relation pair (" + hi + ", " + lo + ") is reflexive");
        }
        set(a, b);
    }
}

Relation Relation::from_tiers(const std::vector<std::vector<std::string>>& tiers) {
    std::vector<std::string> ground;
    for (const auto& tier : tiers) {
        ground.insert(ground.end(), tier.begin(), tier.end());
    }
    size_t unique_count = [&] {
        auto copy = ground;
        std::sort(copy.begin(), copy.end());
        return static_cast<size_t>(std::unique(copy.begin(), copy.end()) - copy.begin());
    }();
    if (unique_count != ground.size()) {
        throw err::parse("tier encoding repeats a student id");
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (size_t t = 0; t < tiers.size(); ++t) {
        for (size_t u = t + 1; u < tiers.size(); ++u) {
            for (const auto& hi : tiers[t]) {
                for (const auto& lo : tiers[u]) {
                    pairs.emplace_back(hi, lo);
                }
            }
        }
    }
    return Relation(std::move(ground), pairs);
}

Relation Relation::chain(const std::vector<std::string>& ranked) {
    std::vector<std::vector<std::string>> tiers;
    tiers.reserve(ranked.size());
    for (const auto& id : ranked) {
        tiers.push_back({id});
    }
    return from_tiers(tiers);
}

Relation Relation::empty(std::vector<std::string> ground) {
    return Relation(std::move(ground), {});
}

int Relation::index_of(std::string_view id) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), id);
    if (it == ground_.end() || *it != id) {
        return -1;
    }
    return static_cast<int>(it - ground_.begin());
}

bool Relation::contains(std::string_view a, std::string_view b) const {
    int ia = index_of(a);
    int ib = index_of(b);
    return ia >= 0 && ib >= 0 && at(ia, ib);
}

int Relation::pair_count() const {
    int count = 0;
    for (char cell : adj_) {
        count += cell != 0;
    }
    return count;
}

std::vector<std::pair<std::string, std::string>> Relation::pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (int a = 0; a < size(); ++a) {
        for (int b = 0; b < size(); ++b) {
            if (at(a, b)) {
                out.emplace_back(ground_[a], ground_[b]);
            }
        }
    }
    return out;
}

RelationClass Relation::classify() const {
    const int n = size();
    RelationClass cls;
    cls.asymmetric = true;
    cls.complete = true;
    cls.transitive = true;
    cls.negatively_transitive = true;

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) {
                continue;
            }
            if (at(a, b) && at(b, a)) {
                cls.asymmetric = false;
            }
            if (!at(a, b) && !at(b, a)) {
                cls.complete = false;
            }
        }
    }
    for (int a = 0; a < n && (cls.transitive || cls.negatively_transitive); ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                if (at(a, b) && at(b, c) && !at(a, c)) {
                    cls.transitive = false;
                }
                if (!at(a, b) && !at(b, c) && at(a, c)) {
                    cls.negatively_transitive = false;
                }
            }
        }
    }

    // Chain acyclicity: no path of two or more asymmetric steps from u to v
    // may close back with (v,u) in the relation.
    Relation pi = asymmetric_part();
    std::vector<char> reach = pi.adj_; // reachability in >= 1 asymmetric steps
    for (int mid = 0; mid < n; ++mid) {
        for (int a = 0; a < n; ++a) {
            if (!reach[static_cast<size_t>(a) * n + mid]) {
                continue;
            }
            for (int b = 0; b < n; ++b) {
                if (reach[static_cast<size_t>(mid) * n + b]) {
                    reach[static_cast<size_t>(a) * n + b] = 1;
                }
            }
        }
    }
    cls.acyclic = true;
    for (int a = 0; a < n && cls.acyclic; ++a) {
        for (int w = 0; w < n && cls.acyclic; ++w) {
            if (!pi.at(a, w)) {
                continue;
            }
            for (int b = 0; b < n; ++b) {
                // a -> w -> ... -> b is a chain of length >= 2
                if (reach[static_cast<size_t>(w) * n + b] && at(b, a)) {
                    cls.acyclic = false;
                    break;
                }
            }
        }
    }

    if (cls.asymmetric && cls.transitive) {
        if (cls.negatively_transitive) {
            cls.order = cls.complete ? RelationOrder::Total : RelationOrder::Weak;
        } else {
            cls.order = RelationOrder::Partial;
        }
    } else {
        cls.order = RelationOrder::General;
    }
    return cls;
}

Relation Relation::asymmetric_part() const {
    Relation out;
    out.ground_ = ground_;
    out.adj_.assign(adj_.size(), 0);
    for (int a = 0; a < size(); ++a) {
        for (int b = 0; b < size(); ++b) {
            if (at(a, b) && !at(b, a)) {
                out.set(a, b);
            }
        }
    }
    return out;
}

Relation Relation::extended() const {
    if (!classify().acyclic) {
        throw err::cyclic_relation();
    }
    const int n = size();
    Relation pi = asymmetric_part();
    std::vector<int> indegree(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (pi.at(a, b)) {
                ++indegree[b];
            }
        }
    }
    std::vector<char> emitted(n, 0);
    std::vector<std::string> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int source = -1;
        for (int v = 0; v < n; ++v) {
            if (!emitted[v] && indegree[v] == 0) {
                source = v; // ground is id-sorted, so the first hit is minimal
                break;
            }
        }
        if (source < 0) {
            throw err::cyclic_relation();
        }
        emitted[source] = 1;
        order.push_back(ground_[source]);
        for (int b = 0; b < n; ++b) {
            if (pi.at(source, b)) {
                --indegree[b];
            }
        }
    }
    return chain(order);
}

bool Relation::subset_of(const Relation& other) const {
    if (!same_ground(other)) {
        throw err::ground_mismatch();
    }
    for (size_t cell = 0; cell < adj_.size(); ++cell) {
        if (adj_[cell] && !other.adj_[cell]) {
            return false;
        }
    }
    return true;
}

Relation Relation::union_with(const Relation& other) const {
    if (!same_ground(other)) {
        throw err::ground_mismatch();
    }
    Relation out = *this;
    for (size_t cell = 0; cell < adj_.size(); ++cell) {
        out.adj_[cell] = adj_[cell] | other.adj_[cell];
    }
    return out;
}

Relation Relation::intersect_with(const Relation& other) const {
    if (!same_ground(other)) {
        throw err::ground_mismatch();
    }
    Relation out = *this;
    for (size_t cell = 0; cell < adj_.size(); ++cell) {
        out.adj_[cell] = adj_[cell] & other.adj_[cell];
    }
    return out;
}

std::vector<std::string> Relation::as_ranking() const {
    auto tiers = as_tiers();
    std::vector<std::string> out;
    for (const auto& tier : tiers) {
        if (tier.size() != 1) {
            throw err::not_total("relation");
        }
        out.push_back(tier.front());
    }
    return out;
}

std::vector<std::vector<std::string>> Relation::as_tiers() const {
    RelationClass cls = classify();
    if (cls.order != RelationOrder::Weak && cls.order != RelationOrder::Total) {
        throw err::precondition("relation is not a weak order; tiers are undefined");
    }
    const int n = size();
    std::vector<int> beaten_by(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (at(a, b)) {
                ++beaten_by[b];
            }
        }
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return beaten_by[a] < beaten_by[b]; });
    std::vector<std::vector<std::string>> tiers;
    for (int k = 0; k < n; ++k) {
        if (k == 0 || beaten_by[order[k]] != beaten_by[order[k - 1]]) {
            tiers.emplace_back();
        }
        tiers.back().push_back(ground_[order[k]]);
    }
    return tiers;
}

} // namespace schoolmatch
