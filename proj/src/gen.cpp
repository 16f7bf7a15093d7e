// gen.cpp
#include "schoolmatch/gen.hpp"

#include <algorithm>
#include <numeric>

#include "schoolmatch/improve.hpp"

namespace schoolmatch {
namespace gen {

namespace {

int draw(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<std::string> numbered(const char* prefix, int count) {
    std::vector<std::string> out;
    out.reserve(count);
    int width = count > 9 ? 2 : 1;
    for (int k = 1; k <= count; ++k) {
        std::string digits = std::to_string(k);
        while (static_cast<int>(digits.size()) < width) {
            digits.insert(digits.begin(), '0');
        }
        out.push_back(prefix + digits);
    }
    return out;
}

std::vector<int> shuffled_indices(Rng& rng, int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

Relation chain_of(const std::vector<std::string>& ground, const std::vector<int>& order) {
    std::vector<std::string> ranked;
    ranked.reserve(order.size());
    for (int k : order) {
        ranked.push_back(ground[k]);
    }
    return Relation::chain(ranked);
}

// Ranking by descending score; scores must be distinct.
Relation score_order(const std::vector<std::string>& ground, const std::vector<long>& score) {
    std::vector<int> order(ground.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return score[a] > score[b]; });
    return chain_of(ground, order);
}

} // namespace

std::vector<std::string> student_ids(int n) { return numbered("i", n); }
std::vector<std::string> school_ids(int m) { return numbered("s", m); }

Instance market_shell(Rng& rng, int students, int schools, int max_capacity,
                      std::vector<PrioritySet> priorities) {
    std::vector<std::string> sids = student_ids(students);
    std::vector<std::string> cids = school_ids(schools);
    std::vector<SchoolInfo> infos;
    for (const std::string& id : cids) {
        infos.push_back({id, draw(rng, 1, max_capacity)});
    }
    std::map<std::string, std::vector<std::string>> prefs;
    for (const std::string& sid : sids) {
        std::vector<int> order = shuffled_indices(rng, schools);
        // biased towards long lists; empty lists stay possible
        int take = std::max(draw(rng, 0, schools), draw(rng, 0, schools));
        std::vector<std::string> listed;
        for (int k = 0; k < take; ++k) {
            listed.push_back(cids[order[k]]);
        }
        prefs[sid] = std::move(listed);
    }
    return Instance(std::move(sids), std::move(infos), std::move(prefs), std::move(priorities));
}

Relation random_total(Rng& rng, const std::vector<std::string>& ground) {
    return chain_of(ground, shuffled_indices(rng, static_cast<int>(ground.size())));
}

Relation random_weak(Rng& rng, const std::vector<std::string>& ground) {
    std::vector<int> order = shuffled_indices(rng, static_cast<int>(ground.size()));
    std::vector<std::vector<std::string>> tiers;
    for (size_t k = 0; k < order.size(); ++k) {
        if (k == 0 || draw(rng, 0, 1) == 1) {
            tiers.emplace_back();
        }
        tiers.back().push_back(ground[order[k]]);
    }
    return Relation::from_tiers(tiers);
}

Relation random_partial(Rng& rng, const std::vector<std::string>& ground) {
    const int n = static_cast<int>(ground.size());
    std::vector<int> order = shuffled_indices(rng, n);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (draw(rng, 0, 9) < 4) {
                pairs.emplace_back(ground[order[a]], ground[order[b]]);
            }
        }
    }
    Relation rel(ground, pairs);
    // transitive closure stays inside the chosen linear order, so the result
    // is a partial order
    const int size = rel.size();
    std::vector<char> closed(static_cast<size_t>(size) * size, 0);
    for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
            closed[static_cast<size_t>(a) * size + b] = rel.at(a, b);
        }
    }
    for (int mid = 0; mid < size; ++mid) {
        for (int a = 0; a < size; ++a) {
            if (!closed[static_cast<size_t>(a) * size + mid]) {
                continue;
            }
            for (int b = 0; b < size; ++b) {
                if (closed[static_cast<size_t>(mid) * size + b]) {
                    closed[static_cast<size_t>(a) * size + b] = 1;
                }
            }
        }
    }
    std::vector<std::pair<std::string, std::string>> closure_pairs;
    for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
            if (closed[static_cast<size_t>(a) * size + b]) {
                closure_pairs.emplace_back(rel.ground()[a], rel.ground()[b]);
            }
        }
    }
    return Relation(rel.ground(), closure_pairs);
}

Instance random_single_instance(Rng& rng, int students, int schools, int max_capacity,
                                SingleKind kind) {
    std::vector<std::string> sids = student_ids(students);
    std::vector<PrioritySet> priorities;
    for (const std::string& school : school_ids(schools)) {
        Relation order = kind == SingleKind::Total ? random_total(rng, sids)
                                                   : random_partial(rng, sids);
        priorities.push_back({school, {std::move(order)}});
    }
    return market_shell(rng, students, schools, max_capacity, std::move(priorities));
}

Instance random_multi_instance(Rng& rng, int students, int schools, int max_capacity, int orders,
                               bool first_total) {
    std::vector<std::string> sids = student_ids(students);
    std::vector<PrioritySet> priorities;
    for (const std::string& school : school_ids(schools)) {
        PrioritySet ps{school, {}};
        for (int k = 0; k < orders; ++k) {
            ps.orders.push_back(k == 0 && first_total ? random_total(rng, sids)
                                                      : random_weak(rng, sids));
        }
        priorities.push_back(std::move(ps));
    }
    return market_shell(rng, students, schools, max_capacity, std::move(priorities));
}

ImprovementTriple random_improvement_triple(Rng& rng, int students, int schools,
                                            int max_capacity, int budget) {
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<std::string> sids = student_ids(students);

        int group_size = draw(rng, 1, students);
        std::vector<int> order = shuffled_indices(rng, students);
        std::vector<int> group(order.begin(), order.begin() + group_size);
        std::sort(group.begin(), group.end());

        // Distinct base scores in multiples of 1000; bonuses stay below 1000,
        // so adjusted scores remain distinct.
        std::vector<long> less_bonus(students, 0);
        std::vector<long> more_bonus(students, 0);
        for (int i : group) {
            less_bonus[i] = 10L * draw(rng, 0, 49);
            more_bonus[i] = less_bonus[i] + 10L * draw(rng, 0, 49);
        }

        Profile base, more, less;
        std::vector<PrioritySet> priorities;
        for (int s = 0; s < schools; ++s) {
            std::vector<long> score(students);
            std::vector<int> by_score = shuffled_indices(rng, students);
            for (int pos = 0; pos < students; ++pos) {
                score[by_score[pos]] = 1000L * (students - pos);
            }
            std::vector<long> with_less = score;
            std::vector<long> with_more = score;
            for (int i = 0; i < students; ++i) {
                with_less[i] += less_bonus[i];
                with_more[i] += more_bonus[i];
            }
            base.push_back(score_order(sids, score));
            less.push_back(score_order(sids, with_less));
            more.push_back(score_order(sids, with_more));
        }
        for (int s = 0; s < schools; ++s) {
            priorities.push_back({school_ids(schools)[s], {base[s]}});
        }
        Instance inst = market_shell(rng, students, schools, max_capacity, std::move(priorities));

        if (!more_improves(inst, base, more, less, group)) {
            continue;
        }
        std::vector<std::string> group_ids;
        for (int i : group) {
            group_ids.push_back(inst.student_id(i));
        }
        return ImprovementTriple{std::move(inst), std::move(base), std::move(more),
                                 std::move(less), std::move(group), std::move(group_ids)};
    }
    throw err::budget_exhausted("no improvement triple found within the rejection budget");
}

namespace {

// One strict-improvement step: group members move weakly up, their mutual
// order and the non-members' mutual order both preserved.
Relation strict_step(Rng& rng, const Relation& from, const std::vector<std::string>& ground,
                     const std::vector<char>& member) {
    std::vector<std::string> ranked = from.as_ranking();
    const int n = static_cast<int>(ranked.size());
    std::vector<long> key(n);
    long floor_key = 0;
    for (int pos = 0; pos < n; ++pos) {
        int idx = Relation::empty(ground).index_of(ranked[pos]);
        if (member[idx]) {
            key[pos] = floor_key + draw(rng, 0, static_cast<int>(10L * pos - floor_key));
            floor_key = key[pos];
        } else {
            key[pos] = 10L * pos;
        }
    }
    std::vector<int> positions(n);
    std::iota(positions.begin(), positions.end(), 0);
    std::stable_sort(positions.begin(), positions.end(),
                     [&](int a, int b) { return key[a] < key[b]; });
    std::vector<std::string> out;
    out.reserve(n);
    for (int pos : positions) {
        out.push_back(ranked[pos]);
    }
    return Relation::chain(out);
}

} // namespace

StrictChain random_strict_chain(Rng& rng, int students, int schools, int max_capacity) {
    std::vector<std::string> sids = student_ids(students);
    int group_size = draw(rng, 1, students);
    std::vector<int> order = shuffled_indices(rng, students);
    std::vector<int> group(order.begin(), order.begin() + group_size);
    std::sort(group.begin(), group.end());
    std::vector<char> member(students, 0);
    for (int i : group) {
        member[i] = 1;
    }

    Profile bases, mids, tops;
    std::vector<PrioritySet> priorities;
    for (int s = 0; s < schools; ++s) {
        Relation base = random_total(rng, sids);
        Relation mid = strict_step(rng, base, sids, member);
        Relation top = strict_step(rng, mid, sids, member);
        bases.push_back(base);
        mids.push_back(std::move(mid));
        tops.push_back(std::move(top));
        priorities.push_back({school_ids(schools)[s], {std::move(base)}});
    }
    return StrictChain{market_shell(rng, students, schools, max_capacity, std::move(priorities)),
                       std::move(bases), std::move(mids), std::move(tops), std::move(group)};
}

Relation random_subrelation(Rng& rng, const Relation& rel) {
    std::vector<std::pair<std::string, std::string>> kept;
    for (const auto& pair : rel.pairs()) {
        if (draw(rng, 0, 1) == 1) {
            kept.push_back(pair);
        }
    }
    return Relation(rel.ground(), kept);
}

} // namespace gen
} // namespace schoolmatch
