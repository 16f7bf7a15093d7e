// io.cpp
#include "schoolmatch/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace schoolmatch {

using nlohmann::json;

namespace {

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw err::parse("document is not valid JSON");
    }
    return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

Relation relation_from_json(const json& node, const std::vector<std::string>& ground) {
    if (!node.is_object()) {
        throw err::parse("relation must be an object with 'pairs' or 'tiers'");
    }
    if (node.contains("pairs")) {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const json& pair : node.at("pairs")) {
            if (!pair.is_array() || pair.size() != 2) {
                throw err::parse("relation pair must be a [higher, lower] array");
            }
            pairs.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
        }
        return Relation(ground, pairs);
    }
    if (node.contains("tiers")) {
        std::vector<std::vector<std::string>> tiers;
        for (const json& tier : node.at("tiers")) {
            tiers.push_back(tier.get<std::vector<std::string>>());
        }
        Relation rel = Relation::from_tiers(tiers);
        if (rel.ground() != Relation::empty(ground).ground()) {
            throw err::parse("tier encoding must cover exactly the instance's students");
        }
        return rel;
    }
    throw err::parse("relation must carry 'pairs' or 'tiers'");
}

json relation_to_json(const Relation& rel) {
    RelationClass cls = rel.classify();
    if (cls.order == RelationOrder::Weak || cls.order == RelationOrder::Total) {
        return json{{"tiers", rel.as_tiers()}};
    }
    json pairs = json::array();
    for (const auto& [hi, lo] : rel.pairs()) {
        pairs.push_back(json::array({hi, lo}));
    }
    return json{{"pairs", pairs}};
}

json matching_to_json(const Matching& mu, const Instance& inst) {
    json out = json::object();
    for (int i = 0; i < inst.num_students(); ++i) {
        int s = mu.of(i);
        out[inst.student_id(i)] = s == kUnmatched ? json(nullptr) : json(inst.school_id(s));
    }
    return out;
}

json matching_list_to_json(const std::vector<Matching>& list, const Instance& inst) {
    json out = json::array();
    for (const Matching& mu : list) {
        out.push_back(matching_to_json(mu, inst));
    }
    return out;
}

} // namespace

Instance parse_instance(const std::string& text) {
    json doc = parse_document(text);
    try {
        std::vector<std::string> students = doc.at("students").get<std::vector<std::string>>();

        std::vector<SchoolInfo> schools;
        for (const json& node : doc.at("schools")) {
            schools.push_back({node.at("id").get<std::string>(), node.at("capacity").get<int>()});
        }

        std::map<std::string, std::vector<std::string>> prefs;
        for (const auto& [sid, listed] : doc.at("preferences").items()) {
            prefs[sid] = listed.get<std::vector<std::string>>();
        }

        std::vector<std::string> ground = students;
        std::vector<PrioritySet> priorities;
        for (const auto& [school, orders] : doc.at("priorities").items()) {
            PrioritySet ps{school, {}};
            if (!orders.is_array()) {
                throw err::parse("priorities of school '" + school + "' must be a list");
            }
            for (const json& node : orders) {
                ps.orders.push_back(relation_from_json(node, ground));
            }
            priorities.push_back(std::move(ps));
        }
        return Instance(std::move(students), std::move(schools), std::move(prefs),
                        std::move(priorities));
    } catch (const json::exception& ex) {
        throw err::parse(std::string("malformed instance document: ") + ex.what());
    }
}

std::string instance_to_text(const Instance& inst) {
    json doc;
    doc["students"] = inst.students();
    doc["schools"] = json::array();
    for (const SchoolInfo& school : inst.schools()) {
        doc["schools"].push_back({{"id", school.id}, {"capacity", school.capacity}});
    }
    doc["preferences"] = json::object();
    for (int i = 0; i < inst.num_students(); ++i) {
        json listed = json::array();
        for (int s : inst.prefs(i)) {
            listed.push_back(inst.school_id(s));
        }
        doc["preferences"][inst.student_id(i)] = listed;
    }
    doc["priorities"] = json::object();
    for (int s = 0; s < inst.num_schools(); ++s) {
        json orders = json::array();
        for (const Relation& order : inst.priority_set(s).orders) {
            orders.push_back(relation_to_json(order));
        }
        doc["priorities"][inst.school_id(s)] = orders;
    }
    return dump(doc);
}

Matching parse_matching(const std::string& text, const Instance& inst) {
    json doc = parse_document(text);
    if (!doc.is_object()) {
        throw err::parse("matching must be an object keyed by student id");
    }
    std::vector<int> assign(inst.num_students(), kUnmatched);
    std::vector<char> seen(inst.num_students(), 0);
    for (const auto& [sid, school] : doc.items()) {
        int i = inst.student_index(sid);
        if (i < 0) {
            throw err::parse("matching names unknown student '" + sid + "'");
        }
        seen[i] = 1;
        if (school.is_null()) {
            continue;
        }
        if (!school.is_string()) {
            throw err::parse("matching entry for '" + sid + "' must be a school id or null");
        }
        int s = inst.school_index(school.get<std::string>());
        if (s < 0) {
            throw err::parse("matching assigns unknown school to '" + sid + "'");
        }
        assign[i] = s;
    }
    for (int i = 0; i < inst.num_students(); ++i) {
        if (!seen[i]) {
            throw err::parse("matching misses student '" + inst.student_id(i) + "'");
        }
    }
    return Matching::from_assignment(inst, std::move(assign));
}

std::string matching_to_text(const Matching& mu, const Instance& inst) {
    return dump(matching_to_json(mu, inst));
}

ProfileDoc parse_profile(const std::string& text, const Instance& inst) {
    json doc = parse_document(text);
    ProfileDoc out;
    try {
        std::map<std::string, Relation> by_school;
        for (const auto& [school, node] : doc.at("priorities").items()) {
            if (inst.school_index(school) < 0) {
                throw err::parse("profile names unknown school '" + school + "'");
            }
            by_school[school] = relation_from_json(node, inst.students());
        }
        for (int s = 0; s < inst.num_schools(); ++s) {
            auto it = by_school.find(inst.school_id(s));
            if (it == by_school.end()) {
                throw err::parse("profile misses school '" + inst.school_id(s) + "'");
            }
            out.profile.push_back(it->second);
        }
        if (doc.contains("group")) {
            out.group_ids = doc.at("group").get<std::vector<std::string>>();
        }
    } catch (const json::exception& ex) {
        throw err::parse(std::string("malformed profile document: ") + ex.what());
    }
    return out;
}

std::string profile_to_text(const Profile& profile, const Instance& inst,
                            const std::optional<std::vector<std::string>>& group_ids) {
    json doc;
    doc["priorities"] = json::object();
    for (int s = 0; s < inst.num_schools(); ++s) {
        doc["priorities"][inst.school_id(s)] = relation_to_json(profile[s]);
    }
    if (group_ids.has_value()) {
        doc["group"] = *group_ids;
    }
    return dump(doc);
}

std::string report_to_text(const OracleReport& report, const Instance& inst) {
    json doc;
    doc["all"] = json{{"count", report.feasible_count},
                      {"matchings", matching_list_to_json(report.feasible, inst)}};
    auto section = [&](const std::vector<Matching>& list) {
        return json{{"count", list.size()}, {"matchings", matching_list_to_json(list, inst)}};
    };
    doc["ir_nonwasteful"] = section(report.ir_nonwasteful);
    doc["m_stable"] = section(report.m_stable);
    doc["weakly_m_stable"] = section(report.weakly_m_stable);
    doc["somsm"] = section(report.somsm);
    if (inst.single_priority()) {
        doc["stable"] = section(report.stable);
        doc["sosm"] = section(report.sosm);
    }
    if (report.has_group) {
        doc["group_optimal_m_stable"] = section(report.group_optimal_m_stable);
    }
    return dump(doc);
}

std::string verdict_to_text(const ResponsivenessVerdict& verdict, const Instance& inst) {
    json doc;
    json precondition;
    precondition["holds"] = verdict.precondition.holds;
    if (!verdict.precondition.holds) {
        precondition["failed_condition"] = verdict.precondition.failed_condition;
        if (verdict.precondition.school >= 0) {
            precondition["witness"] = {
                {"school", inst.school_id(verdict.precondition.school)},
                {"winner", inst.student_id(verdict.precondition.winner)},
                {"loser", inst.student_id(verdict.precondition.loser)},
            };
        }
    }
    doc["more_improves"] = precondition;
    doc["m_inclusion"] = json::object();
    for (int s = 0; s < inst.num_schools(); ++s) {
        doc["m_inclusion"][inst.school_id(s)] = static_cast<bool>(verdict.m_inclusion[s]);
    }
    doc["outcome_more"] = matching_to_json(verdict.outcome_more, inst);
    doc["outcome_less"] = matching_to_json(verdict.outcome_less, inst);
    doc["more_dominated_by_less"] = verdict.more_dominated_by_less;
    doc["diagnostic"] = verdict.diagnostic;
    return dump(doc);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw err::parse("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw err::parse("cannot write '" + path + "'");
    }
    out << content;
}

} // namespace schoolmatch
