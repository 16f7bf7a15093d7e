// io.hpp - JSON document formats: instances, matchings, priority profiles,
// oracle reports, and the compare verdict.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schoolmatch/improve.hpp"
#include "schoolmatch/oracle.hpp"

namespace schoolmatch {

// Instance document: {"students": [...], "schools": [{"id","capacity"}...],
// "preferences": {student: [school...]}, "priorities": {school: [relation...]}}
// with each relation written as {"pairs": [[hi,lo]...]} or
// {"tiers": [[id...]...]}.
Instance parse_instance(const std::string& text);
std::string instance_to_text(const Instance& inst);

// Matching document: {student: school-or-null, ...} covering every student.
Matching parse_matching(const std::string& text, const Instance& inst);
std::string matching_to_text(const Matching& mu, const Instance& inst);

// Profile document: {"priorities": {school: relation}, "group": [id...]?}.
struct ProfileDoc {
    Profile profile;
    std::optional<std::vector<std::string>> group_ids;
};
ProfileDoc parse_profile(const std::string& text, const Instance& inst);
std::string profile_to_text(const Profile& profile, const Instance& inst,
                            const std::optional<std::vector<std::string>>& group_ids);

std::string report_to_text(const OracleReport& report, const Instance& inst);

std::string verdict_to_text(const ResponsivenessVerdict& verdict, const Instance& inst);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace schoolmatch
