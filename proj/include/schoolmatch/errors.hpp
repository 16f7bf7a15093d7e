// errors.hpp - error taxonomy shared by the library and the CLI exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace schoolmatch {

// Error families. The CLI maps them to process exit codes:
// Parse -> 2, Precondition -> 3, TooLarge -> 4, Budget -> 5.
enum class Errc {
    Parse,
    Precondition,
    TooLarge,
    Budget,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

namespace err {

inline Error parse(const std::string& msg) { return Error(Errc::Parse, msg); }

inline Error cyclic_relation() {
    return Error(Errc::Precondition, "relation is not acyclic; no linear extension exists");
}

inline Error ground_mismatch() {
    return Error(Errc::Precondition, "relations are defined over different ground sets");
}

inline Error not_asymmetric(int order_index) {
    return Error(Errc::Precondition,
                 "priority order #" + std::to_string(order_index) + " is not asymmetric");
}

inline Error not_total(const std::string& what) {
    return Error(Errc::Precondition, what + " is not a total order");
}

inline Error not_total_order(const std::string& school) {
    return Error(Errc::Precondition,
                 "priority of school '" + school + "' is not a total order");
}

inline Error cyclic_priority(const std::string& school) {
    return Error(Errc::Precondition, "priority of school '" + school + "' is cyclic");
}

inline Error extension_mismatch(const std::string& school) {
    return Error(Errc::Precondition,
                 "extension for school '" + school +
                     "' is not a total order containing the base priority");
}

inline Error refuse_non_partial(const std::string& school) {
    return Error(Errc::Precondition,
                 "combined priority of school '" + school +
                     "' is not transitive; refusing (a combined order may fail transitivity "
                     "when a member is a non-weak partial order)");
}

inline Error not_a_member(const std::string& school) {
    return Error(Errc::Precondition,
                 "chosen order for school '" + school + "' is not a member of its priority set");
}

inline Error empty_group() { return Error(Errc::Precondition, "student group is empty"); }

inline Error precondition(const std::string& msg) { return Error(Errc::Precondition, msg); }

inline Error too_large(const std::string& msg) { return Error(Errc::TooLarge, msg); }

inline Error budget_exhausted(const std::string& msg) { return Error(Errc::Budget, msg); }

} // namespace err
} // namespace schoolmatch
