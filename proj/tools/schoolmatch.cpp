// schoolmatch.cpp - command-line front end: solve, check, oracle, compare,
// and gen over the JSON document formats.
//
// Exit codes: 0 success (and the checked notion holds), 1 checked notion
// violated, 2 malformed input, 3 precondition failure, 4 size cap,
// 5 generator budget exhausted.
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "schoolmatch/eada.hpp"
#include "schoolmatch/gen.hpp"
#include "schoolmatch/improve.hpp"
#include "schoolmatch/io.hpp"
#include "schoolmatch/oracle.hpp"
#include "schoolmatch/spda.hpp"

namespace sm = schoolmatch;

namespace {

int exit_code(sm::Errc code) {
    switch (code) {
    case sm::Errc::Parse: return 2;
    case sm::Errc::Precondition: return 3;
    case sm::Errc::TooLarge: return 4;
    case sm::Errc::Budget: return 5;
    }
    return 3;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        sm::write_file(out_path, text);
    }
}

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

struct SolveOpts {
    std::string instance_path;
    std::string algo = "da";
    std::string out_path;
    std::string extension_path;
    std::string improved_path;
    std::string chosen_csv;
    bool trace = false;
    std::string trace_out;
};

int cmd_solve(const SolveOpts& opt) {
    sm::Instance inst = sm::parse_instance(sm::read_file(opt.instance_path));

    sm::Matching matching;
    std::optional<sm::EadaTrace> trace;
    if (opt.algo == "da") {
        matching = sm::run_da(inst).matching;
    } else if (opt.algo == "eada") {
        sm::Profile extension;
        if (opt.extension_path.empty()) {
            for (const sm::Relation& r : inst.single_profile()) {
                extension.push_back(r.extended());
            }
        } else {
            extension = sm::parse_profile(sm::read_file(opt.extension_path), inst).profile;
        }
        sm::EadaResult result = sm::run_eada(inst, extension);
        matching = result.matching;
        trace = std::move(result.trace);
    } else if (opt.algo == "ea-multi") {
        std::optional<std::vector<int>> chosen;
        if (!opt.chosen_csv.empty()) {
            std::vector<int> indices;
            for (const std::string& token : split_ids(opt.chosen_csv)) {
                indices.push_back(std::stoi(token));
            }
            chosen = std::move(indices);
        }
        sm::EadaResult result = sm::run_ea_multi(inst, chosen);
        matching = result.matching;
        trace = std::move(result.trace);
    } else if (opt.algo == "phi-star") {
        if (opt.improved_path.empty()) {
            throw sm::err::precondition("--algo phi-star needs --improved PROFILE");
        }
        sm::Profile improved =
            sm::parse_profile(sm::read_file(opt.improved_path), inst).profile;
        sm::EadaResult result = sm::phi_star(inst, inst.single_profile(), improved);
        matching = result.matching;
        trace = std::move(result.trace);
    } else {
        throw sm::err::precondition("unknown algorithm '" + opt.algo + "'");
    }

    emit(sm::matching_to_text(matching, inst), opt.out_path);
    if (trace.has_value()) {
        std::string text = sm::trace_to_text(*trace, inst);
        if (!opt.trace_out.empty()) {
            sm::write_file(opt.trace_out, text);
        } else if (opt.trace) {
            std::cout << text;
        }
    }
    return 0;
}

struct CheckOpts {
    std::string instance_path;
    std::string matching_path;
    std::string notion = "stable";
};

int cmd_check(const CheckOpts& opt) {
    sm::Instance inst = sm::parse_instance(sm::read_file(opt.instance_path));
    sm::Matching mu = sm::parse_matching(sm::read_file(opt.matching_path), inst);

    bool ir = sm::is_individually_rational(mu, inst);
    bool nonwasteful = sm::is_nonwasteful(mu, inst);
    auto verdict = [](bool ok) { return ok ? "ok" : "VIOLATED"; };
    std::cout << "ir: " << verdict(ir) << "\n";
    std::cout << "nonwasteful: " << verdict(nonwasteful) << "\n";

    std::vector<sm::ViolationWitness> witnesses;
    std::string fairness_name;
    if (opt.notion == "fair" || opt.notion == "stable") {
        witnesses = sm::fairness_violations(mu, inst, inst.single_profile());
        fairness_name = "fair";
    } else if (opt.notion == "m-fair" || opt.notion == "m-stable") {
        witnesses = sm::m_fairness_violations(mu, inst);
        fairness_name = "m-fair";
    } else if (opt.notion == "weakly-m-fair" || opt.notion == "weakly-m-stable") {
        witnesses = sm::weak_m_fairness_violations(mu, inst);
        fairness_name = "weakly-m-fair";
    } else if (opt.notion != "ir" && opt.notion != "nonwasteful") {
        throw sm::err::precondition("unknown notion '" + opt.notion + "'");
    }

    bool fair = witnesses.empty();
    if (!fairness_name.empty()) {
        std::cout << fairness_name << ": " << verdict(fair) << "\n";
        for (const sm::ViolationWitness& w : witnesses) {
            std::cout << "violation: student=" << inst.student_id(w.student)
                      << " incumbent=" << inst.student_id(w.incumbent)
                      << " school=" << inst.school_id(w.school) << " order=" << w.order_index
                      << "\n";
        }
    }

    bool holds = true;
    if (opt.notion == "ir") {
        holds = ir;
    } else if (opt.notion == "nonwasteful") {
        holds = nonwasteful;
    } else if (opt.notion == "fair" || opt.notion == "m-fair" ||
               opt.notion == "weakly-m-fair") {
        holds = fair;
    } else {
        holds = ir && nonwasteful && fair;
        std::cout << opt.notion << ": " << verdict(holds) << "\n";
    }
    return holds ? 0 : 1;
}

struct OracleOpts {
    std::string instance_path;
    std::string out_path;
    std::string group_csv;
};

int cmd_oracle(const OracleOpts& opt) {
    sm::Instance inst = sm::parse_instance(sm::read_file(opt.instance_path));
    std::optional<std::vector<int>> group;
    if (!opt.group_csv.empty()) {
        group = inst.group_from_ids(split_ids(opt.group_csv));
    }
    sm::OracleReport report = sm::analyze(inst, group);
    emit(sm::report_to_text(report, inst), opt.out_path);
    return 0;
}

struct CompareOpts {
    std::string instance_path;
    std::string more_path;
    std::string less_path;
    std::string group_csv;
    std::string out_path;
    bool diagnostic = false;
};

int cmd_compare(const CompareOpts& opt) {
    sm::Instance inst = sm::parse_instance(sm::read_file(opt.instance_path));
    sm::ProfileDoc more = sm::parse_profile(sm::read_file(opt.more_path), inst);
    sm::ProfileDoc less = sm::parse_profile(sm::read_file(opt.less_path), inst);

    std::vector<int> group;
    if (!opt.group_csv.empty()) {
        group = inst.group_from_ids(split_ids(opt.group_csv));
    } else if (more.group_ids.has_value()) {
        group = inst.group_from_ids(*more.group_ids);
    } else {
        throw sm::err::precondition("no student group: pass --group or put one in the profile");
    }

    sm::ResponsivenessVerdict verdict = sm::check_responsiveness(
        inst, inst.single_profile(), more.profile, less.profile, group, opt.diagnostic);
    emit(sm::verdict_to_text(verdict, inst), opt.out_path);
    return 0;
}

struct GenOpts {
    std::string mode = "single";
    int students = 4;
    int schools = 2;
    int max_capacity = 2;
    int orders = 2;
    std::uint64_t seed = 0;
    bool total = false;
    bool with_total = false;
    bool oracle_compatible = false;
    int budget = 20000;
    std::string out_path;
};

int cmd_gen(const GenOpts& opt) {
    if (opt.oracle_compatible && opt.students > sm::kOracleMaxStudents) {
        throw sm::err::too_large("oracle-compatible instances are capped at " +
                                 std::to_string(sm::kOracleMaxStudents) + " students");
    }
    sm::gen::Rng rng(opt.seed);
    if (opt.mode == "single") {
        sm::Instance inst = sm::gen::random_single_instance(
            rng, opt.students, opt.schools, opt.max_capacity,
            opt.total ? sm::gen::SingleKind::Total : sm::gen::SingleKind::Partial);
        emit(sm::instance_to_text(inst), opt.out_path);
    } else if (opt.mode == "multi") {
        sm::Instance inst = sm::gen::random_multi_instance(
            rng, opt.students, opt.schools, opt.max_capacity, opt.orders, opt.with_total);
        emit(sm::instance_to_text(inst), opt.out_path);
    } else if (opt.mode == "triple") {
        sm::gen::ImprovementTriple triple = sm::gen::random_improvement_triple(
            rng, opt.students, opt.schools, opt.max_capacity, opt.budget);
        if (opt.out_path.empty()) {
            throw sm::err::precondition("--mode triple needs -o PATH");
        }
        sm::write_file(opt.out_path, sm::instance_to_text(triple.inst));
        sm::write_file(opt.out_path + ".more.json",
                       sm::profile_to_text(triple.more, triple.inst, triple.group_ids));
        sm::write_file(opt.out_path + ".less.json",
                       sm::profile_to_text(triple.less, triple.inst, triple.group_ids));
    } else {
        throw sm::err::precondition("unknown mode '" + opt.mode + "'");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"school-choice matching under multiple priority orders"};
    app.require_subcommand(1);

    SolveOpts solve;
    CLI::App* solve_cmd = app.add_subcommand("solve", "compute a matching");
    solve_cmd->add_option("-i,--instance", solve.instance_path, "instance document")->required();
    solve_cmd->add_option("--algo", solve.algo, "da | eada | ea-multi | phi-star");
    solve_cmd->add_option("-o,--out", solve.out_path, "matching output path");
    solve_cmd->add_option("--extension", solve.extension_path, "extension profile (eada)");
    solve_cmd->add_option("--improved", solve.improved_path, "improved profile (phi-star)");
    solve_cmd->add_option("--chosen", solve.chosen_csv,
                          "per-school member indices (ea-multi), e.g. 1,1,0");
    solve_cmd->add_flag("--trace", solve.trace, "print the round-by-round report");
    solve_cmd->add_option("--trace-out", solve.trace_out, "write the report to a file");

    CheckOpts check;
    CLI::App* check_cmd = app.add_subcommand("check", "audit a matching");
    check_cmd->add_option("-i,--instance", check.instance_path, "instance document")->required();
    check_cmd->add_option("-m,--matching", check.matching_path, "matching document")->required();
    check_cmd->add_option("--notion", check.notion,
                          "ir | nonwasteful | fair | stable | m-fair | m-stable | "
                          "weakly-m-fair | weakly-m-stable");

    OracleOpts oracle;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "enumerate and certify");
    oracle_cmd->add_option("-i,--instance", oracle.instance_path, "instance document")
        ->required();
    oracle_cmd->add_option("-o,--out", oracle.out_path, "report output path");
    oracle_cmd->add_option("--group", oracle.group_csv, "student ids, comma separated");

    CompareOpts compare;
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "responsiveness verdict for two improvements");
    compare_cmd
        ->add_option("-i,--instance", compare.instance_path, "instance with the base profile")
        ->required();
    compare_cmd->add_option("--more", compare.more_path, "more-improving profile")->required();
    compare_cmd->add_option("--less", compare.less_path, "less-improving profile")->required();
    compare_cmd->add_option("--group", compare.group_csv, "student ids, comma separated");
    compare_cmd->add_option("-o,--out", compare.out_path, "verdict output path");
    compare_cmd->add_flag("--diagnostic", compare.diagnostic,
                          "run the dominance check even when the precondition fails");

    GenOpts gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate instances");
    gen_cmd->add_option("--mode", gen.mode, "single | multi | triple");
    gen_cmd->add_option("--students", gen.students, "number of students");
    gen_cmd->add_option("--schools", gen.schools, "number of schools");
    gen_cmd->add_option("--max-capacity", gen.max_capacity, "capacity upper bound");
    gen_cmd->add_option("--orders", gen.orders, "priority orders per school (multi)");
    gen_cmd->add_option("--seed", gen.seed, "generator seed")->required();
    gen_cmd->add_flag("--total", gen.total, "total orders instead of partial (single)");
    gen_cmd->add_flag("--with-total", gen.with_total, "force a total first member (multi)");
    gen_cmd->add_flag("--oracle-compatible", gen.oracle_compatible,
                      "keep sizes inside the oracle cap");
    gen_cmd->add_option("--budget", gen.budget, "rejection-sampling budget (triple)");
    gen_cmd->add_option("-o,--out", gen.out_path, "output path (prefix for triple)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) {
            return cmd_solve(solve);
        }
        if (check_cmd->parsed()) {
            return cmd_check(check);
        }
        if (oracle_cmd->parsed()) {
            return cmd_oracle(oracle);
        }
        if (compare_cmd->parsed()) {
            return cmd_compare(compare);
        }
        if (gen_cmd->parsed()) {
            return cmd_gen(gen);
        }
    } catch (const sm::Error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return exit_code(error.code());
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 0;
}
