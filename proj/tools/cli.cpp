#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "threebox/behavior.hpp"
#include "threebox/dag.hpp"
#include "threebox/error.hpp"
#include "threebox/feasibility.hpp"
#include "threebox/inequality.hpp"
#include "threebox/pps.hpp"
#include "threebox/scm.hpp"

namespace threebox::cli {

namespace {

constexpr const char* kBuiltinThreeBox = "builtin:three-box";

// A command reports its text and a verdict that --expect is checked against.
struct CommandResult {
    std::string text;
    std::string verdict = "ok";
};

struct Options {
    std::string format = "markdown";
    std::string expect;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(token, &used));
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
        } catch (const std::exception&) {
            throw ParseError("bad value '" + token + "' in " + flag + " (expected comma-separated integers)");
        }
    }
    if (out.empty()) {
        throw ParseError(flag + " needs at least one integer");
    }
    return out;
}

std::string canonical_node(std::string name) {
    if (name == "Λ" || name == "L") {
        return std::string(dag::kHidden);
    }
    return name;
}

std::set<std::string> parse_node_set(const std::string& text) {
    std::set<std::string> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) {
            out.insert(canonical_node(token));
        }
    }
    return out;
}

Behavior load_behavior(const std::string& source, const std::string& restrict_to) {
    Behavior b = source == kBuiltinThreeBox ? three_box_behavior() : behavior_from_json(read_file(source));
    if (!restrict_to.empty()) {
        b = restrict(b, parse_int_list(restrict_to, "--restrict"));
    }
    return b;
}

scm::Scm load_scm(const std::string& source) {
    if (source == "a" || source == "b1" || source == "c" || source == "d") {
        return scm::catalog(scm::parse_case(source));
    }
    return scm::scm_from_json(read_file(source));
}

std::string behavior_text(const Behavior& b, const Options& opt) {
    return opt.format == "json" ? to_json(b) : to_markdown(b);
}

std::string json_line(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact statistics and causal-structure checks for the quantum three-box experiment", "threebox"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"markdown", "json"}))
        ->capture_default_str();
    app.add_option("--expect", opt.expect, "Fail with exit code 1 unless the verdict matches")
        ->check(CLI::IsMember({"feasible", "infeasible", "violated", "ok", "separated", "connected"}));

    std::function<CommandResult()> action;
    std::set<std::string> verdicts{"ok"};
    const auto bind = [&](CLI::App* cmd, std::set<std::string> allowed, std::function<CommandResult()> body) {
        cmd->callback([&action, &verdicts, allowed = std::move(allowed), body = std::move(body)] {
            action = body;
            verdicts = allowed;
        });
    };

    // three-box
    auto* three_box = app.add_subcommand("three-box", "Quantum statistics of the three-box scenario");
    three_box->require_subcommand(1);
    int choice = 1;
    int outcome = 1;
    bool without_intermediate = false;

    auto* stats = three_box->add_subcommand("stats", "Joint table P(M1,M2|C) for C=1,2,3");
    bind(stats, {"ok"}, [&] {
        return CommandResult{behavior_text(pps::joint_behavior(pps::three_box_scenario()), opt)};
    });

    auto* abl = three_box->add_subcommand("abl", "ABL conditional P(M1=i|M2=1,C)");
    abl->add_option("--choice", choice, "Box to check (C)")->required();
    abl->add_option("--outcome", outcome, "Intermediate outcome i")->check(CLI::Range(0, 1))->capture_default_str();
    bind(abl, {"ok"}, [&] {
        const auto p = pps::abl_conditional(pps::three_box_scenario(), choice, outcome);
        if (opt.format == "json") {
            return CommandResult{json_line({{"choice", choice}, {"outcome", outcome},
                                            {"probability", to_fraction_string(p)}})};
        }
        return CommandResult{"P(M1=" + std::to_string(outcome) + "|M2=1,C=" + std::to_string(choice) +
                             ") = " + to_display_string(p) + "\n"};
    });

    auto* success = three_box->add_subcommand("success", "Post-selection success P(M2=1|C)");
    auto* success_choice = success->add_option("--choice", choice, "Box to check (C)");
    success->add_flag("--without-intermediate", without_intermediate, "Skip the intermediate measurement")
        ->excludes(success_choice);
    bind(success, {"ok"}, [&] {
        const auto scenario = pps::three_box_scenario();
        const auto p = without_intermediate ? pps::postselection_success_without_intermediate(scenario)
                                            : pps::postselection_success(scenario, choice);
        const std::string label = without_intermediate ? "P(M2=1|no M1)" : "P(M2=1|C=" + std::to_string(choice) + ")";
        if (opt.format == "json") {
            nlohmann::ordered_json doc;
            if (without_intermediate) {
                doc["without_intermediate"] = true;
            } else {
                doc["choice"] = choice;
            }
            doc["probability"] = to_fraction_string(p);
            return CommandResult{json_line(doc)};
        }
        return CommandResult{label + " = " + to_display_string(p) + "\n"};
    });

    // scm
    auto* scm_cmd = app.add_subcommand("scm", "Structural causal models");
    scm_cmd->require_subcommand(1);
    std::string scm_source;
    std::string choices_text = "1,2,3";

    auto* scm_run = scm_cmd->add_subcommand("run", "Induced behavior of a catalog case or SCM file");
    scm_run->add_option("model", scm_source, "a|b1|c|d or path to SCM JSON")->required();
    scm_run->add_option("--choices", choices_text, "Choices to evaluate")->capture_default_str();
    bind(scm_run, {"ok"}, [&] {
        const auto m = load_scm(scm_source);
        return CommandResult{behavior_text(scm::induced_behavior(m, parse_int_list(choices_text, "--choices")), opt)};
    });

    auto* scm_show = scm_cmd->add_subcommand("show", "Print an SCM as JSON");
    scm_show->add_option("model", scm_source, "a|b1|c|d or path to SCM JSON")->required();
    bind(scm_show, {"ok"}, [&] { return CommandResult{scm::to_json(load_scm(scm_source))}; });

    // dag
    auto* dag_cmd = app.add_subcommand("dag", "Causal DAG variants");
    dag_cmd->require_subcommand(1);
    std::string variant_text;
    std::string dag_file;
    std::string x_node;
    std::string y_node;
    std::string given_text;

    const auto load_dag = [&] {
        if (!dag_file.empty()) {
            return dag::dag_from_json(read_file(dag_file));
        }
        return dag::build(dag::DagVariant::parse(variant_text));
    };

    auto* dsep = dag_cmd->add_subcommand("dsep", "d-separation query with active-path witnesses");
    auto* dsep_variant = dsep->add_option("--variant", variant_text, "pure|pure+o|...|realist+op");
    dsep->add_option("--dag", dag_file, "DAG JSON file")->excludes(dsep_variant);
    dsep->add_option("--x", x_node, "First node")->required();
    dsep->add_option("--y", y_node, "Second node")->required();
    dsep->add_option("--given", given_text, "Comma-separated conditioning set");
    bind(dsep, {"separated", "connected"}, [&] {
        if (variant_text.empty() && dag_file.empty()) {
            throw ParseError("dag dsep needs --variant or --dag");
        }
        const auto g = load_dag();
        const auto x = canonical_node(x_node);
        const auto y = canonical_node(y_node);
        const auto given = parse_node_set(given_text);
        const bool separated = dag::d_separated(g, x, y, given);
        const auto paths = dag::active_paths(g, x, y, given);
        std::vector<std::string> rendered;
        for (const auto& p : paths) {
            rendered.push_back(dag::render_path(g, p));
        }
        CommandResult result;
        result.verdict = separated ? "separated" : "connected";
        if (opt.format == "json") {
            result.text = json_line({{"x", x},
                                     {"y", y},
                                     {"given", std::vector<std::string>(given.begin(), given.end())},
                                     {"d_separated", separated},
                                     {"active_paths", rendered}});
        } else {
            std::string given_list;
            for (const auto& z : given) {
                given_list += (given_list.empty() ? "" : ",") + dag::display_name(z);
            }
            result.text = dag::display_name(x) + " and " + dag::display_name(y) + " given {" + given_list +
                          "}: " + (separated ? "d-separated" : "d-connected") + "\n";
            for (const auto& p : rendered) {
                result.text += "  open path: " + p + "\n";
            }
        }
        return result;
    });

    auto* dag_show = dag_cmd->add_subcommand("show", "Print a DAG variant and its factorization");
    dag_show->add_option("--variant", variant_text, "pure|pure+o|...|realist+op")->required();
    bind(dag_show, {"ok"}, [&] {
        const auto g = dag::build(dag::DagVariant::parse(variant_text));
        if (opt.format == "json") {
            return CommandResult{dag::to_json(g)};
        }
        std::string text = "Variant " + variant_text + "\n\nArrows:\n";
        for (const auto& [from, to] : g.arrows()) {
            text += "  " + dag::display_name(from) + "→" + dag::display_name(to) + "\n";
        }
        text += "\nFactorization:\n  " + dag::markov_factorization(g).render() + "\n";
        return CommandResult{text};
    });

    // iq
    auto* iq = app.add_subcommand("iq", "Instrumental inequalities");
    iq->require_subcommand(1);
    std::string behavior_source = kBuiltinThreeBox;
    std::string restrict_text;
    std::string form_text = "pairwise";

    auto* iq_check = iq->add_subcommand("check", "Evaluate the inequalities on a behavior");
    iq_check->add_option("--behavior", behavior_source, "Behavior JSON file or builtin:three-box")->capture_default_str();
    iq_check->add_option("--restrict", restrict_text, "Keep only these choices");
    iq_check->add_option("--form", form_text, "compact|pairwise")
        ->check(CLI::IsMember({"compact", "pairwise"}))
        ->capture_default_str();
    bind(iq_check, {"violated", "ok"}, [&] {
        const auto b = load_behavior(behavior_source, restrict_text);
        const auto form = inequality::parse_form(form_text);
        const auto report = form == inequality::Form::compact ? inequality::compact_check(b)
                                                              : inequality::pairwise_check(b);
        return CommandResult{opt.format == "json" ? inequality::to_json(report) : inequality::to_markdown(report),
                             report.violated() ? "violated" : "ok"};
    });

    // feasibility
    auto* feas = app.add_subcommand("feasibility", "Exact DAG-compatibility decisions");
    feas->require_subcommand(1);
    auto* decide = feas->add_subcommand("decide", "Decide whether a DAG variant can produce a behavior");
    decide->add_option("--variant", variant_text, "pure|pure+o|...|realist+op")->required();
    decide->add_option("--behavior", behavior_source, "Behavior JSON file or builtin:three-box")->capture_default_str();
    decide->add_option("--restrict", restrict_text, "Keep only these choices");
    bind(decide, {"feasible", "infeasible"}, [&] {
        const auto b = load_behavior(behavior_source, restrict_text);
        const auto r = feasibility::decide(b, dag::DagVariant::parse(variant_text));
        return CommandResult{opt.format == "json" ? feasibility::to_json(r) : feasibility::to_markdown(r),
                             r.feasible ? "feasible" : "infeasible"};
    });

    // report
    auto* report = app.add_subcommand("report", "Summary reports");
    report->require_subcommand(1);
    auto* figure4 = report->add_subcommand("figure4", "Feasibility of all eight variants on C=1,2 and C=1,2,3");
    figure4->add_option("--behavior", behavior_source, "Behavior JSON file or builtin:three-box")->capture_default_str();
    bind(figure4, {"ok"}, [&] {
        const auto r = feasibility::figure4_report(load_behavior(behavior_source, ""));
        return CommandResult{opt.format == "json" ? feasibility::to_json(r) : feasibility::to_markdown(r)};
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run with --help for the command grammar\n";
        return kExitUsage;
    }

    if (!action) {
        err << "error: incomplete command\n" << app.help();
        return kExitUsage;
    }
    if (!opt.expect.empty() && !verdicts.contains(opt.expect)) {
        err << "error: --expect " << opt.expect << " does not apply to this command\n";
        return kExitUsage;
    }

    try {
        const auto result = action();
        out << result.text;
        if (!opt.expect.empty() && result.verdict != opt.expect) {
            err << "expectation failed: expected " << opt.expect << ", got " << result.verdict << "\n";
            return kExitDomain;
        }
        return kExitOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

}  // namespace threebox::cli
