#include "revca/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "revca/automaton.hpp"
#include "revca/classes.hpp"
#include "revca/oracle.hpp"
#include "revca/reachability.hpp"
#include "revca/reference_tables.hpp"
#include "revca/rule.hpp"
#include "revca/synthesis.hpp"

namespace revca {

namespace {

using nlohmann::json;

enum class Format { plain, record };

void add_format_option(CLI::App* cmd, Format& format) {
    cmd->add_option("-f,--format", format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"plain", Format::plain}, {"record", Format::record}}));
}

json verdict_record(const Verdict& verdict) {
    json record;
    record["reversible"] = verdict.reversible;
    if (verdict.witness) {
        record["witness_level"] = verdict.witness->level;
        record["reason"] = std::string(to_string(verdict.witness->reason));
    } else {
        record["witness_level"] = nullptr;
        record["reason"] = nullptr;
    }
    return record;
}

struct IdentifyArgs {
    std::string rules;
    Format format = Format::plain;
    bool expect_reversible = false;
    bool show_tree = false;
};

int run_identify(const IdentifyArgs& args, std::ostream& out) {
    const RuleVector rv = RuleVector::parse(args.rules);
    const Verdict verdict = identify_reversible(rv);

    if (args.format == Format::record) {
        out << verdict_record(verdict).dump() << '\n';
    } else {
        if (verdict.reversible) {
            out << "reversible\n";
        } else {
            const Witness& w = *verdict.witness;
            out << "irreversible (cell " << w.level << ": " << to_string(w.reason) << " on "
                << to_string(w.failing) << ")\n";
        }
        if (args.show_tree) {
            for (const CompressedTreeLevel& level : compressed_tree(rv)) {
                out << "level " << level.level << ':';
                for (const RmtSet& node : level.nodes) out << ' ' << to_string(node);
                out << '\n';
            }
        }
    }
    return args.expect_reversible && !verdict.reversible ? 1 : 0;
}

struct SynthesizeArgs {
    std::size_t n = 0;
    std::string method = "classwalk";
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool randomize_dont_cares = false;
    Format format = Format::plain;
};

int run_synthesize(const SynthesizeArgs& args, std::ostream& out, std::ostream& err) {
    std::uint64_t seed = args.seed;
    if (!args.seed_given) {
        seed = std::random_device{}();
    }
    const SynthesisOptions options{args.randomize_dont_cares};
    const RuleVector rv = args.method == "tree" ? synthesize_tree(args.n, seed, options)
                                                : synthesize_classwalk(args.n, seed, options);
    if (args.format == Format::record) {
        json record;
        record["n"] = args.n;
        record["seed"] = seed;
        record["method"] = args.method;
        record["rules"] = rv.to_string();
        out << record.dump() << '\n';
    } else {
        if (!args.seed_given) err << "seed: " << seed << '\n';
        out << rv.to_string() << '\n';
    }
    return 0;
}

struct EvolveArgs {
    std::string rules;
    std::string state;
    std::size_t steps = 1;
    Format format = Format::plain;
};

int run_evolve(const EvolveArgs& args, std::ostream& out) {
    const RuleVector rv = RuleVector::parse(args.rules);
    const CaState s0 = CaState::from_string(args.state);
    if (rv.size() != s0.size()) {
        throw std::invalid_argument("evolve: state length does not match the rule vector");
    }
    const std::vector<CaState> trajectory = evolve(rv, s0, args.steps);
    if (args.format == Format::record) {
        for (std::size_t t = 0; t < trajectory.size(); ++t) {
            json record;
            record["step"] = t;
            record["state"] = trajectory[t].to_string();
            out << record.dump() << '\n';
        }
    } else {
        for (std::size_t t = 0; t < trajectory.size(); ++t) {
            if (t) out << ' ';
            out << trajectory[t].to_string();
        }
        out << '\n';
    }
    return 0;
}

struct StgArgs {
    std::string rules;
    Format format = Format::plain;
};

int run_stg(const StgArgs& args, std::ostream& out) {
    const RuleVector rv = RuleVector::parse(args.rules);
    if (rv.size() > max_stg_cells) {
        throw std::invalid_argument("stg: at most " + std::to_string(max_stg_cells) + " cells");
    }
    const StateTransitionGraph stg = build_stg(rv);
    const std::vector<std::uint64_t> cycles = cycle_structure(stg);

    std::map<std::uint64_t, std::uint64_t> cycle_counts;
    for (std::uint64_t len : cycles) ++cycle_counts[len];

    const std::size_t n = rv.size();
    if (args.format == Format::record) {
        for (std::uint64_t s = 0; s < stg.state_count(); ++s) {
            json edge;
            edge["from"] = CaState::from_index(n, s).to_string();
            edge["to"] = CaState::from_index(n, stg.successor[s]).to_string();
            out << edge.dump() << '\n';
        }
        json summary;
        summary["bijective"] = is_bijective(stg);
        summary["non_reachable_states"] = non_reachable_count(stg);
        summary["max_predecessor_count"] = max_predecessor_count(stg);
        json lengths = json::array();
        for (const auto& [len, count] : cycle_counts) lengths.push_back({len, count});
        summary["cycle_lengths"] = lengths;
        out << summary.dump() << '\n';
    } else {
        out << "digraph stg {\n";
        out << "  // rules: " << rv.to_string() << '\n';
        for (std::uint64_t s = 0; s < stg.state_count(); ++s) {
            out << "  \"" << CaState::from_index(n, s).to_string() << "\" -> \""
                << CaState::from_index(n, stg.successor[s]).to_string() << "\";\n";
        }
        out << "  // bijective: " << (is_bijective(stg) ? "true" : "false") << '\n';
        out << "  // non-reachable states: " << non_reachable_count(stg) << '\n';
        out << "  // max predecessor count: " << max_predecessor_count(stg) << '\n';
        out << "  // cycle lengths:";
        for (const auto& [len, count] : cycle_counts) out << ' ' << len << 'x' << count;
        out << "\n}\n";
    }
    return 0;
}

struct CountArgs {
    std::size_t n = 0;
    std::string space = "all";
    Format format = Format::plain;
};

int run_count(const CountArgs& args, std::ostream& out) {
    const RuleSpace space =
        args.space == "all" ? RuleSpace::all_rules : RuleSpace::reversible_rules;
    const std::uint64_t count = count_reversible(args.n, space);
    if (args.format == Format::record) {
        json record;
        record["n"] = args.n;
        record["space"] = args.space;
        record["count"] = count;
        out << record.dump() << '\n';
    } else {
        out << count << '\n';
    }
    return 0;
}

std::string rule_list(const std::vector<Rule>& rules) {
    std::string text;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (i) text += ' ';
        text += std::to_string(rules[i].code());
    }
    return text;
}

template <typename Span>
bool same_codes(const std::vector<Rule>& derived, const Span& reference) {
    if (derived.size() != reference.size()) return false;
    for (std::size_t i = 0; i < derived.size(); ++i) {
        if (derived[i].code() != reference[i]) return false;
    }
    return true;
}

// Emits every derived table next to the reference copy; rows that
// disagree are flagged and flip the exit status.
int run_classify(Format format, std::ostream& out) {
    bool all_match = true;

    const auto emit = [&](const std::string& table, const std::string& row,
                          const std::vector<Rule>& derived, bool match) {
        all_match = all_match && match;
        if (format == Format::record) {
            json record;
            record["table"] = table;
            record["row"] = row;
            record["derived"] = json::array();
            for (Rule r : derived) record["derived"].push_back(r.code());
            record["match"] = match;
            out << record.dump() << '\n';
        } else {
            out << table << ' ' << row << ": " << rule_list(derived)
                << (match ? "  [match]" : "  [MISMATCH]") << '\n';
        }
    };

    std::vector<Rule> reversible;
    for (unsigned code = 0; code <= 255; ++code) {
        if (is_reversible_rule(Rule(code))) reversible.push_back(Rule(code));
    }
    emit("reversible-rules", "-", reversible, same_codes(reversible, reference::reversible_rules));

    std::vector<Rule> balanced_irreversible;
    for (unsigned code = 0; code <= 255; ++code) {
        const Rule r{code};
        if (is_balanced(r) && !is_reversible_rule(r)) balanced_irreversible.push_back(r);
    }
    emit("balanced-irreversible-rules", "-", balanced_irreversible,
         same_codes(balanced_irreversible, reference::balanced_irreversible_rules));

    for (RuleClass c : all_rule_classes) {
        const auto& derived = rules_of_class(c);
        emit("class", std::string(to_string(c)), derived,
             same_codes(derived, reference::class_rules(c)));
    }

    // Transitions, grouped (from, to) in reference row order, then any
    // derived pair the reference lacks.
    std::map<std::pair<RuleClass, RuleClass>, std::vector<Rule>> derived_transitions;
    for (RuleClass c : all_rule_classes) {
        for (Rule r : rules_of_class(c)) {
            derived_transitions[{c, next_class(c, r)}].push_back(r);
        }
    }
    for (const auto& row : reference::class_transitions) {
        const auto it = derived_transitions.find({row.from, row.to});
        const std::vector<Rule> derived =
            it == derived_transitions.end() ? std::vector<Rule>{} : it->second;
        emit("transition", std::string(to_string(row.from)) + "->" + std::string(to_string(row.to)),
             derived, same_codes(derived, row.rules));
        if (it != derived_transitions.end()) derived_transitions.erase(it);
    }
    for (const auto& [key, rules] : derived_transitions) {
        emit("transition",
             std::string(to_string(key.first)) + "->" + std::string(to_string(key.second)), rules,
             false);
    }

    std::vector<Rule> firsts;
    bool firsts_match = true;
    const auto first_options = first_rule_options();
    for (std::size_t i = 0; i < first_options.size(); ++i) {
        firsts.push_back(first_options[i].first);
        firsts_match = firsts_match && i < reference::first_rules.size() &&
                       first_options[i].first.code() == reference::first_rules[i].first &&
                       first_options[i].second == reference::first_rules[i].second;
    }
    firsts_match = firsts_match && first_options.size() == reference::first_rules.size();
    emit("first-rules", "-", firsts, firsts_match);

    for (RuleClass c : all_rule_classes) {
        const auto& derived = last_rule_options(c);
        emit("last-rules", std::string(to_string(c)), derived,
             same_codes(derived, reference::last_rules(c)));
    }

    if (format == Format::plain) {
        out << (all_match ? "all rows match the reference tables\n"
                          : "MISMATCH against the reference tables\n");
    }
    return all_match ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"analysis and synthesis of reversible null-boundary hybrid cellular automata"};
    app.require_subcommand(1);

    IdentifyArgs identify_args;
    CLI::App* identify = app.add_subcommand("identify", "decide reversibility of a rule vector");
    identify->add_option("--rules", identify_args.rules, "comma-separated rule codes")->required();
    identify->add_flag("--expect-reversible", identify_args.expect_reversible,
                       "exit 1 when the vector is irreversible");
    identify->add_flag("--show-tree", identify_args.show_tree,
                       "also print the compressed reachability tree levels");
    add_format_option(identify, identify_args.format);

    SynthesizeArgs synthesize_args;
    CLI::App* synthesize = app.add_subcommand("synthesize", "construct a reversible rule vector");
    synthesize->add_option("--n", synthesize_args.n, "cell count")->required();
    CLI::Option* seed_option =
        synthesize->add_option("--seed", synthesize_args.seed, "RNG seed (generated when absent)");
    synthesize->add_option("--method", synthesize_args.method, "construction method")
        ->check(CLI::IsMember({"tree", "classwalk"}));
    synthesize->add_flag("--randomize-dontcares", synthesize_args.randomize_dont_cares,
                         "randomize the boundary rules' don't-care RMTs");
    add_format_option(synthesize, synthesize_args.format);

    EvolveArgs evolve_args;
    CLI::App* evolve = app.add_subcommand("evolve", "run a CA from an initial state");
    evolve->add_option("--rules", evolve_args.rules, "comma-separated rule codes")->required();
    evolve->add_option("--state", evolve_args.state, "initial state as a binary string")->required();
    evolve->add_option("--steps", evolve_args.steps, "number of updates");
    add_format_option(evolve, evolve_args.format);

    Format classify_format = Format::plain;
    CLI::App* classify =
        app.add_subcommand("classify", "derive the rule taxonomy and check it against references");
    add_format_option(classify, classify_format);

    StgArgs stg_args;
    CLI::App* stg = app.add_subcommand("stg", "emit the full state transition graph");
    stg->add_option("--rules", stg_args.rules, "comma-separated rule codes")->required();
    add_format_option(stg, stg_args.format);

    CountArgs count_args;
    CLI::App* count = app.add_subcommand("count", "count reversible rule vectors exhaustively");
    count->add_option("--n", count_args.n, "cell count")->required();
    count->add_option("--space", count_args.space, "rule space per cell")
        ->check(CLI::IsMember({"all", "reversible"}));
    add_format_option(count, count_args.format);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0; anything else is a usage error.
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (identify->parsed()) return run_identify(identify_args, out);
        if (synthesize->parsed()) {
            synthesize_args.seed_given = seed_option->count() > 0;
            return run_synthesize(synthesize_args, out, err);
        }
        if (evolve->parsed()) return run_evolve(evolve_args, out);
        if (classify->parsed()) return run_classify(classify_format, out);
        if (stg->parsed()) return run_stg(stg_args, out);
        if (count->parsed()) return run_count(count_args, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    err << "error: no subcommand\n";
    return 2;
}

}  // namespace revca
