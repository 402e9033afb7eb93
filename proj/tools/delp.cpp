#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "delp/mcs.hpp"

using namespace delp;

namespace {

// exit codes: 0 yes/success, 1 proved-no, 2 input error, 3 size guard,
// 4 cyclic MCS, 5 engine disagreement under --engine both
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;
constexpr int kExitCyclic = 4;
constexpr int kExitMismatch = 5;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Setting build_setting(const std::string& program_path, const std::string& strategy,
                      const std::set<Literal>& extra_leaves = {}) {
    Program p = parse_program(slurp(program_path));
    Setting st = Setting::build(p, Strategy{}, extra_leaves);
    if (strategy == "full") {
        st.strategy = generate_full_strategy(st.conflicts).strategy;
    } else {
        st.strategy = load_strategy_json(slurp(strategy), st.args, st.conflicts);
    }
    st.inst = instantiate(st.strategy);
    return st;
}

std::string set_text(const std::set<Literal>& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& l : s) {
        if (!first) out += ", ";
        out += l.text();
        first = false;
    }
    return out + "}";
}

std::string ext_text(const Framework& fw, const NodeSet& e) {
    std::string out = "{";
    bool first = true;
    for (int i : e) {
        if (!first) out += ", ";
        out += fw.labels[i];
        first = false;
    }
    return out + "}";
}

int cmd_inspect(const std::string& program_path, const std::string& strategy,
                const std::string& format) {
    Setting st = build_setting(program_path, strategy);
    if (format == "dot") {
        std::cout << st.inst.to_dot();
        return kExitYes;
    }
    if (format == "json") {
        nlohmann::json j;
        j["arguments"] = nlohmann::json::array();
        for (const auto& a : st.args.args) j["arguments"].push_back(a->text);
        j["conflicts"] = nlohmann::json::array();
        for (const auto& c : st.conflicts) j["conflicts"].push_back(c.text());
        j["resolutions"] = nlohmann::json::array();
        for (const auto& r : st.strategy.resolutions) j["resolutions"].push_back(r.text());
        j["total"] = is_total(st.strategy, st.conflicts);
        j["instantiation"] = nlohmann::json::parse(st.inst.to_json());
        std::cout << j.dump(2) << "\n";
        return kExitYes;
    }
    std::cout << "arguments: " << st.args.size() << "\n";
    for (const auto& a : st.args.args) std::cout << "  " << a->text << "\n";
    std::cout << "conflicts: " << st.conflicts.size() << "\n";
    for (const auto& c : st.conflicts) std::cout << "  " << c.text() << "\n";
    std::cout << "resolutions: " << st.strategy.size() << "\n";
    for (const auto& r : st.strategy.resolutions) std::cout << "  " << r.text() << "\n";
    std::cout << "total: " << (is_total(st.strategy, st.conflicts) ? "yes" : "no") << "\n";
    return kExitYes;
}

int cmd_extensions(const std::string& program_path, const std::string& strategy,
                   size_t max_nodes, const std::string& format) {
    Setting st = build_setting(program_path, strategy);
    auto complete = complete_extensions(st.inst, max_nodes);
    auto preferred = preferred_extensions(st.inst, max_nodes);
    auto stable = stable_extensions(st.inst, max_nodes);
    NodeSet g = grounded(st.inst);
    if (format == "json") {
        nlohmann::json j;
        auto dump_sets = [&](const std::vector<NodeSet>& sets) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& e : sets) {
                nlohmann::json one;
                one["extension"] = e;
                nlohmann::json outs = nlohmann::json::array();
                for (const auto& l : output(st.args, st.strategy, st.inst, e))
                    outs.push_back(l.text());
                one["output"] = outs;
                arr.push_back(one);
            }
            return arr;
        };
        j["complete"] = dump_sets(complete);
        j["preferred"] = dump_sets(preferred);
        j["stable"] = dump_sets(stable);
        j["grounded"] = g;
        j["nodes"] = st.inst.labels;
        std::cout << j.dump(2) << "\n";
        return kExitYes;
    }
    std::cout << "complete extensions: " << complete.size() << "\n";
    for (const auto& e : complete)
        std::cout << "  " << ext_text(st.inst, e) << " output "
                  << set_text(output(st.args, st.strategy, st.inst, e)) << "\n";
    std::cout << "grounded: " << ext_text(st.inst, g) << "\n";
    std::cout << "preferred: " << preferred.size() << ", stable: " << stable.size() << "\n";
    return kExitYes;
}

int cmd_query(const std::string& program_path, const std::string& strategy,
              const std::string& literal, const std::string& mode, const std::string& engine,
              size_t max_nodes, const std::string& format) {
    Literal l = parse_literal(literal);
    std::set<Literal> extra;
    if (l.def) extra.insert(l);
    Setting st = build_setting(program_path, strategy, extra);
    bool skeptical = mode == "skeptical";

    std::optional<bool> game_verdict, oracle_verdict;
    GameResult gr;
    if (engine == "game" || engine == "both") {
        gr = prove_literal(st, l, skeptical);
        game_verdict = gr.success();
    }
    if (engine == "oracle" || engine == "both") {
        oracle_verdict = entails(st.args, st.strategy, l, skeptical, max_nodes);
    }
    if (game_verdict && oracle_verdict && *game_verdict != *oracle_verdict) {
        std::cerr << "engine mismatch: game says " << (*game_verdict ? "yes" : "no")
                  << ", oracle says " << (*oracle_verdict ? "yes" : "no") << "\n";
        return kExitMismatch;
    }
    bool verdict = game_verdict ? *game_verdict : *oracle_verdict;
    if (format == "json") {
        nlohmann::json j;
        j["literal"] = l.text();
        j["mode"] = mode;
        j["verdict"] = verdict;
        if (gr.tree) j["game"] = nlohmann::json::parse(gr.tree->to_json());
        std::cout << j.dump(2) << "\n";
    } else {
        if (gr.tree)
            std::cerr << gr.tree->to_text();
        else
            for (const auto& b : gr.trace) std::cerr << "explored: " << b << "\n";
    }
    std::cout << "RESULT: " << (verdict ? "yes" : "no") << "\n";
    return verdict ? kExitYes : kExitNo;
}

int cmd_mcs(const std::string& config_path, const std::string& literal, const std::string& mode,
            bool compare_monolithic, const std::string& format, size_t max_nodes) {
    MultiContextSystem mcs = load_mcs_config(config_path);
    if (auto cycle = find_cycle(mcs)) {
        std::cerr << "cyclic multi-context system: ";
        for (size_t i = 0; i < cycle->size(); ++i)
            std::cerr << (i ? " -> " : "") << (*cycle)[i];
        std::cerr << "\n";
        return kExitCyclic;
    }
    McsEngine engine(std::move(mcs));
    Literal l = parse_literal(literal);
    bool skeptical = mode == "skeptical";
    GameResult r = engine.prove_in_system(l, skeptical);
    bool verdict = r.success();

    if (compare_monolithic) {
        auto [p, s] = merge_monolithic(engine.system());
        std::set<Literal> extra;
        if (l.def) extra.insert(l);
        Setting st = Setting::build(p, s, extra);
        bool mono = entails(st.args, st.strategy, l, skeptical, max_nodes);
        if (mono != verdict) {
            std::cerr << "contextual/monolithic mismatch: contextual says "
                      << (verdict ? "yes" : "no") << ", monolithic says "
                      << (mono ? "yes" : "no") << "\n";
            return kExitMismatch;
        }
        std::cerr << "monolithic comparison: agreement\n";
    }
    if (format == "json") {
        nlohmann::json j;
        j["literal"] = l.text();
        j["mode"] = mode;
        j["verdict"] = verdict;
        if (r.tree) j["game"] = nlohmann::json::parse(r.tree->to_json());
        std::cout << j.dump(2) << "\n";
    } else {
        if (r.tree)
            std::cerr << r.tree->to_text();
        else
            for (const auto& b : r.trace) std::cerr << "explored: " << b << "\n";
    }
    std::cout << "RESULT: " << (verdict ? "yes" : "no") << "\n";
    return verdict ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"defeasible logic programming under conflict resolution semantics"};
    app.require_subcommand(1);

    std::string program_path, strategy = "full", literal, mode = "skeptical";
    std::string engine = "both", format = "text", config_path;
    size_t max_nodes = kDefaultMaxNodes;
    bool compare_monolithic = false;

    auto* inspect = app.add_subcommand("inspect", "arguments, conflicts, resolutions");
    inspect->add_option("--program", program_path)->required();
    inspect->add_option("--strategy", strategy);
    inspect->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

    auto* extensions = app.add_subcommand("extensions", "extensions and outputs");
    extensions->add_option("--program", program_path)->required();
    extensions->add_option("--strategy", strategy);
    extensions->add_option("--max-nodes", max_nodes);
    extensions->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* query = app.add_subcommand("query", "entailment of one literal");
    query->add_option("--program", program_path)->required();
    query->add_option("--strategy", strategy);
    query->add_option("--literal", literal)->required();
    query->add_option("--mode", mode)->check(CLI::IsMember({"skeptical", "credulous"}));
    query->add_option("--engine", engine)->check(CLI::IsMember({"game", "oracle", "both"}));
    query->add_option("--max-nodes", max_nodes);
    query->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* mcs = app.add_subcommand("mcs", "distributed proving over a multi-context system");
    mcs->add_option("--config", config_path)->required();
    mcs->add_option("--literal", literal)->required();
    mcs->add_option("--mode", mode)->check(CLI::IsMember({"skeptical", "credulous"}));
    mcs->add_flag("--compare-monolithic", compare_monolithic);
    mcs->add_option("--max-nodes", max_nodes);
    mcs->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (inspect->parsed()) return cmd_inspect(program_path, strategy, format);
        if (extensions->parsed()) return cmd_extensions(program_path, strategy, max_nodes, format);
        if (query->parsed())
            return cmd_query(program_path, strategy, literal, mode, engine, max_nodes, format);
        if (mcs->parsed())
            return cmd_mcs(config_path, literal, mode, compare_monolithic, format, max_nodes);
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const ArgumentLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const CyclicSystemError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCyclic;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
