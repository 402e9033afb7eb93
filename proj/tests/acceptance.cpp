// End-to-end acceptance checks. Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits nonzero when any of them fail.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "random_gen.hpp"
#include "delp/mcs.hpp"

using namespace delp;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Vulnerability vrule(const std::string& text) {
    return Vulnerability::from_rule(parse_program(text).rules.at(0));
}

std::set<Vulnerability> vrules(const std::vector<std::string>& texts) {
    std::set<Vulnerability> out;
    for (const auto& t : texts) out.insert(vrule(t));
    return out;
}

std::set<Literal> lits(const std::vector<std::string>& texts) {
    std::set<Literal> out;
    for (const auto& t : texts) out.insert(parse_literal(t));
    return out;
}

// 1. The diamond program yields exactly its six arguments with the expected
//    vulnerability sets, well under a second.
void criterion1() {
    auto t0 = Clock::now();
    Setting st = fixtures::diamond_full();
    std::ostringstream why;
    bool ok = st.args.size() == 6;
    std::vector<std::pair<std::string, std::set<Vulnerability>>> expected = {
        {"[=> a]", vrules({"a -< ."})},
        {"[=> b]", vrules({"b -< ."})},
        {"[=> c]", vrules({"c -< ."})},
        {"[=> d]", vrules({"d -< ."})},
        {"[[=> a],[=> b] -> h]", vrules({"a -< .", "b -< ."})},
        {"[[=> c],[=> d] -> -h]", vrules({"c -< .", "d -< ."})},
    };
    for (const auto& [text, vuls] : expected) {
        ArgPtr a = st.args.find(text);
        if (!a || a->vuln != vuls) {
            ok = false;
            why << "wrong or missing " << text << "; ";
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 1.0) {
        ok = false;
        why << "took " << secs << "s";
    }
    report(1, "argument construction on the running example", ok, why.str());
}

// 2. The full strategy instantiates to 4 nodes and 12 attack edges, and the
//    edge relation coincides with the vuls-membership characterization.
void criterion2() {
    Setting st = fixtures::diamond_full();
    std::ostringstream why;
    bool ok = st.strategy.size() == 4 && st.inst.n() == 4;
    int edges = 0;
    for (size_t i = 0; i < st.inst.n(); ++i)
        for (size_t j = 0; j < st.inst.n(); ++j)
            if (st.inst.attacks(i, j)) ++edges;
    if (edges != 12) {
        ok = false;
        why << "edges=" << edges << "; ";
    }
    for (const auto& r1 : st.strategy.resolutions)
        for (const auto& r2 : st.strategy.resolutions)
            if (attacks_resolution(r1, r2) != attacks_resolution_characterized(r1, r2)) {
                ok = false;
                why << "characterization mismatch on " << r1.text();
            }
    report(2, "full-strategy instantiation and attack characterization", ok, why.str());
}

// 3. Five complete extensions with exactly these outputs; empty grounded.
void criterion3() {
    Setting st = fixtures::diamond_full();
    std::ostringstream why;
    auto complete = complete_extensions(st.inst);
    bool ok = complete == std::vector<NodeSet>{{}, {0}, {1}, {2}, {3}} &&
              grounded(st.inst).empty();
    std::vector<std::pair<NodeSet, std::set<Literal>>> expected = {
        {{}, lits({})},
        {{0}, lits({"b", "c", "d", "-h"})},
        {{1}, lits({"a", "c", "d", "-h"})},
        {{2}, lits({"a", "b", "d", "h"})},
        {{3}, lits({"a", "b", "c", "h"})},
    };
    for (const auto& [e, out] : expected)
        if (output(st.args, st.strategy, st.inst, e) != out) {
            ok = false;
            why << "wrong output for an extension; ";
        }
    report(3, "complete extensions and outputs on the running example", ok, why.str());
}

// 4. On contradictory facts, the skeptical game for a fails and the search
//    trace contains the four-move losing dialogue; the credulous game wins
//    with the exact three-move tree.
void criterion4() {
    Setting st = fixtures::coin_full();
    std::ostringstream why;
    GameResult sk = prove_literal(st, parse_literal("a"), true);
    bool ok = sk.outcome == GameResult::Outcome::not_provable;
    std::string losing =
        "(P, -, {a -< .}) ; "
        "(O, ({[=> -a], [=> a]}, a -< .), {-a -< .}) ; "
        "(P, ({[=> -a], [=> a]}, -a -< .), {a -< .}) ; "
        "(O, ({[=> -a], [=> a]}, a -< .), {-a -< .})";
    bool traced = false;
    for (const auto& b : sk.trace)
        if (b == losing) traced = true;
    if (!traced) {
        ok = false;
        why << "losing branch missing from trace; ";
    }
    GameResult cr = prove_literal(st, parse_literal("a"), false);
    if (!cr.success() || !cr.tree) {
        ok = false;
        why << "credulous game failed; ";
    } else {
        const GameNode& root = cr.tree->root;
        bool shape = root.move.text() == "(P, -, {a -< .})" && root.children.size() == 1 &&
                     root.children[0].move.text() ==
                         "(O, ({[=> -a], [=> a]}, a -< .), {-a -< .})" &&
                     root.children[0].children.size() == 1 &&
                     root.children[0].children[0].move.text() ==
                         "(P, ({[=> -a], [=> a]}, -a -< .), {a -< .})" &&
                     root.children[0].children[0].children.empty() &&
                     validate_game(st, *cr.tree);
        if (!shape) {
            ok = false;
            why << "credulous tree shape wrong; ";
        }
    }
    report(4, "skeptical and credulous games on contradictory facts", ok, why.str());
}

// 5. Game verdicts equal the declarative verdicts on 500 random programs,
//    both modes, within 60 seconds.
void criterion5() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(20260823);
    std::ostringstream why;
    bool ok = true;
    int checked = 0;
    for (int round = 0; round < 500 && ok; ++round) {
        Setting st = testgen::random_setting(rng);
        for (const auto& l : testgen::all_classical(st.program)) {
            for (bool skeptical : {true, false}) {
                bool game = prove_literal(st, l, skeptical).success();
                bool oracle = entails(st.args, st.strategy, l, skeptical);
                ++checked;
                if (game != oracle) {
                    ok = false;
                    why << "mismatch on " << l.text() << " skeptical=" << skeptical
                        << " in:\n" << serialize_program(st.program);
                }
            }
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 60.0) {
        ok = false;
        why << "took " << secs << "s";
    }
    report(5, "game/declarative agreement on 500 random programs (" +
                  std::to_string(checked) + " queries)", ok, why.str());
}

// 6. The stagewise defense equivalence holds for every fixpoint stage of 200
//    random frameworks with up to 8 nodes.
void criterion6() {
    std::mt19937_64 rng(424242);
    std::ostringstream why;
    bool ok = true;
    for (int round = 0; round < 200 && ok; ++round) {
        Framework fw = testgen::random_framework(rng);
        size_t stage = grounded_fixpoint_stage(fw);
        for (size_t i = 0; i <= stage + 1; ++i)
            if (!check_stagewise_defense(fw, i)) {
                ok = false;
                why << "fails at stage " << i << " of " << fw.to_json();
            }
    }
    report(6, "stagewise defense equivalence on 200 random frameworks", ok, why.str());
}

// 7. The split two-context system agrees with its monolithic counterpart on
//    every literal over {a,b,c,d,h}, and 200 random acyclic splits agree on
//    everything, within 120 seconds.
void criterion7() {
    auto t0 = Clock::now();
    std::ostringstream why;
    bool ok = true;

    Program mono_p = parse_program("a -< .\nb -< .\nc -< .\nd -< .\nh <- b, a.\n-h <- c, d.\n");
    Setting mono = Setting::build(mono_p, Strategy{});
    Strategy r;
    r.add(make_resolution(mono.conflicts.at(0), vrule("a -< .")));
    mono.strategy = r;
    mono.inst = instantiate(r);
    MultiContextSystem split =
        contextualize(mono_p, r, {{"c1", {"a", "d", "h"}}, {"c2", {"b", "c"}}});
    McsEngine engine(std::move(split));
    for (const char* t : {"a", "b", "c", "d", "h", "-h"}) {
        for (bool skeptical : {true, false}) {
            bool m = entails(mono.args, mono.strategy, parse_literal(t), skeptical);
            bool c = engine.prove_in_system(parse_literal(t), skeptical).success();
            if (m != c) {
                ok = false;
                why << "split system disagrees on " << t << "; ";
            }
        }
    }

    std::mt19937_64 rng(5550123);
    int accepted = 0, attempts = 0;
    while (accepted < 200 && attempts < 20000 && ok) {
        ++attempts;
        Setting st = testgen::random_setting(rng);
        auto partition = testgen::random_partition(rng, st.program);
        MultiContextSystem mcs;
        try {
            mcs = contextualize(st.program, st.strategy, partition);
        } catch (const std::invalid_argument&) {
            continue;  // a strategy member is not expressible in its owner
        }
        if (find_cycle(mcs)) continue;
        ++accepted;
        McsEngine e(std::move(mcs));
        for (const auto& l : testgen::all_classical(st.program)) {
            for (bool skeptical : {true, false}) {
                bool m = entails(st.args, st.strategy, l, skeptical);
                bool c = e.prove_in_system(l, skeptical).success();
                if (m != c) {
                    ok = false;
                    why << "mismatch on " << l.text() << " skeptical=" << skeptical
                        << " in:\n" << serialize_program(st.program);
                }
            }
        }
    }
    if (accepted < 200) {
        ok = false;
        why << "only " << accepted << " acyclic splits accepted";
    }
    double secs = seconds_since(t0);
    if (secs >= 120.0) {
        ok = false;
        why << "took " << secs << "s";
    }
    report(7, "contextual/monolithic agreement (golden split + " +
                  std::to_string(accepted) + " random splits)", ok, why.str());
}

// 8. In the two-context duel, a is provable in both modes because the
//    opposing move's remote query for b fails; the mutually-referential
//    system is rejected with a two-context cycle witness.
void criterion8() {
    std::ostringstream why;
    bool ok = true;
    const std::string data = DELP_TEST_DATA_DIR;

    McsEngine pair(load_mcs_config(data + "/mcs_pair/config.json"));
    for (bool skeptical : {true, false}) {
        GameResult r = pair.prove_in_system(parse_literal("a"), skeptical);
        bool good = r.success() && r.tree && r.tree->root.children.size() == 1;
        if (good) {
            const GameNode& o = r.tree->root.children[0];
            good = o.won_by_query_failure && o.queries.size() == 1 &&
                   o.queries[0].literal == parse_literal("b") && !o.queries[0].success;
        }
        if (!good) {
            ok = false;
            why << "duel proof wrong (skeptical=" << skeptical << "); ";
        }
    }

    try {
        McsEngine cyc(load_mcs_config(data + "/mcs_cyclic/config.json"));
        ok = false;
        why << "cyclic system accepted";
    } catch (const CyclicSystemError& e) {
        if (e.cycle != std::vector<std::string>{"c1", "c2", "c1"}) {
            ok = false;
            why << "wrong cycle witness";
        }
    }
    report(8, "remote query failures and cyclic-system rejection", ok, why.str());
}

// 9. Proof exports are byte-identical across repeated runs and across
//    transport delivery orders.
void criterion9() {
    std::ostringstream why;
    bool ok = true;
    const std::string data = DELP_TEST_DATA_DIR;
    std::vector<std::string> exports;
    for (int repeat = 0; repeat < 2; ++repeat) {
        for (auto order : {DeliveryOrder::fifo, DeliveryOrder::lifo, DeliveryOrder::shuffle}) {
            for (uint64_t seed : {7ull, 99ull}) {
                McsEngine engine(load_mcs_config(data + "/mcs_split/config.json"), order, seed);
                std::string all;
                for (const char* t : {"a", "b", "d", "h", "-h"}) {
                    for (bool skeptical : {true, false}) {
                        GameResult r = engine.prove_in_system(parse_literal(t), skeptical);
                        all += r.success() ? "y" : "n";
                        all += r.tree ? r.tree->to_json() : "-";
                        all += "\n";
                    }
                }
                exports.push_back(std::move(all));
            }
        }
    }
    for (size_t i = 1; i < exports.size(); ++i)
        if (exports[i] != exports[0]) {
            ok = false;
            why << "export " << i << " differs";
        }
    report(9, "deterministic exports across runs and delivery orders", ok, why.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) {
        std::cout << failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
