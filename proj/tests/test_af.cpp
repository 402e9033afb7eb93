#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "random_gen.hpp"

using namespace delp;
using fixtures::lit;

namespace {

std::set<Literal> lits(const std::vector<std::string>& texts) {
    std::set<Literal> out;
    for (const auto& t : texts) out.insert(lit(t));
    return out;
}

}  // namespace

TEST_CASE("framework basics") {
    Framework fw = make_framework({"x", "y", "z"}, {{0, 1}, {1, 2}});
    CHECK(fw.n() == 3);
    CHECK(fw.attacks(0, 1));
    CHECK_FALSE(fw.attacks(1, 0));
    CHECK(fw.attackers_of(2) == std::vector<int>{1});
    CHECK(fw.to_dot().find("n0 -> n1") != std::string::npos);
}

TEST_CASE("characteristic function and grounded on a chain") {
    // x -> y -> z: the unattacked x reinstates z
    Framework fw = make_framework({"x", "y", "z"}, {{0, 1}, {1, 2}});
    CHECK(characteristic(fw, {}) == NodeSet{0});
    CHECK(characteristic(fw, {0}) == NodeSet{0, 2});
    CHECK(characteristic(fw, {0, 2}) == NodeSet{0, 2});
    CHECK(grounded(fw) == NodeSet{0, 2});
    CHECK(grounded_fixpoint_stage(fw) == 2);
    CHECK(complete_extensions(fw) == std::vector<NodeSet>{{0, 2}});
    CHECK(preferred_extensions(fw) == std::vector<NodeSet>{{0, 2}});
    CHECK(stable_extensions(fw) == std::vector<NodeSet>{{0, 2}});
}

TEST_CASE("mutual attack pair") {
    Framework fw = make_framework({"x", "y"}, {{0, 1}, {1, 0}});
    CHECK(grounded(fw) == NodeSet{});
    CHECK(complete_extensions(fw) == std::vector<NodeSet>{{}, {0}, {1}});
    CHECK(preferred_extensions(fw) == std::vector<NodeSet>{{0}, {1}});
    CHECK(stable_extensions(fw) == std::vector<NodeSet>{{0}, {1}});
}

TEST_CASE("self-attacker is never in") {
    Framework fw = make_framework({"x", "y"}, {{0, 0}, {0, 1}});
    CHECK(grounded(fw) == NodeSet{});
    CHECK(complete_extensions(fw) == std::vector<NodeSet>{{}});
    CHECK(stable_extensions(fw).empty());
}

TEST_CASE("size guard") {
    std::vector<std::string> labels(25, "n");
    Framework fw = make_framework(std::move(labels), {});
    CHECK_THROWS_AS(complete_extensions(fw), SizeGuardError);
    CHECK_NOTHROW(complete_extensions(fw, 25));
}

TEST_CASE("diamond instantiation is a 4-clique without self-attacks") {
    Setting st = fixtures::diamond_full();
    const Framework& fw = st.inst;
    REQUIRE(fw.n() == 4);
    int edges = 0;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            if (fw.attacks(i, j)) ++edges;
    CHECK(edges == 12);
    for (size_t i = 0; i < 4; ++i) CHECK_FALSE(fw.attacks(i, i));
}

TEST_CASE("diamond complete extensions and outputs") {
    Setting st = fixtures::diamond_full();
    auto complete = complete_extensions(st.inst);
    CHECK(complete == std::vector<NodeSet>{{}, {0}, {1}, {2}, {3}});
    CHECK(grounded(st.inst) == NodeSet{});
    // node i defeats the i-th defeasible fact (labels sorted a..d)
    CHECK(output(st.args, st.strategy, st.inst, {}) == lits({}));
    CHECK(output(st.args, st.strategy, st.inst, {0}) == lits({"b", "c", "d", "-h"}));
    CHECK(output(st.args, st.strategy, st.inst, {1}) == lits({"a", "c", "d", "-h"}));
    CHECK(output(st.args, st.strategy, st.inst, {2}) == lits({"a", "b", "d", "h"}));
    CHECK(output(st.args, st.strategy, st.inst, {3}) == lits({"a", "b", "c", "h"}));
}

TEST_CASE("statuses partition under a complete extension") {
    Setting st = fixtures::diamond_full();
    NodeSet e{0};  // the extension defeating "a -< ."
    CHECK(status_of_argument(st.strategy, st.inst, e, *st.args.find("[=> a]")) == Status::out);
    CHECK(status_of_argument(st.strategy, st.inst, e, *st.args.find("[=> b]")) == Status::in);
    CHECK(status_of_argument(st.strategy, st.inst, e,
                             *st.args.find("[[=> a],[=> b] -> h]")) == Status::out);
    CHECK(status_of_argument(st.strategy, st.inst, e,
                             *st.args.find("[[=> c],[=> d] -> -h]")) == Status::in);
    CHECK(status_of_vulnerability(st.strategy, st.inst, e,
                                  Vulnerability::from_rule(parse_program("a -< .").rules[0])) ==
          Status::out);
    // under the empty extension everything with attackers is undecided
    CHECK(status_of_argument(st.strategy, st.inst, {}, *st.args.find("[=> a]")) ==
          Status::undec);
    CHECK(status_of_resolution(st.inst, {0}, 0) == Status::in);
    CHECK(status_of_resolution(st.inst, {0}, 1) == Status::out);
    CHECK(status_text(Status::undec) == "undec");
}

TEST_CASE("entailment over complete extensions") {
    Setting st = fixtures::diamond_full();
    for (const char* t : {"a", "b", "c", "d", "h", "-h"}) {
        CHECK_FALSE(entails(st.args, st.strategy, lit(t), true));
        CHECK(entails(st.args, st.strategy, lit(t), false));
    }
    CHECK_FALSE(entails(st.args, st.strategy, lit("x"), false));
    CHECK_FALSE(entails(st.args, st.strategy, lit("x"), true));
}

TEST_CASE("skeptical entailment implies credulous") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 40; ++round) {
        Setting st = testgen::random_setting(rng);
        for (const auto& l : testgen::all_classical(st.program)) {
            if (entails(st.args, st.strategy, l, true))
                CHECK(entails(st.args, st.strategy, l, false));
        }
    }
}

TEST_CASE("characteristic function is monotone") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(0, 7);
    for (int round = 0; round < 100; ++round) {
        Framework fw = testgen::random_framework(rng);
        NodeSet s, t;
        for (size_t i = 0; i < fw.n(); ++i) {
            if (pick(rng) < 3) s.insert(static_cast<int>(i));
            if (pick(rng) < 3) t.insert(static_cast<int>(i));
        }
        t.insert(s.begin(), s.end());
        NodeSet fs = characteristic(fw, s), ft = characteristic(fw, t);
        CHECK(std::includes(ft.begin(), ft.end(), fs.begin(), fs.end()));
    }
}

TEST_CASE("defense stage equivalence on a reinstatement triangle") {
    // y -> x, x -> y, z -> x: the equivalence needs the Z != A proviso
    Framework fw = make_framework({"x", "y", "z"}, {{1, 0}, {0, 1}, {2, 0}});
    size_t stage = grounded_fixpoint_stage(fw);
    for (size_t i = 0; i <= stage + 1; ++i) CHECK(check_stagewise_defense(fw, i));
}

TEST_CASE("defense stage equivalence on random frameworks") {
    std::mt19937_64 rng(20260823);
    for (int round = 0; round < 200; ++round) {
        Framework fw = testgen::random_framework(rng);
        size_t stage = grounded_fixpoint_stage(fw);
        for (size_t i = 0; i <= stage + 1; ++i) CHECK(check_stagewise_defense(fw, i));
    }
}

TEST_CASE("grounded is the least complete extension") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 60; ++round) {
        Framework fw = testgen::random_framework(rng);
        NodeSet g = grounded(fw);
        auto complete = complete_extensions(fw);
        bool found = false;
        for (const auto& e : complete) {
            CHECK(std::includes(e.begin(), e.end(), g.begin(), g.end()));
            if (e == g) found = true;
        }
        CHECK(found);
    }
}
