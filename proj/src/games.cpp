#include "delp/games.hpp"

#include <algorithm>

#include "json.hpp"

namespace delp {

namespace {
constexpr size_t kTraceCap = 10000;

std::string claim_text(const std::set<Vulnerability>& claim) {
    std::string s = "{";
    bool first = true;
    for (const auto& v : claim) {
        if (!first) s += ", ";
        s += v.text();
        first = false;
    }
    return s + "}";
}

std::string branch_text(const std::vector<Move>& branch) {
    std::string s;
    for (size_t i = 0; i < branch.size(); ++i) {
        if (i) s += " ; ";
        s += branch[i].text();
    }
    return s;
}
}  // namespace

std::string Move::text() const {
    return std::string("(") + (pro ? "P" : "O") + ", " + (rho ? rho->text() : "-") + ", " +
           claim_text(claim) + ")";
}

std::vector<ConflictResolution> legal_responses(const Strategy& s, bool skeptical,
                                                const Move& node,
                                                const std::vector<Move>& branch,
                                                const std::vector<Move>& pro_moves) {
    std::vector<ConflictResolution> out;
    bool responder_pro = !node.pro;
    for (const auto& rho : s.resolutions) {
        if (!node.claim.count(res(rho))) continue;
        if (responder_pro) {
            if (skeptical) {
                bool used = false;
                for (const auto& m : branch)
                    if (m.pro && m.rho && *m.rho == rho) used = true;
                if (used) continue;
            }
            // PRO moves never defeat each other, tree-wide
            auto v = vuls_of_resolution(rho);
            bool bad = v.count(res(rho)) > 0;
            for (const auto& m : pro_moves) {
                if (m.claim.count(res(rho))) bad = true;
                if (m.rho && v.count(res(*m.rho))) bad = true;
            }
            if (bad) continue;
        } else {
            if (!skeptical) {
                bool used = false;
                for (const auto& m : branch)
                    if (!m.pro && m.rho && *m.rho == rho) used = true;
                if (used) continue;
            }
        }
        out.push_back(rho);
    }
    return out;
}

namespace {

struct Search {
    const Setting& st;
    bool skeptical;
    const QueryFn* query;
    GameNode root;
    std::vector<Move> pro_moves;
    std::vector<std::string>* trace;

    struct Obligation {
        std::vector<int> path;       // OPP node awaiting a PRO response
        std::vector<Move> branch;    // root..that node
    };

    GameNode* at(const std::vector<int>& path) {
        GameNode* n = &root;
        for (int i : path) n = &n->children[i];
        return n;
    }

    std::vector<QueryOutcome> run_queries(const std::set<Literal>& foreigns, bool pro,
                                          bool& ok) {
        ok = true;
        if (!query || foreigns.empty()) return {};
        auto outs = (*query)(foreigns, pro);
        for (const auto& o : outs)
            if (!o.success) ok = false;
        return outs;
    }

    void record(const std::vector<Move>& branch) {
        if (trace && trace->size() < kTraceCap) trace->push_back(branch_text(branch));
    }

    // Generates all OPP answers to the PRO node at `path` and queues the
    // obligations to answer them. OPP moves with failed queries stay in the
    // tree but need no answer.
    void expand_opp(const std::vector<int>& path, const std::vector<Move>& branch,
                    std::vector<Obligation>& pending) {
        Move node_move = at(path)->move;
        auto opps = legal_responses(st.strategy, skeptical, node_move, branch, pro_moves);
        for (const auto& rho : opps) {
            Move m{false, rho, vuls_of_resolution(rho)};
            bool qok;
            auto qouts = run_queries(rho.conflict.foreign_literals(), false, qok);
            GameNode c;
            c.move = m;
            c.queries = std::move(qouts);
            c.won_by_query_failure = !qok;
            GameNode* n = at(path);
            n->children.push_back(std::move(c));
            if (!qok) continue;
            std::vector<int> cpath = path;
            cpath.push_back(static_cast<int>(n->children.size()) - 1);
            std::vector<Move> cbranch = branch;
            cbranch.push_back(m);
            pending.push_back({std::move(cpath), std::move(cbranch)});
        }
    }

    bool solve(std::vector<Obligation> pending) {
        if (pending.empty()) return true;
        Obligation ob = std::move(pending.back());
        pending.pop_back();
        Move opp_move = at(ob.path)->move;
        auto cands = legal_responses(st.strategy, skeptical, opp_move, ob.branch, pro_moves);
        for (const auto& rho : cands) {
            Move m{true, rho, vuls_of_resolution(rho)};
            bool qok;
            auto qouts = run_queries(rho.conflict.foreign_literals(), true, qok);
            if (!qok) continue;  // an unjustified PRO move cannot win the branch
            GameNode c;
            c.move = m;
            c.queries = std::move(qouts);
            GameNode* opp_node = at(ob.path);
            opp_node->children.push_back(std::move(c));
            pro_moves.push_back(m);
            std::vector<int> cpath = ob.path;
            cpath.push_back(static_cast<int>(opp_node->children.size()) - 1);
            std::vector<Move> cbranch = ob.branch;
            cbranch.push_back(m);
            std::vector<Obligation> rest = pending;
            expand_opp(cpath, cbranch, rest);
            if (solve(std::move(rest))) return true;
            pro_moves.pop_back();
            at(ob.path)->children.pop_back();
        }
        record(ob.branch);
        return false;
    }
};

}  // namespace

GameResult prove(const Setting& st, const ArgPtr& a, bool skeptical, const QueryFn* query) {
    GameResult result;
    Search search{st, skeptical, query};
    search.trace = &result.trace;
    Move root_move{true, std::nullopt, a->vuln};
    search.root.move = root_move;
    bool qok;
    search.root.queries = search.run_queries(a->foreign, true, qok);
    if (!qok) {
        result.outcome = GameResult::Outcome::not_provable;
        result.trace.push_back(branch_text({root_move}) + " ; <root query failed>");
        return result;
    }
    search.pro_moves.push_back(root_move);
    std::vector<Search::Obligation> pending;
    search.expand_opp({}, {root_move}, pending);
    if (search.solve(std::move(pending))) {
        result.outcome = GameResult::Outcome::proved;
        result.tree = GameTree{skeptical, std::move(search.root)};
    } else {
        result.outcome = GameResult::Outcome::not_provable;
    }
    return result;
}

GameResult prove_literal(const Setting& st, const Literal& l, bool skeptical,
                         const QueryFn* query) {
    auto candidates = st.args.concluding(l);
    if (candidates.empty()) {
        GameResult r;
        r.outcome = GameResult::Outcome::no_argument;
        return r;
    }
    GameResult last;
    for (const auto& a : candidates) {
        GameResult r = prove(st, a, skeptical, query);
        if (r.success()) return r;
        last.trace.insert(last.trace.end(), r.trace.begin(), r.trace.end());
    }
    last.outcome = GameResult::Outcome::not_provable;
    return last;
}

namespace {

nlohmann::json node_to_json(const GameNode& n) {
    nlohmann::json j;
    j["player"] = n.move.pro ? "PRO" : "OPP";
    j["resolution"] = n.move.rho ? nlohmann::json(n.move.rho->text()) : nlohmann::json();
    j["claim"] = nlohmann::json::array();
    for (const auto& v : n.move.claim) j["claim"].push_back(v.text());
    if (!n.queries.empty()) {
        j["queries"] = nlohmann::json::array();
        for (const auto& q : n.queries) {
            nlohmann::json e;
            e["literal"] = q.literal.text();
            e["negated"] = q.negated;
            e["success"] = q.success;
            if (q.timeout) e["timeout"] = true;
            j["queries"].push_back(e);
        }
    }
    if (n.won_by_query_failure) j["wonByQueryFailure"] = true;
    j["children"] = nlohmann::json::array();
    for (const auto& c : n.children) j["children"].push_back(node_to_json(c));
    return j;
}

GameNode node_from_json(const nlohmann::json& j, const Strategy& s) {
    GameNode n;
    n.move.pro = j.at("player").get<std::string>() == "PRO";
    if (!j.at("resolution").is_null()) {
        std::string t = j["resolution"].get<std::string>();
        for (const auto& r : s.resolutions)
            if (r.text() == t) n.move.rho = r;
        if (!n.move.rho) throw std::invalid_argument("game JSON: unknown resolution " + t);
    }
    for (const auto& v : j.at("claim")) {
        std::string t = v.get<std::string>();
        if (!t.empty() && t[0] == '~')
            n.move.claim.insert(Vulnerability::from_literal(parse_literal(t)));
        else
            n.move.claim.insert(Vulnerability::from_rule(parse_program(t).rules.at(0)));
    }
    if (j.contains("queries")) {
        for (const auto& e : j["queries"]) {
            QueryOutcome q;
            q.literal = parse_literal(e.at("literal").get<std::string>());
            q.negated = e.at("negated").get<bool>();
            q.success = e.at("success").get<bool>();
            q.timeout = e.value("timeout", false);
            n.queries.push_back(q);
        }
    }
    n.won_by_query_failure = j.value("wonByQueryFailure", false);
    for (const auto& c : j.at("children")) n.children.push_back(node_from_json(c, s));
    return n;
}

void node_to_text(const GameNode& n, int depth, std::string& out) {
    out.append(static_cast<size_t>(depth) * 2, ' ');
    out += n.move.text();
    for (const auto& q : n.queries) {
        out += " [query ";
        if (q.negated) out += "~";
        out += q.literal.text();
        out += q.timeout ? " -> timeout" : (q.success ? " -> yes" : " -> no");
        out += "]";
    }
    out += '\n';
    for (const auto& c : n.children) node_to_text(c, depth + 1, out);
}

void node_to_dot(const GameNode& n, int& counter, int parent, std::string& out) {
    int id = counter++;
    std::string label = std::string(n.move.pro ? "P" : "O") + " : " +
                        (n.move.rho ? n.move.rho->text() : "-") + " : " +
                        claim_text(n.move.claim);
    out += "  n" + std::to_string(id) + " [label=\"" + label + "\"];\n";
    if (parent >= 0)
        out += "  n" + std::to_string(parent) + " -> n" + std::to_string(id) + ";\n";
    for (const auto& c : n.children) node_to_dot(c, counter, id, out);
}

}  // namespace

std::string GameTree::to_json() const {
    nlohmann::json j;
    j["mode"] = skeptical ? "skeptical" : "credulous";
    j["root"] = node_to_json(root);
    return j.dump();
}

std::string GameTree::to_text() const {
    std::string out;
    node_to_text(root, 0, out);
    return out;
}

std::string GameTree::to_dot() const {
    std::string out = "digraph {\n";
    int counter = 0;
    node_to_dot(root, counter, -1, out);
    out += "}\n";
    return out;
}

GameTree game_from_json(const std::string& json_text, const Strategy& s) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    GameTree t;
    t.skeptical = j.at("mode").get<std::string>() == "skeptical";
    t.root = node_from_json(j.at("root"), s);
    return t;
}

namespace {

bool validate_node(const Setting& st, bool skeptical, const GameNode& n,
                   std::vector<Move>& branch, const std::vector<Move>& pro_moves) {
    const Move& m = n.move;
    bool is_root = branch.empty();
    if (is_root != !m.rho.has_value()) return false;
    if (is_root && !m.pro) return false;
    if (!is_root) {
        const Move& parent = branch.back();
        if (parent.pro == m.pro) return false;
        if (!parent.claim.count(res(*m.rho))) return false;  // must attack parent
        if (m.claim != vuls_of_resolution(*m.rho)) return false;
        if (skeptical && m.pro) {
            for (const auto& b : branch)
                if (b.pro && b.rho && *b.rho == *m.rho) return false;
        }
        if (!skeptical && !m.pro) {
            for (const auto& b : branch)
                if (!b.pro && b.rho && *b.rho == *m.rho) return false;
        }
    }
    if (m.pro) {
        // OPP-completeness: every legal defeater appears as a child
        branch.push_back(m);
        auto opps = legal_responses(st.strategy, skeptical, m, branch, pro_moves);
        branch.pop_back();
        for (const auto& rho : opps) {
            bool present = false;
            for (const auto& c : n.children)
                if (!c.move.pro && c.move.rho && *c.move.rho == rho) present = true;
            if (!present) return false;
        }
    }
    if (!m.pro && !n.won_by_query_failure && n.children.empty())
        return false;  // OPP left unanswered loses the game, not the branch
    branch.push_back(m);
    bool ok = true;
    for (const auto& c : n.children)
        if (!validate_node(st, skeptical, c, branch, pro_moves)) ok = false;
    branch.pop_back();
    return ok;
}

void collect_pro(const GameNode& n, std::vector<Move>& pro_moves) {
    if (n.move.pro) pro_moves.push_back(n.move);
    for (const auto& c : n.children) collect_pro(c, pro_moves);
}

}  // namespace

bool validate_game(const Setting& st, const GameTree& t) {
    std::vector<Move> pro_moves;
    collect_pro(t.root, pro_moves);
    // PRO global consistency
    for (const auto& a : pro_moves)
        for (const auto& b : pro_moves)
            if (a.rho && b.claim.count(res(*a.rho))) return false;
    std::vector<Move> branch;
    return validate_node(st, t.skeptical, t.root, branch, pro_moves);
}

}  // namespace delp
