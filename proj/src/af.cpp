#include "delp/af.hpp"

#include <algorithm>

#include "json.hpp"

namespace delp {

std::vector<int> Framework::attackers_of(size_t j) const {
    std::vector<int> out;
    for (size_t i = 0; i < n(); ++i)
        if (att[i][j]) out.push_back(static_cast<int>(i));
    return out;
}

std::string Framework::to_dot() const {
    std::string out = "digraph {\n";
    for (size_t i = 0; i < n(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + labels[i] + "\"];\n";
    for (size_t i = 0; i < n(); ++i)
        for (size_t j = 0; j < n(); ++j)
            if (att[i][j])
                out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

std::string Framework::to_json() const {
    nlohmann::json doc;
    doc["nodes"] = labels;
    doc["attacks"] = nlohmann::json::array();
    for (size_t i = 0; i < n(); ++i)
        for (size_t j = 0; j < n(); ++j)
            if (att[i][j]) doc["attacks"].push_back({i, j});
    return doc.dump();
}

Framework make_framework(std::vector<std::string> labels,
                         const std::vector<std::pair<int, int>>& edges) {
    Framework fw;
    fw.att.assign(labels.size(), std::vector<bool>(labels.size(), false));
    fw.labels = std::move(labels);
    for (auto [i, j] : edges) fw.att[i][j] = true;
    return fw;
}

Framework instantiate(const Strategy& s) {
    Framework fw;
    size_t n = s.resolutions.size();
    fw.att.assign(n, std::vector<bool>(n, false));
    for (const auto& r : s.resolutions) fw.labels.push_back(r.text());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            fw.att[i][j] = attacks_resolution(s.resolutions[i], s.resolutions[j]);
    return fw;
}

bool set_attacks(const Framework& fw, const NodeSet& s, int node) {
    for (int i : s)
        if (fw.attacks(i, node)) return true;
    return false;
}

bool defends(const Framework& fw, const NodeSet& s, int node) {
    for (size_t y = 0; y < fw.n(); ++y)
        if (fw.attacks(y, node) && !set_attacks(fw, s, static_cast<int>(y))) return false;
    return true;
}

bool attack_free(const Framework& fw, const NodeSet& s) {
    for (int i : s)
        for (int j : s)
            if (fw.attacks(i, j)) return false;
    return true;
}

NodeSet characteristic(const Framework& fw, const NodeSet& s) {
    NodeSet out;
    for (size_t a = 0; a < fw.n(); ++a)
        if (defends(fw, s, static_cast<int>(a))) out.insert(static_cast<int>(a));
    return out;
}

NodeSet grounded(const Framework& fw) {
    NodeSet s;
    for (;;) {
        NodeSet next = characteristic(fw, s);
        if (next == s) return s;
        s = std::move(next);
    }
}

size_t grounded_fixpoint_stage(const Framework& fw) {
    NodeSet s;
    size_t i = 0;
    for (;;) {
        NodeSet next = characteristic(fw, s);
        if (next == s) return i;
        s = std::move(next);
        ++i;
    }
}

namespace {

void enumerate(const Framework& fw, size_t idx, NodeSet& cur, std::vector<NodeSet>& out) {
    if (idx == fw.n()) {
        // attack-free already holds by pruning; complete iff F(S) = S
        if (characteristic(fw, cur) == cur) out.push_back(cur);
        return;
    }
    enumerate(fw, idx + 1, cur, out);
    int node = static_cast<int>(idx);
    for (int i : cur)
        if (fw.attacks(i, node) || fw.attacks(node, i)) return;
    if (fw.attacks(node, node)) return;
    cur.insert(node);
    enumerate(fw, idx + 1, cur, out);
    cur.erase(node);
}

}  // namespace

std::vector<NodeSet> complete_extensions(const Framework& fw, size_t max_nodes) {
    if (fw.n() > max_nodes) throw SizeGuardError(fw.n(), max_nodes);
    std::vector<NodeSet> out;
    NodeSet cur;
    enumerate(fw, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NodeSet> preferred_extensions(const Framework& fw, size_t max_nodes) {
    auto complete = complete_extensions(fw, max_nodes);
    std::vector<NodeSet> out;
    for (const auto& s : complete) {
        bool maximal = true;
        for (const auto& t : complete)
            if (s != t && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(s);
    }
    return out;
}

std::vector<NodeSet> stable_extensions(const Framework& fw, size_t max_nodes) {
    auto complete = complete_extensions(fw, max_nodes);
    std::vector<NodeSet> out;
    for (const auto& s : complete) {
        bool stable = true;
        for (size_t a = 0; a < fw.n() && stable; ++a)
            if (!s.count(static_cast<int>(a)) && !set_attacks(fw, s, static_cast<int>(a)))
                stable = false;
        if (stable) out.push_back(s);
    }
    return out;
}

bool check_stagewise_defense(const Framework& fw, size_t i) {
    NodeSet fi;
    for (size_t k = 0; k < i; ++k) fi = characteristic(fw, fi);
    NodeSet fi1 = characteristic(fw, fi);
    for (size_t a = 0; a < fw.n(); ++a) {
        bool lhs = fi1.count(static_cast<int>(a)) > 0;
        bool rhs = true;
        for (size_t y = 0; y < fw.n() && rhs; ++y) {
            if (!fw.attacks(y, a)) continue;
            bool countered = false;
            for (int z : fi)
                if (fw.attacks(z, y) && z != static_cast<int>(a)) {
                    countered = true;
                    break;
                }
            if (!countered) rhs = false;
        }
        if (lhs != rhs) return false;
    }
    return true;
}

std::string status_text(Status s) {
    switch (s) {
        case Status::in: return "in";
        case Status::out: return "out";
        default: return "undec";
    }
}

std::vector<int> attackers_of_vulnerability(const Strategy& s, const Vulnerability& v) {
    std::vector<int> out;
    for (size_t i = 0; i < s.resolutions.size(); ++i)
        if (attacks_vulnerability(s.resolutions[i], v)) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> attackers_of_argument(const Strategy& s, const Argument& a) {
    std::vector<int> out;
    for (size_t i = 0; i < s.resolutions.size(); ++i)
        if (attacks_argument(s.resolutions[i], a)) out.push_back(static_cast<int>(i));
    return out;
}

Status status_of(const Framework& inst, const NodeSet& e,
                 const std::vector<int>& item_attackers) {
    bool defended = true;
    for (int y : item_attackers)
        if (!set_attacks(inst, e, y)) {
            defended = false;
            break;
        }
    if (defended) return Status::in;
    for (int y : item_attackers)
        if (e.count(y)) return Status::out;
    return Status::undec;
}

Status status_of_vulnerability(const Strategy& s, const Framework& inst, const NodeSet& e,
                               const Vulnerability& v) {
    return status_of(inst, e, attackers_of_vulnerability(s, v));
}

Status status_of_argument(const Strategy& s, const Framework& inst, const NodeSet& e,
                          const Argument& a) {
    return status_of(inst, e, attackers_of_argument(s, a));
}

Status status_of_resolution(const Framework& inst, const NodeSet& e, int idx) {
    return status_of(inst, e, inst.attackers_of(idx));
}

std::set<Literal> output(const ArgumentSet& args, const Strategy& s, const Framework& inst,
                         const NodeSet& e) {
    std::set<Literal> out;
    for (const auto& a : args.args) {
        if (a->conclusion.def) continue;
        if (status_of_argument(s, inst, e, *a) == Status::in) out.insert(a->conclusion);
    }
    return out;
}

bool entails(const ArgumentSet& args, const Strategy& s, const Literal& l, bool skeptical,
             size_t max_nodes) {
    Framework inst = instantiate(s);
    auto exts = complete_extensions(inst, max_nodes);
    for (const auto& e : exts) {
        // equivalent to output membership for classical literals; also covers
        // default literals, whose arguments are knowledge-base leaves
        bool has = false;
        for (const auto& a : args.concluding(l))
            if (status_of_argument(s, inst, e, *a) == Status::in) {
                has = true;
                break;
            }
        if (skeptical && !has) return false;
        if (!skeptical && has) return true;
    }
    return skeptical;
}

}  // namespace delp
