#include "delp/resolution.hpp"

#include <algorithm>

#include "json.hpp"

namespace delp {

ConflictResolution make_resolution(Conflict c, Vulnerability v) {
    auto cv = c.vuls();
    if (!cv.count(v))
        throw std::invalid_argument("vulnerability " + v.text() +
                                    " does not occur in conflict " + c.text());
    return ConflictResolution{std::move(c), std::move(v)};
}

void Strategy::add(ConflictResolution r) {
    auto it = std::lower_bound(resolutions.begin(), resolutions.end(), r);
    if (it == resolutions.end() || !(*it == r)) resolutions.insert(it, std::move(r));
}

std::set<Vulnerability> con_vuls(const Conflict& c) { return c.vuls(); }

const Conflict& con(const ConflictResolution& r) { return r.conflict; }
const Vulnerability& res(const ConflictResolution& r) { return r.vulnerability; }

std::set<Vulnerability> vuls_of_resolution(const ConflictResolution& r) {
    const auto& va = r.conflict.first->vuln;
    const auto& vb = r.conflict.second->vuln;
    const auto& v = r.vulnerability;
    std::set<Vulnerability> out;
    for (const auto& x : va)
        if (!(x == v)) out.insert(x);
    for (const auto& x : vb)
        if (!(x == v)) out.insert(x);
    if (va.count(v) && vb.count(v)) out.insert(v);
    return out;
}

bool attacks_vulnerability(const ConflictResolution& r, const Vulnerability& v) {
    return r.vulnerability == v;
}

bool attacks_argument(const ConflictResolution& r, const Argument& a) {
    return a.vuln.count(r.vulnerability) > 0;
}

bool attacks_resolution(const ConflictResolution& r, const ConflictResolution& r2) {
    bool hits_first = attacks_argument(r, *r2.conflict.first);
    bool hits_second = attacks_argument(r, *r2.conflict.second);
    if (r.vulnerability == r2.vulnerability) return hits_first && hits_second;
    return hits_first || hits_second;
}

bool attacks_resolution_characterized(const ConflictResolution& r,
                                      const ConflictResolution& r2) {
    return vuls_of_resolution(r2).count(r.vulnerability) > 0;
}

bool is_total(const Strategy& s, const std::vector<Conflict>& conflicts) {
    for (const auto& c : conflicts) {
        bool covered = false;
        for (const auto& r : s.resolutions)
            if (r.conflict == c) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

FullStrategyResult generate_full_strategy(const std::vector<Conflict>& conflicts) {
    FullStrategyResult out;
    for (const auto& c : conflicts) {
        auto vs = c.vuls();
        if (vs.empty()) {
            out.unresolvable.push_back(c);
            continue;
        }
        for (const auto& v : vs) out.strategy.add(make_resolution(c, v));
    }
    return out;
}

Strategy load_strategy_json(const std::string& json_text, const ArgumentSet& args,
                            const std::vector<Conflict>& conflicts) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("strategy JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("resolutions") || !doc["resolutions"].is_array())
        throw std::invalid_argument("strategy JSON: expected object with \"resolutions\" array");
    Strategy s;
    for (const auto& entry : doc["resolutions"]) {
        if (!entry.contains("conflict") || !entry["conflict"].is_array() ||
            entry["conflict"].size() != 2 || !entry.contains("vulnerability"))
            throw std::invalid_argument(
                "strategy JSON: each resolution needs a 2-element \"conflict\" and a "
                "\"vulnerability\"");
        ArgPtr a = parse_argument(entry["conflict"][0].get<std::string>(), args);
        ArgPtr b = parse_argument(entry["conflict"][1].get<std::string>(), args);
        const Conflict* found = nullptr;
        for (const auto& c : conflicts) {
            if ((c.first == a && c.second == b) || (c.first == b && c.second == a)) {
                found = &c;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument("strategy JSON: arguments are not in conflict: " +
                                        a->text + ", " + b->text);
        std::string vtext = entry["vulnerability"].get<std::string>();
        Vulnerability v;
        if (!vtext.empty() && vtext[0] == '~') {
            v = Vulnerability::from_literal(parse_literal(vtext));
        } else {
            Program one = parse_program(vtext);
            if (one.rules.size() != 1 || !one.rules[0].defeasible)
                throw std::invalid_argument(
                    "strategy JSON: vulnerability must be a defeasible rule or ~literal: " +
                    vtext);
            v = Vulnerability::from_rule(one.rules[0]);
        }
        s.add(make_resolution(*found, v));
    }
    return s;
}

std::string strategy_to_json(const Strategy& s) {
    nlohmann::json doc;
    doc["resolutions"] = nlohmann::json::array();
    for (const auto& r : s.resolutions) {
        nlohmann::json e;
        e["conflict"] = {r.conflict.first->text, r.conflict.second->text};
        e["vulnerability"] = r.vulnerability.text();
        doc["resolutions"].push_back(e);
    }
    return doc.dump(2);
}

}  // namespace delp
