#include "delp/arguments.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace delp {

Vulnerability Vulnerability::from_rule(Rule r) {
    Vulnerability v;
    v.is_rule = true;
    v.rule = std::move(r);
    return v;
}

Vulnerability Vulnerability::from_literal(Literal l) {
    Vulnerability v;
    v.is_rule = false;
    v.lit = std::move(l);
    return v;
}

std::string Vulnerability::text() const { return is_rule ? rule.text() : lit.text(); }

ArgPtr Argument::make_leaf(Literal l, bool is_foreign) {
    auto a = std::make_shared<Argument>();
    a->leaf = l;
    a->conclusion = l;
    if (is_foreign)
        a->foreign.insert(l);
    else if (l.def)
        a->vuln.insert(Vulnerability::from_literal(l));
    a->text = "[" + l.text() + "]";
    return a;
}

ArgPtr Argument::make_node(Rule r, std::vector<ArgPtr> ch) {
    auto a = std::make_shared<Argument>();
    a->conclusion = r.head;
    a->rules_below.insert(r.text());
    if (r.defeasible) a->vuln.insert(Vulnerability::from_rule(r));
    std::string inner;
    for (size_t i = 0; i < ch.size(); ++i) {
        if (i) inner += ',';
        inner += ch[i]->text;
        a->vuln.insert(ch[i]->vuln.begin(), ch[i]->vuln.end());
        a->rules_below.insert(ch[i]->rules_below.begin(), ch[i]->rules_below.end());
        a->foreign.insert(ch[i]->foreign.begin(), ch[i]->foreign.end());
    }
    a->text = "[" + inner + (inner.empty() ? "" : " ") +
              (r.defeasible ? "=> " : "-> ") + r.head.text() + "]";
    a->rule = std::move(r);
    a->children = std::move(ch);
    return a;
}

std::string Conflict::text() const { return "{" + first->text + ", " + second->text + "}"; }

std::set<Vulnerability> Conflict::vuls() const {
    std::set<Vulnerability> out = first->vuln;
    out.insert(second->vuln.begin(), second->vuln.end());
    return out;
}

std::set<Literal> Conflict::foreign_literals() const {
    std::set<Literal> out = first->foreign;
    out.insert(second->foreign.begin(), second->foreign.end());
    return out;
}

Conflict make_conflict(ArgPtr a, ArgPtr b, bool undercut) {
    Conflict c;
    if (b->text < a->text) std::swap(a, b);
    c.first = std::move(a);
    c.second = std::move(b);
    c.undercut = undercut;
    return c;
}

ArgPtr ArgumentSet::find(const std::string& canonical_text) const {
    auto it = std::lower_bound(args.begin(), args.end(), canonical_text,
                               [](const ArgPtr& a, const std::string& t) { return a->text < t; });
    if (it != args.end() && (*it)->text == canonical_text) return *it;
    return nullptr;
}

std::vector<ArgPtr> ArgumentSet::concluding(const Literal& l) const {
    std::vector<ArgPtr> out;
    for (const auto& a : args)
        if (a->conclusion == l) out.push_back(a);
    return out;
}

std::set<Literal> default_knowledge(const Program& p) {
    std::set<Literal> out;
    for (const auto& r : p.rules)
        for (const auto& l : r.body)
            if (l.def) out.insert(l);
    return out;
}

namespace {

// Enumerates one child tuple per combination of arguments matching the rule
// body; `emit` gets the assembled node unless the cutoff rejects it.
void combine(const Rule& r, size_t i, const std::map<Literal, std::vector<ArgPtr>>& by_conc,
             std::vector<ArgPtr>& picked, std::map<std::string, ArgPtr>& pool,
             size_t max_args) {
    if (i == r.body.size()) {
        for (const auto& c : picked)
            if (c->rules_below.count(r.text())) return;
        ArgPtr node = Argument::make_node(r, picked);
        if (pool.emplace(node->text, node).second && pool.size() > max_args)
            throw ArgumentLimitError(max_args);
        return;
    }
    auto it = by_conc.find(r.body[i]);
    if (it == by_conc.end()) return;
    for (const auto& cand : it->second) {
        picked.push_back(cand);
        combine(r, i + 1, by_conc, picked, pool, max_args);
        picked.pop_back();
    }
}

}  // namespace

ArgumentSet build_arguments(const Program& p, const std::set<Literal>& k,
                            const std::set<std::string>* vocabulary, size_t max_args) {
    std::map<std::string, ArgPtr> pool;
    for (const auto& l : k) {
        bool is_foreign = vocabulary && !vocabulary->count(l.atom);
        ArgPtr leaf = Argument::make_leaf(l, is_foreign);
        pool.emplace(leaf->text, leaf);
    }
    size_t before = pool.size() + 1;  // force the first pass even on an empty base
    while (before != pool.size()) {
        before = pool.size();
        std::map<Literal, std::vector<ArgPtr>> by_conc;
        for (const auto& [t, a] : pool) by_conc[a->conclusion].push_back(a);
        for (const auto& r : p.rules) {
            std::vector<ArgPtr> picked;
            combine(r, 0, by_conc, picked, pool, max_args);
        }
    }
    ArgumentSet out;
    for (auto& [t, a] : pool) out.args.push_back(a);
    return out;
}

ArgumentSet build_arguments(const Program& p) {
    return build_arguments(p, default_knowledge(p));
}

std::vector<Conflict> find_conflicts(const ArgumentSet& args) {
    std::vector<Conflict> out;
    for (size_t i = 0; i < args.args.size(); ++i) {
        for (size_t j = 0; j < args.args.size(); ++j) {
            const ArgPtr& a = args.args[i];
            const ArgPtr& b = args.args[j];
            if (!a->deductive()) continue;
            if (b->deductive()) {
                // rebutting; count each unordered pair once
                if (j > i && a->conclusion == complement(b->conclusion))
                    out.push_back(make_conflict(a, b, false));
            } else if (b->is_default_leaf()) {
                if (a->conclusion == b->conclusion.classical_part())
                    out.push_back(make_conflict(a, b, true));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct ArgCursor {
    std::string_view s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool try_tok(std::string_view t) {
        skip();
        if (s.substr(pos, t.size()) == t) {
            pos += t.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& expected) {
        throw std::invalid_argument("bad argument text: expected " + expected + " at offset " +
                                    std::to_string(pos));
    }
    std::string lit_text() {
        skip();
        std::string out;
        if (pos < s.size() && s[pos] == '~') {
            out += '~';
            ++pos;
            skip();
        }
        if (pos < s.size() && s[pos] == '-') {
            out += '-';
            ++pos;
            skip();
        }
        if (pos >= s.size() ||
            !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("literal");
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            out += s[pos++];
        return out;
    }

    std::string arg() {
        if (!try_tok("[")) fail("'['");
        skip();
        std::vector<std::string> children;
        while (pos < s.size() && s[pos] == '[') {
            children.push_back(arg());
            try_tok(",");
            skip();
        }
        std::string out = "[";
        if (!children.empty() || s.substr(pos, 2) == "=>" || s.substr(pos, 2) == "->") {
            for (size_t i = 0; i < children.size(); ++i) {
                if (i) out += ',';
                out += children[i];
            }
            std::string arrow;
            if (try_tok("=>"))
                arrow = "=>";
            else if (try_tok("->"))
                arrow = "->";
            else
                fail("'=>' or '->'");
            out += children.empty() ? "" : " ";
            out += arrow + " " + lit_text() + "]";
        } else {
            out += lit_text() + "]";
        }
        if (!try_tok("]")) fail("']'");
        return out;
    }
};

}  // namespace

ArgPtr parse_argument(std::string_view text, const ArgumentSet& args) {
    ArgCursor cur{text};
    std::string canonical = cur.arg();
    cur.skip();
    if (cur.pos != text.size()) cur.fail("end of input");
    ArgPtr a = args.find(canonical);
    if (!a) throw std::invalid_argument("unknown argument: " + canonical);
    return a;
}

}  // namespace delp
