#include "delp/language.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace delp {

std::string Literal::text() const {
    std::string s;
    if (def) s += '~';
    if (neg) s += '-';
    s += atom;
    return s;
}

Literal complement(const Literal& l) {
    if (l.def) throw std::invalid_argument("complement of default literal " + l.text());
    return {l.atom, !l.neg, false};
}

Literal weak_negation(const Literal& l) { return {l.atom, l.neg, !l.def}; }

std::string Rule::text() const {
    std::string s = head.text();
    s += defeasible ? " -< " : " <- ";
    for (size_t i = 0; i < body.size(); ++i) {
        if (i) s += ", ";
        s += body[i].text();
    }
    s += '.';
    return s;
}

void Program::add(Rule r) {
    auto it = std::lower_bound(rules.begin(), rules.end(), r);
    if (it == rules.end() || *it != r) rules.insert(it, std::move(r));
}

std::vector<Rule> Program::strict_rules() const {
    std::vector<Rule> out;
    for (const auto& r : rules)
        if (!r.defeasible) out.push_back(r);
    return out;
}

std::vector<Rule> Program::defeasible_rules() const {
    std::vector<Rule> out;
    for (const auto& r : rules)
        if (r.defeasible) out.push_back(r);
    return out;
}

bool Program::contains(const Rule& r) const {
    return std::binary_search(rules.begin(), rules.end(), r);
}

std::set<std::string> Program::atoms() const {
    std::set<std::string> out;
    for (const auto& r : rules) {
        out.insert(r.head.atom);
        for (const auto& l : r.body) out.insert(l.atom);
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;
    int line = 1, col = 1;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    char take() {
        char c = s[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skip_trivia() {
        while (!eof()) {
            if (std::isspace(static_cast<unsigned char>(peek()))) {
                take();
            } else if (peek() == '%') {
                while (!eof() && peek() != '\n') take();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(line, col, "expected " + expected);
    }

    bool at_ident() const {
        if (eof()) return false;
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string ident() {
        if (!at_ident()) fail("identifier");
        std::string out;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                out += take();
            else
                break;
        }
        return out;
    }

    bool try_char(char c) {
        skip_trivia();
        if (!eof() && peek() == c) {
            take();
            return true;
        }
        return false;
    }
};

// literal := ["~"] clit ; clit := [ctx ":"] ["-"] atom
// The context qualifier is an annotation only and is discarded.
Literal read_literal(Cursor& cur) {
    cur.skip_trivia();
    Literal l;
    if (cur.try_char('~')) l.def = true;
    cur.skip_trivia();
    if (cur.try_char('-')) {
        l.neg = true;
        cur.skip_trivia();
        l.atom = cur.ident();
        return l;
    }
    l.atom = cur.ident();
    if (cur.try_char(':')) {
        cur.skip_trivia();
        if (cur.try_char('-')) l.neg = true;
        cur.skip_trivia();
        l.atom = cur.ident();
    }
    return l;
}

Rule read_rule(Cursor& cur) {
    Rule r;
    int head_line = cur.line, head_col = cur.col;
    r.head = read_literal(cur);
    if (r.head.def)
        throw ParseError(head_line, head_col, "rule head must not be default-negated");
    cur.skip_trivia();
    if (cur.try_char('<')) {
        if (!cur.try_char('-')) cur.fail("'<-' or '-<'");
        r.defeasible = false;
    } else if (cur.try_char('-')) {
        if (!cur.try_char('<')) cur.fail("'<-' or '-<'");
        r.defeasible = true;
    } else {
        cur.fail("'<-' or '-<'");
    }
    cur.skip_trivia();
    if (!cur.eof() && cur.peek() != '.') {
        r.body.push_back(read_literal(cur));
        while (cur.try_char(',')) r.body.push_back(read_literal(cur));
    }
    if (!cur.try_char('.')) cur.fail("'.'");
    return r;
}

}  // namespace

Program parse_program(std::string_view text) {
    Cursor cur{text};
    Program p;
    for (;;) {
        cur.skip_trivia();
        if (cur.eof()) break;
        p.add(read_rule(cur));
    }
    return p;
}

std::string serialize_program(const Program& p) {
    std::string out;
    for (const auto& r : p.rules) {
        out += r.text();
        out += '\n';
    }
    return out;
}

Literal parse_literal(std::string_view text) {
    Cursor cur{text};
    Literal l = read_literal(cur);
    cur.skip_trivia();
    if (!cur.eof()) cur.fail("end of input");
    return l;
}

}  // namespace delp
