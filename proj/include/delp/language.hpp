#ifndef DELP_LANGUAGE_HPP
#define DELP_LANGUAGE_HPP

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace delp {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(int line, int col, const std::string& what)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + what),
          line(line), col(col) {}
};

/// A propositional literal. `neg` marks classical negation, `def` default
/// negation. A default literal is a classical literal under exactly one `~`.
struct Literal {
    std::string atom;
    bool neg = false;
    bool def = false;

    static Literal classical(std::string a, bool n = false) { return {std::move(a), n, false}; }
    static Literal assumed(std::string a, bool n = false) { return {std::move(a), n, true}; }

    bool is_default() const { return def; }
    /// The classical literal under the default negation (identity if classical).
    Literal classical_part() const { return {atom, neg, false}; }

    std::string text() const;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// a <-> -a. Throws on default literals.
Literal complement(const Literal& l);
/// Toggles default negation: a <-> ~a (double default negation collapses).
Literal weak_negation(const Literal& l);

struct Rule {
    Literal head;
    std::vector<Literal> body;
    bool defeasible = false;

    std::string text() const;
    friend auto operator<=>(const Rule&, const Rule&) = default;
};

/// A finite defeasible logic program. Rules are kept sorted and deduplicated,
/// so structural equality is order-insensitive.
struct Program {
    std::vector<Rule> rules;

    void add(Rule r);
    std::vector<Rule> strict_rules() const;
    std::vector<Rule> defeasible_rules() const;
    bool contains(const Rule& r) const;
    /// All atoms occurring anywhere in the program.
    std::set<std::string> atoms() const;

    friend bool operator==(const Program&, const Program&) = default;
};

Program parse_program(std::string_view text);
std::string serialize_program(const Program& p);

/// Parses a single literal (e.g. "~-a"); rejects trailing input.
Literal parse_literal(std::string_view text);

}  // namespace delp

#endif
