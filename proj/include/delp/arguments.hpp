#ifndef DELP_ARGUMENTS_HPP
#define DELP_ARGUMENTS_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "delp/language.hpp"

namespace delp {

/// A defeasible building block of an argument: either a defeasible rule of
/// the program or a default literal.
struct Vulnerability {
    bool is_rule = false;
    Rule rule;    // valid when is_rule
    Literal lit;  // valid otherwise; always a default literal

    static Vulnerability from_rule(Rule r);
    static Vulnerability from_literal(Literal l);

    std::string text() const;
    friend auto operator<=>(const Vulnerability&, const Vulnerability&) = default;
};

struct Argument;
using ArgPtr = std::shared_ptr<const Argument>;

/// A finite derivation tree. Leaves come from the knowledge base (default
/// literals, or foreign classical literals in the contextual setting);
/// inner nodes apply a rule to child arguments concluding its body literals.
/// Identity is the canonical text form.
struct Argument {
    std::optional<Rule> rule;   // set iff deductive (inner node)
    Literal leaf;               // valid iff !rule
    std::vector<ArgPtr> children;

    Literal conclusion;
    std::set<Vulnerability> vuln;
    std::set<std::string> rules_below;  // rule texts in the subtree (cutoff check)
    std::set<Literal> foreign;          // foreign leaf literals in the subtree
    std::string text;

    bool deductive() const { return rule.has_value(); }
    bool is_leaf() const { return !rule.has_value(); }
    bool is_default_leaf() const { return is_leaf() && leaf.def && foreign.empty(); }
    bool is_foreign_leaf() const { return is_leaf() && !foreign.empty(); }

    static ArgPtr make_leaf(Literal l, bool is_foreign);
    static ArgPtr make_node(Rule r, std::vector<ArgPtr> ch);
};

/// An unordered conflicting pair. Rebutting: two deductive arguments with
/// complementary conclusions. Undercutting: a deductive argument concluding
/// the classical literal assumed by a default leaf.
struct Conflict {
    ArgPtr first, second;  // ordered by text for canonical identity
    bool undercut = false;

    std::string text() const;
    std::set<Vulnerability> vuls() const;
    std::set<Literal> foreign_literals() const;
    friend bool operator==(const Conflict& a, const Conflict& b) {
        return a.text() == b.text();
    }
    friend bool operator<(const Conflict& a, const Conflict& b) {
        return a.text() < b.text();
    }
};

Conflict make_conflict(ArgPtr a, ArgPtr b, bool undercut);

/// All arguments of one program, sorted by canonical text.
struct ArgumentSet {
    std::vector<ArgPtr> args;

    ArgPtr find(const std::string& canonical_text) const;
    std::vector<ArgPtr> concluding(const Literal& l) const;
    size_t size() const { return args.size(); }
};

/// Default literals occurring in rule bodies: the finite slice of the
/// implicit knowledge base D that can matter.
std::set<Literal> default_knowledge(const Program& p);

struct ArgumentLimitError : std::runtime_error {
    explicit ArgumentLimitError(size_t limit)
        : std::runtime_error("argument set exceeds the construction guard of " +
                             std::to_string(limit)) {}
};

constexpr size_t kDefaultMaxArguments = 2000;

/// Builds every argument per the derivation rules, excluding trees where a
/// rule repeats on a root-to-leaf path. `k` lists the leaf literals; a leaf
/// is foreign when `vocabulary` is given and its atom lies outside it.
/// Throws ArgumentLimitError beyond `max_args` distinct arguments.
ArgumentSet build_arguments(const Program& p, const std::set<Literal>& k,
                            const std::set<std::string>* vocabulary = nullptr,
                            size_t max_args = kDefaultMaxArguments);

/// Convenience: build with the implicit knowledge base (defaults in bodies).
ArgumentSet build_arguments(const Program& p);

std::vector<Conflict> find_conflicts(const ArgumentSet& args);

/// Normalizes an argument text form (whitespace-insensitive) and resolves it
/// against a built argument set. Throws on malformed text or unknown argument.
ArgPtr parse_argument(std::string_view text, const ArgumentSet& args);

}  // namespace delp

#endif
